use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the magnon kernels.
///
/// Stability rejections are physical: they mean the harmonic magnon picture
/// broke down (mode softening), not that the arithmetic failed.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on plain input values was violated.
    InvalidInput(&'static str),
    /// Electric-field direction with (numerically) zero length.
    ZeroFieldDirection,
    /// Photon energy sits on the superexchange resonance pole.
    ResonancePole { u: f64, photon_energy: f64 },
    /// |g_k/omega| or |chi_k/eps_k(tau)| reached one: magnon softening at `k`.
    Instability { k: [f64; 3], ratio: f64 },
    /// The perturbed diagonal coefficient eps_k(tau) dropped to or below zero.
    PostPulseSoftening { k: [f64; 3], eps_tau: f64 },
    /// Amplitude truncation did not reach the requested tail mass.
    TruncationBudget { l_max: usize, tail_mass: f64 },
    /// A sampling grid was empty.
    EmptyGrid,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
            Error::ZeroFieldDirection => {
                write!(f, "electric-field direction has zero length")
            }
            Error::ResonancePole { u, photon_energy } => write!(
                f,
                "photon energy {photon_energy} meV hits the U = {u} meV superexchange pole"
            ),
            Error::Instability { k, ratio } => write!(
                f,
                "magnon softening at k = ({}, {}, {}): coupling ratio {ratio} >= 1",
                k[0], k[1], k[2]
            ),
            Error::PostPulseSoftening { k, eps_tau } => write!(
                f,
                "perturbed magnon energy {eps_tau} meV <= 0 at k = ({}, {}, {})",
                k[0], k[1], k[2]
            ),
            Error::TruncationBudget { l_max, tail_mass } => write!(
                f,
                "amplitude tail mass {tail_mass} still above tolerance at l_max = {l_max}"
            ),
            Error::EmptyGrid => write!(f, "sampling grid is empty"),
        }
    }
}

impl core::error::Error for Error {}
