//! Hamiltonian coefficients of the easy-axis antiferromagnet before and
//! during the exchange pulse.
//!
//! Bare k-space coefficients: omega = S(ZJ + 2K), g_k = S Z J gamma_k, with
//! the Zeeman field entering only as omega +- B on the two sublattice modes.
//! The pulse multiplies every bond by the squared field projection, which
//! shows up as the bond-projected structure factor xi_k and the drive
//! strength Omega(tau) = S Z dJ f(tau).

use crate::bogoliubov::StaticBogoliubov;
use crate::fmath;
use crate::lattice::{gamma_k, xi_k, xi_zero, KVector, LatticeSpec};
use crate::{C64, Error, Result};

/// Static spin-model parameters. Energies in meV.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ModelParams {
    /// Nearest-neighbor exchange J > 0 (antiferromagnetic).
    #[cfg_attr(feature = "serde", serde(rename = "J"))]
    pub j: f64,
    /// Easy-axis anisotropy K >= 0.
    #[cfg_attr(feature = "serde", serde(rename = "K"))]
    pub k_ani: f64,
    /// Zeeman energy (gamma hbar B folded into one energy scale).
    #[cfg_attr(feature = "serde", serde(rename = "B"))]
    pub b: f64,
    /// Spin magnitude, a positive half-integer.
    #[cfg_attr(feature = "serde", serde(rename = "S"))]
    pub s: f64,
}

impl ModelParams {
    pub fn new(j: f64, k_ani: f64, b: f64, s: f64) -> Result<Self> {
        let m = ModelParams { j, k_ani, b, s };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.j > 0.0) {
            return Err(Error::InvalidInput("exchange J must be positive"));
        }
        if !(self.k_ani >= 0.0) {
            return Err(Error::InvalidInput("anisotropy K must be non-negative"));
        }
        let two_s = 2.0 * self.s;
        if !(self.s > 0.0) || fmath::fabs(two_s - fmath::floor(two_s + 0.5)) > 1e-9 {
            return Err(Error::InvalidInput("spin S must be a positive half-integer"));
        }
        if !self.b.is_finite() {
            return Err(Error::InvalidInput("field B must be finite"));
        }
        Ok(())
    }
}

/// Time profile f(tau) of the pulse, normalized to peak at one.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum EnvelopeSpec {
    Constant { value: f64 },
    /// f(tau) = exp(-width (tau - t0)^2); tau in dimensionless pulse units.
    Gaussian { width: f64, t0: f64 },
}

impl EnvelopeSpec {
    pub const fn unit() -> Self {
        EnvelopeSpec::Constant { value: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            EnvelopeSpec::Constant { value } => {
                if !(0.0..=1.0).contains(&value) {
                    return Err(Error::InvalidInput("constant envelope value must be in [0, 1]"));
                }
            }
            EnvelopeSpec::Gaussian { width, .. } => {
                if !(width > 0.0) {
                    return Err(Error::InvalidInput("gaussian envelope width must be positive"));
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, tau: f64) -> f64 {
        match *self {
            EnvelopeSpec::Constant { value } => value,
            EnvelopeSpec::Gaussian { width, t0 } => {
                let d = tau - t0;
                fmath::exp(-width * d * d)
            }
        }
    }

    /// Instant at which the envelope peaks.
    pub fn peak_time(&self) -> f64 {
        match *self {
            EnvelopeSpec::Constant { .. } => 0.0,
            EnvelopeSpec::Gaussian { t0, .. } => t0,
        }
    }
}

/// Light-induced exchange perturbation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PulseParams {
    /// Peak exchange change dJ; negative for exchange reduction.
    pub delta_j: f64,
    /// Optical field direction (amplitude cancels; need not be normalized).
    pub e_dir: [f64; 3],
    pub envelope: EnvelopeSpec,
}

impl PulseParams {
    pub fn new(delta_j: f64, e_dir: [f64; 3], envelope: EnvelopeSpec) -> Result<Self> {
        envelope.validate()?;
        Ok(PulseParams { delta_j, e_dir, envelope })
    }

    /// In-plane field at angle theta from the x axis.
    pub fn with_in_plane_angle(delta_j: f64, theta: f64, envelope: EnvelopeSpec) -> Result<Self> {
        Self::new(delta_j, [fmath::cos(theta), fmath::sin(theta), 0.0], envelope)
    }

    /// Same pulse clamped to its full strength, f = 1.
    pub fn at_unit_envelope(&self) -> PulseParams {
        PulseParams { envelope: EnvelopeSpec::unit(), ..*self }
    }
}

/// k-resolved coefficients of the bare bosonic Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BareCoefficients {
    /// omega = S (Z J + 2 K).
    pub omega: f64,
    /// Pair coupling g_k = S Z J gamma_k.
    pub g_k: C64,
    /// omega + B.
    pub omega_a: f64,
    /// omega - B.
    pub omega_b: f64,
    /// Spin magnitude, carried along for the pulse coefficients.
    pub s: f64,
    /// Coordination number of the lattice the coefficients came from.
    pub z: usize,
    pub k: KVector,
}

/// Evaluate omega and g_k for one momentum.
pub fn bare_coefficients(m: &ModelParams, lat: &LatticeSpec, k: &KVector) -> Result<BareCoefficients> {
    m.validate()?;
    lat.validate()?;
    let z = lat.z;
    let omega = m.s * (z as f64 * m.j + 2.0 * m.k_ani);
    let g_k = m.s * z as f64 * m.j * gamma_k(lat, k);
    Ok(BareCoefficients {
        omega,
        g_k,
        omega_a: omega + m.b,
        omega_b: omega - m.b,
        s: m.s,
        z,
        k: *k,
    })
}

/// Superexchange estimate of the peak exchange change,
/// dJ = t^2 (e a E)^2 / (4 U (U^2 - omega_ph^2)).
///
/// `eea` is the dipole energy e a E; `photon_energy` the optical
/// hbar omega. Negative above the resonance.
pub fn delta_j_microscopic(t_hop: f64, u: f64, photon_energy: f64, eea: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::InvalidInput("onsite repulsion U must be positive"));
    }
    if photon_energy == u {
        return Err(Error::ResonancePole { u, photon_energy });
    }
    Ok(t_hop * t_hop * eea * eea / (4.0 * u * (u * u - photon_energy * photon_energy)))
}

/// Coefficients of the pulse-perturbed Hamiltonian in the static quasiparticle
/// frame at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbedCoefficients {
    /// eps_k(tau) = eps_k + d_eps_k(tau), the diagonal coefficient.
    pub eps_k_tau: f64,
    /// Pair coupling chi_k(tau) between the static quasiparticle modes.
    pub chi_k_tau: C64,
    /// Drive strength Omega(tau) = S Z dJ f(tau).
    pub omega_tau: f64,
    pub k: KVector,
}

/// Transform the pulse term into the static quasiparticle frame:
///
/// d_eps = Omega [xi0 cosh 2r + |xi_k| sinh 2r cos(phi + varphi)],
/// chi   = Omega e^{-i phi} [xi0 sinh 2r
///         + |xi_k| (cosh 2r cos(phi + varphi) + i sin(phi + varphi))],
///
/// with (r, phi) the static squeeze for this same k and varphi = arg xi_k.
pub fn perturbed_coefficients(
    bare: &BareCoefficients,
    bog: &StaticBogoliubov,
    pulse: &PulseParams,
    lat: &LatticeSpec,
    k: &KVector,
    tau: f64,
) -> Result<PerturbedCoefficients> {
    pulse.envelope.validate()?;
    debug_assert_eq!(bare.k, bog.k, "static frame built for a different k");
    let f = pulse.envelope.eval(tau);
    let omega_tau = bare.s * bare.z as f64 * pulse.delta_j * f;

    let xi0 = xi_zero(lat, &pulse.e_dir)?;
    let xi = xi_k(lat, k, &pulse.e_dir)?;
    let xi_abs = xi.norm();
    let varphi = if xi_abs == 0.0 { 0.0 } else { xi.arg() };

    let two_r = 2.0 * bog.r;
    let (ch, sh) = (fmath::cosh(two_r), fmath::sinh(two_r));
    let angle = bog.phi + varphi;
    let (cos_a, sin_a) = (fmath::cos(angle), fmath::sin(angle));

    let d_eps = omega_tau * (xi0 * ch + xi_abs * sh * cos_a);
    let bracket = C64::new(xi0 * sh + xi_abs * ch * cos_a, xi_abs * sin_a);
    let chi = omega_tau * C64::from_polar(1.0, -bog.phi) * bracket;

    Ok(PerturbedCoefficients {
        eps_k_tau: bog.eps_k + d_eps,
        chi_k_tau: chi,
        omega_tau,
        k: *k,
    })
}
