//! SU(1,1) diagonalization of the pair-coupled two-mode Hamiltonians.
//!
//! Both the bare Hamiltonian and the instantaneous pulsed one have the form
//! w (a'a + b'b) + B (a'a - b'b) + g ab + g* a'b'. A two-mode squeeze with
//! tanh(2 lambda) = |g| / w removes the pair term; the squeeze magnitude is
//! computed from tanh(lambda) = (1 - sqrt(1 - |g/w|^2)) / |g/w| with its
//! removable 0/0 at g = 0 handled by a series branch.

use alloc::vec::Vec;

use crate::fmath;
use crate::lattice::{KPath, KVector, LatticeSpec};
use crate::model::{
    bare_coefficients, perturbed_coefficients, BareCoefficients, ModelParams,
    PerturbedCoefficients, PulseParams,
};
use crate::{C64, Error, Result, STABILITY_MARGIN};

use core::f64::consts::PI;

/// Occupation labels (m, n) of the alpha_k / beta_-k quasiparticle pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenstateLabel {
    pub m: u32,
    pub n: u32,
    pub k: KVector,
}

/// Squeeze frame diagonalizing the bare Hamiltonian at one k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaticBogoliubov {
    /// Squeeze magnitude r_k >= 0.
    pub r: f64,
    /// Squeeze phase phi_k = pi - arg(Gamma_k).
    pub phi: f64,
    /// eta_k = cosh r_k.
    pub eta: f64,
    /// zeta_k = e^{i phi_k} sinh r_k.
    pub zeta: C64,
    /// Magnon energy eps_k.
    pub eps_k: f64,
    /// eps_k + B.
    pub eps_alpha: f64,
    /// eps_k - B.
    pub eps_beta: f64,
    /// Coupling ratio Gamma_k = g_k / omega.
    pub coupling_ratio: C64,
    pub k: KVector,
}

/// Squeeze frame diagonalizing the instantaneous pulsed Hamiltonian,
/// relative to the static quasiparticle modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstantBogoliubov {
    /// Relative squeeze magnitude Theta_k(tau) >= 0.
    pub theta: f64,
    /// Relative squeeze phase Phi_k(tau) = pi - arg(Upsilon).
    pub phi: f64,
    /// u_k = cosh Theta.
    pub u: f64,
    /// v_k = e^{i Phi} sinh Theta.
    pub v: C64,
    /// Instantaneous dispersion eps~_k(tau).
    pub eps_diag: f64,
    /// eps~_k(tau) + B.
    pub eps_alpha_tau: f64,
    /// eps~_k(tau) - B.
    pub eps_beta_tau: f64,
    /// Coupling ratio Upsilon = chi_k(tau) / eps_k(tau).
    pub coupling_ratio: C64,
    /// Diagonal coefficient eps_k(tau) before re-diagonalization.
    pub eps_tau: f64,
    /// Zeeman energy carried through for spectra.
    pub b: f64,
    pub k: KVector,
}

/// tanh(lambda) from the coupling ratio magnitude, with the series branch
/// for the removable singularity at zero.
fn tanh_squeeze(ratio: f64) -> f64 {
    if ratio < 1e-8 {
        // (1 - sqrt(1 - x^2)) / x = x/2 + x^3/8 + O(x^5)
        0.5 * ratio
    } else {
        (1.0 - fmath::sqrt(1.0 - ratio * ratio)) / ratio
    }
}

/// Diagonalize the bare Hamiltonian.
pub fn static_diagonalize(bare: &BareCoefficients) -> Result<StaticBogoliubov> {
    let gamma = bare.g_k / bare.omega;
    let ratio = gamma.norm();
    if !(ratio < 1.0 - STABILITY_MARGIN) || !(bare.omega > 0.0) {
        return Err(Error::Instability { k: bare.k.components(), ratio });
    }
    let t = tanh_squeeze(ratio);
    let r = fmath::atanh(t);
    let arg = if ratio == 0.0 { 0.0 } else { gamma.arg() };
    let phi = PI - arg;
    let (ch, sh) = (fmath::cosh(2.0 * r), fmath::sinh(2.0 * r));
    let eps_k = bare.omega * (ch - ratio * sh);
    Ok(StaticBogoliubov {
        r,
        phi,
        eta: fmath::cosh(r),
        zeta: C64::from_polar(fmath::sinh(r), phi),
        eps_k,
        eps_alpha: eps_k + (bare.omega_a - bare.omega),
        eps_beta: eps_k + (bare.omega_b - bare.omega),
        coupling_ratio: gamma,
        k: bare.k,
    })
}

/// Diagonalize the instantaneous pulsed Hamiltonian.
pub fn instant_diagonalize(pert: &PerturbedCoefficients, b: f64) -> Result<InstantBogoliubov> {
    if !(pert.eps_k_tau > 0.0) {
        return Err(Error::PostPulseSoftening { k: pert.k.components(), eps_tau: pert.eps_k_tau });
    }
    let upsilon = pert.chi_k_tau / pert.eps_k_tau;
    let ratio = upsilon.norm();
    if !(ratio < 1.0 - STABILITY_MARGIN) {
        return Err(Error::Instability { k: pert.k.components(), ratio });
    }
    let t = tanh_squeeze(ratio);
    let theta = fmath::atanh(t);
    let arg = if ratio == 0.0 { 0.0 } else { upsilon.arg() };
    let phi = PI - arg;
    let eps_diag = pert.eps_k_tau * fmath::sqrt(1.0 - ratio * ratio);
    Ok(InstantBogoliubov {
        theta,
        phi,
        u: fmath::cosh(theta),
        v: C64::from_polar(fmath::sinh(theta), phi),
        eps_diag,
        eps_alpha_tau: eps_diag + b,
        eps_beta_tau: eps_diag - b,
        coupling_ratio: upsilon,
        eps_tau: pert.eps_k_tau,
        b,
        k: pert.k,
    })
}

impl InstantBogoliubov {
    /// Build a frame directly from a squeeze; mainly for synthetic inputs in
    /// tests and benchmarks. `theta >= 0` required.
    pub fn from_squeeze(theta: f64, phi: f64, eps_tau: f64, b: f64, k: KVector) -> Result<Self> {
        if !(theta >= 0.0) {
            return Err(Error::InvalidInput("squeeze magnitude must be >= 0"));
        }
        if !(eps_tau > 0.0) {
            return Err(Error::InvalidInput("eps_tau must be positive"));
        }
        let t2 = fmath::tanh(2.0 * theta);
        let upsilon = C64::from_polar(t2, PI - phi);
        let eps_diag = eps_tau * fmath::sqrt(1.0 - t2 * t2);
        Ok(InstantBogoliubov {
            theta,
            phi,
            u: fmath::cosh(theta),
            v: C64::from_polar(fmath::sinh(theta), phi),
            eps_diag,
            eps_alpha_tau: eps_diag + b,
            eps_beta_tau: eps_diag - b,
            coupling_ratio: upsilon,
            eps_tau,
            b,
            k,
        })
    }

    /// tanh Theta, the decay ratio of the transition amplitudes.
    pub fn tanh_theta(&self) -> f64 {
        fmath::tanh(self.theta)
    }
}

/// Static frame plus instantaneous frame for one k at pulse time `tau`.
pub fn instant_frame(
    m: &ModelParams,
    pulse: &PulseParams,
    lat: &LatticeSpec,
    k: &KVector,
    tau: f64,
) -> Result<(StaticBogoliubov, InstantBogoliubov)> {
    let bare = bare_coefficients(m, lat, k)?;
    let stat = static_diagonalize(&bare)?;
    let pert = perturbed_coefficients(&bare, &stat, pulse, lat, k, tau)?;
    let inst = instant_diagonalize(&pert, m.b)?;
    Ok((stat, inst))
}

/// One row of a dispersion sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionPoint {
    pub k: KVector,
    pub eps_before: f64,
    /// Instantaneous dispersion at full pulse strength; equals `eps_before`
    /// when no pulse is given.
    pub eps_after: f64,
}

/// Bare and full-strength (f = 1) dispersions along a path.
///
/// Fails on the first unstable point, carrying the offending k.
pub fn dispersion_curve(
    m: &ModelParams,
    pulse: Option<&PulseParams>,
    lat: &LatticeSpec,
    path: &KPath,
) -> Result<Vec<DispersionPoint>> {
    let mut out = Vec::with_capacity(path.len());
    for k in path.points() {
        let bare = bare_coefficients(m, lat, &k)?;
        let stat = static_diagonalize(&bare)?;
        let eps_after = match pulse {
            None => stat.eps_k,
            Some(p) => {
                let peak = p.at_unit_envelope();
                let pert = perturbed_coefficients(&bare, &stat, &peak, lat, &k, 0.0)?;
                instant_diagonalize(&pert, m.b)?.eps_diag
            }
        };
        out.push(DispersionPoint { k, eps_before: stat.eps_k, eps_after });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_kpath, PathPreset};
    use crate::model::EnvelopeSpec;
    use approx::assert_abs_diff_eq;

    fn bare_with_gamma(gamma: C64, omega: f64) -> BareCoefficients {
        BareCoefficients {
            omega,
            g_k: gamma * omega,
            omega_a: omega,
            omega_b: omega,
            s: 0.5,
            z: 6,
            k: KVector::zero(),
        }
    }

    #[test]
    fn decoupled_mode_is_untouched() {
        let b = bare_with_gamma(C64::new(0.0, 0.0), 2.5);
        let f = static_diagonalize(&b).unwrap();
        assert_eq!(f.r, 0.0);
        assert_eq!(f.eta, 1.0);
        assert_abs_diff_eq!(f.zeta.norm(), 0.0);
        assert_abs_diff_eq!(f.eps_k, 2.5, epsilon = 1e-14);
        assert_abs_diff_eq!(f.phi, PI, epsilon = 1e-14);
    }

    #[test]
    fn textbook_ratio_example() {
        let b = bare_with_gamma(C64::new(0.6, 0.0), 1.0);
        let f = static_diagonalize(&b).unwrap();
        assert_abs_diff_eq!(f.r.tanh(), 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(f.eps_k, 0.8, epsilon = 1e-12);
    }

    #[test]
    fn preset_gap_at_zone_center() {
        let m = ModelParams::new(12.0, 0.12, 0.0, 0.5).unwrap();
        let lat = LatticeSpec::simple_cubic();
        let bare = bare_coefficients(&m, &lat, &KVector::zero()).unwrap();
        let f = static_diagonalize(&bare).unwrap();
        // frozen from the closed form 36.12 sqrt(1 - (36/36.12)^2)
        assert_abs_diff_eq!(f.eps_k, 2.941836161311, epsilon = 1e-9);
    }

    #[test]
    fn rejects_soft_mode() {
        let b = bare_with_gamma(C64::new(1.0, 0.0), 1.0);
        assert!(matches!(static_diagonalize(&b), Err(Error::Instability { .. })));
        let almost = bare_with_gamma(C64::new(1.0 - 1e-13, 0.0), 1.0);
        assert!(static_diagonalize(&almost).is_err());
    }

    #[test]
    fn su11_identities_hold() {
        for i in 0..50 {
            let ratio = 0.999 * i as f64 / 49.0;
            let b = bare_with_gamma(C64::from_polar(ratio, 0.3 * i as f64), 3.7);
            let f = static_diagonalize(&b).unwrap();
            assert!((f.eta * f.eta - f.zeta.norm_sqr() - 1.0).abs() < 1e-12);
            // closed form vs cosh/sinh route
            let closed = 3.7 * (1.0 - ratio * ratio).sqrt();
            assert!((f.eps_k - closed).abs() <= 1e-10 * closed.max(1e-300));
            // Pythagorean identity eps^2 + |g|^2 = omega^2
            let lhs = f.eps_k * f.eps_k + b.g_k.norm_sqr();
            assert!((lhs - 3.7 * 3.7).abs() < 1e-10 * 3.7 * 3.7);
        }
    }

    #[test]
    fn instant_identity_transform_for_zero_coupling() {
        let pert = PerturbedCoefficients {
            eps_k_tau: 4.2,
            chi_k_tau: C64::new(0.0, 0.0),
            omega_tau: 0.0,
            k: KVector::zero(),
        };
        let f = instant_diagonalize(&pert, 0.3).unwrap();
        assert_eq!(f.theta, 0.0);
        assert_eq!(f.u, 1.0);
        assert_abs_diff_eq!(f.v.norm(), 0.0);
        assert_eq!(f.eps_diag, 4.2);
        assert_abs_diff_eq!(f.eps_alpha_tau, 4.5, epsilon = 1e-14);
    }

    #[test]
    fn instant_textbook_ratio() {
        let pert = PerturbedCoefficients {
            eps_k_tau: 1.0,
            chi_k_tau: C64::new(0.6, 0.0),
            omega_tau: -1.0,
            k: KVector::zero(),
        };
        let f = instant_diagonalize(&pert, 0.0).unwrap();
        assert_abs_diff_eq!(f.theta.tanh(), 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(f.eps_diag, 0.8, epsilon = 1e-12);
    }

    #[test]
    fn instant_rejects_softening() {
        let pert = PerturbedCoefficients {
            eps_k_tau: -0.5,
            chi_k_tau: C64::new(0.0, 0.0),
            omega_tau: -30.0,
            k: KVector::zero(),
        };
        assert!(matches!(
            instant_diagonalize(&pert, 0.0),
            Err(Error::PostPulseSoftening { .. })
        ));
        let unstable = PerturbedCoefficients {
            eps_k_tau: 1.0,
            chi_k_tau: C64::new(1.0, 0.0),
            omega_tau: -30.0,
            k: KVector::zero(),
        };
        assert!(matches!(instant_diagonalize(&unstable, 0.0), Err(Error::Instability { .. })));
    }

    #[test]
    fn dispersion_without_pulse_is_symmetric() {
        let m = ModelParams::new(12.0, 0.12, 0.0, 0.5).unwrap();
        let lat = LatticeSpec::simple_cubic();
        let path = make_kpath(&lat, PathPreset::Gxmgr, 8).unwrap();
        let pulse = PulseParams::with_in_plane_angle(0.0, 0.0, EnvelopeSpec::unit()).unwrap();
        let rows = dispersion_curve(&m, Some(&pulse), &lat, &path).unwrap();
        assert_eq!(rows.len(), path.len());
        for row in rows {
            assert_eq!(row.eps_before, row.eps_after);
        }
    }

    #[test]
    fn pulse_softens_band_on_preset() {
        let m = ModelParams::new(12.0, 0.12, 0.0, 0.5).unwrap();
        let lat = LatticeSpec::simple_cubic();
        let path = make_kpath(&lat, PathPreset::Gxmgr, 16).unwrap();
        let pulse = PulseParams::with_in_plane_angle(-9.6, 0.0, EnvelopeSpec::unit()).unwrap();
        let rows = dispersion_curve(&m, Some(&pulse), &lat, &path).unwrap();
        for row in rows {
            assert!(row.eps_after <= row.eps_before + 1e-12);
        }
    }

    #[test]
    fn anisotropy_free_band_closes_at_zone_center() {
        let m = ModelParams::new(12.0, 0.0, 0.0, 0.5).unwrap();
        let lat = LatticeSpec::simple_cubic();
        let mut prev = f64::INFINITY;
        for kx in [1e-1, 1e-2, 1e-3, 1e-4] {
            let bare = bare_coefficients(&m, &lat, &KVector::new(kx, 0.0, 0.0)).unwrap();
            let eps = static_diagonalize(&bare).unwrap().eps_k;
            assert!(eps < prev);
            prev = eps;
        }
        assert!(prev < 1e-3 * 36.0);
    }
}
