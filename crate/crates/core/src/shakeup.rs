//! Transition amplitudes of the sudden quench.
//!
//! The instantaneous eigenstate with occupations (m, n) expands over the
//! static eigenstates |l + d_alpha, l + d_beta> with amplitudes
//!
//!   P_mn(l) = (m! n!)^{-1/2} u^{-|d|} (u v)^{-mu} q_l^{(mu,|d|)} P_00(l),
//!   P_00(l) = (-v/u)^l / u,
//!
//! where d = m - n, mu = min(m, n), and the real coefficients q are built by
//! a double recursion: one step in |d| at fixed mu, one step in mu at d = 0.
//! The mu-step couples l to l-1, l, l+1 (the l-1 term drops out at l = 0).

use alloc::vec::Vec;

use crate::bogoliubov::{EigenstateLabel, InstantBogoliubov};
use crate::fmath;
use crate::{C64, Error, Result};

use core::f64::consts::PI;

/// Layer-by-layer table of the q coefficients.
///
/// Rows follow the recursion order: (0,0), (1,0), ..., (mu,0), (mu,1), ...,
/// (mu,d). Later rows are shorter because each recursion step consumes one
/// l slot from above.
#[derive(Debug, Clone, PartialEq)]
pub struct QTable {
    pub layers: Vec<Vec<f64>>,
    pub mu: u32,
    pub delta_abs: u32,
}

impl QTable {
    /// q^{(mu, delta_abs)}_l from the final layer.
    pub fn value(&self, l: usize) -> f64 {
        self.layers.last().expect("table has at least the base layer")[l]
    }

    /// Number of l entries available in the final layer.
    pub fn len(&self) -> usize {
        self.layers.last().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Vacuum-to-l amplitude P_00(tau, l) = [-e^{i Phi} tanh Theta]^l / cosh Theta.
pub fn p00(frame: &InstantBogoliubov, l: u32) -> C64 {
    let t = frame.tanh_theta();
    let mag = fmath::powi(t, l) / frame.u;
    C64::from_polar(mag, l as f64 * (frame.phi + PI))
}

/// Fill the recursion table up to harmonic index `l_max` (inclusive) in the
/// final layer.
pub fn q_table(frame: &InstantBogoliubov, mu: u32, d: u32, l_max: usize) -> QTable {
    let u2 = frame.u * frame.u;
    let v2 = frame.v.norm_sqr();
    let total = l_max + mu as usize + d as usize + 1;

    let mut layers = Vec::with_capacity((mu + d + 1) as usize);
    layers.push(alloc::vec![1.0; total]);

    for _ in 0..mu {
        let prev = layers.last().expect("base layer present");
        let n = prev.len() - 1;
        let mut row = Vec::with_capacity(n);
        for l in 0..n {
            let lf = l as f64;
            let t1 = if l == 0 { 0.0 } else { lf * u2 * u2 * prev[l - 1] };
            let t2 = (2.0 * lf + 1.0) * u2 * v2 * prev[l];
            let t3 = (lf + 1.0) * v2 * v2 * prev[l + 1];
            row.push(t1 - t2 + t3);
        }
        layers.push(row);
    }
    for step in 1..=d {
        let prev = layers.last().expect("previous layer present");
        let n = prev.len() - 1;
        let mut row = Vec::with_capacity(n);
        for l in 0..n {
            let lf = l as f64;
            row.push(
                u2 * fmath::sqrt(lf + step as f64) * prev[l]
                    - v2 * fmath::sqrt(lf + 1.0) * prev[l + 1],
            );
        }
        layers.push(row);
    }
    QTable { layers, mu, delta_abs: d }
}

/// Truncated amplitude list P_mn(tau, l) for one reference state.
#[derive(Debug, Clone, PartialEq)]
pub struct ShakeupExpansion {
    pub reference: EigenstateLabel,
    /// P_mn(tau, l) for l = 0..=l_max.
    pub amplitudes: Vec<C64>,
    /// delta = m - n.
    pub delta: i64,
    /// (delta + |delta|) / 2.
    pub delta_alpha: u32,
    /// (|delta| - delta) / 2.
    pub delta_beta: u32,
    /// mu = min(m, n); the remainder line sits at l = mu.
    pub mu: u32,
    pub l_max: usize,
    /// 1 - sum |P|^2; bounds the truncation error.
    pub tail_mass: f64,
}

impl ShakeupExpansion {
    pub fn weight(&self, l: usize) -> f64 {
        self.amplitudes[l].norm_sqr()
    }

    pub fn weights(&self) -> impl Iterator<Item = f64> + '_ {
        self.amplitudes.iter().map(|a| a.norm_sqr())
    }

    /// Total weight outside the remainder line l = mu.
    pub fn expelled_weight(&self) -> f64 {
        self.weights()
            .enumerate()
            .filter(|(l, _)| *l != self.mu as usize)
            .map(|(_, w)| w)
            .sum()
    }
}

const L_START: usize = 32;
const L_CAP: usize = 1 << 20;

/// Expand the instantaneous (m, n) eigenstate over the static eigenbasis,
/// growing the truncation until the tail mass drops below `tol`.
pub fn shakeup_amplitudes(
    frame: &InstantBogoliubov,
    m: u32,
    n: u32,
    tol: f64,
) -> Result<ShakeupExpansion> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidInput("truncation tolerance must be in (0, 1)"));
    }
    let mu = m.min(n);
    let delta = m as i64 - n as i64;
    let d = delta.unsigned_abs() as u32;
    let reference = EigenstateLabel { m, n, k: frame.k };

    // No squeeze: the expansion is exactly a unit mass at l = mu.
    if frame.v.norm_sqr() == 0.0 {
        let mut amplitudes = alloc::vec![C64::new(0.0, 0.0); mu as usize + 1];
        amplitudes[mu as usize] = C64::new(1.0, 0.0);
        return Ok(ShakeupExpansion {
            reference,
            amplitudes,
            delta,
            delta_alpha: ((delta + delta.abs()) / 2) as u32,
            delta_beta: ((delta.abs() - delta) / 2) as u32,
            mu,
            l_max: mu as usize,
            tail_mass: 0.0,
        });
    }

    let u = frame.u;
    let v_abs = frame.v.norm();
    // log-space scalar prefactor; m, n stay small but the (u v)^-mu factor
    // can overflow on its own for weak squeezes
    let mut ln_fact = 0.0;
    for i in 2..=m.max(n) {
        let term = fmath::ln(i as f64);
        if i <= m {
            ln_fact += term;
        }
        if i <= n {
            ln_fact += term;
        }
    }
    let ln_pref = -0.5 * ln_fact - f64::from(d + 1 + mu) * fmath::ln(u);

    let mut l_max = L_START.max(mu as usize + 1);
    loop {
        let q = q_table(frame, mu, d, l_max);
        let mut amplitudes = Vec::with_capacity(l_max + 1);
        let mut mass = 0.0;
        for l in 0..=l_max {
            let ql = q.value(l);
            if ql == 0.0 {
                amplitudes.push(C64::new(0.0, 0.0));
                continue;
            }
            // |P(l)| = pref * |q_l| * |v|^(l - mu) * u^-l, with the negative
            // power of |v| at l < mu always tamed by q_l ~ |v|^{2(mu-l)}
            let v_pow = if l as u32 >= mu {
                fmath::powi(v_abs, l as u32 - mu)
            } else {
                1.0 / fmath::powi(v_abs, mu - l as u32)
            };
            let mag = fmath::exp(ln_pref - l as f64 * fmath::ln(u)) * ql * v_pow;
            let angle = (l as f64 - f64::from(mu)) * frame.phi + l as f64 * PI;
            let amp = C64::from_polar(mag, angle);
            mass += amp.norm_sqr();
            amplitudes.push(amp);
        }
        let tail_mass = 1.0 - mass;
        if tail_mass <= tol {
            return Ok(ShakeupExpansion {
                reference,
                amplitudes,
                delta,
                delta_alpha: ((delta + delta.abs()) / 2) as u32,
                delta_beta: ((delta.abs() - delta) / 2) as u32,
                mu,
                l_max,
                tail_mass,
            });
        }
        if l_max >= L_CAP {
            return Err(Error::TruncationBudget { l_max, tail_mass });
        }
        l_max *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::KVector;
    use approx::assert_abs_diff_eq;

    fn frame(tanh_theta: f64, phi: f64) -> InstantBogoliubov {
        InstantBogoliubov::from_squeeze(tanh_theta.atanh(), phi, 1.0, 0.0, KVector::zero())
            .unwrap()
    }

    #[test]
    fn p00_vacuum_limits() {
        let f = frame(0.0, 0.0);
        assert_eq!(p00(&f, 0), C64::new(1.0, 0.0));
        assert_eq!(p00(&f, 1).norm(), 0.0);
        assert_eq!(p00(&f, 5).norm(), 0.0);
    }

    #[test]
    fn p00_geometric_series() {
        let f = frame(0.5, 0.0);
        let w: f64 = (0..200).map(|l| p00(&f, l).norm_sqr()).sum();
        assert_abs_diff_eq!(w, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p00(&f, 0).norm_sqr(), 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(p00(&f, 1).norm_sqr(), 0.1875, epsilon = 1e-12);
        assert_abs_diff_eq!(p00(&f, 2).norm_sqr(), 0.046875, epsilon = 1e-12);
        // sign (-1)^2 = +1, magnitude 0.25 sqrt(0.75)
        let p2 = p00(&f, 2);
        assert_abs_diff_eq!(p2.re, 0.216506350946, epsilon = 1e-10);
        assert_abs_diff_eq!(p2.im, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn p00_weights_strictly_decreasing() {
        let f = frame(0.82, 1.1);
        let mut prev = p00(&f, 0).norm_sqr();
        for l in 1..60 {
            let w = p00(&f, l).norm_sqr();
            assert!(w < prev);
            prev = w;
        }
    }

    #[test]
    fn q_base_and_first_layers() {
        let f = frame(0.62, 0.4);
        let q00 = q_table(&f, 0, 0, 10);
        for l in 0..=10 {
            assert_eq!(q00.value(l), 1.0);
        }
        // mu = 0, d = 1: sqrt(l+1) by the SU(1,1) identity
        let q01 = q_table(&f, 0, 1, 10);
        for l in 0..=10 {
            assert_abs_diff_eq!(q01.value(l), ((l + 1) as f64).sqrt(), epsilon = 1e-12);
        }
        // mu = 1, d = 0, l = 0: the l-1 term drops, leaving -|v|^2
        let q10 = q_table(&f, 1, 0, 10);
        assert_abs_diff_eq!(q10.value(0), -f.v.norm_sqr(), epsilon = 1e-12);
    }

    #[test]
    fn single_magnon_weights() {
        let f = frame(0.5, 0.0);
        let exp = shakeup_amplitudes(&f, 1, 0, 1e-12).unwrap();
        let x: f64 = 0.25;
        for (l, w) in exp.weights().enumerate().take(6) {
            let expect = (l as f64 + 1.0) * (1.0 - x) * (1.0 - x) * x.powi(l as i32);
            assert_abs_diff_eq!(w, expect, epsilon = 1e-12);
        }
        assert_eq!(exp.delta, 1);
        assert_eq!((exp.delta_alpha, exp.delta_beta), (1, 0));
        assert_eq!(exp.mu, 0);
    }

    #[test]
    fn no_squeeze_is_unit_mass_at_mu() {
        let f = frame(0.0, 0.0);
        for (m, n) in [(0u32, 0u32), (1, 0), (2, 2), (3, 1)] {
            let exp = shakeup_amplitudes(&f, m, n, 1e-12).unwrap();
            let mu = m.min(n) as usize;
            assert_eq!(exp.l_max, mu);
            assert_eq!(exp.weight(mu), 1.0);
            assert_eq!(exp.expelled_weight(), 0.0);
            assert_eq!(exp.tail_mass, 0.0);
        }
    }

    #[test]
    fn normalization_and_symmetry() {
        for (i, tanh) in [0.1, 0.45, 0.8, 0.95].iter().enumerate() {
            let f = frame(*tanh, 0.9 * i as f64);
            for m in 0..4u32 {
                for n in 0..4u32 {
                    let exp = shakeup_amplitudes(&f, m, n, 1e-12).unwrap();
                    let mass: f64 = exp.weights().sum();
                    assert!(
                        (mass + exp.tail_mass - 1.0).abs() < 1e-12,
                        "mass accounting broken for ({m},{n})"
                    );
                    assert!((mass - 1.0).abs() < 1e-10, "norm {mass} for ({m},{n}) at {tanh}");
                    let swapped = shakeup_amplitudes(&f, n, m, 1e-12).unwrap();
                    for l in 0..=exp.l_max.min(swapped.l_max) {
                        assert!(
                            (exp.amplitudes[l].norm() - swapped.amplitudes[l].norm()).abs() < 1e-12
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn theorem_shakeup_iff_spread() {
        // more than one occupied line <=> weight outside mu
        for tanh in [0.0, 1e-9, 0.3, 0.9] {
            let f = frame(tanh, 0.2);
            for (m, n) in [(0u32, 0u32), (1, 1), (2, 1)] {
                let exp = shakeup_amplitudes(&f, m, n, 1e-13).unwrap();
                let occupied = exp.weights().filter(|w| *w > 1e-12).count();
                let expelled = exp.expelled_weight();
                assert_eq!(occupied > 1, expelled > 1e-12, "tanh={tanh} ({m},{n})");
            }
        }
    }

    #[test]
    fn rejects_bad_tolerance() {
        let f = frame(0.3, 0.0);
        assert!(shakeup_amplitudes(&f, 0, 0, 0.0).is_err());
        assert!(shakeup_amplitudes(&f, 0, 0, 1.0).is_err());
    }

    #[test]
    fn truncation_budget_error_near_unit_ratio() {
        // tanh Theta so close to one the tail cannot be drained within the cap
        let f = InstantBogoliubov::from_squeeze(8.0, 0.0, 1.0, 0.0, KVector::zero()).unwrap();
        assert!(matches!(
            shakeup_amplitudes(&f, 0, 0, 1e-12),
            Err(Error::TruncationBudget { .. })
        ));
    }
}
