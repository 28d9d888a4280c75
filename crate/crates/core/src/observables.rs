//! Entanglement measures and quench energy spectra built on the amplitude
//! expansions.

use alloc::vec::Vec;

use crate::bogoliubov::{instant_frame, InstantBogoliubov};
use crate::fmath;
use crate::lattice::{KPath, KVector, LatticeSpec};
use crate::model::{EnvelopeSpec, ModelParams, PulseParams};
use crate::shakeup::{shakeup_amplitudes, ShakeupExpansion};
use crate::{Error, Result};

/// Entropy units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    /// Nats.
    Natural,
    /// Bits.
    Two,
}

/// Entanglement of one instantaneous eigenstate in the static mode pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementResult {
    pub entropy: f64,
    /// Number of Schmidt weights above `rank_tol`.
    pub schmidt_rank_eff: usize,
    pub k: KVector,
    /// Reference occupations (m, n).
    pub reference: (u32, u32),
}

/// Entropy of entanglement -sum |P|^2 log |P|^2 with 0 log 0 = 0, plus the
/// effective Schmidt rank #{ l : |P(l)|^2 > rank_tol }.
pub fn entanglement_entropy(
    exp: &ShakeupExpansion,
    log_base: LogBase,
    rank_tol: f64,
) -> EntanglementResult {
    let mut entropy = 0.0;
    let mut rank = 0usize;
    for w in exp.weights() {
        if w > 0.0 {
            entropy -= w * fmath::ln(w);
        }
        if w > rank_tol {
            rank += 1;
        }
    }
    if let LogBase::Two = log_base {
        entropy /= core::f64::consts::LN_2;
    }
    // -0.0 from an exact product state
    if entropy == 0.0 {
        entropy = 0.0;
    }
    EntanglementResult {
        entropy,
        schmidt_rank_eff: rank,
        k: exp.reference.k,
        reference: (exp.reference.m, exp.reference.n),
    }
}

/// One grid point of an entanglement sweep.
#[derive(Debug, Clone)]
pub struct MapEntry {
    pub k_index: usize,
    pub k: KVector,
    pub theta: f64,
    /// Per-reference results; an unstable point is flagged, not fatal.
    pub outcome: Result<Vec<EntanglementResult>>,
}

/// Entanglement over a (k-path x field-angle) grid at full pulse strength,
/// one result per reference state. Unstable points are recorded as errors in
/// their [`MapEntry`] and do not abort the sweep.
#[allow(clippy::too_many_arguments)]
pub fn entanglement_map(
    m: &ModelParams,
    pulse: &PulseParams,
    lat: &LatticeSpec,
    path: &KPath,
    references: &[(u32, u32)],
    theta_grid: &[f64],
    truncation_tol: f64,
    rank_tol: f64,
) -> Vec<MapEntry> {
    let points = path.points();
    let mut out = Vec::with_capacity(points.len() * theta_grid.len());
    for (k_index, k) in points.iter().enumerate() {
        for &theta in theta_grid {
            out.push(entanglement_point(
                m, pulse, lat, k, k_index, theta, references, truncation_tol, rank_tol,
            ));
        }
    }
    out
}

/// Single grid point of [`entanglement_map`]; the pulse direction is replaced
/// by the in-plane angle `theta` and the envelope clamped to f = 1.
#[allow(clippy::too_many_arguments)]
pub fn entanglement_point(
    m: &ModelParams,
    pulse: &PulseParams,
    lat: &LatticeSpec,
    k: &KVector,
    k_index: usize,
    theta: f64,
    references: &[(u32, u32)],
    truncation_tol: f64,
    rank_tol: f64,
) -> MapEntry {
    let rotated = PulseParams {
        delta_j: pulse.delta_j,
        e_dir: [fmath::cos(theta), fmath::sin(theta), 0.0],
        envelope: EnvelopeSpec::unit(),
    };
    let outcome = instant_frame(m, &rotated, lat, k, 0.0).and_then(|(_, inst)| {
        references
            .iter()
            .map(|&(rm, rn)| {
                shakeup_amplitudes(&inst, rm, rn, truncation_tol)
                    .map(|exp| entanglement_entropy(&exp, LogBase::Natural, rank_tol))
            })
            .collect()
    });
    MapEntry { k_index, k: *k, theta, outcome }
}

/// Which energy is attached to the l-th satellite line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyConvention {
    /// 2 l eps~(tau) + delta B, the bare satellite ladder.
    PaperForm,
    /// (2 l + |delta|) eps~(tau) + delta B, the occupation-number energy of
    /// the state (l + d_alpha, l + d_beta); comparable to the exact
    /// diagonalization expectation value.
    FullOccupation,
}

/// One satellite line of the quench energy spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPeak {
    pub l: usize,
    pub energy: f64,
    /// |P_mn(l)|^2.
    pub weight: f64,
    /// True on the remainder line l = mu.
    pub is_remainder: bool,
}

/// Satellite line list for one expansion.
pub fn shakeup_spectrum(
    exp: &ShakeupExpansion,
    frame: &InstantBogoliubov,
    b: f64,
    convention: EnergyConvention,
) -> Vec<SpectrumPeak> {
    let delta_b = exp.delta as f64 * b;
    let offset = match convention {
        EnergyConvention::PaperForm => 0.0,
        EnergyConvention::FullOccupation => exp.delta.unsigned_abs() as f64 * frame.eps_diag,
    };
    exp.weights()
        .enumerate()
        .map(|(l, weight)| SpectrumPeak {
            l,
            energy: 2.0 * l as f64 * frame.eps_diag + offset + delta_b,
            weight,
            is_remainder: l == exp.mu as usize,
        })
        .collect()
}

/// Remainder / expelled split of the quench energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySplit {
    pub total: f64,
    /// Contribution of the remainder line l = mu.
    pub remainder: f64,
    /// Everything else; nonzero exactly when satellite lines exist.
    pub expelled: f64,
}

/// Weighted energy split over the satellite lines.
pub fn energy_fluctuation(
    exp: &ShakeupExpansion,
    frame: &InstantBogoliubov,
    b: f64,
    convention: EnergyConvention,
) -> EnergySplit {
    let peaks = shakeup_spectrum(exp, frame, b, convention);
    let mut remainder = 0.0;
    let mut expelled = 0.0;
    for p in &peaks {
        if p.is_remainder {
            remainder += p.weight * p.energy;
        } else {
            expelled += p.weight * p.energy;
        }
    }
    EnergySplit { total: remainder + expelled, remainder, expelled }
}

/// Time-resolved satellite intensities.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTrace {
    pub times: Vec<f64>,
    /// (l, intensity over `times`) per peak.
    pub traces: Vec<(usize, Vec<f64>)>,
    pub t0_spacing: f64,
}

/// Per-peak intensity traces: the l-th line carries
/// weight_l * f(t - l * t0_spacing), mirroring a pulse arriving later for
/// higher harmonics.
pub fn spectrum_trace(
    peaks: &[SpectrumPeak],
    envelope: &EnvelopeSpec,
    t0_spacing: f64,
    t_grid: &[f64],
) -> Result<SpectrumTrace> {
    if t_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if !(t0_spacing > 0.0) {
        return Err(Error::InvalidInput("t0 spacing must be positive"));
    }
    envelope.validate()?;
    let traces = peaks
        .iter()
        .map(|p| {
            let center = t0_spacing * p.l as f64;
            let row = t_grid.iter().map(|&t| p.weight * envelope.eval(t - center)).collect();
            (p.l, row)
        })
        .collect();
    Ok(SpectrumTrace { times: t_grid.to_vec(), traces, t0_spacing })
}
