//! Two-mode antiferromagnetic magnon kernels for sudden exchange quenches.
//!
//! The crate diagonalizes the pair-coupled magnon Hamiltonian of an easy-axis
//! antiferromagnet with SU(1,1) Bogoliubov transformations, applies a sudden
//! light-induced exchange perturbation, and expands the pre-quench eigenstates
//! in the instantaneous post-quench eigenbasis. From the resulting transition
//! amplitudes it computes satellite ("shake-up") energy spectra, entanglement
//! entropy and Schmidt rank of the twin magnon modes.
//!
//! Everything here is pure arithmetic on value types: no IO, no globals, no
//! interior mutability. All energies are in meV, k-vectors in radians per
//! lattice constant, and time in dimensionless pulse units.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable the default
//! `std` feature and enable `libm` instead.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("shakeup-core needs either the `std` or the `libm` feature");

extern crate alloc;

pub mod bogoliubov;
mod error;
mod fmath;
pub mod lattice;
pub mod model;
pub mod observables;
pub mod shakeup;

pub use error::{Error, Result};

pub use bogoliubov::{
    dispersion_curve, instant_diagonalize, instant_frame, static_diagonalize, DispersionPoint,
    EigenstateLabel, InstantBogoliubov, StaticBogoliubov,
};
pub use lattice::{gamma_k, make_kpath, xi_k, xi_zero, KPath, KVector, LatticeKind, LatticeSpec, PathPreset};
pub use model::{
    bare_coefficients, delta_j_microscopic, perturbed_coefficients, BareCoefficients,
    EnvelopeSpec, ModelParams, PerturbedCoefficients, PulseParams,
};
pub use observables::{
    energy_fluctuation, entanglement_entropy, entanglement_map, shakeup_spectrum, spectrum_trace,
    EnergyConvention, EnergySplit, EntanglementResult, LogBase, MapEntry, SpectrumPeak,
    SpectrumTrace,
};
pub use shakeup::{p00, q_table, shakeup_amplitudes, QTable, ShakeupExpansion};

/// Complex double, the only scalar flavor used throughout.
pub type C64 = num_complex::Complex64;

/// Frames are rejected once the mode-coupling ratio gets this close to one,
/// where cosh/sinh of the squeeze parameter overflow.
pub const STABILITY_MARGIN: f64 = 1e-12;
