//! Lattice geometry: neighbor shells, structure factors and k-paths.
//!
//! Neighbor offsets are stored in units of the lattice constant `a`, and
//! k-vectors in radians per lattice constant, so every phase `k . delta` is
//! dimensionless and `a` never enters the arithmetic.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::fmath;
use crate::{C64, Error, Result};

/// Which neighbor shell a [`LatticeSpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum LatticeKind {
    SimpleCubic,
    SquareLattice,
    LinearChain,
    Custom,
}

/// Nearest-neighbor geometry of a bipartite spin lattice.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LatticeSpec {
    pub kind: LatticeKind,
    /// Lattice constant; metadata only, see the module docs.
    pub a: f64,
    /// Neighbor offsets in units of `a`.
    pub deltas: Vec<[f64; 3]>,
    /// Coordination number, always `deltas.len()`.
    pub z: usize,
}

impl LatticeSpec {
    /// Simple cubic shell: Z = 6, offsets +-e_x, +-e_y, +-e_z.
    pub fn simple_cubic() -> Self {
        LatticeSpec {
            kind: LatticeKind::SimpleCubic,
            a: 1.0,
            deltas: alloc::vec![
                [1.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, -1.0, 0.0],
                [0.0, 0.0, 1.0],
                [0.0, 0.0, -1.0],
            ],
            z: 6,
        }
    }

    /// Square lattice in the xy plane: Z = 4.
    pub fn square_lattice() -> Self {
        LatticeSpec {
            kind: LatticeKind::SquareLattice,
            a: 1.0,
            deltas: alloc::vec![
                [1.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, -1.0, 0.0],
            ],
            z: 4,
        }
    }

    /// Chain along x: Z = 2.
    pub fn linear_chain() -> Self {
        LatticeSpec {
            kind: LatticeKind::LinearChain,
            a: 1.0,
            deltas: alloc::vec![[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]],
            z: 2,
        }
    }

    /// Arbitrary neighbor shell; offsets in units of `a`.
    pub fn custom(deltas: Vec<[f64; 3]>) -> Result<Self> {
        if deltas.is_empty() {
            return Err(Error::InvalidInput("custom lattice needs at least one neighbor"));
        }
        let z = deltas.len();
        Ok(LatticeSpec { kind: LatticeKind::Custom, a: 1.0, deltas, z })
    }

    pub fn validate(&self) -> Result<()> {
        if self.z != self.deltas.len() {
            return Err(Error::InvalidInput("coordination number != number of deltas"));
        }
        if self.deltas.is_empty() {
            return Err(Error::InvalidInput("lattice has no neighbors"));
        }
        if !(self.a > 0.0) {
            return Err(Error::InvalidInput("lattice constant must be positive"));
        }
        Ok(())
    }
}

/// A crystal momentum, componentwise reduced to the first zone (-pi, pi]
/// (radians per lattice constant) on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(from = "[f64; 3]", into = "[f64; 3]"))]
pub struct KVector {
    components: [f64; 3],
}

impl KVector {
    pub fn new(kx: f64, ky: f64, kz: f64) -> Self {
        KVector {
            components: [reduce_to_zone(kx), reduce_to_zone(ky), reduce_to_zone(kz)],
        }
    }

    pub fn zero() -> Self {
        KVector { components: [0.0; 3] }
    }

    pub fn components(&self) -> [f64; 3] {
        self.components
    }

    pub fn dot(&self, v: &[f64; 3]) -> f64 {
        self.components[0] * v[0] + self.components[1] * v[1] + self.components[2] * v[2]
    }

    /// Inversion partner -k (also zone-reduced).
    pub fn neg(&self) -> Self {
        KVector::new(-self.components[0], -self.components[1], -self.components[2])
    }
}

impl From<[f64; 3]> for KVector {
    fn from(c: [f64; 3]) -> Self {
        KVector::new(c[0], c[1], c[2])
    }
}

impl From<KVector> for [f64; 3] {
    fn from(k: KVector) -> [f64; 3] {
        k.components
    }
}

fn reduce_to_zone(x: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut t = x - two_pi * fmath::floor(x / two_pi);
    // floor rounding can leave t marginally outside [0, 2pi)
    if t >= two_pi {
        t -= two_pi;
    }
    if t < 0.0 {
        t += two_pi;
    }
    if t > PI {
        t - two_pi
    } else {
        t
    }
}

/// Geometric structure factor gamma_k = (1/Z) sum_delta exp(i k.delta).
///
/// Real for inversion-symmetric neighbor shells; |gamma_k| <= 1 always.
pub fn gamma_k(lattice: &LatticeSpec, k: &KVector) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for d in &lattice.deltas {
        let phase = k.dot(d);
        acc += C64::new(fmath::cos(phase), fmath::sin(phase));
    }
    acc / lattice.z as f64
}

/// Bond-projected structure factor
/// xi_k = (1/Z) sum_delta (delta.E_hat)^2 exp(i k.delta),
/// with the field amplitude already divided out: only the direction matters.
pub fn xi_k(lattice: &LatticeSpec, k: &KVector, e_dir: &[f64; 3]) -> Result<C64> {
    let norm = fmath::sqrt(e_dir[0] * e_dir[0] + e_dir[1] * e_dir[1] + e_dir[2] * e_dir[2]);
    if !(norm > 1e-150) {
        return Err(Error::ZeroFieldDirection);
    }
    let e = [e_dir[0] / norm, e_dir[1] / norm, e_dir[2] / norm];
    let mut acc = C64::new(0.0, 0.0);
    for d in &lattice.deltas {
        let proj = d[0] * e[0] + d[1] * e[1] + d[2] * e[2];
        let w = proj * proj;
        let phase = k.dot(d);
        acc += w * C64::new(fmath::cos(phase), fmath::sin(phase));
    }
    Ok(acc / lattice.z as f64)
}

/// xi at k = 0; real and in [0, 1] by construction.
pub fn xi_zero(lattice: &LatticeSpec, e_dir: &[f64; 3]) -> Result<f64> {
    let v = xi_k(lattice, &KVector::zero(), e_dir)?;
    debug_assert!(v.im == 0.0);
    Ok(v.re)
}

/// Piecewise-linear path through the Brillouin zone.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KPath {
    pub waypoints: Vec<(String, KVector)>,
    pub samples_per_segment: usize,
}

impl KPath {
    /// All sampled points: the first waypoint, then `samples_per_segment`
    /// points per segment ending on each waypoint.
    pub fn points(&self) -> Vec<KVector> {
        let mut pts = Vec::with_capacity(self.len());
        let Some(first) = self.waypoints.first().map(|w| w.1.components()) else {
            return pts;
        };
        pts.push(KVector::new(first[0], first[1], first[2]));
        for pair in self.waypoints.windows(2) {
            let a = pair[0].1.components();
            let b = pair[1].1.components();
            for j in 1..=self.samples_per_segment {
                let t = j as f64 / self.samples_per_segment as f64;
                pts.push(KVector::new(
                    a[0] + (b[0] - a[0]) * t,
                    a[1] + (b[1] - a[1]) * t,
                    a[2] + (b[2] - a[2]) * t,
                ));
            }
        }
        pts
    }

    pub fn len(&self) -> usize {
        if self.waypoints.is_empty() {
            return 0;
        }
        1 + (self.waypoints.len() - 1) * self.samples_per_segment
    }

    pub fn is_empty(&self) -> bool {
        self.waypoints.is_empty()
    }
}

/// Path choice for [`make_kpath`].
#[derive(Debug, Clone, PartialEq)]
pub enum PathPreset {
    /// Gamma -> X -> M -> Gamma -> R for the simple cubic zone.
    Gxmgr,
    /// Caller-supplied waypoints.
    Custom(Vec<(String, KVector)>),
}

/// Build a sampled path; `samples` points are inserted per segment.
pub fn make_kpath(lattice: &LatticeSpec, preset: PathPreset, samples: usize) -> Result<KPath> {
    lattice.validate()?;
    if samples == 0 {
        return Err(Error::InvalidInput("samples_per_segment must be >= 1"));
    }
    let waypoints = match preset {
        PathPreset::Gxmgr => alloc::vec![
            (String::from("G"), KVector::new(0.0, 0.0, 0.0)),
            (String::from("X"), KVector::new(PI, 0.0, 0.0)),
            (String::from("M"), KVector::new(PI, PI, 0.0)),
            (String::from("G"), KVector::new(0.0, 0.0, 0.0)),
            (String::from("R"), KVector::new(PI, PI, PI)),
        ],
        PathPreset::Custom(w) => {
            if w.len() < 2 {
                return Err(Error::InvalidInput("custom path needs at least two waypoints"));
            }
            w
        }
    };
    Ok(KPath { waypoints, samples_per_segment: samples })
}
