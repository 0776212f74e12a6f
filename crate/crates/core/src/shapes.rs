//! Test bodies with known topology, plus seeded random bodies.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::VoxelGrid;

#[derive(Clone, Debug, PartialEq)]
pub enum ShapeSpec {
    /// Fully occupied `nx × ny × nz` box.
    SolidBox { dims: [usize; 3] },
    /// `n × n × n` box with its `(n-2)³` interior removed.
    Shell { n: usize },
    /// `n × n × 1` slab with its `(n-2)²` interior removed: a square annulus.
    Ring { n: usize },
    /// Two solid `side³` cubes, separated by one empty cube on every axis.
    TwoComponents { side: usize },
    /// Independent Bernoulli(density) per cube; see [`random_grid`].
    Random { dims: [usize; 3], density: f64, seed: u64 },
}

impl ShapeSpec {
    pub fn shell() -> Self {
        ShapeSpec::Shell { n: 3 }
    }

    pub fn ring() -> Self {
        ShapeSpec::Ring { n: 3 }
    }

    pub fn two_components() -> Self {
        ShapeSpec::TwoComponents { side: 1 }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ShapeSpec::SolidBox { .. } => "solid-box",
            ShapeSpec::Shell { .. } => "shell",
            ShapeSpec::Ring { .. } => "ring",
            ShapeSpec::TwoComponents { .. } => "two-components",
            ShapeSpec::Random { .. } => "random",
        }
    }
}

pub fn generate(spec: &ShapeSpec) -> Result<VoxelGrid> {
    match *spec {
        ShapeSpec::SolidBox { dims } => VoxelGrid::from_fn(dims, |_, _, _| true),
        ShapeSpec::Shell { n } => {
            if n < 3 {
                return Err(Error::InvalidShape(format!("shell needs n >= 3, got {n}")));
            }
            let wall = |c: usize| c == 0 || c == n - 1;
            VoxelGrid::from_fn([n, n, n], |i, j, k| wall(i) || wall(j) || wall(k))
        }
        ShapeSpec::Ring { n } => {
            if n < 3 {
                return Err(Error::InvalidShape(format!("ring needs n >= 3, got {n}")));
            }
            let wall = |c: usize| c == 0 || c == n - 1;
            VoxelGrid::from_fn([n, n, 1], |i, j, _| wall(i) || wall(j))
        }
        ShapeSpec::TwoComponents { side } => {
            if side == 0 {
                return Err(Error::InvalidShape("two-components needs side >= 1".into()));
            }
            let n = 2 * side + 1;
            VoxelGrid::from_fn([n, n, n], |i, j, k| {
                let lo = i < side && j < side && k < side;
                let hi = i > side && j > side && k > side;
                lo || hi
            })
        }
        ShapeSpec::Random { dims, density, seed } => random_grid(dims, density, seed),
    }
}

/// Seeded Bernoulli body.
///
/// The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)`).
/// Cubes are visited with `i` fastest, then `j`, then `k`; each draws one
/// `u64` word `w` and is occupied iff `(w >> 11) · 2⁻⁵³ < density`.
pub fn random_grid(dims: [usize; 3], density: f64, seed: u64) -> Result<VoxelGrid> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidShape(format!("density {density} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    VoxelGrid::from_fn(dims, |_, _, _| {
        let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        unit < density
    })
}
