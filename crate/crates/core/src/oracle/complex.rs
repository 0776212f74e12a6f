//! Full cubical chain complex of a voxel body.
//!
//! Cells are addressed by doubled coordinates: a cell's centre times two.
//! The number of odd coordinates is the cell's dimension.

use crate::error::{Error, Result};
use crate::grid::VoxelGrid;
use crate::oracle::reduce::sparse_rank;
use crate::report::Betti;

/// Default guard on the total number of cells.
pub const DEFAULT_CELL_LIMIT: usize = 4_000_000;

pub struct CubicalChainComplex {
    cells: [Vec<[u32; 3]>; 4],
    /// `boundaries[k - 1]` holds the columns of ∂k as sorted row indices
    /// into `cells[k - 1]`.
    boundaries: [Vec<Vec<u32>>; 3],
}

impl CubicalChainComplex {
    pub fn new(grid: &VoxelGrid) -> Result<Self> {
        Self::with_limit(grid, DEFAULT_CELL_LIMIT)
    }

    /// Every vertex, edge, square and cube that is a face of some occupied cube.
    pub fn with_limit(grid: &VoxelGrid, limit: usize) -> Result<Self> {
        let [nx, ny, nz] = grid.dims();
        let d = [2 * nx + 1, 2 * ny + 1, 2 * nz + 1];
        let flat = |p: [usize; 3]| (p[2] * d[1] + p[1]) * d[0] + p[0];

        let mut present = vec![false; d[0] * d[1] * d[2]];
        for [i, j, k] in grid.occupied() {
            for c in 0..3 {
                for b in 0..3 {
                    for a in 0..3 {
                        present[flat([2 * i + a, 2 * j + b, 2 * k + c])] = true;
                    }
                }
            }
        }
        let total = present.iter().filter(|&&p| p).count();
        if total > limit {
            return Err(Error::TooLarge { cells: total, limit });
        }

        let mut index = vec![u32::MAX; present.len()];
        let mut cells: [Vec<[u32; 3]>; 4] = Default::default();
        for z in 0..d[2] {
            for y in 0..d[1] {
                for x in 0..d[0] {
                    let f = flat([x, y, z]);
                    if present[f] {
                        let dim = (x & 1) + (y & 1) + (z & 1);
                        index[f] = cells[dim].len() as u32;
                        cells[dim].push([x as u32, y as u32, z as u32]);
                    }
                }
            }
        }

        let mut boundaries: [Vec<Vec<u32>>; 3] = Default::default();
        for dim in 1..=3 {
            boundaries[dim - 1] = cells[dim]
                .iter()
                .map(|&cell| {
                    let mut col = Vec::with_capacity(2 * dim);
                    for axis in 0..3 {
                        if cell[axis] & 1 == 1 {
                            for delta in [-1i64, 1] {
                                let mut face = cell.map(|c| c as usize);
                                face[axis] = (face[axis] as i64 + delta) as usize;
                                let idx = index[flat(face)];
                                debug_assert_ne!(idx, u32::MAX, "face of a present cell is present");
                                col.push(idx);
                            }
                        }
                    }
                    col.sort_unstable();
                    col
                })
                .collect();
        }
        Ok(Self { cells, boundaries })
    }

    pub fn cell_counts(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|k| self.cells[k].len())
    }

    /// Doubled coordinates of the `dim`-cells.
    pub fn cells(&self, dim: usize) -> &[[u32; 3]] {
        &self.cells[dim]
    }

    /// Columns of ∂k, `k ∈ 1..=3`.
    pub fn boundary(&self, k: usize) -> &[Vec<u32>] {
        &self.boundaries[k - 1]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let n = self.cell_counts();
        n[0] as i64 - n[1] as i64 + n[2] as i64 - n[3] as i64
    }

    /// Ranks of ∂1, ∂2, ∂3.
    pub fn ranks(&self) -> [usize; 3] {
        [1, 2, 3].map(|k| sparse_rank(self.boundaries[k - 1].clone(), self.cells[k - 1].len()))
    }

    /// Checks ∂k∘∂(k+1) = 0 for k = 1, 2.
    pub fn is_chain_complex(&self) -> bool {
        (1..=2).all(|k| {
            let lower = self.boundary(k);
            self.boundary(k + 1).iter().all(|col| {
                let mut acc = vec![false; self.cells[k - 1].len()];
                for &face in col {
                    for &r in &lower[face as usize] {
                        acc[r as usize] ^= true;
                    }
                }
                acc.iter().all(|&b| !b)
            })
        })
    }
}

/// Homology of a body computed straight from its cubical chain complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub betti: Betti,
    pub cell_counts: [usize; 4],
    pub ranks: [usize; 3],
}

/// `b_k = #k-cells − rank ∂k − rank ∂(k+1)`.
pub fn betti_bruteforce(grid: &VoxelGrid) -> Result<HomologyReport> {
    betti_bruteforce_with_limit(grid, DEFAULT_CELL_LIMIT)
}

pub fn betti_bruteforce_with_limit(grid: &VoxelGrid, limit: usize) -> Result<HomologyReport> {
    let complex = CubicalChainComplex::with_limit(grid, limit)?;
    let n = complex.cell_counts();
    let r = complex.ranks();
    let b = [
        n[0] - r[0],
        n[1] - r[0] - r[1],
        n[2] - r[1] - r[2],
        n[3] - r[2],
    ];
    if b[3] != 0 {
        return Err(Error::Invariant(format!("b3 = {} for a subset of R^3", b[3])));
    }
    Ok(HomologyReport {
        betti: Betti::new(b[0], b[1], b[2]),
        cell_counts: n,
        ranks: r,
    })
}
