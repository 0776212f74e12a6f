//! The ascending sweep that records critical points and builds the matrix of
//! the first boundary operator, and its dual run on the complement.

use log::debug;

use super::code::{neighborhood_code, VertexClass};
use super::descent::{descent_table, step_down};
use super::table::classify;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::grid::{Vertex, VoxelGrid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CriticalPoint {
    pub vertex: Vertex,
    pub class: VertexClass,
    /// The fictive upper twin of a monkey saddle.
    pub is_double: bool,
    /// Position in its basis list.
    pub ordinal: usize,
}

/// Sink assignment: for each lattice vertex of the body, the ordinal in `c0`
/// of the minimum its descent path ends at.
#[derive(Clone, Debug)]
pub struct SinkMap {
    dims: [usize; 3],
    sinks: Vec<u32>,
}

const NO_SINK: u32 = u32::MAX;

impl SinkMap {
    fn new(vertex_dims: [usize; 3]) -> Self {
        Self {
            dims: vertex_dims,
            sinks: vec![NO_SINK; vertex_dims.iter().product()],
        }
    }

    #[inline]
    fn index(&self, v: Vertex) -> usize {
        (v[2] * self.dims[1] + v[1]) * self.dims[0] + v[0]
    }

    /// Sink of `v`, or `None` if `v` is not a vertex of the body.
    #[inline]
    pub fn get(&self, v: Vertex) -> Option<usize> {
        if v[0] >= self.dims[0] || v[1] >= self.dims[1] || v[2] >= self.dims[2] {
            return None;
        }
        let s = self.sinks[self.index(v)];
        (s != NO_SINK).then_some(s as usize)
    }

    #[inline]
    fn set(&mut self, v: Vertex, sink: u32) {
        let idx = self.index(v);
        self.sinks[idx] = sink;
    }

    #[inline]
    fn lookup(&self, v: Vertex) -> Result<u32> {
        let s = self.sinks[self.index(v)];
        if s == NO_SINK {
            return Err(Error::Invariant(format!(
                "sink of ({},{},{}) read before it was assigned",
                v[0], v[1], v[2]
            )));
        }
        Ok(s)
    }

    /// Number of body vertices with a sink.
    pub fn len(&self) -> usize {
        self.sinks.iter().filter(|&&s| s != NO_SINK).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub c0: Vec<CriticalPoint>,
    /// Index-1 points; each monkey saddle contributes itself and its double.
    pub c1: Vec<CriticalPoint>,
    /// Index-2 points met on the way; not part of the f-pass chain groups.
    pub index2: Vec<Vertex>,
    /// Rows indexed by `c1`, columns by `c0`.
    pub d1: Gf2Matrix,
    pub gf: SinkMap,
}

impl SweepResult {
    pub fn monkey_count(&self) -> usize {
        self.c1.iter().filter(|p| p.class == VertexClass::MonkeySaddle && !p.is_double).count()
    }
}

/// Lattice vertices in nondecreasing `x + y + z`, ties broken by `(x, y, z)`.
pub fn sweep_order(vertex_dims: [usize; 3]) -> impl Iterator<Item = Vertex> {
    let [mx, my, mz] = vertex_dims.map(|d| d - 1);
    (0..=mx + my + mz).flat_map(move |level| {
        let xs = level.saturating_sub(my + mz)..=level.min(mx);
        xs.flat_map(move |x| {
            let rest = level - x;
            let ys = rest.saturating_sub(mz)..=rest.min(my);
            ys.map(move |y| [x, y, rest - y])
        })
    })
}

/// One ascending pass over the body.
pub fn sweep(grid: &VoxelGrid) -> Result<SweepResult> {
    let descent = descent_table();
    let mut gf = SinkMap::new(grid.vertex_dims());
    let mut c0: Vec<CriticalPoint> = Vec::new();
    let mut c1: Vec<CriticalPoint> = Vec::new();
    let mut index2 = Vec::new();
    let mut entries: Vec<(usize, u32, u32)> = Vec::new();

    for v in sweep_order(grid.vertex_dims()) {
        let code = neighborhood_code(grid, v);
        if code.is_empty() {
            continue;
        }
        let class = classify(code);
        let axes = descent[code.0 as usize];
        match class {
            VertexClass::Index0 => {
                gf.set(v, c0.len() as u32);
                c0.push(CriticalPoint { vertex: v, class, is_double: false, ordinal: c0.len() });
            }
            VertexClass::Index1 => {
                let (a1, a2) = axes.down1.zip(axes.down2).ok_or_else(|| {
                    Error::Invariant(format!("index-1 code {code} without two descent edges"))
                })?;
                let s1 = gf.lookup(step_down(v, a1))?;
                let s2 = gf.lookup(step_down(v, a2))?;
                gf.set(v, s1);
                if s1 != s2 {
                    entries.push((c1.len(), s1, s2));
                }
                c1.push(CriticalPoint { vertex: v, class, is_double: false, ordinal: c1.len() });
            }
            VertexClass::MonkeySaddle => {
                let s1 = gf.lookup(step_down(v, 0))?;
                let s2 = gf.lookup(step_down(v, 1))?;
                let s3 = gf.lookup(step_down(v, 2))?;
                gf.set(v, s1);
                if s1 != s2 {
                    entries.push((c1.len(), s1, s2));
                }
                c1.push(CriticalPoint { vertex: v, class, is_double: false, ordinal: c1.len() });
                // the double descends to v itself and along -z
                if s1 != s3 {
                    entries.push((c1.len(), s1, s3));
                }
                c1.push(CriticalPoint { vertex: v, class, is_double: true, ordinal: c1.len() });
            }
            VertexClass::Regular | VertexClass::Index2 => {
                let a = axes.down1.ok_or(Error::NoDescent(v))?;
                let s = gf.lookup(step_down(v, a))?;
                gf.set(v, s);
                if class == VertexClass::Index2 {
                    index2.push(v);
                }
            }
            VertexClass::Forbidden => return Err(Error::Forbidden { vertex: v, code: code.0 }),
        }
    }

    let mut d1 = Gf2Matrix::zeros(c1.len(), c0.len());
    for (row, a, b) in entries {
        d1.set(row, a as usize, true);
        d1.set(row, b as usize, true);
    }
    debug!("sweep: |c0| = {}, |c1| = {}, index-2 = {}", c0.len(), c1.len(), index2.len());
    Ok(SweepResult { c0, c1, index2, d1, gf })
}

#[derive(Clone, Debug)]
pub struct DualResult {
    /// Minima of `-f` on the complement other than the corner, in original
    /// coordinates; these generate C2.
    pub c2: Vec<CriticalPoint>,
    /// Index-1 points of the complement pass, in original coordinates.
    pub c1: Vec<CriticalPoint>,
    /// ∂2: rows indexed by `c1`, columns by `c2`.
    pub d2: Gf2Matrix,
    /// The corner minimum removed from C0 of the complement pass.
    pub p0: CriticalPoint,
    /// The raw complement sweep (reflected coordinates).
    pub pass: SweepResult,
}

impl DualResult {
    pub fn c2_dim(&self) -> usize {
        self.c2.len()
    }
}

/// Whether every occupied cube keeps off the outer layer of the grid.
pub fn is_interior(grid: &VoxelGrid) -> bool {
    let [nx, ny, nz] = grid.dims();
    grid.occupied()
        .all(|[i, j, k]| i > 0 && j > 0 && k > 0 && i + 1 < nx && j + 1 < ny && k + 1 < nz)
}

/// The sweep of `-f` over the complement, run as the ascending sweep of the
/// reflected complement.
pub fn dual_sweep(grid: &VoxelGrid) -> Result<DualResult> {
    if !is_interior(grid) {
        return Err(Error::CornerNotFound);
    }
    let mirror = grid.complement().reflect();
    let pass = sweep(&mirror)?;
    // the corner where f is largest maps to the origin
    let p0_ordinal = pass
        .c0
        .iter()
        .position(|p| p.vertex == [0, 0, 0])
        .ok_or(Error::CornerNotFound)?;

    let back = |p: &CriticalPoint| CriticalPoint { vertex: grid.reflect_vertex(p.vertex), ..*p };
    let p0 = back(&pass.c0[p0_ordinal]);
    let c2: Vec<CriticalPoint> = pass
        .c0
        .iter()
        .filter(|p| p.ordinal != p0_ordinal)
        .enumerate()
        .map(|(ordinal, p)| CriticalPoint { ordinal, ..back(p) })
        .collect();
    let c1 = pass.c1.iter().map(back).collect();
    let d2 = pass.d1.delete_column(p0_ordinal)?;
    Ok(DualResult { c2, c1, d2, p0, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::preprocess;
    use crate::shapes::{generate, ShapeSpec};

    fn single_cube() -> VoxelGrid {
        preprocess(&VoxelGrid::from_cubes([1, 1, 1], [[0, 0, 0]]).unwrap()).0
    }

    #[test]
    fn order_is_by_level_then_lexicographic() {
        let all: Vec<Vertex> = sweep_order([3, 2, 4]).collect();
        assert_eq!(all.len(), 24);
        let mut sorted = all.clone();
        sorted.sort_by_key(|v| (v[0] + v[1] + v[2], *v));
        assert_eq!(all, sorted);
    }

    #[test]
    fn single_cube_sweep() {
        let g = single_cube();
        let s = sweep(&g).unwrap();
        assert_eq!(s.c0.len(), 1);
        assert_eq!(s.c0[0].vertex, [2, 2, 2]);
        assert!(s.c1.is_empty());
        assert_eq!((s.d1.rows(), s.d1.cols()), (0, 1));
        assert_eq!(s.gf.len(), 8);
        for x in 2..=3 {
            for y in 2..=3 {
                for z in 2..=3 {
                    assert_eq!(s.gf.get([x, y, z]), Some(0));
                }
            }
        }
        assert_eq!(s.gf.get([1, 1, 1]), None);
    }

    #[test]
    fn two_disjoint_cubes() {
        let g = VoxelGrid::from_cubes([5, 5, 5], [[1, 1, 1], [3, 3, 3]]).unwrap();
        let s = sweep(&g).unwrap();
        assert_eq!((s.c0.len(), s.c1.len()), (2, 0));
    }

    #[test]
    fn single_cube_dual() {
        let d = dual_sweep(&single_cube()).unwrap();
        assert_eq!(d.pass.c0.len(), 1);
        assert_eq!(d.p0.vertex, [5, 5, 5]);
        assert_eq!(d.c2_dim(), 0);
        assert_eq!(d.d2.cols(), 0);
    }

    #[test]
    fn shell_dual_has_a_cavity_minimum() {
        let g = preprocess(&generate(&ShapeSpec::shell()).unwrap()).0;
        let d = dual_sweep(&g).unwrap();
        assert_eq!(d.c2_dim(), 1);
        assert_eq!(d.d2.rank(), 0);
    }

    #[test]
    fn ring_rows_have_zero_or_two_ones() {
        let g = preprocess(&generate(&ShapeSpec::ring()).unwrap()).0;
        let s = sweep(&g).unwrap();
        assert!(!s.c1.is_empty());
        for r in 0..s.d1.rows() {
            assert!(matches!(s.d1.row_ones(r).count(), 0 | 2));
        }
        assert_eq!(s.c0.len() - s.d1.rank(), 1);
    }

    #[test]
    fn dual_rejects_bodies_touching_the_box() {
        let g = VoxelGrid::from_cubes([2, 2, 2], [[0, 0, 0]]).unwrap();
        assert!(matches!(dual_sweep(&g), Err(Error::CornerNotFound)));
    }

    #[test]
    fn forbidden_vertex_is_a_hard_error() {
        // two cubes meeting at a vertex side by side (code 0x42 at the centre)
        let g = VoxelGrid::from_cubes([4, 4, 4], [[2, 1, 1], [1, 2, 2]]).unwrap();
        match sweep(&g) {
            Err(Error::Forbidden { vertex, code }) => {
                assert_eq!(vertex, [2, 2, 2]);
                assert_eq!(code, 0x42);
            }
            other => panic!("expected forbidden, got {other:?}"),
        }
    }

    #[test]
    fn empty_body() {
        let g = VoxelGrid::new([3, 3, 3]).unwrap();
        let s = sweep(&g).unwrap();
        assert!(s.c0.is_empty() && s.c1.is_empty());
        let d = dual_sweep(&g).unwrap();
        assert_eq!(d.c2_dim(), 0);
        assert!(d.c1.is_empty());
    }
}
