//! Unstacking: separates cubes that meet only along an edge or at a vertex,
//! so every remaining contact between occupied cubes runs through a face.
//!
//! The body is scaled by three (each cube becomes a 3×3×3 block), every
//! subcube touching the body's boundary is removed in one simultaneous pass,
//! and a one-cube empty margin is added so the body sits strictly inside the
//! bounding box.
//!
//! Removing only subcubes with a boundary face is not enough: where two empty
//! input cubes share an edge, the survivors meet along an edge. Removing
//! every subcube whose closed 3×3×3 neighbourhood leaves the body makes the
//! occupancy around each lattice vertex monotone along every axis, so the
//! occupied and the empty octants are both face-connected.

use crate::grid::VoxelGrid;

/// Margin added around the eroded body.
pub const MARGIN: usize = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreprocessReport {
    pub input_cubes: usize,
    pub subdivided_cubes: usize,
    pub eroded_cubes: usize,
    pub output_dims: [usize; 3],
    pub margin: usize,
}

/// Scales the body by three: cube `(i, j, k)` becomes the 27 subcubes
/// `(3i+a, 3j+b, 3k+c)`, `a, b, c ∈ {0, 1, 2}`.
pub fn subdivide3(grid: &VoxelGrid) -> VoxelGrid {
    let [nx, ny, nz] = grid.dims();
    VoxelGrid::from_fn([3 * nx, 3 * ny, 3 * nz], |i, j, k| {
        grid.is_occupied([i / 3, j / 3, k / 3])
    })
    .expect("tripled dims of a valid grid are valid")
}

const FACE_NEIGHBOURS: [[i64; 3]; 6] = [
    [-1, 0, 0],
    [1, 0, 0],
    [0, -1, 0],
    [0, 1, 0],
    [0, 0, -1],
    [0, 0, 1],
];

/// Removes every occupied cube that has a face on the boundary of the body,
/// i.e. a face neighbour that is unoccupied or outside the grid. All removals
/// are decided against the input occupancy.
pub fn erode_boundary_faces(grid: &VoxelGrid) -> VoxelGrid {
    VoxelGrid::from_fn(grid.dims(), |i, j, k| {
        let (i, j, k) = (i as i64, j as i64, k as i64);
        grid.get(i, j, k)
            && FACE_NEIGHBOURS
                .iter()
                .all(|d| grid.get(i + d[0], j + d[1], k + d[2]))
    })
    .expect("same dims")
}

/// Removes every occupied cube that touches the boundary of the body through
/// a face, an edge or a vertex: one of its 26 neighbours is unoccupied or
/// outside the grid. Single simultaneous pass.
pub fn erode_boundary(grid: &VoxelGrid) -> VoxelGrid {
    let [nx, ny, nz] = grid.dims();
    // separable: a cube survives iff the 3-run along each axis is full
    let run = |src: &VoxelGrid, axis: usize| {
        VoxelGrid::from_fn([nx, ny, nz], |i, j, k| {
            let mut p = [i as i64, j as i64, k as i64];
            (-1..=1).all(|d| {
                let c = p[axis];
                p[axis] = c + d;
                let hit = src.get(p[0], p[1], p[2]);
                p[axis] = c;
                hit
            })
        })
        .expect("same dims")
    };
    run(&run(&run(grid, 0), 1), 2)
}

/// Surrounds the body with `margin` layers of empty cubes.
pub fn pad(grid: &VoxelGrid, margin: usize) -> VoxelGrid {
    let [nx, ny, nz] = grid.dims();
    let m = margin as i64;
    VoxelGrid::from_fn([nx + 2 * margin, ny + 2 * margin, nz + 2 * margin], |i, j, k| {
        grid.get(i as i64 - m, j as i64 - m, k as i64 - m)
    })
    .expect("grown dims are valid")
}

/// `pad(erode_boundary(subdivide3(grid)), 1)`.
pub fn preprocess(grid: &VoxelGrid) -> (VoxelGrid, PreprocessReport) {
    let input_cubes = grid.occupied_count();
    let fine = subdivide3(grid);
    let subdivided_cubes = fine.occupied_count();
    let eroded = erode_boundary(&fine);
    let eroded_cubes = subdivided_cubes - eroded.occupied_count();
    let out = pad(&eroded, MARGIN);
    let report = PreprocessReport {
        input_cubes,
        subdivided_cubes,
        eroded_cubes,
        output_dims: out.dims(),
        margin: MARGIN,
    };
    (out, report)
}
