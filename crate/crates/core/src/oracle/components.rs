use petgraph::unionfind::UnionFind;

use crate::grid::VoxelGrid;

/// Number of face-connected components of the occupied cubes.
pub fn components_union_find(grid: &VoxelGrid) -> usize {
    let [nx, ny, nz] = grid.dims();
    let idx = |i: usize, j: usize, k: usize| (k * ny + j) * nx + i;
    let mut uf = UnionFind::<usize>::new(nx * ny * nz);
    let mut occupied = 0;
    for k in 0..nz {
        for j in 0..ny {
            for i in 0..nx {
                if !grid.is_occupied([i, j, k]) {
                    continue;
                }
                occupied += 1;
                let here = idx(i, j, k);
                if i + 1 < nx && grid.is_occupied([i + 1, j, k]) {
                    uf.union(here, idx(i + 1, j, k));
                }
                if j + 1 < ny && grid.is_occupied([i, j + 1, k]) {
                    uf.union(here, idx(i, j + 1, k));
                }
                if k + 1 < nz && grid.is_occupied([i, j, k + 1]) {
                    uf.union(here, idx(i, j, k + 1));
                }
            }
        }
    }
    if occupied == 0 {
        return 0;
    }
    let mut roots: Vec<usize> = grid.occupied().map(|[i, j, k]| uf.find(idx(i, j, k))).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}
