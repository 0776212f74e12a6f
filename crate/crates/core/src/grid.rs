//! Binary voxel bodies inside an axis-aligned bounding box.
//!
//! A grid of `nx × ny × nz` unit cubes; cube `(i, j, k)` is the elementary
//! cube `[i, i+1] × [j, j+1] × [k, k+1]`. Lattice vertices are addressed
//! separately as integer triples in `[0, nx] × [0, ny] × [0, nz]`.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Integer lattice vertex `(x, y, z)`.
pub type Vertex = [usize; 3];

/// Magic first line of the text format.
pub const FORMAT_MAGIC: &str = "cubetti-voxels 1";

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VoxelGrid {
    dims: [usize; 3],
    cells: Vec<bool>,
}

impl std::fmt::Debug for VoxelGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VoxelGrid")
            .field("dims", &self.dims)
            .field("occupied", &self.occupied_count())
            .finish()
    }
}

impl VoxelGrid {
    /// Empty grid. All three dimensions must be positive.
    pub fn new(dims: [usize; 3]) -> Result<Self> {
        if dims.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "dimensions must be positive, got {} {} {}",
                dims[0], dims[1], dims[2]
            )));
        }
        let len = dims[0]
            .checked_mul(dims[1])
            .and_then(|n| n.checked_mul(dims[2]))
            .ok_or_else(|| Error::InvalidShape("grid too large".into()))?;
        Ok(Self {
            dims,
            cells: vec![false; len],
        })
    }

    pub fn from_fn(dims: [usize; 3], mut occupied: impl FnMut(usize, usize, usize) -> bool) -> Result<Self> {
        let mut grid = Self::new(dims)?;
        for k in 0..dims[2] {
            for j in 0..dims[1] {
                for i in 0..dims[0] {
                    if occupied(i, j, k) {
                        let idx = grid.index(i, j, k);
                        grid.cells[idx] = true;
                    }
                }
            }
        }
        Ok(grid)
    }

    /// Grid with exactly the listed cubes occupied.
    pub fn from_cubes<I>(dims: [usize; 3], cubes: I) -> Result<Self>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut grid = Self::new(dims)?;
        for [i, j, k] in cubes {
            if i >= dims[0] || j >= dims[1] || k >= dims[2] {
                return Err(Error::InvalidShape(format!(
                    "cube ({i},{j},{k}) outside dims {} {} {}",
                    dims[0], dims[1], dims[2]
                )));
            }
            grid.set(i, j, k, true);
        }
        Ok(grid)
    }

    #[inline]
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    /// Number of lattice vertices per axis, `dims + 1`.
    #[inline]
    pub fn vertex_dims(&self) -> [usize; 3] {
        [self.dims[0] + 1, self.dims[1] + 1, self.dims[2] + 1]
    }

    #[inline]
    pub fn cube_count(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (k * self.dims[1] + j) * self.dims[0] + i
    }

    /// Occupancy of cube `(i, j, k)`. Anything outside the grid is empty.
    #[inline]
    pub fn get(&self, i: i64, j: i64, k: i64) -> bool {
        if i < 0 || j < 0 || k < 0 {
            return false;
        }
        let (i, j, k) = (i as usize, j as usize, k as usize);
        if i >= self.dims[0] || j >= self.dims[1] || k >= self.dims[2] {
            return false;
        }
        self.cells[self.index(i, j, k)]
    }

    #[inline]
    pub fn is_occupied(&self, cube: [usize; 3]) -> bool {
        let [i, j, k] = cube;
        i < self.dims[0] && j < self.dims[1] && k < self.dims[2] && self.cells[self.index(i, j, k)]
    }

    /// Sets the occupancy of an in-range cube.
    ///
    /// # Panics
    ///
    /// Panics if the cube lies outside the grid.
    pub fn set(&mut self, i: usize, j: usize, k: usize, occupied: bool) {
        assert!(
            i < self.dims[0] && j < self.dims[1] && k < self.dims[2],
            "cube ({i},{j},{k}) outside dims {:?}",
            self.dims
        );
        let idx = self.index(i, j, k);
        self.cells[idx] = occupied;
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.cells.iter().any(|&c| c)
    }

    /// Occupied cubes in lexicographic `(i, j, k)` order.
    pub fn occupied(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let [nx, ny, nz] = self.dims;
        (0..nx).flat_map(move |i| {
            (0..ny).flat_map(move |j| {
                (0..nz).filter_map(move |k| self.cells[self.index(i, j, k)].then_some([i, j, k]))
            })
        })
    }

    /// `K \ M`: same dims, occupancy flipped cube-wise.
    pub fn complement(&self) -> Self {
        Self {
            dims: self.dims,
            cells: self.cells.iter().map(|&c| !c).collect(),
        }
    }

    /// Point reflection through the centre of the bounding box. Sweeping the
    /// reflected grid upward in `x + y + z` visits the original downward.
    pub fn reflect(&self) -> Self {
        // With x-fastest storage, the reflected index is `len - 1 - idx`.
        let mut cells = self.cells.clone();
        cells.reverse();
        Self { dims: self.dims, cells }
    }

    /// Maps a vertex of this grid to the corresponding vertex of `reflect()`.
    #[inline]
    pub fn reflect_vertex(&self, v: Vertex) -> Vertex {
        [self.dims[0] - v[0], self.dims[1] - v[1], self.dims[2] - v[2]]
    }

    /// Serializes in the `cubetti-voxels` text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(FORMAT_MAGIC);
        out.push('\n');
        let _ = writeln!(out, "dim {} {} {}", self.dims[0], self.dims[1], self.dims[2]);
        for [i, j, k] in self.occupied() {
            let _ = writeln!(out, "{i} {j} {k}");
        }
        out
    }

    /// Parses the `cubetti-voxels` text format.
    ///
    /// The magic line is optional on input; when present it must name
    /// version 1. Blank lines and `#` comments are skipped anywhere.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut grid: Option<VoxelGrid> = None;
        let mut seen_magic = false;
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = lineno + 1;
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: lineno, msg };
            match grid {
                None => {
                    let mut tokens = text.split_whitespace();
                    match tokens.next() {
                        Some("cubetti-voxels") if !seen_magic => {
                            match (tokens.next(), tokens.next()) {
                                (Some("1"), None) => seen_magic = true,
                                _ => return Err(parse_err(format!("unsupported format line `{text}`"))),
                            }
                        }
                        Some("dim") => {
                            let dims = parse_triple(tokens, text).map_err(parse_err)?;
                            grid = Some(VoxelGrid::new(dims).map_err(|e| parse_err(e.to_string()))?);
                        }
                        _ => return Err(parse_err(format!("expected `dim <nx> <ny> <nz>`, got `{text}`"))),
                    }
                }
                Some(ref mut g) => {
                    let [i, j, k] = parse_triple(text.split_whitespace(), text).map_err(parse_err)?;
                    let [nx, ny, nz] = g.dims;
                    if i >= nx || j >= ny || k >= nz {
                        return Err(parse_err(format!(
                            "index out of range: ({i},{j},{k}) for dim {nx} {ny} {nz}"
                        )));
                    }
                    g.set(i, j, k, true);
                }
            }
        }
        grid.ok_or(Error::Parse {
            line: 0,
            msg: "missing `dim` header".into(),
        })
    }
}

impl std::str::FromStr for VoxelGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_reader(s.as_bytes())
    }
}

fn parse_triple<'a>(mut tokens: impl Iterator<Item = &'a str>, line: &str) -> std::result::Result<[usize; 3], String> {
    let mut out = [0usize; 3];
    for slot in &mut out {
        let tok = tokens
            .next()
            .ok_or_else(|| format!("expected three integers in `{line}`"))?;
        *slot = tok
            .parse()
            .map_err(|_| format!("non-integer token `{tok}`"))?;
    }
    if let Some(extra) = tokens.next() {
        return Err(format!("unexpected trailing token `{extra}`"));
    }
    Ok(out)
}

/// Reads a grid from text.
pub fn load_grid<R: BufRead>(source: R) -> Result<VoxelGrid> {
    VoxelGrid::from_reader(source)
}

/// Writes a grid as text.
pub fn save_grid(grid: &VoxelGrid) -> String {
    grid.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_body() {
        let g: VoxelGrid = "cubetti-voxels 1\ndim 1 1 1\n0 0 0\n".parse().unwrap();
        assert_eq!(g.dims(), [1, 1, 1]);
        assert_eq!(g.occupied_count(), 1);
    }

    #[test]
    fn header_without_magic() {
        let g: VoxelGrid = "dim 2 1 1\n0 0 0\n1 0 0\n".parse().unwrap();
        assert_eq!(g.occupied().collect::<Vec<_>>(), vec![[0, 0, 0], [1, 0, 0]]);
    }

    #[test]
    fn duplicates_and_comments() {
        let g: VoxelGrid = "cubetti-voxels 1\n# hi\ndim 2 2 2\n\n1 1 1\n1 1 1\n# 0 0 0\n".parse().unwrap();
        assert_eq!(g.occupied_count(), 1);
    }

    #[test]
    fn out_of_range_names_line() {
        let err = "cubetti-voxels 1\ndim 2 1 1\n5 0 0\n".parse::<VoxelGrid>().unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains("index out of range"), "{msg}");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            "",
            "cubetti-voxels 2\ndim 1 1 1\n",
            "dim 1 1\n",
            "dim 0 1 1\n",
            "dim 1 1 1\n0 x 0\n",
            "dim 1 1 1\n0 0 0 0\n",
            "dim 1 1 1\n-1 0 0\n",
            "0 0 0\n",
        ] {
            assert!(matches!(text.parse::<VoxelGrid>(), Err(Error::Parse { .. })), "{text:?}");
        }
    }

    #[test]
    fn save_formats() {
        let one = VoxelGrid::from_cubes([1, 1, 1], [[0, 0, 0]]).unwrap();
        assert_eq!(save_grid(&one), "cubetti-voxels 1\ndim 1 1 1\n0 0 0\n");
        let empty = VoxelGrid::new([2, 2, 2]).unwrap();
        assert_eq!(save_grid(&empty), "cubetti-voxels 1\ndim 2 2 2\n");
    }

    #[test]
    fn complement_examples() {
        let empty = VoxelGrid::new([2, 2, 2]).unwrap();
        assert_eq!(empty.complement().occupied_count(), 8);
        let one = VoxelGrid::from_cubes([3, 3, 3], [[1, 1, 1]]).unwrap();
        assert_eq!(one.complement().occupied_count(), 26);
    }

    #[test]
    fn reflect_examples() {
        let g = VoxelGrid::from_cubes([2, 2, 2], [[0, 0, 0]]).unwrap();
        assert_eq!(g.reflect().occupied().collect::<Vec<_>>(), vec![[1, 1, 1]]);
        let sym = VoxelGrid::from_cubes([3, 2, 1], [[0, 0, 0], [2, 1, 0]]).unwrap();
        assert_eq!(sym.reflect(), sym);
        assert_eq!(g.reflect_vertex([0, 0, 0]), [2, 2, 2]);
    }

    fn arb_grid() -> impl Strategy<Value = VoxelGrid> {
        (1usize..6, 1usize..6, 1usize..6).prop_flat_map(|(nx, ny, nz)| {
            proptest::collection::vec(any::<bool>(), nx * ny * nz).prop_map(move |bits| VoxelGrid {
                dims: [nx, ny, nz],
                cells: bits,
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_grid()) {
            let back: VoxelGrid = save_grid(&g).parse().unwrap();
            prop_assert_eq!(back, g);
        }

        #[test]
        fn involutions_commute(g in arb_grid()) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            prop_assert_eq!(g.reflect().reflect(), g.clone());
            prop_assert_eq!(g.complement().reflect(), g.reflect().complement());
        }

        #[test]
        fn reflect_matches_definition(g in arb_grid()) {
            let r = g.reflect();
            let [nx, ny, nz] = g.dims();
            for [i, j, k] in g.occupied() {
                prop_assert!(r.is_occupied([nx - 1 - i, ny - 1 - j, nz - 1 - k]));
            }
            prop_assert_eq!(r.occupied_count(), g.occupied_count());
        }

        #[test]
        fn outside_is_empty(g in arb_grid(), i in -20i64..20, j in -20i64..20, k in -20i64..20) {
            let [nx, ny, nz] = g.dims();
            let inside = (0..nx as i64).contains(&i) && (0..ny as i64).contains(&j) && (0..nz as i64).contains(&k);
            if !inside {
                prop_assert!(!g.get(i, j, k));
            } else {
                prop_assert_eq!(g.get(i, j, k), g.is_occupied([i as usize, j as usize, k as usize]));
            }
        }
    }
}
