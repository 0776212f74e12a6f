use std::fmt;

use crate::grid::{Vertex, VoxelGrid};

/// Occupancy of the eight cubes around a lattice vertex.
///
/// Octant `(s1, s2, s3)`, `s = 1` for the `+` side of an axis and `0` for the
/// `-` side, is bit `s1 + 2·s2 + 4·s3`. Its cube has min-corner
/// `(x-1+s1, y-1+s2, z-1+s3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NeighborhoodCode(pub u8);

impl fmt::Debug for NeighborhoodCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#04X}", self.0)
    }
}

impl fmt::Display for NeighborhoodCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:02X}", self.0)
    }
}

impl NeighborhoodCode {
    #[inline]
    pub fn bit(signs: [u8; 3]) -> u8 {
        signs[0] + 2 * signs[1] + 4 * signs[2]
    }

    #[inline]
    pub fn signs(bit: u8) -> [u8; 3] {
        [bit & 1, (bit >> 1) & 1, (bit >> 2) & 1]
    }

    #[inline]
    pub fn has(self, signs: [u8; 3]) -> bool {
        self.0 >> Self::bit(signs) & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Code of the complement body at the same vertex.
    pub fn complement(self) -> Self {
        Self(!self.0)
    }

    /// Code at the image vertex after point reflection: octant `s` maps to `1 - s`.
    pub fn reflect(self) -> Self {
        Self(self.0.reverse_bits())
    }

    /// Applies a permutation of the coordinate axes: axis `k` becomes axis `perm[k]`.
    pub fn permute(self, perm: [usize; 3]) -> Self {
        let mut out = 0u8;
        for bit in 0..8u8 {
            if self.0 >> bit & 1 == 1 {
                let s = Self::signs(bit);
                let mut t = [0u8; 3];
                for k in 0..3 {
                    t[perm[k]] = s[k];
                }
                out |= 1 << Self::bit(t);
            }
        }
        Self(out)
    }
}

/// The six permutations of the three coordinate axes.
pub const AXIS_PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Occupancy code of the eight cubes around `vertex`.
pub fn neighborhood_code(grid: &VoxelGrid, vertex: Vertex) -> NeighborhoodCode {
    let [x, y, z] = vertex.map(|c| c as i64);
    let mut code = 0u8;
    for bit in 0..8u8 {
        let [s1, s2, s3] = NeighborhoodCode::signs(bit).map(i64::from);
        if grid.get(x - 1 + s1, y - 1 + s2, z - 1 + s3) {
            code |= 1 << bit;
        }
    }
    NeighborhoodCode(code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    Regular,
    Index0,
    Index1,
    Index2,
    MonkeySaddle,
    Forbidden,
}

impl VertexClass {
    pub const ALL: [VertexClass; 6] = [
        VertexClass::Regular,
        VertexClass::Index0,
        VertexClass::Index1,
        VertexClass::Index2,
        VertexClass::MonkeySaddle,
        VertexClass::Forbidden,
    ];

    /// Short lowercase name used in dumps and CSV output.
    pub fn name(self) -> &'static str {
        match self {
            VertexClass::Regular => "regular",
            VertexClass::Index0 => "index0",
            VertexClass::Index1 => "index1",
            VertexClass::Index2 => "index2",
            VertexClass::MonkeySaddle => "monkey",
            VertexClass::Forbidden => "forbidden",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn is_critical(self) -> bool {
        !matches!(self, VertexClass::Regular | VertexClass::Forbidden)
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
