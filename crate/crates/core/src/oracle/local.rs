//! Brute-force criticality of a lattice vertex from its 8-bit neighbourhood.
//!
//! The occupied cubes around the vertex are triangulated with the Freudenthal
//! (Kuhn) subdivision: each unit cube splits into six tetrahedra, one per
//! monotone lattice path from its min corner to its max corner. The height
//! `x + y + z` is linear on every simplex, so a sublevel set deformation
//! retracts onto the full subcomplex spanned by the vertices below the level.
//! Criticality is then read off the relative homology of the pair
//! `(L, L⁻)`: `L` spans the neighbourhood vertices at or below the centre
//! height and `L⁻` those strictly below.

use std::collections::BTreeSet;

use crate::morse::code::{NeighborhoodCode, VertexClass, AXIS_PERMUTATIONS};
use crate::oracle::reduce::sparse_rank;

/// Vertices of the 3×3×3 lattice block around the centre `(1, 1, 1)`.
type Simplex = Vec<u8>;

const CENTRE_HEIGHT: u8 = 3;

#[inline]
fn lattice_index(p: [u8; 3]) -> u8 {
    p[0] + 3 * p[1] + 9 * p[2]
}

#[inline]
fn height(index: u8) -> u8 {
    index % 3 + (index / 3) % 3 + index / 9
}

/// All simplices of the Freudenthal triangulation of the occupied octants.
fn triangulate(code: NeighborhoodCode) -> BTreeSet<Simplex> {
    let mut simplices = BTreeSet::new();
    for bit in 0..8u8 {
        if code.0 >> bit & 1 == 0 {
            continue;
        }
        let min = NeighborhoodCode::signs(bit);
        for perm in AXIS_PERMUTATIONS {
            let mut p = min;
            let mut tet = vec![lattice_index(p)];
            for &axis in &perm {
                p[axis] += 1;
                tet.push(lattice_index(p));
            }
            for mask in 1u8..16 {
                let mut face: Simplex = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| tet[i]).collect();
                face.sort_unstable();
                simplices.insert(face);
            }
        }
    }
    simplices
}

/// Relative Betti numbers `(r0, r1, r2, r3)` of `(L, L⁻)` for a pair of
/// height thresholds on the triangulated neighbourhood: `L` spans vertices of
/// height `<= upper`, `L⁻` those of height `<= lower`.
fn relative_profile(code: NeighborhoodCode, upper: impl Fn(u8) -> bool, lower: impl Fn(u8) -> bool) -> [usize; 4] {
    let all = triangulate(code);
    let in_big = |s: &Simplex| s.iter().all(|&v| upper(v));
    let in_small = |s: &Simplex| s.iter().all(|&v| lower(v));

    // relative chains: simplices of L that are not in L⁻, grouped by dimension
    let mut chains: [Vec<&Simplex>; 4] = Default::default();
    for s in all.iter().filter(|s| in_big(s) && !in_small(s)) {
        chains[s.len() - 1].push(s);
    }
    let position = |dim: usize, s: &Simplex| chains[dim].binary_search(&s).ok();

    let mut ranks = [0usize; 5];
    for dim in 1..4 {
        let cols: Vec<Vec<u32>> = chains[dim]
            .iter()
            .map(|s| {
                let mut col: Vec<u32> = (0..s.len())
                    .filter_map(|skip| {
                        let face: Simplex =
                            s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                        position(dim - 1, &face).map(|p| p as u32)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        ranks[dim] = sparse_rank(cols, chains[dim - 1].len());
    }
    [0, 1, 2, 3].map(|k| chains[k].len() - ranks[k] - ranks[k + 1])
}

/// Relative homology of the local sublevel pair around the centre vertex.
pub fn local_pair_profile(code: NeighborhoodCode) -> LocalPairProfile {
    let [r0, r1, r2, r3] = relative_profile(
        code,
        |v| height(v) <= CENTRE_HEIGHT,
        |v| height(v) < CENTRE_HEIGHT,
    );
    LocalPairProfile { ranks: [r0, r1, r2], top: r3 }
}

/// Same pair but with `L` restricted to `L⁻` plus the centre vertex's lower
/// star, excluding the other neighbourhood vertices at the centre height.
pub fn lower_star_profile(code: NeighborhoodCode) -> LocalPairProfile {
    const CENTRE: u8 = 13;
    let [r0, r1, r2, r3] = relative_profile(
        code,
        |v| v == CENTRE || height(v) < CENTRE_HEIGHT,
        |v| height(v) < CENTRE_HEIGHT,
    );
    LocalPairProfile { ranks: [r0, r1, r2], top: r3 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalPairProfile {
    /// Relative ranks `(r0, r1, r2)`.
    pub ranks: [usize; 3],
    /// Relative rank in dimension three; never nonzero for a subset of R³.
    pub top: usize,
}

impl LocalPairProfile {
    pub fn class(self) -> VertexClass {
        if self.top != 0 {
            return VertexClass::Forbidden;
        }
        match self.ranks {
            [0, 0, 0] => VertexClass::Regular,
            [1, 0, 0] => VertexClass::Index0,
            [0, 1, 0] => VertexClass::Index1,
            [0, 0, 1] => VertexClass::Index2,
            [0, 2, 0] => VertexClass::MonkeySaddle,
            _ => VertexClass::Forbidden,
        }
    }
}

/// Whether the occupied octants, and separately the empty ones, are each
/// connected through shared faces inside the 2×2×2 block.
pub fn is_well_composed(code: NeighborhoodCode) -> bool {
    face_connected(code.0) && face_connected(!code.0)
}

fn face_connected(set: u8) -> bool {
    if set == 0 {
        return true;
    }
    let start = set.trailing_zeros() as u8;
    let mut seen = 1u8 << start;
    let mut stack = vec![start];
    while let Some(b) = stack.pop() {
        for axis in 0..3 {
            let n = b ^ (1 << axis);
            if set >> n & 1 == 1 && seen >> n & 1 == 0 {
                seen |= 1 << n;
                stack.push(n);
            }
        }
    }
    seen == set
}

/// Class of a neighbourhood code from first principles: the relative
/// homology profile, with nontrivial profiles on non-well-composed
/// neighbourhoods marked [`VertexClass::Forbidden`].
pub fn classify_code_oracle(code: NeighborhoodCode) -> VertexClass {
    let class = local_pair_profile(code).class();
    if class != VertexClass::Regular && !is_well_composed(code) {
        VertexClass::Forbidden
    } else {
        class
    }
}

/// The oracle applied to all 256 codes.
pub fn generate_classification_table() -> [VertexClass; 256] {
    std::array::from_fn(|c| classify_code_oracle(NeighborhoodCode(c as u8)))
}

/// Whether two lower neighbours `v - e_a` and `v - e_b` of the centre lie in
/// the same connected piece of the strict sublevel part of the neighbourhood.
pub fn same_lower_piece(code: NeighborhoodCode, axis_a: usize, axis_b: usize) -> bool {
    let below: Vec<Simplex> = triangulate(code)
        .into_iter()
        .filter(|s| s.iter().all(|&v| height(v) < CENTRE_HEIGHT))
        .collect();
    let mut parent: Vec<u8> = (0..27).collect();
    fn find(parent: &mut [u8], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            x = parent[x as usize];
        }
        x
    }
    for s in below.iter().filter(|s| s.len() == 2) {
        let (ra, rb) = (find(&mut parent, s[0]), find(&mut parent, s[1]));
        parent[ra as usize] = rb;
    }
    let neighbour = |axis: usize| {
        let mut p = [1u8; 3];
        p[axis] = 0;
        lattice_index(p)
    };
    let (a, b) = (neighbour(axis_a), neighbour(axis_b));
    let present = |x: u8| below.iter().any(|s| s.len() == 1 && s[0] == x);
    present(a) && present(b) && find(&mut parent, a) == find(&mut parent, b)
}
