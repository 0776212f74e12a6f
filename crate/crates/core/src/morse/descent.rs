//! Where the gradient flow goes from a vertex: the ends of its decreasing
//! edges, chosen in the fixed direction order z > y > x.

use std::sync::OnceLock;

use super::code::{NeighborhoodCode, VertexClass};
use super::table::classify;
use crate::error::{Error, Result};
use crate::grid::{Vertex, VoxelGrid};

/// Decreasing axis directions, greatest first.
const ORDER: [usize; 3] = [2, 1, 0];

/// Axis indices of the two descent directions for a code, `None` where absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentAxes {
    pub down1: Option<u8>,
    pub down2: Option<u8>,
}

/// Cubes around the edge from the centre towards `-axis`: those on the minus
/// side of that axis.
#[inline]
fn edge_cubes(code: NeighborhoodCode, axis: usize) -> (u8, u8) {
    let mut occupied = 0;
    let mut total = 0;
    for bit in 0..8u8 {
        if NeighborhoodCode::signs(bit)[axis] == 0 {
            total += 1;
            occupied += code.0 >> bit & 1;
        }
    }
    (occupied, total)
}

#[inline]
fn edge_in_body(code: NeighborhoodCode, axis: usize) -> bool {
    edge_cubes(code, axis).0 > 0
}

#[inline]
fn edge_on_boundary(code: NeighborhoodCode, axis: usize) -> bool {
    let (occupied, total) = edge_cubes(code, axis);
    occupied > 0 && occupied < total
}

/// Whether the unit square spanned by `-a` and `-b` at the centre separates
/// an occupied cube from an empty one.
fn square_on_boundary(code: NeighborhoodCode, a: usize, b: usize) -> bool {
    let c = 3 - a - b;
    let mut signs = [0u8; 3];
    let below = code.has(signs);
    signs[c] = 1;
    let above = code.has(signs);
    below != above
}

/// End axes of the greatest decreasing edge in the body; for index-1 codes,
/// the greatest decreasing boundary edge and the greatest one carrying the
/// opposite label.
fn axes_for(code: NeighborhoodCode, class: VertexClass) -> DescentAxes {
    match class {
        VertexClass::Index0 | VertexClass::Forbidden => DescentAxes { down1: None, down2: None },
        VertexClass::MonkeySaddle => DescentAxes { down1: Some(0), down2: Some(1) },
        VertexClass::Regular | VertexClass::Index2 => DescentAxes {
            down1: ORDER.iter().copied().find(|&a| edge_in_body(code, a)).map(|a| a as u8),
            down2: None,
        },
        VertexClass::Index1 => {
            let edges: Vec<usize> = ORDER.iter().copied().filter(|&a| edge_on_boundary(code, a)).collect();
            let down1 = edges.first().copied();
            let down2 = match edges.len() {
                2 => Some(edges[1]),
                3 => {
                    // Two of the three span a boundary square and share a label.
                    let pairs: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
                        .into_iter()
                        .map(|(i, j)| (edges[i], edges[j]))
                        .filter(|&(a, b)| square_on_boundary(code, a, b))
                        .collect();
                    match pairs.as_slice() {
                        [(a, b)] => {
                            let lone = edges.iter().copied().find(|&e| e != *a && e != *b).unwrap();
                            if down1 == Some(lone) {
                                Some(*a)
                            } else {
                                Some(lone)
                            }
                        }
                        _ => None,
                    }
                }
                _ => None,
            };
            DescentAxes {
                down1: down1.map(|a| a as u8),
                down2: down2.map(|a| a as u8),
            }
        }
    }
}

/// Descent axes for every code under its table class.
pub fn descent_table() -> &'static [DescentAxes; 256] {
    static TABLE: OnceLock<[DescentAxes; 256]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|c| {
            let code = NeighborhoodCode(c as u8);
            axes_for(code, classify(code))
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentTargets {
    pub down1: Vertex,
    pub down2: Option<Vertex>,
    /// For a monkey saddle, `(down1, down2)` of its fictive double.
    pub fictive: Option<(Vertex, Vertex)>,
}

#[inline]
pub(crate) fn step_down(v: Vertex, axis: u8) -> Vertex {
    let mut w = v;
    w[axis as usize] -= 1;
    w
}

/// Ends of the decreasing tangent vectors followed from `v`.
pub fn descent_targets(grid: &VoxelGrid, v: Vertex, class: VertexClass) -> Result<DescentTargets> {
    let code = super::code::neighborhood_code(grid, v);
    match class {
        VertexClass::Forbidden => return Err(Error::Forbidden { vertex: v, code: code.0 }),
        VertexClass::Index0 => return Err(Error::NoDescent(v)),
        _ => {}
    }
    let axes = axes_for(code, class);
    let down1 = axes.down1.ok_or(Error::NoDescent(v))?;
    let needs_down2 = matches!(class, VertexClass::Index1 | VertexClass::MonkeySaddle);
    let down2 = match (needs_down2, axes.down2) {
        (false, _) => None,
        (true, Some(a)) => Some(step_down(v, a)),
        (true, None) => {
            return Err(Error::Invariant(format!(
                "no opposite-label edge at ({},{},{}) (code {code})",
                v[0], v[1], v[2]
            )))
        }
    };
    let fictive = (class == VertexClass::MonkeySaddle).then(|| (v, step_down(v, 2)));
    Ok(DescentTargets {
        down1: step_down(v, down1),
        down2,
        fictive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::table::CLASS_TABLE;
    use crate::oracle::local::same_lower_piece;

    fn grid_with_code(code: u8) -> (VoxelGrid, Vertex) {
        let cubes = (0..8u8).filter(|b| code >> b & 1 == 1).map(|b| NeighborhoodCode::signs(b).map(usize::from));
        (VoxelGrid::from_cubes([2, 2, 2], cubes).unwrap(), [1, 1, 1])
    }

    #[test]
    fn regular_interior_goes_down_z() {
        let (g, v) = grid_with_code(0xFF);
        let t = descent_targets(&g, v, VertexClass::Regular).unwrap();
        assert_eq!(t.down1, [1, 1, 0]);
        assert_eq!(t.down2, None);
    }

    #[test]
    fn monkey_saddle_targets() {
        let (g, v) = grid_with_code(0xE8);
        let t = descent_targets(&g, v, VertexClass::MonkeySaddle).unwrap();
        assert_eq!((t.down1, t.down2), ([0, 1, 1], Some([1, 0, 1])));
        assert_eq!(t.fictive, Some(([1, 1, 1], [1, 1, 0])));
    }

    #[test]
    fn index1_with_x_and_z_edges() {
        let codes: Vec<u8> = (0..=255u8)
            .filter(|&c| CLASS_TABLE[c as usize] == VertexClass::Index1)
            .filter(|&c| (0..3).filter(|&a| edge_on_boundary(NeighborhoodCode(c), a)).eq([0, 2]))
            .collect();
        assert!(!codes.is_empty());
        for c in codes {
            let (g, v) = grid_with_code(c);
            let t = descent_targets(&g, v, VertexClass::Index1).unwrap();
            assert_eq!(t.down1, [1, 1, 0]);
            assert_eq!(t.down2, Some([0, 1, 1]));
        }
    }

    #[test]
    fn index1_labels_split_lower_pieces() {
        let mut seen = 0;
        for c in 0..=255u8 {
            let code = NeighborhoodCode(c);
            if CLASS_TABLE[c as usize] != VertexClass::Index1 {
                continue;
            }
            seen += 1;
            let axes = descent_table()[c as usize];
            let (a, b) = (axes.down1.unwrap() as usize, axes.down2.unwrap() as usize);
            assert!(!same_lower_piece(code, a, b), "{code}: down1 {a} down2 {b} in one piece");
            // every decreasing edge in the body lies on its boundary
            for axis in 0..3 {
                assert_eq!(edge_in_body(code, axis), edge_on_boundary(code, axis), "{code} axis {axis}");
            }
        }
        assert_eq!(seen, 12);
    }

    #[test]
    fn monkey_targets_split_three_pieces() {
        let code = NeighborhoodCode(0xE8);
        assert!(!same_lower_piece(code, 0, 1));
        assert!(!same_lower_piece(code, 0, 2));
        assert!(!same_lower_piece(code, 1, 2));
    }

    #[test]
    fn every_nonminimal_body_vertex_descends() {
        for c in 1..=255u8 {
            let class = CLASS_TABLE[c as usize];
            if matches!(class, VertexClass::Regular | VertexClass::Index2) {
                assert!(descent_table()[c as usize].down1.is_some(), "{c:#04x}");
            }
        }
    }

    #[test]
    fn errors() {
        let (g, v) = grid_with_code(0x80);
        assert!(matches!(descent_targets(&g, v, VertexClass::Index0), Err(Error::NoDescent(_))));
        let (g, v) = grid_with_code(0x42);
        assert!(matches!(
            descent_targets(&g, v, VertexClass::Forbidden),
            Err(Error::Forbidden { code: 0x42, .. })
        ));
    }
}
