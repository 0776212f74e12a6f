//! The 256-entry vertex classification and the fifteen listed critical types.

use std::collections::BTreeMap;

use super::code::{NeighborhoodCode, VertexClass, AXIS_PERMUTATIONS};
use crate::error::{Error, Result};

use VertexClass::{Forbidden as FB, Index0 as I0, Index1 as I1, Index2 as I2, MonkeySaddle as MS, Regular as R};

/// Class of every neighbourhood code, indexed by code. Regenerated and
/// diffed by `oracle::generate_classification_table` in the test suite and by
/// `cubetti lut`.
#[rustfmt::skip]
pub const CLASS_TABLE: [VertexClass; 256] = [
    R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  FB, R,  R,  R,  R,  R,  FB, R,
    R,  R,  R,  R,  FB, R,  R,  R,  FB, R,  R,  R,  FB, R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  FB, R,  R,  R,  R,  R,  FB, R,
    R,  R,  FB, R,  R,  R,  R,  R,  FB, R,  FB, R,  R,  R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  FB, R,  R,  R,  R,  R,  FB, R,
    FB, R,  FB, R,  FB, R,  R,  R,  FB, R,  FB, R,  FB, R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  FB, R,  R,  R,  R,  R,  FB, R,
    I0, R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  FB, R,  R,  R,  R,  R,  FB, R,
    R,  R,  R,  R,  FB, R,  R,  R,  I1, R,  R,  R,  I1, R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  I1, R,  R,  R,  R,  R,  FB, R,
    R,  R,  FB, R,  R,  R,  R,  R,  I1, R,  I1, R,  R,  R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  I1, R,  R,  R,  R,  R,  FB, R,
    I1, R,  I1, R,  I1, R,  R,  R,  MS, R,  I1, R,  I1, R,  R,  R,
    R,  R,  R,  R,  R,  R,  FB, R,  I1, R,  R,  R,  R,  R,  I2, R,
];

/// Vertex class of a neighbourhood code.
#[inline]
pub fn classify(code: NeighborhoodCode) -> VertexClass {
    CLASS_TABLE[code.0 as usize]
}

/// The fifteen critical neighbourhoods as pairs of 2×2 occupancy matrices,
/// lower layer (`z-`) first. Each matrix reads `[[t--, t+-], [t-+, t++]]`
/// over the x and y signs.
pub type Layer = [[u8; 2]; 2];

#[rustfmt::skip]
pub const CRITICAL_TYPES: [(Layer, Layer, VertexClass); 15] = [
    ([[0, 0], [0, 0]], [[0, 0], [0, 1]], I0),
    ([[0, 1], [1, 1]], [[1, 1], [1, 1]], I2),
    ([[0, 0], [0, 0]], [[0, 1], [1, 1]], I1),
    ([[0, 0], [0, 1]], [[0, 1], [0, 1]], I1),
    ([[0, 0], [0, 1]], [[0, 0], [1, 1]], I1),
    ([[0, 0], [0, 1]], [[1, 1], [1, 1]], I1),
    ([[0, 1], [0, 1]], [[0, 1], [1, 1]], I1),
    ([[0, 0], [1, 1]], [[0, 1], [1, 1]], I1),
    ([[0, 1], [0, 0]], [[0, 1], [1, 1]], I1),
    ([[0, 0], [1, 1]], [[0, 1], [0, 1]], I1),
    ([[0, 0], [0, 1]], [[1, 0], [1, 1]], I1),
    ([[0, 0], [1, 0]], [[0, 1], [1, 1]], I1),
    ([[0, 0], [0, 1]], [[1, 1], [0, 1]], I1),
    ([[0, 1], [0, 1]], [[0, 0], [1, 1]], I1),
    ([[0, 0], [0, 1]], [[0, 1], [1, 1]], MS),
];

/// Code of a pair of occupancy matrices.
pub fn code_of_matrices(lower: [[u8; 2]; 2], upper: [[u8; 2]; 2]) -> NeighborhoodCode {
    let mut code = 0u8;
    for (s3, layer) in [lower, upper].iter().enumerate() {
        for (s2, row) in layer.iter().enumerate() {
            for (s1, &t) in row.iter().enumerate() {
                if t == 1 {
                    code |= 1 << NeighborhoodCode::bit([s1 as u8, s2 as u8, s3 as u8]);
                }
            }
        }
    }
    NeighborhoodCode(code)
}

/// Every code obtained from a listed type by permuting the axes, with its class.
///
/// # Panics
///
/// Panics if two listed types with different classes share an orbit.
pub fn critical_orbit_expansion() -> BTreeMap<u8, VertexClass> {
    let mut out = BTreeMap::new();
    for (lower, upper, class) in CRITICAL_TYPES {
        let code = code_of_matrices(lower, upper);
        for p in AXIS_PERMUTATIONS {
            let image = code.permute(p).0;
            let prev = out.insert(image, class);
            assert!(prev.is_none_or(|c| c == class), "code {image:#04x} listed with two classes");
        }
    }
    out
}

/// One `0xNN class` line per code.
pub fn table_dump(table: &[VertexClass; 256]) -> String {
    let mut out = String::with_capacity(256 * 16);
    for (c, class) in table.iter().enumerate() {
        out.push_str(&format!("{} {class}\n", NeighborhoodCode(c as u8)));
    }
    out
}

/// Parses the output of [`table_dump`]; all 256 codes must be present once.
pub fn parse_table_dump(text: &str) -> Result<[VertexClass; 256]> {
    let mut table = [None; 256];
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: n + 1, msg };
        let (code, class) = line.split_once(char::is_whitespace).ok_or_else(|| err("expected `0xNN class`".into()))?;
        let code = code
            .strip_prefix("0x")
            .and_then(|h| u8::from_str_radix(h, 16).ok())
            .ok_or_else(|| err(format!("bad code `{code}`")))?;
        let class = VertexClass::from_name(class.trim()).ok_or_else(|| err(format!("unknown class `{}`", class.trim())))?;
        if table[code as usize].replace(class).is_some() {
            return Err(err(format!("code 0x{code:02X} listed twice")));
        }
    }
    let missing = table.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        return Err(Error::Parse { line: 0, msg: format!("{missing} codes missing") });
    }
    Ok(table.map(Option::unwrap))
}

/// A code on which two tables disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableDiff {
    pub code: NeighborhoodCode,
    pub expected: VertexClass,
    pub found: VertexClass,
}

impl std::fmt::Display for TableDiff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: expected {}, found {}", self.code, self.expected, self.found)
    }
}

pub fn diff_tables(expected: &[VertexClass; 256], found: &[VertexClass; 256]) -> Vec<TableDiff> {
    (0..256)
        .filter(|&c| expected[c] != found[c])
        .map(|c| TableDiff { code: NeighborhoodCode(c as u8), expected: expected[c], found: found[c] })
        .collect()
}

/// Critical entries of `table` that differ from the listed types' orbits.
pub fn diff_against_orbits(table: &[VertexClass; 256]) -> Vec<TableDiff> {
    let orbit = critical_orbit_expansion();
    (0..=255u8)
        .filter_map(|c| {
            let found = table[c as usize];
            let expected = orbit.get(&c).copied();
            match expected {
                Some(e) if e != found => Some(TableDiff { code: NeighborhoodCode(c), expected: e, found }),
                None if found.is_critical() => Some(TableDiff { code: NeighborhoodCode(c), expected: R, found }),
                _ => None,
            }
        })
        .collect()
}
