//! Column reduction over the two-element field on sparse columns.
//!
//! Kept separate from [`crate::gf2`] so brute-force homology shares no code
//! with the Morse pipeline it checks.

/// Rank of the matrix whose columns are given as sorted row-index lists.
pub fn sparse_rank(columns: Vec<Vec<u32>>, rows: usize) -> usize {
    let mut owner: Vec<u32> = vec![u32::MAX; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(columns.len());
    let mut rank = 0;
    for mut col in columns {
        debug_assert!(col.windows(2).all(|w| w[0] < w[1]));
        while let Some(&low) = col.last() {
            let o = owner[low as usize];
            if o == u32::MAX {
                owner[low as usize] = reduced.len() as u32;
                rank += 1;
                break;
            }
            col = symmetric_difference(&col, &reduced[o as usize]);
        }
        reduced.push(col);
    }
    rank
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
