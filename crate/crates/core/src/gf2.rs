//! Dense matrices over the two-element field, rows packed into `u64` words.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        if self.rows <= 32 && self.cols <= 64 {
            for r in 0..self.rows {
                let line: String = (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '.' }).collect();
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from boolean rows, all of length `cols`.
    pub fn from_bool_rows(cols: usize, rows: &[Vec<bool>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {r} has {} entries, expected {cols}", row.len())));
            }
            for (c, &bit) in row.iter().enumerate() {
                if bit {
                    m.set(r, c, true);
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// Entry `(r, c)`, or `None` outside the matrix.
    #[inline]
    pub fn try_get(&self, r: usize, c: usize) -> Option<bool> {
        (r < self.rows && c < self.cols).then(|| self.data[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1)
    }

    /// # Panics
    ///
    /// Panics if `(r, c)` is outside the matrix.
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.try_get(r, c)
            .unwrap_or_else(|| panic!("entry ({r},{c}) outside {}x{} matrix", self.rows, self.cols))
    }

    /// # Panics
    ///
    /// Panics if `(r, c)` is outside the matrix.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) outside {}x{} matrix", self.rows, self.cols);
        let w = &mut self.data[r * self.stride + c / WORD];
        let mask = 1u64 << (c % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    /// Column indices of the ones in row `r`.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let cols = self.cols;
        self.row_words(r).iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
            .filter(move |&c| c < cols)
        })
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Adds row `src` into row `dst`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert!(src < self.rows && dst < self.rows);
        if src == dst {
            self.data[dst * self.stride..(dst + 1) * self.stride].fill(0);
            return;
        }
        for w in 0..self.stride {
            let s = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= s;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        assert!(a < self.rows && b < self.rows);
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Rank by Gaussian elimination. Rows are taken in order and reduced
    /// against the pivots found so far; a row's pivot is its first nonzero
    /// column. The matrix itself is not modified.
    pub fn rank(&self) -> usize {
        // pivot_of[c] = index into `pivots` of the reduced row leading at c
        let mut pivot_of: Vec<u32> = vec![u32::MAX; self.cols];
        let mut pivots: Vec<u64> = Vec::new();
        let mut scratch = vec![0u64; self.stride];
        let mut rank = 0;
        for r in 0..self.rows {
            scratch.copy_from_slice(self.row_words(r));
            let mut from = 0;
            while let Some((lead, wi)) = leading_one(&scratch, from) {
                let p = pivot_of[lead];
                if p == u32::MAX {
                    pivot_of[lead] = rank as u32;
                    pivots.extend_from_slice(&scratch);
                    rank += 1;
                    break;
                }
                let pivot = &pivots[p as usize * self.stride..(p as usize + 1) * self.stride];
                // Pivot rows are zero before their leading word.
                for (s, p) in scratch[wi..].iter_mut().zip(&pivot[wi..]) {
                    *s ^= p;
                }
                from = wi;
            }
        }
        rank
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix product over the two-element field.
    pub fn multiply(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let ones: Vec<usize> = self.row_ones(r).collect();
            let dst = r * out.stride;
            for k in ones {
                let src = other.row_words(k);
                for (w, &s) in src.iter().enumerate() {
                    out.data[dst + w] ^= s;
                }
            }
        }
        Ok(out)
    }

    /// Copy of the matrix without column `j`.
    pub fn delete_column(&self, j: usize) -> Result<Gf2Matrix> {
        if j >= self.cols {
            return Err(Error::Dimension(format!("column {j} outside {}x{} matrix", self.rows, self.cols)));
        }
        let mut out = Self::zeros(self.rows, self.cols - 1);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                match c.cmp(&j) {
                    std::cmp::Ordering::Less => out.set(r, c, true),
                    std::cmp::Ordering::Greater => out.set(r, c - 1, true),
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        Ok(out)
    }
}

/// First set bit at or after word `from`, as (column, word index).
#[inline]
fn leading_one(words: &[u64], from: usize) -> Option<(usize, usize)> {
    words[from..]
        .iter()
        .position(|&w| w != 0)
        .map(|off| {
            let wi = from + off;
            (wi * WORD + words[wi].trailing_zeros() as usize, wi)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_rows(rows: &[&[u8]]) -> Gf2Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let bools: Vec<Vec<bool>> = rows.iter().map(|r| r.iter().map(|&b| b == 1).collect()).collect();
        Gf2Matrix::from_bool_rows(cols, &bools).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        assert_eq!(from_rows(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(Gf2Matrix::zeros(0, 7).rank(), 0);
        assert_eq!(Gf2Matrix::zeros(5, 0).rank(), 0);
        assert_eq!(Gf2Matrix::zeros(4, 9).rank(), 0);
        // a triangle's incidence rows sum to zero
        assert_eq!(from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(), 2);
    }

    #[test]
    fn rank_across_word_boundary() {
        let mut m = Gf2Matrix::zeros(3, 200);
        m.set(0, 63, true);
        m.set(0, 64, true);
        m.set(1, 64, true);
        m.set(1, 199, true);
        m.set(2, 63, true);
        m.set(2, 199, true);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn delete_column_of_identity() {
        let d = Gf2Matrix::identity(2).delete_column(0).unwrap();
        assert_eq!((d.rows(), d.cols()), (2, 1));
        assert!(!d.get(0, 0));
        assert!(d.get(1, 0));
        assert!(Gf2Matrix::identity(2).delete_column(2).is_err());
    }

    #[test]
    fn multiply_mismatch() {
        assert!(Gf2Matrix::zeros(2, 3).multiply(&Gf2Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn out_of_bounds_queries() {
        let m = Gf2Matrix::zeros(2, 3);
        assert_eq!(m.try_get(2, 0), None);
        assert_eq!(m.try_get(0, 3), None);
        assert_eq!(m.try_get(1, 2), Some(false));
    }

    #[test]
    #[should_panic]
    fn get_panics_outside() {
        Gf2Matrix::zeros(1, 1).get(0, 1);
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Gf2Matrix> {
        (0..=max, 0..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
                .prop_map(move |rows| Gf2Matrix::from_bool_rows(c, &rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(m in arb_matrix(80)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn rank_invariant_under_row_ops(m in arb_matrix(40), ops in proptest::collection::vec((any::<bool>(), 0usize..64, 0usize..64), 0..30)) {
            let mut e = m.clone();
            if e.rows() > 1 {
                for (swap, a, b) in ops {
                    let (a, b) = (a % e.rows(), b % e.rows());
                    if swap {
                        e.swap_rows(a, b);
                    } else if a != b {
                        e.add_row(a, b);
                    }
                }
            }
            prop_assert_eq!(e.rank(), m.rank());
        }

        #[test]
        fn transpose_involution_and_identity_product(m in arb_matrix(70)) {
            prop_assert_eq!(m.transpose().transpose(), m.clone());
            prop_assert_eq!(Gf2Matrix::identity(m.rows()).multiply(&m).unwrap(), m.clone());
            prop_assert_eq!(m.multiply(&Gf2Matrix::identity(m.cols())).unwrap(), m);
        }
    }
}
