//! Bit-packed GF(2) rows and matrices.
//!
//! Addition over F2 is XOR, so a row addition is a word-wise XOR and the
//! Hamming weight of a row is the sum of its word popcounts. All routines rely
//! on the padding bits past the last column being zero.

mod gamma;
mod matrix;
pub mod text;
mod word;

pub use gamma::{build_gamma_set, Gamma, GammaSet};
pub use matrix::BitMatrix;
pub use word::{Word, WordWidth};

/// Number of set bits in a packed row.
#[inline]
pub fn row_weight<W: Word>(row: &[W]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// `acc ^= src`. One row addition.
#[inline]
pub fn row_xor_accumulate<W: Word>(acc: &mut [W], src: &[W]) {
    debug_assert_eq!(acc.len(), src.len());
    for (a, &s) in acc.iter_mut().zip(src) {
        *a ^= s;
    }
}

/// Weight of `a ^ b` without materialising the sum.
#[inline]
pub fn xor_weight<W: Word>(a: &[W], b: &[W]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x ^ y).count_ones() as usize)
        .sum()
}

/// Result of [`reduce_on_columns`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction<W: Word> {
    /// Row-equivalent matrix; row `i < rank` carries the pivot `pivots[i]`.
    pub matrix: BitMatrix<W>,
    /// Pivot columns in the order they were found.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Gauss-Jordan elimination that only pivots on `allowed` columns.
///
/// Columns are scanned in the given order and the first available row with a
/// one becomes the pivot row. Columns are never moved, so the returned matrix
/// spans exactly the same row space as `m`. Every pivot column ends up with a
/// single one, in row `i` for the `i`-th pivot.
pub fn reduce_on_columns<W: Word>(m: &BitMatrix<W>, allowed: &[usize]) -> Reduction<W> {
    let mut a = m.clone();
    let rows = a.num_rows();
    let mut pivots = Vec::new();
    for &col in allowed {
        let r = pivots.len();
        if r == rows {
            break;
        }
        debug_assert!(col < a.num_cols());
        let Some(p) = (r..rows).find(|&i| a.get(i, col)) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in 0..rows {
            if i != r && a.get(i, col) {
                a.add_row(i, r);
            }
        }
        pivots.push(col);
    }
    let rank = pivots.len();
    Reduction {
        matrix: a,
        pivots,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn hamming74() -> BitMatrix {
        BitMatrix::from_strs(&["1000110", "0100011", "0010111", "0001101"])
    }

    #[test]
    fn weight_examples() {
        let z = BitMatrix::<u32>::zeros(1, 150);
        assert_eq!(row_weight(z.row(0)), 0);
        let ones = BitMatrix::<u32>::from_strs(&["1111111"]);
        assert_eq!(row_weight(ones.row(0)), 7);
        let r = BitMatrix::<u64>::from_strs(&["1011001"]);
        assert_eq!(row_weight(r.row(0)), 4);
    }

    #[test]
    fn xor_examples() {
        let m = BitMatrix::<u32>::from_strs(&["0000", "1010", "1100"]);
        let mut acc = m.row(0).to_vec();
        row_xor_accumulate(&mut acc, m.row(1));
        assert_eq!(acc, m.row(1));
        row_xor_accumulate(&mut acc, m.row(1));
        assert_eq!(acc, m.row(0));
        let mut acc = m.row(2).to_vec();
        row_xor_accumulate(&mut acc, m.row(1));
        assert_eq!(acc, BitMatrix::<u32>::from_strs(&["0110"]).row(0));
    }

    #[test]
    fn reduce_identity_is_fixed() {
        let id = BitMatrix::<u32>::identity(4);
        let red = reduce_on_columns(&id, &[0, 1, 2, 3]);
        assert_eq!(red.rank, 4);
        assert_eq!(red.pivots, vec![0, 1, 2, 3]);
        assert_eq!(red.matrix, id);
    }

    #[test]
    fn reduce_duplicate_rows() {
        let m = BitMatrix::<u32>::from_strs(&["11", "11"]);
        assert_eq!(reduce_on_columns(&m, &[0, 1]).rank, 1);
    }

    #[test]
    fn reduce_parity_block_of_hamming() {
        let red = reduce_on_columns(&hamming74(), &[4, 5, 6]);
        assert_eq!(red.rank, 3);
        assert_eq!(red.pivots, vec![4, 5, 6]);
        for (i, &p) in red.pivots.iter().enumerate() {
            for r in 0..4 {
                assert_eq!(red.matrix.get(r, p), r == i);
            }
        }
    }

    #[test]
    fn reduce_on_empty_column_set() {
        let red = reduce_on_columns(&hamming74(), &[]);
        assert_eq!(red.rank, 0);
        assert_eq!(red.matrix, hamming74());
    }

    fn arb_rows(max_cols: usize) -> impl Strategy<Value = (usize, Vec<Vec<bool>>)> {
        (1..max_cols).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(prop::collection::vec(any::<bool>(), n), 1..8),
            )
        })
    }

    proptest! {
        #[test]
        fn xor_weight_is_symmetric_difference((n, rows) in arb_rows(200)) {
            prop_assume!(rows.len() >= 2);
            let a = BitMatrix::<u32>::from_bools(&rows, n).unwrap();
            let mut acc = a.row(0).to_vec();
            row_xor_accumulate(&mut acc, a.row(1));
            let s0: BTreeSet<_> = (0..n).filter(|&c| rows[0][c]).collect();
            let s1: BTreeSet<_> = (0..n).filter(|&c| rows[1][c]).collect();
            prop_assert_eq!(row_weight(&acc), s0.symmetric_difference(&s1).count());
            prop_assert_eq!(xor_weight(a.row(0), a.row(1)), row_weight(&acc));
            // padding stays clear
            let mut m = a.clone();
            m.row_mut(0).copy_from_slice(&acc);
            prop_assert!(m.padding_is_zero());
        }

        #[test]
        fn reduction_invariants((n, rows) in arb_rows(70)) {
            let m = BitMatrix::<u64>::from_bools(&rows, n).unwrap();
            let allowed: Vec<usize> = (0..n).rev().step_by(2).collect();
            let red = reduce_on_columns(&m, &allowed);
            prop_assert!(red.matrix.padding_is_zero());
            prop_assert_eq!(red.rank, red.pivots.len());
            prop_assert_eq!(red.rank, m.select_columns(&allowed).unwrap().rank());
            for (i, &p) in red.pivots.iter().enumerate() {
                prop_assert!(allowed.contains(&p));
                for r in 0..m.num_rows() {
                    prop_assert_eq!(red.matrix.get(r, p), r == i);
                }
            }
            // same row space
            let both = m.stacked(&red.matrix).unwrap();
            prop_assert_eq!(both.rank(), m.rank());
            prop_assert_eq!(red.matrix.rank(), m.rank());
        }

        #[test]
        fn word_widths_agree((n, rows) in arb_rows(130)) {
            let a = BitMatrix::<u32>::from_bools(&rows, n).unwrap();
            let b = BitMatrix::<u64>::from_bools(&rows, n).unwrap();
            let all: Vec<usize> = (0..n).collect();
            let ra = reduce_on_columns(&a, &all);
            let rb = reduce_on_columns(&b, &all);
            prop_assert_eq!(&ra.pivots, &rb.pivots);
            prop_assert_eq!(ra.matrix.convert::<u64>(), rb.matrix);
            for r in 0..a.num_rows() {
                prop_assert_eq!(a.row_weight(r), b.row_weight(r));
            }
        }
    }
}
