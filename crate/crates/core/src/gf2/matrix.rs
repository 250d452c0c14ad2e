use std::fmt;

use super::word::Word;
use super::{row_weight, row_xor_accumulate};
use crate::error::{Error, Result};

/// Dense k x n matrix over F2 with rows packed into words.
///
/// Rows are stored back to back, `words_per_row` words each. Padding bits past
/// column `n - 1` are always zero, so whole-word popcounts give exact weights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix<W: Word = u32> {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<W>,
}

pub(crate) fn words_for<W: Word>(cols: usize) -> usize {
    cols.div_ceil(W::BITS)
}

impl<W: Word> BitMatrix<W> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for::<W>(cols);
        Self {
            rows,
            cols,
            stride,
            words: vec![W::ZERO; rows * stride],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of '0'/'1' characters. Panics on malformed
    /// input; meant for literals in tests and examples.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, ch) in r.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(i, j, true),
                    _ => panic!("bad character {:?} in row {i}", ch as char),
                }
            }
        }
        m
    }

    pub fn from_bools(rows: &[Vec<bool>], cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    left: r.len(),
                    right: cols,
                });
            }
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.stride
    }

    pub fn word_width(&self) -> usize {
        W::BITS
    }

    /// Bytes used by one packed row.
    pub fn row_bytes(&self) -> usize {
        self.stride * std::mem::size_of::<W>()
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[W] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [W] {
        &mut self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[W]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.words[r * self.stride + c / W::BITS].test(c % W::BITS)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "({r}, {c}) out of bounds");
        let w = &mut self.words[r * self.stride + c / W::BITS];
        let bit = W::bit(c % W::BITS);
        if value {
            *w = *w | bit;
        } else {
            *w = *w & !bit;
        }
    }

    pub fn row_weight(&self, r: usize) -> usize {
        row_weight(self.row(r))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.words.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src);
        let s = self.stride;
        if dst < src {
            let (head, tail) = self.words.split_at_mut(src * s);
            row_xor_accumulate(&mut head[dst * s..(dst + 1) * s], &tail[..s]);
        } else {
            let (head, tail) = self.words.split_at_mut(dst * s);
            row_xor_accumulate(&mut tail[..s], &head[src * s..(src + 1) * s]);
        }
    }

    /// Appends a row given as packed words; the padding must be zero.
    pub fn push_row(&mut self, row: &[W]) {
        assert_eq!(row.len(), self.stride);
        debug_assert!(self.padding_is_zero_in(row));
        self.words.extend_from_slice(row);
        self.rows += 1;
    }

    pub(crate) fn reserve_rows(&mut self, additional: usize) {
        self.words.reserve(additional * self.stride);
    }

    /// Keeps the first `rows` rows.
    pub fn truncate_rows(&mut self, rows: usize) {
        if rows < self.rows {
            self.rows = rows;
            self.words.truncate(rows * self.stride);
        }
    }

    /// Copy keeping only the listed columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Result<Self> {
        if let Some(&c) = columns.iter().find(|&&c| c >= self.cols) {
            return Err(Error::InvalidColumn {
                column: c,
                n: self.cols,
            });
        }
        let mut out = Self::zeros(self.rows, columns.len());
        for r in 0..self.rows {
            for (j, &c) in columns.iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Rank over F2.
    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.cols).collect();
        super::reduce_on_columns(self, &all).rank
    }

    /// Same matrix with a different storage word.
    pub fn convert<V: Word>(&self) -> BitMatrix<V> {
        let mut out = BitMatrix::<V>::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn stacked(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut out = self.clone();
        out.words.extend_from_slice(&other.words);
        out.rows += other.rows;
        Ok(out)
    }

    pub fn row_to_bools(&self, r: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub(crate) fn padding_is_zero_in(&self, row: &[W]) -> bool {
        let used = self.cols % W::BITS;
        match row.last() {
            Some(&last) if used != 0 => last & !W::low_mask(used) == W::ZERO,
            _ => true,
        }
    }

    /// Checks that no row has bits set beyond column `n - 1`.
    pub fn padding_is_zero(&self) -> bool {
        self.rows().all(|r| self.padding_is_zero_in(r))
    }
}

impl<W: Word> fmt::Debug for BitMatrix<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} (w{})", self.rows, self.cols, W::BITS)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
