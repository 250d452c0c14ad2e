//! The single-threaded strategies: basic, optimized and stack-based.
//!
//! None of these is parallelised. Their successor step is inherently serial and
//! would have to sit in a critical section shared by all workers.

use std::sync::atomic::AtomicBool;

use super::{check_arity, should_stop, EnumerationResult, Tally};
use crate::combinatorics::Combination;
use crate::error::Result;
use crate::gf2::{row_weight, row_xor_accumulate, xor_weight, BitMatrix, Word};

const STOP_POLL: u64 = 1 << 12;

/// Sums every g-combination of Γ's rows from scratch, in lex order.
///
/// Costs `g - 1` additions and `g` accesses per combination.
pub fn enumerate_basic<W: Word>(
    gamma: &BitMatrix<W>,
    g: usize,
    ubound: usize,
) -> Result<EnumerationResult> {
    basic_pass(gamma, g, ubound, None)
}

pub(crate) fn basic_pass<W: Word>(
    gamma: &BitMatrix<W>,
    g: usize,
    ubound: usize,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    check_arity(g, gamma.num_rows())?;
    let mut t = Tally::new(ubound);
    let mut comb = Combination::first(gamma.num_rows(), g)?;
    let mut acc = vec![W::ZERO; gamma.words_per_row()];
    loop {
        let idx = comb.as_slice();
        acc.copy_from_slice(gamma.row(idx[0]));
        for &i in &idx[1..] {
            row_xor_accumulate(&mut acc, gamma.row(i));
        }
        t.adds += (g - 1) as u64;
        t.accesses += g as u64;
        t.observe(row_weight(&acc));
        if t.combos % STOP_POLL == 0 && should_stop(stop) {
            t.stopped = true;
            break;
        }
        if comb.advance_lex().is_none() {
            break;
        }
    }
    Ok(t.finish())
}

/// Sums each (g-1)-prefix once and extends it by every admissible last row.
///
/// Prefixes range over rows `0..k-1`, since a prefix ending in row k-1 has
/// no extension. g = 1 falls back to [`enumerate_basic`].
pub fn enumerate_optimized<W: Word>(
    gamma: &BitMatrix<W>,
    g: usize,
    ubound: usize,
) -> Result<EnumerationResult> {
    optimized_pass(gamma, g, ubound, None)
}

pub(crate) fn optimized_pass<W: Word>(
    gamma: &BitMatrix<W>,
    g: usize,
    ubound: usize,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    let k = gamma.num_rows();
    check_arity(g, k)?;
    if g == 1 {
        return basic_pass(gamma, g, ubound, stop);
    }
    let mut t = Tally::new(ubound);
    let mut prefix = Combination::first(k - 1, g - 1)?;
    let mut acc = vec![W::ZERO; gamma.words_per_row()];
    loop {
        let idx = prefix.as_slice();
        acc.copy_from_slice(gamma.row(idx[0]));
        for &i in &idx[1..] {
            row_xor_accumulate(&mut acc, gamma.row(i));
        }
        t.adds += (g - 2) as u64;
        t.accesses += (g - 1) as u64;
        for j in prefix.last_element() + 1..k {
            t.observe(xor_weight(&acc, gamma.row(j)));
        }
        let ext = (k - 1 - prefix.last_element()) as u64;
        t.adds += ext;
        t.accesses += ext;
        if should_stop(stop) {
            t.stopped = true;
            break;
        }
        if prefix.advance_lex().is_none() {
            break;
        }
    }
    Ok(t.finish())
}

/// Running prefix sums of the current (g-1)-combination.
///
/// Level `t` holds `row[c_0] ^ .. ^ row[c_t]`.
#[derive(Debug, Clone)]
pub struct AdditionStack<W: Word> {
    words: usize,
    levels: Vec<W>,
    depth: usize,
}

impl<W: Word> AdditionStack<W> {
    pub fn new(depth: usize, words_per_row: usize) -> Self {
        Self {
            words: words_per_row,
            levels: vec![W::ZERO; depth * words_per_row],
            depth,
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn level(&self, t: usize) -> &[W] {
        &self.levels[t * self.words..(t + 1) * self.words]
    }

    /// Bytes of row storage held by the stack.
    pub fn bytes(&self) -> usize {
        std::mem::size_of_val(self.levels.as_slice())
    }

    /// Recomputes levels `from..depth` for `comb`. Returns the number of row
    /// additions performed; level 0 is a copy and costs none.
    pub fn rebuild(&mut self, from: usize, comb: &[usize], gamma: &BitMatrix<W>) -> usize {
        debug_assert_eq!(comb.len(), self.depth);
        let w = self.words;
        let mut adds = 0;
        for t in from..self.depth {
            let row = gamma.row(comb[t]);
            if t == 0 {
                self.levels[..w].copy_from_slice(row);
            } else {
                let (done, rest) = self.levels.split_at_mut(t * w);
                let cur = &mut rest[..w];
                cur.copy_from_slice(&done[(t - 1) * w..]);
                row_xor_accumulate(cur, row);
                adds += 1;
            }
        }
        adds
    }
}

/// Like [`enumerate_optimized`], but prefix sums live on an
/// [`AdditionStack`] and only the levels at or right of the first changed
/// position are recomputed.
pub fn enumerate_stack<W: Word>(
    gamma: &BitMatrix<W>,
    g: usize,
    ubound: usize,
) -> Result<EnumerationResult> {
    stack_pass(gamma, g, ubound, None)
}

pub(crate) fn stack_pass<W: Word>(
    gamma: &BitMatrix<W>,
    g: usize,
    ubound: usize,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    let k = gamma.num_rows();
    check_arity(g, k)?;
    if g == 1 {
        return basic_pass(gamma, g, ubound, stop);
    }
    let mut t = Tally::new(ubound);
    let mut stack = AdditionStack::new(g - 1, gamma.words_per_row());
    let mut prefix = Combination::first(k - 1, g - 1)?;
    let mut reset = 0;
    loop {
        t.adds += stack.rebuild(reset, prefix.as_slice(), gamma) as u64;
        t.accesses += (g - 1 - reset) as u64;
        let top = stack.level(g - 2);
        for j in prefix.last_element() + 1..k {
            t.observe(xor_weight(top, gamma.row(j)));
        }
        let ext = (k - 1 - prefix.last_element()) as u64;
        t.adds += ext;
        t.accesses += ext;
        if should_stop(stop) {
            t.stopped = true;
            break;
        }
        match prefix.advance_lex() {
            Some(pos) => reset = pos,
            None => break,
        }
    }
    Ok(t.finish())
}
