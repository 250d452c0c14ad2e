//! Saved additions: every sum of up to s rows is precomputed and stored in lex
//! order, so a g-combination is assembled from ceil(g/s) stored rows.
//!
//! A g-combination is split into a left part of s rows and a right part of
//! g - s rows; the right part is split again while it is longer than s. Lex
//! order makes every admissible continuation of a left part a contiguous
//! index range: the combinations whose first element exceeds the left part's
//! last element. The weight of the final sum is taken in one fused pass over
//! all pieces, so each combination costs exactly `ceil(g/s) - 1` row
//! additions.

use std::sync::atomic::AtomicBool;

use super::{check_arity, fused_weight, should_stop, EnumerationResult, Tally};
use crate::combinatorics::{choose, BigCount, BinomialTable, Combination};
use crate::error::{Error, Result};
use crate::gf2::{row_xor_accumulate, BitMatrix, Word};

/// Lex-ordered sums of all combinations of up to `s` rows of one Γ.
///
/// Level `l` has C(k, l) rows; row `r` is the sum of the rows indexed by the
/// `r`-th l-combination in lex order. Level 1 is Γ itself. Levels are built
/// on demand, each from the previous level and level 1.
#[derive(Debug, Clone)]
pub struct SavedAdditionsStore<W: Word = u32> {
    k: usize,
    max_level: usize,
    levels: Vec<BitMatrix<W>>,
    table: BinomialTable,
    build_additions: BigCount,
}

impl<W: Word> SavedAdditionsStore<W> {
    /// Bytes needed by levels `1..=s` of a k-row store with `row_bytes`-byte rows.
    pub fn required_bytes(k: usize, s: usize, row_bytes: usize) -> BigCount {
        (1..=s).map(|l| choose(k, l)).sum::<BigCount>() * row_bytes as BigCount
    }

    /// Checks the budget for all `s` levels and stores level 1; higher levels
    /// are added by [`SavedAdditionsStore::ensure_level`].
    pub fn new(gamma: &BitMatrix<W>, s: usize, memory_budget: usize) -> Result<Self> {
        let k = gamma.num_rows();
        if s == 0 || s > k {
            return Err(Error::InvalidArity {
                g: s,
                k,
                what: "saved levels need 1 <= s <= k",
            });
        }
        let required = Self::required_bytes(k, s, gamma.row_bytes());
        if required > memory_budget as BigCount {
            return Err(Error::BudgetExceeded {
                required,
                budget: memory_budget as BigCount,
            });
        }
        Ok(Self {
            k,
            max_level: s,
            levels: vec![gamma.clone()],
            table: BinomialTable::new(k, s),
            build_additions: 0,
        })
    }

    /// Builds levels up to `min(level, s)`.
    pub fn ensure_level(&mut self, level: usize) {
        let target = level.min(self.max_level);
        while self.levels.len() < target {
            self.build_next_level();
        }
    }

    fn build_next_level(&mut self) {
        let l = self.levels.len() + 1;
        let k = self.k;
        let base = &self.levels[0];
        let prev = &self.levels[l - 2];
        let mut next = BitMatrix::zeros(0, base.num_cols());
        next.reserve_rows(self.table.get(k, l));
        let mut scratch = vec![W::ZERO; base.words_per_row()];
        // Appending j > last to each (l-1)-combination in lex order yields the
        // l-combinations in lex order.
        let mut comb = Combination::first(k, l - 1).expect("l - 1 <= k");
        let mut r = 0;
        loop {
            for j in comb.last_element() + 1..k {
                scratch.copy_from_slice(prev.row(r));
                row_xor_accumulate(&mut scratch, base.row(j));
                next.push_row(&scratch);
                self.build_additions += 1;
            }
            r += 1;
            if comb.advance_lex().is_none() {
                break;
            }
        }
        debug_assert_eq!(next.num_rows(), self.table.get(k, l));
        self.levels.push(next);
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.levels[0].num_cols()
    }

    /// The configured s.
    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn built_levels(&self) -> usize {
        self.levels.len()
    }

    /// Level `l` (1-based).
    pub fn level(&self, l: usize) -> &BitMatrix<W> {
        &self.levels[l - 1]
    }

    pub fn gamma(&self) -> &BitMatrix<W> {
        &self.levels[0]
    }

    /// Row additions spent building levels 2 and up.
    pub fn build_additions(&self) -> BigCount {
        self.build_additions
    }

    pub fn bytes(&self) -> usize {
        self.levels
            .iter()
            .map(|m| m.num_rows() * m.row_bytes())
            .sum()
    }

    pub(crate) fn table(&self) -> &BinomialTable {
        &self.table
    }

    fn check_ready(&self, g: usize) -> Result<()> {
        check_arity(g, self.k)?;
        if self.levels.len() < g.min(self.max_level) {
            return Err(Error::InvalidArity {
                g,
                k: self.k,
                what: "store levels not built up to min(g, s)",
            });
        }
        Ok(())
    }
}

/// Builds a store with all levels `1..=s`.
pub fn build_saved_store<W: Word>(
    gamma: &BitMatrix<W>,
    s: usize,
    memory_budget: usize,
) -> Result<SavedAdditionsStore<W>> {
    let mut store = SavedAdditionsStore::new(gamma, s, memory_budget)?;
    store.ensure_level(s);
    Ok(store)
}

/// Left combinations of the first split that share their last element and
/// are processed together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftGroup {
    /// Row indices into the level-s store.
    pub rows: Vec<usize>,
    pub last: usize,
}

/// Recursive walker over one pass. `group` holds the piece lists of the left
/// combinations being processed together; they all end in the same element.
pub(crate) struct Walker<'a, W: Word> {
    store: &'a SavedAdditionsStore<W>,
    pub tally: Tally,
    stop: Option<&'a AtomicBool>,
}

impl<'a, W: Word> Walker<'a, W> {
    pub fn new(
        store: &'a SavedAdditionsStore<W>,
        ubound: usize,
        stop: Option<&'a AtomicBool>,
    ) -> Self {
        Self {
            store,
            tally: Tally::new(ubound),
            stop,
        }
    }

    /// Remaining `g` rows after `after`, appended to every prefix in `group`.
    pub fn step(&mut self, g: usize, group: &mut [Vec<&'a [W]>], after: Option<usize>) {
        let s = self.store.max_level;
        if g <= s {
            let start = self.store.table.index_of(self.store.k, g, after);
            let end = self.store.table.get(self.store.k, g);
            self.base(g, group, start..end);
            return;
        }
        let k = self.store.k;
        let b = g - s;
        let level = self.store.level(s);
        let start = self.store.table.index_of(k, s, after);
        let end = self.store.table.index_of(k, s, Some(k - g));
        if start >= end {
            return;
        }
        let mut comb = Combination::unrank_lex(k, s, start as BigCount).expect("in range");
        for j in start..end {
            let last = comb.last_element();
            if last + b < k {
                let row = level.row(j);
                self.tally.accesses += 1;
                for p in group.iter_mut() {
                    p.push(row);
                }
                self.step(b, group, Some(last));
                for p in group.iter_mut() {
                    p.pop();
                }
            }
            if after.is_none() && should_stop(self.stop) {
                self.tally.stopped = true;
                return;
            }
            if j + 1 < end {
                comb.advance_lex();
            }
        }
    }

    /// Final level: every row in `rows` of level `g` against every prefix.
    pub fn base(&mut self, g: usize, group: &[Vec<&'a [W]>], rows: std::ops::Range<usize>) {
        let level = self.store.level(g);
        for j in rows {
            let row = level.row(j);
            self.tally.accesses += 1;
            for p in group {
                self.tally.adds += p.len() as u64;
                self.tally.observe(fused_weight(p, row));
            }
        }
    }

    /// Processes one group of first-split left combinations for a pass of `g`.
    pub fn run_group(&mut self, g: usize, left: &LeftGroup) {
        let level = self.store.level(self.store.max_level);
        let mut group: Vec<Vec<&'a [W]>> = left
            .rows
            .iter()
            .map(|&r| {
                let mut v = Vec::with_capacity(g.div_ceil(self.store.max_level));
                v.push(level.row(r));
                v
            })
            .collect();
        self.tally.accesses += left.rows.len() as u64;
        self.step(g - self.store.max_level, &mut group, Some(left.last));
    }
}

/// Admissible first-split left combinations for a pass of `g > s`, in the
/// unrolled order (first element, then last element, then the middle), cut
/// into runs of at most `unroll` consecutive combinations sharing their last
/// element.
pub fn left_groups<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    unroll: usize,
) -> Vec<LeftGroup> {
    let (k, s) = (store.k, store.max_level);
    assert!(g > s && g <= k && unroll >= 1);
    let b = g - s;
    let mut out: Vec<LeftGroup> = Vec::new();
    let mut comb = Combination::first(k, s).expect("s <= k");
    loop {
        if comb.first_element() > k - g {
            break;
        }
        let last = comb.last_element();
        if last + b < k {
            let row = rank_in_table(store.table(), comb.as_slice(), k);
            match out.last_mut() {
                Some(grp) if grp.last == last && grp.rows.len() < unroll => grp.rows.push(row),
                _ => out.push(LeftGroup {
                    rows: vec![row],
                    last,
                }),
            }
        }
        if !comb.advance_unrolled() {
            break;
        }
    }
    out
}

fn rank_in_table(t: &BinomialTable, c: &[usize], k: usize) -> usize {
    let g = c.len();
    let tail: usize = c
        .iter()
        .enumerate()
        .map(|(i, &x)| t.get(k - 1 - x, g - i))
        .sum();
    t.get(k, g) - 1 - tail
}

/// Saved-additions pass, left combinations in lex order.
///
/// With g <= s the weights are read straight from level g. Otherwise each
/// combination costs `floor((g - 1) / s)` row additions.
pub fn enumerate_saved<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    ubound: usize,
) -> Result<EnumerationResult> {
    saved_pass(store, g, ubound, None)
}

pub(crate) fn saved_pass<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    ubound: usize,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    store.check_ready(g)?;
    let mut walker = Walker::new(store, ubound, stop);
    walker.step(g, &mut [Vec::new()], None);
    Ok(walker.tally.finish())
}

/// Saved-additions pass that processes up to `unroll` first-split left
/// combinations with the same last element together, fetching each
/// continuation row once per group.
///
/// Same minimum and same additions as [`enumerate_saved`]; fewer row accesses
/// whenever a group has two or more members.
pub fn enumerate_saved_unrolled<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    ubound: usize,
    unroll: usize,
) -> Result<EnumerationResult> {
    unrolled_pass(store, g, ubound, unroll, None)
}

pub(crate) fn unrolled_pass<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    ubound: usize,
    unroll: usize,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    store.check_ready(g)?;
    check_unroll(unroll)?;
    if g <= store.max_level {
        return saved_pass(store, g, ubound, stop);
    }
    let mut walker = Walker::new(store, ubound, stop);
    for grp in left_groups(store, g, unroll) {
        walker.run_group(g, &grp);
        if should_stop(stop) {
            walker.tally.stopped = true;
            break;
        }
    }
    Ok(walker.tally.finish())
}

pub(crate) fn check_unroll(unroll: usize) -> Result<()> {
    if !(1..=3).contains(&unroll) {
        return Err(Error::InvalidArity {
            g: unroll,
            k: 3,
            what: "unroll must be 1, 2 or 3",
        });
    }
    Ok(())
}
