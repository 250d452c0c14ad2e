//! Codeword enumeration for one Γ matrix and one generator count g.
//!
//! Every strategy computes `min(ubound, min{ wt(cΓ) : wt(c) = g })` and counts
//! its work:
//!
//! * `combinations`: g-combinations whose codeword weight was evaluated;
//! * `row_additions`: XORs of two packed rows;
//! * `row_accesses`: packed rows fetched from Γ or from a saved-additions level.
//!
//! Counters are exact, and none of the strategies stops early, so a completed
//! pass always evaluates C(k, g) combinations. The upper bound only clips the
//! reported minimum.

mod parallel;
mod saved;
mod sequential;

use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

pub use parallel::enumerate_parallel;
pub use saved::{
    build_saved_store, enumerate_saved, enumerate_saved_unrolled, left_groups, LeftGroup,
    SavedAdditionsStore,
};
pub use sequential::{enumerate_basic, enumerate_optimized, enumerate_stack, AdditionStack};

pub(crate) use parallel::parallel_pass;
pub(crate) use saved::{saved_pass, unrolled_pass};
pub(crate) use sequential::{basic_pass, optimized_pass, stack_pass};

use crate::combinatorics::BigCount;
use crate::error::{Error, Result};
use crate::gf2::{row_weight, xor_weight, Word};

/// Outcome of one (Γ, g) pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationResult {
    /// Minimum codeword weight seen, clipped to the incoming upper bound.
    pub min_weight: usize,
    pub combinations: BigCount,
    pub row_additions: BigCount,
    pub row_accesses: BigCount,
    /// False when the pass was cancelled part way.
    pub completed: bool,
}

impl EnumerationResult {
    pub fn empty(ubound: usize) -> Self {
        Self {
            min_weight: ubound,
            combinations: 0,
            row_additions: 0,
            row_accesses: 0,
            completed: true,
        }
    }

    /// Folds in the result of another slice of the same pass.
    pub fn merge(&mut self, other: &EnumerationResult) {
        self.min_weight = self.min_weight.min(other.min_weight);
        self.combinations += other.combinations;
        self.row_additions += other.row_additions;
        self.row_accesses += other.row_accesses;
        self.completed &= other.completed;
    }
}

/// Enumeration strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Every combination summed from scratch.
    Basic,
    /// Prefix of g-1 rows summed once, reused for every last row.
    Optimized,
    /// Prefix sums kept on a stack and rebuilt from the first changed level.
    Stack,
    /// Precomputed sums of up to s rows combined from a lex-ordered store.
    Saved,
    /// Saved additions with several left combinations processed together.
    SavedUnrolled,
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [
        Strategy::Basic,
        Strategy::Optimized,
        Strategy::Stack,
        Strategy::Saved,
        Strategy::SavedUnrolled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Basic => "basic",
            Strategy::Optimized => "optimized",
            Strategy::Stack => "stack",
            Strategy::Saved => "saved",
            Strategy::SavedUnrolled => "saved-unrolled",
        }
    }

    pub fn uses_store(self) -> bool {
        matches!(self, Strategy::Saved | Strategy::SavedUnrolled)
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| {
                format!("unknown algorithm {s:?} (basic, optimized, stack, saved, saved-unrolled)")
            })
    }
}

/// Per-pass running totals. Plain u64 in the loops, widened on output.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Tally {
    pub best: usize,
    pub combos: u64,
    pub adds: u64,
    pub accesses: u64,
    pub stopped: bool,
}

impl Tally {
    pub fn new(ubound: usize) -> Self {
        Self {
            best: ubound,
            combos: 0,
            adds: 0,
            accesses: 0,
            stopped: false,
        }
    }

    #[inline]
    pub fn observe(&mut self, weight: usize) {
        self.combos += 1;
        if weight < self.best {
            self.best = weight;
        }
    }

    pub fn finish(self) -> EnumerationResult {
        EnumerationResult {
            min_weight: self.best,
            combinations: self.combos as BigCount,
            row_additions: self.adds as BigCount,
            row_accesses: self.accesses as BigCount,
            completed: !self.stopped,
        }
    }
}

#[inline]
pub(crate) fn should_stop(stop: Option<&AtomicBool>) -> bool {
    stop.is_some_and(|s| s.load(Ordering::Relaxed))
}

pub(crate) fn check_arity(g: usize, k: usize) -> Result<()> {
    if g == 0 || g > k {
        return Err(Error::InvalidArity {
            g,
            k,
            what: "need 1 <= g <= k",
        });
    }
    Ok(())
}

/// Weight of `pieces[0] ^ .. ^ pieces[last] ^ row`, one pass over the words.
/// Costs `pieces.len()` row additions.
#[inline]
pub(crate) fn fused_weight<W: Word>(pieces: &[&[W]], row: &[W]) -> usize {
    match pieces {
        [] => row_weight(row),
        [a] => xor_weight(a, row),
        [a, b] => a
            .iter()
            .zip(b.iter())
            .zip(row)
            .map(|((&x, &y), &z)| (x ^ y ^ z).count_ones() as usize)
            .sum(),
        _ => (0..row.len())
            .map(|w| {
                let x = pieces.iter().fold(row[w], |acc, p| acc ^ p[w]);
                x.count_ones() as usize
            })
            .sum(),
    }
}
