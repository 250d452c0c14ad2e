//! Parallel saved-additions pass.
//!
//! Work units are the first-split left groups (or, when g <= s, fixed-size
//! chunks of level g). Their costs differ by orders of magnitude (the left
//! combination (0,1,2) of k = 50, g = 6, s = 3 expands to C(47,3) right
//! combinations, (0,1,46) to one), so units are handed out dynamically from a
//! shared cursor. Each worker keeps local tallies that are merged once at the end.
//! A shared upper-bound cell is lowered after each unit; it only affects
//! clipping, so stale reads are harmless.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use super::saved::{check_unroll, left_groups, LeftGroup, Walker};
use super::{should_stop, EnumerationResult, SavedAdditionsStore};
use crate::error::Result;
use crate::gf2::Word;

const ROW_CHUNK: usize = 2048;

enum Unit {
    Rows(std::ops::Range<usize>),
    Left(LeftGroup),
}

fn work_units<W: Word>(store: &SavedAdditionsStore<W>, g: usize, unroll: usize) -> Vec<Unit> {
    if g <= store.max_level() {
        let total = store.level(g).num_rows();
        (0..total)
            .step_by(ROW_CHUNK)
            .map(|start| Unit::Rows(start..(start + ROW_CHUNK).min(total)))
            .collect()
    } else {
        left_groups(store, g, unroll)
            .into_iter()
            .map(Unit::Left)
            .collect()
    }
}

/// Saved-additions pass on `workers` threads.
///
/// Returns the same minimum and the same totals as the serial pass for every
/// worker count; `unroll > 1` groups left combinations as in
/// [`super::enumerate_saved_unrolled`].
pub fn enumerate_parallel<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    ubound: usize,
    workers: usize,
    unroll: usize,
) -> Result<EnumerationResult> {
    parallel_pass(store, g, ubound, workers, unroll, None)
}

pub(crate) fn parallel_pass<W: Word>(
    store: &SavedAdditionsStore<W>,
    g: usize,
    ubound: usize,
    workers: usize,
    unroll: usize,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    super::check_arity(g, store.k())?;
    check_unroll(unroll)?;
    if store.built_levels() < g.min(store.max_level()) {
        return super::saved_pass(store, g, ubound, stop);
    }
    let units = work_units(store, g, unroll);
    let cursor = AtomicUsize::new(0);
    let upper = AtomicUsize::new(ubound);
    let processed = AtomicUsize::new(0);
    let run = || {
        let mut walker = Walker::new(store, ubound, stop);
        loop {
            if should_stop(stop) {
                walker.tally.stopped = true;
                break;
            }
            let i = cursor.fetch_add(1, Ordering::Relaxed);
            let Some(unit) = units.get(i) else { break };
            walker.tally.best = walker.tally.best.min(upper.load(Ordering::Relaxed));
            match unit {
                Unit::Rows(range) => walker.base(g, &[Vec::new()], range.clone()),
                Unit::Left(grp) => walker.run_group(g, grp),
            }
            upper.fetch_min(walker.tally.best, Ordering::Relaxed);
            processed.fetch_add(1, Ordering::Relaxed);
        }
        walker.tally.finish()
    };

    let workers = workers.max(1);
    let mut total = EnumerationResult::empty(ubound);
    if workers == 1 {
        total.merge(&run());
    } else {
        let parts: Vec<EnumerationResult> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers).map(|_| scope.spawn(run)).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        });
        for p in &parts {
            total.merge(p);
        }
    }
    total.completed = processed.load(Ordering::Relaxed) == units.len();
    Ok(total)
}
