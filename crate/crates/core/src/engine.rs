//! The Brouwer-Zimmermann driver.
//!
//! For g = 1, 2, ... every Γ matrix is enumerated over all messages of weight
//! g, lowering the upper bound U to the lightest codeword seen. After each g
//! the lower bound becomes
//!
//! ```text
//! L = (m - 1)(g + 1) + max{0, g + 1 - k + k_m}
//! ```
//!
//! since any codeword not yet seen has more than g ones on each disjoint
//! information set. The loop stops once L >= U (then d = U) or g > k.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use crate::combinatorics::BigCount;
use crate::enumeration::should_stop;
use crate::enumeration::{
    basic_pass, optimized_pass, parallel_pass, saved_pass, stack_pass, unrolled_pass,
    EnumerationResult, SavedAdditionsStore, Strategy,
};
use crate::error::{Error, Result};
use crate::gf2::{build_gamma_set, row_weight, row_xor_accumulate, BitMatrix, Word};

/// Lower and upper bound on the minimum distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

/// `L = 1`, `U = n - k + 1` (the Singleton bound).
pub fn initial_bounds(n: usize, k: usize) -> Result<Bounds> {
    if k == 0 || k > n {
        return Err(Error::InvalidDimensions { k, n });
    }
    Ok(Bounds {
        lower: 1,
        upper: n - k + 1,
    })
}

/// `(m - 1)(g + 1) + max{0, g + 1 - k + k_m}`.
pub fn lower_bound_update(g: usize, m: usize, k: usize, k_m: usize) -> usize {
    assert!(m >= 1 && k_m <= k);
    (m - 1) * (g + 1) + (g + 1 + k_m).saturating_sub(k)
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub strategy: Strategy,
    /// Largest saved level s (saved strategies only).
    pub saved_levels: usize,
    /// Left combinations processed together (saved-unrolled only).
    pub unroll: usize,
    /// Worker threads for the saved strategies.
    pub workers: usize,
    /// Byte budget per saved-additions store.
    pub memory_budget: usize,
    /// Give up after this g and report an upper bound only.
    pub max_g: usize,
    /// Use at most this many full-rank Γ matrices (and no remainder).
    pub max_information_sets: Option<usize>,
    /// Continue a previous run.
    pub resume: Option<Checkpoint>,
    /// Wall-clock limit; reaching it interrupts the run.
    pub time_limit: Option<Duration>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            strategy: Strategy::Saved,
            saved_levels: 3,
            unroll: 2,
            workers: 1,
            memory_budget: 256 << 20,
            max_g: 16,
            max_information_sets: None,
            resume: None,
            time_limit: None,
        }
    }
}

impl EngineConfig {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Self {
            strategy,
            ..Self::default()
        }
    }
}

/// Bounds after finishing generator count `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsStep {
    pub g: usize,
    pub lower: usize,
    pub upper: usize,
}

/// Enough state to re-enter the loop at `next_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub next_g: usize,
    pub lower: usize,
    pub upper: usize,
    pub bounds_trace: Vec<BoundsStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// L >= U or every codeword was enumerated: `distance` is exact.
    Exact,
    /// Stopped at `max_g` with L < U: only `distance >= lower` and
    /// `distance <= upper` are known.
    UpperBoundOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counters {
    pub combinations: BigCount,
    pub row_additions: BigCount,
    pub row_accesses: BigCount,
}

impl Counters {
    fn add(&mut self, r: &EnumerationResult) {
        self.combinations += r.combinations;
        self.row_additions += r.row_additions;
        self.row_accesses += r.row_accesses;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSummary {
    pub m: usize,
    pub k_m: usize,
    pub pivot_sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct DistanceReport {
    pub n: usize,
    pub k: usize,
    pub strategy: Strategy,
    pub outcome: Outcome,
    /// Final U; the minimum distance when `outcome` is exact.
    pub distance: usize,
    pub lower: usize,
    /// Last generator count processed (0 if none).
    pub g_reached: usize,
    pub bounds_trace: Vec<BoundsStep>,
    /// Totals over all enumeration passes of this run.
    pub counters: Counters,
    /// Row additions spent building saved-additions stores.
    pub store_additions: BigCount,
    pub gamma_summary: GammaSummary,
    pub elapsed: Duration,
}

impl DistanceReport {
    pub fn is_exact(&self) -> bool {
        self.outcome == Outcome::Exact
    }

    pub fn combinations_per_sec(&self) -> f64 {
        let secs = self.elapsed.as_secs_f64();
        if secs > 0.0 {
            self.counters.combinations as f64 / secs
        } else {
            0.0
        }
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            next_g: self.g_reached + 1,
            lower: self.lower,
            upper: self.distance,
            bounds_trace: self.bounds_trace.clone(),
        }
    }

    /// `key=value` lines followed by one `g=.. L=.. U=..` line per g.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match self.outcome {
            Outcome::Exact => "exact",
            Outcome::UpperBoundOnly => "upper_bound",
        };
        let _ = writeln!(out, "status={status}");
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "k={}", self.k);
        let _ = writeln!(out, "algorithm={}", self.strategy);
        match self.outcome {
            Outcome::Exact => {
                let _ = writeln!(out, "distance={}", self.distance);
            }
            Outcome::UpperBoundOnly => {
                let _ = writeln!(out, "upper_bound={}", self.distance);
                let _ = writeln!(out, "lower_bound={}", self.lower);
            }
        }
        let _ = writeln!(out, "g_reached={}", self.g_reached);
        let _ = writeln!(out, "m={}", self.gamma_summary.m);
        let _ = writeln!(out, "k_m={}", self.gamma_summary.k_m);
        let _ = writeln!(out, "combinations={}", self.counters.combinations);
        let _ = writeln!(out, "row_additions={}", self.counters.row_additions);
        let _ = writeln!(out, "row_accesses={}", self.counters.row_accesses);
        let _ = writeln!(out, "store_additions={}", self.store_additions);
        let _ = writeln!(out, "elapsed_s={:.6}", self.elapsed.as_secs_f64());
        let _ = writeln!(out, "combos_per_sec={:.0}", self.combinations_per_sec());
        out.push_str(&trace_lines(&self.bounds_trace));
        out
    }
}

fn trace_lines(trace: &[BoundsStep]) -> String {
    trace
        .iter()
        .map(|s| format!("g={} L={} U={}\n", s.g, s.lower, s.upper))
        .collect()
}

impl Checkpoint {
    /// Text form of an interrupted run; parses back with `FromStr`.
    pub fn to_text(&self) -> String {
        format!(
            "status=interrupted\nnext_g={}\nlower_bound={}\nupper_bound={}\n{}",
            self.next_g,
            self.lower,
            self.upper,
            trace_lines(&self.bounds_trace)
        )
    }
}

impl FromStr for Checkpoint {
    type Err = Error;

    /// Accepts any report or checkpoint text. The trace is authoritative; an
    /// explicit `next_g` (interrupted runs) overrides `g_reached + 1`.
    fn from_str(text: &str) -> Result<Self> {
        let mut trace = Vec::new();
        let mut next_g = None;
        let mut g_reached = None;
        let mut lower = None;
        let mut upper = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            let num = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| Error::parse(i + 1, format!("bad number {v:?}")))
            };
            if line.starts_with("g=") {
                let mut step = BoundsStep {
                    g: 0,
                    lower: 0,
                    upper: 0,
                };
                let mut fields = 0;
                for part in line.split_ascii_whitespace() {
                    match part.split_once('=') {
                        Some(("g", v)) => step.g = num(v)?,
                        Some(("L", v)) => step.lower = num(v)?,
                        Some(("U", v)) => step.upper = num(v)?,
                        _ => return Err(Error::parse(i + 1, "bad bounds line")),
                    }
                    fields += 1;
                }
                if fields != 3 {
                    return Err(Error::parse(i + 1, "bad bounds line"));
                }
                trace.push(step);
            } else if let Some((key, v)) = line.split_once('=') {
                match key {
                    "next_g" => next_g = Some(num(v)?),
                    "g_reached" => g_reached = Some(num(v)?),
                    "lower_bound" => lower = Some(num(v)?),
                    "upper_bound" | "distance" => upper = Some(num(v)?),
                    _ => {}
                }
            }
        }
        let last = trace.last().copied();
        let next_g = next_g
            .or(g_reached.map(|g| g + 1))
            .or(last.map(|s| s.g + 1))
            .ok_or_else(|| Error::parse(1, "no progress recorded"))?;
        let upper = upper
            .or(last.map(|s| s.upper))
            .ok_or_else(|| Error::parse(1, "no upper bound recorded"))?;
        let lower = lower.or(last.map(|s| s.lower)).unwrap_or(1);
        Ok(Checkpoint {
            next_g,
            lower,
            upper,
            bounds_trace: trace,
        })
    }
}

/// Computes the minimum distance of the code generated by `g`.
pub fn minimum_distance<W: Word>(
    g: &BitMatrix<W>,
    config: &EngineConfig,
) -> Result<DistanceReport> {
    minimum_distance_with_stop(g, config, None)
}

/// [`minimum_distance`] that can be cancelled through `stop`.
///
/// On cancellation (or when `config.time_limit` runs out) the current g is
/// abandoned and `Error::Interrupted` carries the bounds after the last
/// completed g.
pub fn minimum_distance_with_stop<W: Word>(
    g: &BitMatrix<W>,
    config: &EngineConfig,
    stop: Option<&AtomicBool>,
) -> Result<DistanceReport> {
    let started = Instant::now();
    let deadline = config.time_limit.map(|d| started + d);
    with_deadline(stop, deadline, |flag| run_engine(g, config, flag, started))
}

fn run_engine<W: Word>(
    g: &BitMatrix<W>,
    config: &EngineConfig,
    stop: Option<&AtomicBool>,
    started: Instant,
) -> Result<DistanceReport> {
    let (k, n) = (g.num_rows(), g.num_cols());
    let mut bounds = initial_bounds(n, k)?;
    let mut set = build_gamma_set(g)?;
    if let Some(limit) = config.max_information_sets {
        set.restrict_full_rank(limit);
    }
    let summary = GammaSummary {
        m: set.m(),
        k_m: set.remainder_rank(),
        pivot_sets: set.pivot_sets().map(<[usize]>::to_vec).collect(),
    };
    // Without a deficient remainder the last full-rank Γ plays the role of
    // Γ_m with k_m = k.
    let k_m = if set.has_remainder() {
        set.remainder_rank()
    } else {
        k
    };

    let mut trace = Vec::new();
    let mut next_g = 1;
    if let Some(cp) = &config.resume {
        bounds = Bounds {
            lower: cp.lower.max(1),
            upper: cp.upper.min(bounds.upper),
        };
        next_g = cp.next_g.max(1);
        trace = cp.bounds_trace.clone();
    }

    let mut stores: Vec<Option<SavedAdditionsStore<W>>> = vec![None; set.m()];
    let mut counters = Counters::default();
    let mut store_additions: BigCount = 0;
    let mut gval = next_g;

    while gval <= k && bounds.lower < bounds.upper && gval <= config.max_g {
        // U found so far in this g is a real codeword weight, so it survives
        let checkpoint = |b: Bounds| Checkpoint {
            next_g: gval,
            lower: b.lower,
            upper: b.upper,
            bounds_trace: trace.clone(),
        };
        for (j, gamma) in set.gammas.iter().enumerate() {
            if should_stop(stop) {
                return Err(Error::Interrupted(Box::new(checkpoint(bounds))));
            }
            let res = run_pass(
                &gamma.matrix,
                &mut stores[j],
                &mut store_additions,
                gval,
                bounds.upper,
                config,
                stop,
            )?;
            if !res.completed {
                return Err(Error::Interrupted(Box::new(checkpoint(bounds))));
            }
            counters.add(&res);
            bounds.upper = bounds.upper.min(res.min_weight);
        }
        bounds.lower = lower_bound_update(gval, set.m(), k, k_m);
        trace.push(BoundsStep {
            g: gval,
            lower: bounds.lower,
            upper: bounds.upper,
        });
        gval += 1;
    }

    let exact = bounds.lower >= bounds.upper || gval > k;
    Ok(DistanceReport {
        n,
        k,
        strategy: config.strategy,
        outcome: if exact {
            Outcome::Exact
        } else {
            Outcome::UpperBoundOnly
        },
        distance: bounds.upper,
        lower: bounds.lower,
        g_reached: gval - 1,
        bounds_trace: trace,
        counters,
        store_additions,
        gamma_summary: summary,
        elapsed: started.elapsed(),
    })
}

fn run_pass<W: Word>(
    gamma: &BitMatrix<W>,
    store: &mut Option<SavedAdditionsStore<W>>,
    store_additions: &mut BigCount,
    g: usize,
    ubound: usize,
    config: &EngineConfig,
    stop: Option<&AtomicBool>,
) -> Result<EnumerationResult> {
    match config.strategy {
        Strategy::Basic => basic_pass(gamma, g, ubound, stop),
        Strategy::Optimized => optimized_pass(gamma, g, ubound, stop),
        Strategy::Stack => stack_pass(gamma, g, ubound, stop),
        Strategy::Saved | Strategy::SavedUnrolled => {
            if store.is_none() {
                let s = config.saved_levels.clamp(1, gamma.num_rows());
                *store = Some(SavedAdditionsStore::new(gamma, s, config.memory_budget)?);
            }
            let st = store.as_mut().expect("just built");
            let before = st.build_additions();
            st.ensure_level(g);
            *store_additions += st.build_additions() - before;
            let unroll = match config.strategy {
                Strategy::SavedUnrolled => config.unroll,
                _ => 1,
            };
            if config.workers > 1 {
                parallel_pass(st, g, ubound, config.workers, unroll, stop)
            } else if unroll > 1 {
                unrolled_pass(st, g, ubound, unroll, stop)
            } else {
                saved_pass(st, g, ubound, stop)
            }
        }
    }
}

/// Runs `f` with a flag that is raised when `external` is raised or the
/// deadline passes.
fn with_deadline<T>(
    external: Option<&AtomicBool>,
    deadline: Option<Instant>,
    f: impl FnOnce(Option<&AtomicBool>) -> T,
) -> T {
    let Some(at) = deadline else {
        return f(external);
    };
    let raised = AtomicBool::new(Instant::now() >= at);
    let done = AtomicBool::new(false);
    std::thread::scope(|scope| {
        scope.spawn(|| {
            while !done.load(Ordering::Relaxed) {
                if Instant::now() >= at || external.is_some_and(|e| e.load(Ordering::Relaxed)) {
                    raised.store(true, Ordering::Relaxed);
                    return;
                }
                std::thread::sleep(Duration::from_millis(20));
            }
        });
        let out = f(Some(&raised));
        done.store(true, Ordering::Relaxed);
        out
    })
}

/// Minimum weight over all 2^k - 1 nonzero messages, in Gray-code order.
pub fn brute_force_distance<W: Word>(g: &BitMatrix<W>, max_k: usize) -> Result<usize> {
    let (k, n) = (g.num_rows(), g.num_cols());
    if k == 0 || k > n {
        return Err(Error::InvalidDimensions { k, n });
    }
    if k > max_k || k >= 64 {
        return Err(Error::TooLarge { k, max_k });
    }
    let mut acc = vec![W::ZERO; g.words_per_row()];
    let mut best = usize::MAX;
    for i in 1u64..(1u64 << k) {
        // consecutive Gray codes differ in bit trailing_zeros(i)
        row_xor_accumulate(&mut acc, g.row(i.trailing_zeros() as usize));
        let w = row_weight(&acc);
        if w < best {
            best = w;
        }
    }
    Ok(best)
}

/// Default limit for [`brute_force_distance`].
pub const BRUTE_FORCE_MAX_K: usize = 28;

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming74() -> BitMatrix {
        BitMatrix::from_strs(&["1000110", "0100011", "0010111", "0001101"])
    }

    #[test]
    fn initial_bounds_examples() {
        assert_eq!(
            initial_bounds(150, 50).unwrap(),
            Bounds {
                lower: 1,
                upper: 101
            }
        );
        assert_eq!(initial_bounds(7, 4).unwrap(), Bounds { lower: 1, upper: 4 });
        assert_eq!(initial_bounds(5, 5).unwrap(), Bounds { lower: 1, upper: 1 });
        assert!(initial_bounds(4, 5).is_err());
        assert!(initial_bounds(4, 0).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_update(1, 3, 50, 10), 4);
        assert_eq!(lower_bound_update(2, 1, 50, 50), 3);
        assert_eq!(lower_bound_update(5, 2, 50, 0), 6);
    }

    #[test]
    fn square_code_needs_no_enumeration() {
        let r = minimum_distance(&BitMatrix::<u32>::identity(5), &EngineConfig::default()).unwrap();
        assert_eq!(r.distance, 1);
        assert!(r.is_exact());
        assert_eq!(r.g_reached, 0);
        assert!(r.bounds_trace.is_empty());
    }

    #[test]
    fn small_known_codes() {
        for strategy in Strategy::ALL {
            let cfg = EngineConfig::with_strategy(strategy);
            let rep = BitMatrix::<u32>::from_strs(&["11111"]);
            assert_eq!(minimum_distance(&rep, &cfg).unwrap().distance, 5);
            let r = minimum_distance(&hamming74(), &cfg).unwrap();
            assert_eq!(r.distance, 3);
            assert_eq!(r.gamma_summary.m, 2);
            assert_eq!(r.gamma_summary.k_m, 3);
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_distance(&BitMatrix::<u32>::identity(6), 28).unwrap(),
            1
        );
        let g = BitMatrix::<u32>::from_strs(&["101", "011"]);
        assert_eq!(brute_force_distance(&g, 28).unwrap(), 2);
        assert_eq!(brute_force_distance(&hamming74(), 28).unwrap(), 3);
        assert!(matches!(
            brute_force_distance(&hamming74(), 3),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn rank_deficient_generator() {
        let g = BitMatrix::<u32>::from_strs(&["1100", "1100"]);
        assert!(matches!(
            minimum_distance(&g, &EngineConfig::default()),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn max_g_cap_reports_upper_bound() {
        let g = crate::random::random_systematic::<u32>(20, 60, 3).unwrap();
        let cfg = EngineConfig {
            max_g: 1,
            ..EngineConfig::default()
        };
        let r = minimum_distance(&g, &cfg).unwrap();
        assert_eq!(r.outcome, Outcome::UpperBoundOnly);
        assert_eq!(r.g_reached, 1);
        assert!(r.to_text().contains("status=upper_bound\n"));
        assert!(!r.to_text().contains("distance="));

        // resuming with the cap lifted finishes the job
        let resumed = minimum_distance(
            &g,
            &EngineConfig {
                resume: Some(r.checkpoint()),
                ..EngineConfig::default()
            },
        )
        .unwrap();
        let full = minimum_distance(&g, &EngineConfig::default()).unwrap();
        assert!(resumed.is_exact());
        assert_eq!(resumed.distance, full.distance);
        assert_eq!(resumed.bounds_trace, full.bounds_trace);
        assert!(resumed.counters.combinations < full.counters.combinations);
    }

    #[test]
    fn interruption_yields_checkpoint() {
        let g = crate::random::random_systematic::<u32>(24, 70, 9).unwrap();
        let stop = AtomicBool::new(true);
        match minimum_distance_with_stop(&g, &EngineConfig::default(), Some(&stop)) {
            Err(Error::Interrupted(cp)) => {
                assert_eq!(cp.next_g, 1);
                assert!(cp.bounds_trace.is_empty());
                let parsed: Checkpoint = cp.to_text().parse().unwrap();
                assert_eq!(parsed, *cp);
            }
            other => panic!("{other:?}"),
        }
        let cfg = EngineConfig {
            time_limit: Some(Duration::ZERO),
            ..EngineConfig::default()
        };
        assert!(matches!(
            minimum_distance(&g, &cfg),
            Err(Error::Interrupted(_))
        ));
    }

    #[test]
    fn report_text_round_trips_to_checkpoint() {
        let r = minimum_distance(&hamming74(), &EngineConfig::default()).unwrap();
        let text = r.to_text();
        assert!(text.contains("distance=3\n"));
        assert!(text.contains("g=1 L=3 U=3\n"));
        let cp: Checkpoint = text.parse().unwrap();
        assert_eq!(cp, r.checkpoint());
    }
}
