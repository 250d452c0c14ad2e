mod args;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Duration;

use clap::Parser;
use mindist_core::constructions::{catalog_entry, Script, Source, CATALOG};
use mindist_core::gf2::text::{format_matrix, parse_matrix};
use mindist_core::random::random_systematic;
use mindist_core::{
    brute_force_distance, minimum_distance_with_stop, BitMatrix, Checkpoint, EngineConfig, Error,
    Strategy, Word,
};

use args::{
    BenchArgs, BruteArgs, Cli, Command, ConstructArgs, EngineArgs, MindistArgs, RandomArgs,
};

static STOP: AtomicBool = AtomicBool::new(false);

mod exit {
    pub const UPPER_BOUND_ONLY: u8 = 6;
    pub const INTERRUPTED: u8 = 7;
}

/// Exit status for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 3,
        Error::RankDeficient { .. } => 4,
        Error::BudgetExceeded { .. } => 5,
        Error::Interrupted(_) => exit::INTERRUPTED,
        Error::Io(_) => 8,
        Error::Script { .. }
        | Error::NotADivisor { .. }
        | Error::NotAUnit { .. }
        | Error::LengthMismatch { .. } => 9,
        Error::TooLarge { .. } => 11,
        _ => 10,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn fail<T>(code: u8, message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        code,
        message: message.into(),
    })
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| {
            Failure::from(Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", path.display()),
            )))
        })?;
    }
    Ok(text)
}

/// Writes `text` to `path` through a temporary file in the same directory,
/// or to stdout.
fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| Failure::from(e.error))?;
        }
    }
    Ok(())
}

fn workers(threads: Option<usize>) -> usize {
    threads
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn engine_config(a: &EngineArgs) -> EngineConfig {
    EngineConfig {
        strategy: a.algorithm,
        saved_levels: a.saved_levels as usize,
        unroll: a.unroll as usize,
        workers: workers(a.threads),
        memory_budget: a.budget_mb.saturating_mul(1 << 20),
        max_g: a.max_g,
        ..EngineConfig::default()
    }
}

fn cmd_mindist(a: &MindistArgs, quiet: bool) -> Result<u8, Failure> {
    let text = read_input(&a.input)?;
    let mut cfg = engine_config(&a.engine);
    cfg.time_limit = a.time_limit.map(Duration::from_secs_f64);
    if let Some(path) = &a.resume {
        let cp: Checkpoint = read_input(path)?.parse()?;
        if !quiet {
            eprintln!(
                "resuming at g={} with L={} U={}",
                cp.next_g, cp.lower, cp.upper
            );
        }
        cfg.resume = Some(cp);
    }
    let result = match a.engine.word_bits {
        64 => distance::<u64>(&text, &cfg),
        _ => distance::<u32>(&text, &cfg),
    };
    match result {
        Ok(report) => {
            write_output(a.output.as_deref(), &report.to_text())?;
            if report.is_exact() {
                Ok(0)
            } else {
                if !quiet {
                    eprintln!(
                        "max g = {} reached: {} <= d <= {}",
                        a.engine.max_g, report.lower, report.distance
                    );
                }
                Ok(exit::UPPER_BOUND_ONLY)
            }
        }
        Err(Error::Interrupted(cp)) => {
            write_output(a.output.as_deref(), &cp.to_text())?;
            if !quiet {
                eprintln!(
                    "interrupted before g={} ({} <= d <= {}); resume with --resume",
                    cp.next_g, cp.lower, cp.upper
                );
            }
            Ok(exit::INTERRUPTED)
        }
        Err(e) => Err(e.into()),
    }
}

fn distance<W: Word>(
    text: &str,
    cfg: &EngineConfig,
) -> mindist_core::Result<mindist_core::DistanceReport> {
    let g: BitMatrix<W> = parse_matrix(text)?;
    minimum_distance_with_stop(&g, cfg, Some(&STOP))
}

fn cmd_brute(a: &BruteArgs) -> Result<u8, Failure> {
    let g: BitMatrix<u64> = parse_matrix(&read_input(&a.input)?)?;
    let d = brute_force_distance(&g, a.max_k)?;
    let text = format!("n={}\nk={}\ndistance={d}\n", g.num_cols(), g.num_rows());
    write_output(a.output.as_deref(), &text)?;
    Ok(0)
}

fn cmd_random(a: &RandomArgs) -> Result<u8, Failure> {
    let g = random_systematic::<u64>(a.k, a.n, a.seed)?;
    write_output(a.output.as_deref(), &format_matrix(&g))?;
    Ok(0)
}

fn cmd_construct(a: &ConstructArgs, quiet: bool) -> Result<u8, Failure> {
    let (text, base_dir) = match (&a.script, &a.catalog) {
        (Some(path), _) => (read_input(path)?, path.parent().map(Path::to_path_buf)),
        (None, Some(name)) => match catalog_entry(name) {
            Some(entry) => (entry.script.to_string(), None),
            None => {
                let names: Vec<&str> = CATALOG.iter().map(|e| e.name).collect();
                return fail(
                    2,
                    format!(
                        "unknown catalog entry {name:?} (one of {})",
                        names.join(", ")
                    ),
                );
            }
        },
        (None, None) => return fail(2, "need --script or --catalog"),
    };
    let script: Script = text.parse()?;
    let start_path: Option<PathBuf> = match (&script.source, &a.input) {
        (_, Some(path)) => Some(path.clone()),
        (Source::Input(rel), None) => {
            let rel = PathBuf::from(rel);
            Some(match &base_dir {
                Some(dir) if rel.is_relative() => dir.join(rel),
                _ => rel,
            })
        }
        _ => None,
    };
    let start: Option<BitMatrix<u64>> = match start_path {
        Some(p) => Some(parse_matrix(&read_input(&p)?)?),
        None => None,
    };
    let built = script.run(start)?;
    if !quiet {
        for w in &built.warnings {
            eprintln!("warning: {w}");
        }
        eprintln!("[{},{}]", built.matrix.num_cols(), built.matrix.num_rows());
    }
    write_output(a.output.as_deref(), &format_matrix(&built.matrix))?;
    Ok(0)
}

fn cmd_bench(a: &BenchArgs, quiet: bool) -> Result<u8, Failure> {
    let g = random_systematic::<u32>(a.k, a.n, a.seed)?;
    let strategies = if a.algorithm.is_empty() {
        Strategy::ALL.to_vec()
    } else {
        a.algorithm.clone()
    };
    let mut out = String::new();
    for strategy in strategies {
        let cfg = EngineConfig {
            strategy,
            saved_levels: a.saved_levels as usize,
            unroll: a.unroll as usize,
            workers: workers(a.threads),
            memory_budget: a.budget_mb.saturating_mul(1 << 20),
            max_g: a.max_g,
            ..EngineConfig::default()
        };
        let r = match minimum_distance_with_stop(&g, &cfg, Some(&STOP)) {
            Ok(r) => r,
            Err(Error::Interrupted(_)) => return Ok(exit::INTERRUPTED),
            Err(e) => return Err(e.into()),
        };
        let line = format!(
            "algorithm={} k={} n={} seed={} g_reached={} upper_bound={} combinations={} row_additions={} row_accesses={} store_additions={} elapsed_s={:.6} combos_per_sec={:.0}\n",
            strategy,
            a.k,
            a.n,
            a.seed,
            r.g_reached,
            r.distance,
            r.counters.combinations,
            r.counters.row_additions,
            r.counters.row_accesses,
            r.store_additions,
            r.elapsed.as_secs_f64(),
            r.combinations_per_sec()
        );
        if !quiet && a.output.is_some() {
            eprint!("{line}");
        }
        out.push_str(&line);
    }
    write_output(a.output.as_deref(), &out)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = ctrlc::set_handler(|| STOP.store(true, Ordering::Relaxed));
    let result = match &cli.command {
        Command::Mindist(a) => cmd_mindist(a, cli.quiet),
        Command::Brute(a) => cmd_brute(a),
        Command::Random(a) => cmd_random(a),
        Command::Construct(a) => cmd_construct(a, cli.quiet),
        Command::Bench(a) => cmd_bench(a, cli.quiet),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
