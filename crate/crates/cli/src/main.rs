//! `symgap` — exact spectra of conjugation-invariant weightings on Cayley
//! graphs of the symmetric group, plus a numeric Schreier laboratory.
//!
//! Every sub-command prints one self-describing record per result line
//! (`--json` for machine form) and exits 0 iff no violations or mismatches
//! were found. Long scans report progress on stderr only.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use symgap_core::characters::CharCache;

use crate::output::Emitter;

#[derive(Parser)]
#[command(name = "symgap", version, about = "Exact spectral gaps of normal Cayley graphs on S_n")]
struct Cli {
    /// Emit JSON-lines records instead of text lines.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for scans (default: all cores). Output order does
    /// not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Character cache file (created if absent, version-checked if
    /// present). Also read from SYMGAP_CACHE.
    #[arg(long, global = true, env = "SYMGAP_CACHE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Which irreps attain the maximal normalized character at a class.
    Rule {
        n: u32,
        /// Cycle type, e.g. "5^3 1^1".
        class: String,
    },
    /// Verify per degree that the eight distinguished families attain the
    /// global maximum at every class; report violating classes.
    Scan {
        n_from: u32,
        n_to: u32,
        /// Only survey the eight-family maxima (no exhaustive verification).
        #[arg(long)]
        eight_only: bool,
        /// Skip irreps the dimension-based character bound rules out
        /// (heuristic; default is the exhaustive exact scan).
        #[arg(long)]
        prune: bool,
        /// ε for the pruning bound.
        #[arg(long, default_value_t = 0.1)]
        prune_eps: f64,
    },
    /// Exact dimension floor audit: dim^q ≥ n^p over all irreps with at
    /// least OUTSIDE cells outside both the first row and column.
    AuditDims {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        outside: u32,
        /// Exponent as an exact rational, e.g. 41/20.
        #[arg(long)]
        exp: String,
    },
    /// Cross-check the closed-form family characters against the
    /// border-strip recursion on all classes up to N_MAX.
    FamilyCheck {
        #[arg(long, default_value_t = 14)]
        n_max: u32,
    },
    /// Check the built-in ruling prediction tables at one degree.
    TablesCheck {
        #[arg(long)]
        n: u32,
        /// Only classes with at most this many fixed points.
        #[arg(long, default_value_t = 1)]
        c1_max: u32,
    },
    /// Verify the std-gap bound: pointwise over the whole character table,
    /// plus optionally on random normal elements.
    GapCheck {
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        /// Number of random normal elements per degree.
        #[arg(long, default_value_t = 0)]
        random: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Verify the eight-family floor 3/(n(n−2)(n−4)) at every class.
    FloorCheck {
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
    },
    /// Build a normal element annihilating all irreps of depth ≤ k,
    /// verify the zeros, and list the deeper irreps it leaves positive.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Degree of the reference distribution (default 2k).
        #[arg(long)]
        m: Option<u32>,
    },
    /// Dense Schreier-spectrum report for a named generating set:
    /// block attribution, gaps, Rayleigh witness, diameter diagnostic.
    Schreier {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "cycle-transposition")]
        example: String,
        /// Multiset matching tolerance.
        #[arg(long, default_value_t = 1e-8)]
        match_tol: f64,
        /// Write action matrices (coordinate text) and spectra (CSV) here.
        #[arg(long)]
        export_dir: Option<PathBuf>,
    },
    /// Brute-force Cayley spectrum vs character-predicted multiset (n ≤ 6).
    Oracle {
        #[arg(long)]
        n: u32,
        /// Cycle type of a single-class indicator element.
        #[arg(long)]
        class: Option<String>,
        /// Number of random normal elements to check.
        #[arg(long, default_value_t = 0)]
        random: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // ignore the error if a pool already exists (e.g. under tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let emitter = Emitter::new(cli.json);

    let cache = match load_cache(&cli.cache) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let outcome = run(&cli.command, &emitter, &cache);

    if let (Some(path), Some(cache)) = (&cli.cache, &cache) {
        if let Err(e) = cache.save(path) {
            eprintln!("error: failed to save cache: {e}");
            return ExitCode::from(2);
        }
    }

    match outcome {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_cache(path: &Option<PathBuf>) -> anyhow::Result<Option<Arc<CharCache>>> {
    match path {
        None => Ok(None),
        Some(p) if p.exists() => Ok(Some(Arc::new(CharCache::load(p)?))),
        Some(_) => Ok(Some(Arc::new(CharCache::new()))),
    }
}

fn run(
    command: &Command,
    emitter: &Emitter,
    cache: &Option<Arc<CharCache>>,
) -> anyhow::Result<usize> {
    match command {
        Command::Rule { n, class } => commands::cmd_rule(emitter, cache, *n, class),
        Command::Scan { n_from, n_to, eight_only, prune, prune_eps } => commands::cmd_scan(
            emitter,
            cache,
            *n_from,
            *n_to,
            *eight_only,
            *prune,
            *prune_eps,
        ),
        Command::AuditDims { n, outside, exp } => {
            commands::cmd_audit_dims(emitter, *n, *outside, exp)
        }
        Command::FamilyCheck { n_max } => commands::cmd_family_check(emitter, *n_max),
        Command::TablesCheck { n, c1_max } => commands::cmd_tables_check(emitter, *n, *c1_max),
        Command::GapCheck { n_from, n_to, random, seed } => {
            commands::cmd_gap_check(emitter, cache, *n_from, *n_to, *random, *seed)
        }
        Command::FloorCheck { n_from, n_to } => {
            commands::cmd_floor_check(emitter, *n_from, *n_to)
        }
        Command::Construct { n, k, m } => commands::cmd_construct(emitter, *n, *k, *m),
        Command::Schreier { n, example, match_tol, export_dir } => {
            commands::cmd_schreier(emitter, *n, example, *match_tol, export_dir.as_deref())
        }
        Command::Oracle { n, class, random, seed, tol } => {
            commands::cmd_oracle(emitter, *n, class.as_deref(), *random, *seed, *tol)
        }
    }
}
