//! `fibkit` command line: evaluate sequences, check single identities, sweep
//! the catalog over parameter grids, list the catalog, and benchmark the fast
//! path against plain iteration.
//!
//! Exit codes: 0 success (and `check`/`sweep` found no failure), 1 a checked
//! identity failed or a sweep recorded failures, 2 usage or validation error,
//! 3 a checked reciprocal point was singular.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fibkit::catalog::{catalog, CheckOutcome, IdentityDescriptor, ParamName, ParamPoint};
use fibkit::harness::{GridSpec, Oracle, Selection, SequenceKind, Sweeper};
use fibkit::sequences::{decimal_digits, fib, gen, lucas, Direct, SeedPair};

#[derive(Parser)]
#[command(
    name = "fibkit",
    version,
    about = "Exact Fibonacci/Lucas/seeded-sequence toolkit and identity verifier"
)]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqCommandKind {
    Fib,
    Lucas,
    Gen,
}

#[derive(Subcommand)]
enum Command {
    /// Print F(n), L(n), or G(n) for a seed, exactly.
    Seq {
        kind: SeqCommandKind,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        /// Seed pair "g0,g1" (required for `gen`, rejected otherwise).
        #[arg(long)]
        seed: Option<String>,
    },
    /// Evaluate one identity at one parameter point and report both sides.
    Check {
        /// Identity key, as shown by `fibkit list`.
        identity: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Seed pair "g0,g1".
        #[arg(long)]
        seed: Option<String>,
        /// Check the known-failing printed form of an erratum identity.
        #[arg(long)]
        printed: bool,
    },
    /// Sweep identities over a parameter grid and emit a JSON report.
    Sweep {
        /// Inclusive range "lo..hi" (or a single value) for a.
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        m: String,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        n: String,
        /// Inclusive nonnegative range for k.
        #[arg(long, default_value = "0..6", allow_hyphen_values = true)]
        k: String,
        /// Semicolon-separated seed pairs.
        #[arg(long, default_value = "0,1;2,1;3,7;-4,5;1,0")]
        seeds: String,
        /// "all" (every non-printed identity) or a comma-separated id list.
        #[arg(long, default_value = "all")]
        identities: String,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: one per CPU).
        #[arg(long)]
        jobs: Option<usize>,
        /// Oracle re-check rate in basis points of sequence accesses.
        #[arg(long, default_value_t = 100)]
        oracle_rate_bp: u64,
    },
    /// List the identity catalog.
    List {
        /// Filter by family (core, variant, special, binomial_sum,
        /// telescoping_sum, reciprocal_sum).
        #[arg(long)]
        family: Option<String>,
    },
    /// Time fast-path F(n) against term-by-term iteration.
    Bench {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Seq { kind, n, seed } => cmd_seq(cli.output, kind, n, seed),
        Command::Check { identity, a, b, m, n, k, seed, printed } => {
            cmd_check(cli.output, identity, [a, b, m, n], k, seed, printed)
        }
        Command::Sweep { a, b, m, n, k, seeds, identities, out, jobs, oracle_rate_bp } => {
            cmd_sweep(cli.output, [a, b, m, n], k, seeds, identities, out, jobs, oracle_rate_bp)
        }
        Command::List { family } => cmd_list(cli.output, family),
        Command::Bench { n, reps } => cmd_bench(cli.output, n, reps),
    }
}

fn parse_seed(s: &str) -> Result<SeedPair> {
    s.parse::<SeedPair>().map_err(|e| anyhow!("{e}"))
}

#[derive(Serialize)]
struct SeqResult<'a> {
    kind: &'a str,
    n: i64,
    seed: Option<SeedFields>,
    value: String,
}

#[derive(Serialize)]
struct SeedFields {
    g0: String,
    g1: String,
}

impl SeedFields {
    fn of(seed: &SeedPair) -> Self {
        Self { g0: seed.g0().to_string(), g1: seed.g1().to_string() }
    }
}

fn cmd_seq(output: Output, kind: SeqCommandKind, n: i64, seed: Option<String>) -> Result<u8> {
    let (label, seed, value) = match kind {
        SeqCommandKind::Fib | SeqCommandKind::Lucas => {
            if seed.is_some() {
                bail!("--seed applies only to `gen`");
            }
            match kind {
                SeqCommandKind::Fib => ("fib", None, fib(n)),
                SeqCommandKind::Lucas => ("lucas", None, lucas(n)),
                SeqCommandKind::Gen => unreachable!(),
            }
        }
        SeqCommandKind::Gen => {
            let seed = parse_seed(&seed.context("`gen` requires --seed g0,g1")?)?;
            let value = gen(&seed, n);
            ("gen", Some(seed), value)
        }
    };
    match output {
        Output::Text => println!("{value}"),
        Output::Json => {
            let result = SeqResult {
                kind: label,
                n,
                seed: seed.as_ref().map(SeedFields::of),
                value: value.to_string(),
            };
            println!("{}", serde_json::to_string_pretty(&result)?);
        }
    }
    Ok(0)
}

fn cmd_check(
    output: Output,
    identity: String,
    abmn: [Option<i64>; 4],
    k: Option<i64>,
    seed: Option<String>,
    printed: bool,
) -> Result<u8> {
    let cat = catalog();
    let base = cat
        .get(&identity)
        .ok_or_else(|| anyhow!("unknown identity `{identity}` (see `fibkit list`)"))?;
    let row = if printed {
        let printed_id = format!("{identity}_printed");
        cat.get(&printed_id)
            .ok_or_else(|| anyhow!("identity `{identity}` has no printed variant"))?
    } else {
        base
    };
    let desc = row.descriptor();

    let [a, b, m, n] = abmn;
    let mut missing = Vec::new();
    for (param, given) in [
        (ParamName::A, a.is_some()),
        (ParamName::B, b.is_some()),
        (ParamName::M, m.is_some()),
        (ParamName::N, n.is_some()),
        (ParamName::K, k.is_some()),
    ] {
        if desc.uses(param) && !given {
            missing.push(format!("--{}", param.as_str()));
        }
    }
    if desc.needs_seed() && seed.is_none() {
        missing.push("--seed".to_owned());
    }
    if !missing.is_empty() {
        bail!("identity `{}` requires {}", desc.id, missing.join(", "));
    }

    let k = match k {
        None => 0u32,
        Some(v) => u32::try_from(v).map_err(|_| anyhow!("--k must be a nonnegative integer"))?,
    };
    let seed = match seed {
        Some(s) => parse_seed(&s)?,
        None => SeedPair::fibonacci(),
    };
    let point = ParamPoint {
        a: a.unwrap_or(0),
        b: b.unwrap_or(0),
        m: m.unwrap_or(0),
        n: n.unwrap_or(0),
        k,
        seed,
    };
    let outcome = row.eval(&Direct, &point);
    match output {
        Output::Text => print_outcome_text(&outcome),
        Output::Json => println!("{}", serde_json::to_string_pretty(&outcome)?),
    }
    Ok(match (&outcome.singular, outcome.holds()) {
        (Some(_), _) => 3,
        (None, true) => 0,
        (None, false) => 1,
    })
}

fn print_outcome_text(outcome: &CheckOutcome) {
    println!("identity: {}", outcome.identity);
    println!("point: {}", outcome.point);
    match &outcome.singular {
        Some(s) => {
            println!("singular: term j={} has a zero denominator at index {}", s.j, s.index);
        }
        None => {
            let fmt = |v: &Option<fibkit::catalog::Value>| {
                v.as_ref().map(|v| v.to_string()).unwrap_or_default()
            };
            println!("lhs: {}", fmt(&outcome.lhs));
            println!("rhs: {}", fmt(&outcome.rhs));
            println!("holds: {}", outcome.holds());
        }
    }
}

fn parse_range(name: &str, s: &str) -> Result<(i64, i64)> {
    let parse_one = |v: &str| {
        v.trim()
            .parse::<i64>()
            .map_err(|_| anyhow!("--{name}: `{v}` is not an integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_one(lo)?, parse_one(hi)?),
        None => {
            let v = parse_one(s)?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("--{name}: range {lo}..{hi} is empty");
    }
    Ok((lo, hi))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    output: Output,
    abmn: [String; 4],
    k: String,
    seeds: String,
    identities: String,
    out: Option<PathBuf>,
    jobs: Option<usize>,
    oracle_rate_bp: u64,
) -> Result<u8> {
    let [a, b, m, n] = abmn;
    let k_range = parse_range("k", &k)?;
    if k_range.0 < 0 {
        bail!("--k: lower bound {} is below 0", k_range.0);
    }
    let k_range = (
        u32::try_from(k_range.0).map_err(|_| anyhow!("--k out of range"))?,
        u32::try_from(k_range.1).map_err(|_| anyhow!("--k out of range"))?,
    );
    let seeds = seeds
        .split(';')
        .map(parse_seed)
        .collect::<Result<Vec<_>>>()?;
    let selection = if identities.trim() == "all" {
        Selection::All
    } else {
        Selection::Ids(identities.split(',').map(|s| s.trim().to_owned()).collect())
    };
    let spec = GridSpec {
        a_range: parse_range("a", &a)?,
        b_range: parse_range("b", &b)?,
        m_range: parse_range("m", &m)?,
        n_range: parse_range("n", &n)?,
        k_range,
        seeds,
        identities: selection,
    };
    let sweeper = Sweeper::new(spec)
        .map_err(|e| anyhow!("{e}"))?
        .oracle_rate_bp(oracle_rate_bp);
    let report = match jobs {
        Some(jobs) if jobs > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .context("building worker pool")?
            .install(|| sweeper.run()),
        Some(_) => bail!("--jobs must be at least 1"),
        None => sweeper.run(),
    };

    let json = report.to_json();
    if let Some(path) = &out {
        std::fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match output {
        Output::Text => {
            println!(
                "points: {} (passed {}, failed {}, singular skips {})",
                report.total_points,
                report.passed,
                report.failed.len(),
                report.skipped_singular
            );
            println!("wall time: {:.2}s", report.wall_time);
            if let Some(path) = &out {
                println!("report: {}", path.display());
            }
            if let Some(first) = report.failed.first() {
                println!("first failure: {} at {}", first.identity, first.point);
            }
        }
        Output::Json => println!("{json}"),
    }
    Ok(if report.clean() { 0 } else { 1 })
}

#[derive(Serialize)]
struct ListRow<'a> {
    id: &'a str,
    family: &'a str,
    params: Vec<&'a str>,
    constraints: &'a str,
    needs_seed: bool,
    erratum: Option<&'a str>,
    printed_form: bool,
    formula: &'a str,
}

impl<'a> ListRow<'a> {
    fn of(d: &'a IdentityDescriptor) -> Self {
        Self {
            id: &d.id,
            family: d.family.as_str(),
            params: d.params.iter().map(|p| p.as_str()).collect(),
            constraints: &d.constraints,
            needs_seed: d.needs_seed(),
            erratum: d.erratum.as_deref(),
            printed_form: d.printed_form,
            formula: &d.formula,
        }
    }
}

fn cmd_list(output: Output, family: Option<String>) -> Result<u8> {
    let rows: Vec<&IdentityDescriptor> = catalog()
        .descriptors()
        .into_iter()
        .filter(|d| family.as_deref().is_none_or(|f| d.family.as_str() == f))
        .collect();
    if rows.is_empty() {
        bail!(
            "no identities in family `{}`",
            family.as_deref().unwrap_or("?")
        );
    }
    match output {
        Output::Text => {
            for d in rows {
                let params: Vec<&str> = d.params.iter().map(|p| p.as_str()).collect();
                let mut flags = String::new();
                if d.needs_seed() {
                    flags.push_str(" seed");
                }
                if d.printed_form {
                    flags.push_str(" printed-form");
                } else if d.erratum.is_some() {
                    flags.push_str(" corrected");
                }
                println!(
                    "{:<24} {:<16} params: {}{}",
                    d.id,
                    d.family.as_str(),
                    params.join(","),
                    flags
                );
            }
        }
        Output::Json => {
            let rows: Vec<ListRow> = rows.into_iter().map(ListRow::of).collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BenchReport {
    n: i64,
    reps: u32,
    digits: usize,
    fast: BenchSeries,
    oracle: BenchSeries,
}

#[derive(Serialize)]
struct BenchSeries {
    index: i64,
    seconds: Vec<f64>,
    capped: bool,
}

fn cmd_bench(output: Output, n: i64, reps: u32) -> Result<u8> {
    if n < 0 {
        bail!("bench index must be nonnegative, got {n}");
    }
    if reps == 0 {
        bail!("--reps must be at least 1");
    }
    let value = fib(n);
    let digits = decimal_digits(&value);

    let time_reps = |f: &mut dyn FnMut()| -> Vec<f64> {
        (0..reps)
            .map(|_| {
                let start = Instant::now();
                f();
                start.elapsed().as_secs_f64()
            })
            .collect()
    };
    let fast_seconds = time_reps(&mut || {
        std::hint::black_box(fib(std::hint::black_box(n)));
    });

    let oracle = Oracle::from_env();
    let oracle_index = n.min(oracle.window().min(i64::MAX as u64) as i64);
    let capped = oracle_index < n;
    let oracle_seconds = time_reps(&mut || {
        std::hint::black_box(oracle.value(&SequenceKind::Fib, oracle_index).unwrap());
    });

    let report = BenchReport {
        n,
        reps,
        digits,
        fast: BenchSeries { index: n, seconds: fast_seconds, capped: false },
        oracle: BenchSeries { index: oracle_index, seconds: oracle_seconds, capped },
    };
    match output {
        Output::Text => {
            println!("F({n}): {digits} digits");
            let line = |label: &str, s: &BenchSeries| {
                let best = s.seconds.iter().cloned().fold(f64::INFINITY, f64::min);
                let mean = s.seconds.iter().sum::<f64>() / s.seconds.len() as f64;
                println!(
                    "{:<16} index {:<10} best {:.6}s  mean {:.6}s{}",
                    label,
                    s.index,
                    best,
                    mean,
                    if s.capped { "  (capped at oracle window)" } else { "" }
                );
            };
            line("fast doubling", &report.fast);
            line("iteration", &report.oracle);
        }
        Output::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(0)
}
