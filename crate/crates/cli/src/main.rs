//! `hitcalc`: command-line surface of the hit-problem engine.
//!
//! Exit codes: 0 success, 1 verification failure or internal error, 2 bad
//! flags or unparsable input, 3 memory-ceiling refusal.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hitcalc_core::arith;
use hitcalc_core::engine::{Engine, EngineConfig, Strategy, HEAVY_BYTES};
use hitcalc_core::error::Error;
use hitcalc_core::glt;
use hitcalc_core::monomial::{parse_weight_vector, WeightVector};
use hitcalc_core::report::{BasisReport, Part};
use hitcalc_core::steenrod::parse_polynomial;
use hitcalc_core::suite;
use hitcalc_core::summaps;

#[derive(Parser)]
#[command(
    name = "hitcalc",
    version,
    about = "Admissible monomial bases of F2[x1..xt] over the mod-2 Steenrod algebra"
)]
struct Cli {
    #[command(flatten)]
    run: RunOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct RunOpts {
    /// Report cache directory (default: ~/.cache/hitcalc).
    #[arg(long, env = "HITCALC_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads (0 = all cores).
    #[arg(long, env = "HITCALC_THREADS", global = true, default_value_t = 0)]
    threads: usize,

    /// Memory ceiling for projected echelon storage, in bytes.
    #[arg(long, env = "HITCALC_MEM_LIMIT", global = true)]
    mem_limit: Option<u64>,

    /// Elimination strategy.
    #[arg(long, value_enum, global = true, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,

    /// Output format for basis listings.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Skip the on-disk report cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Monolithic,
    Stratified,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Monolithic => Strategy::Monolithic,
            StrategyArg::Stratified => Strategy::Stratified,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Arithmetic helpers (debugging surface).
    Arith {
        #[command(subcommand)]
        op: ArithOp,
    },
    /// Admissible-basis computation.
    Basis {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
        /// Restrict to one weight block, e.g. 4,3,2,1,1.
        #[arg(long)]
        weight: Option<String>,
        /// all, zero, or positive.
        #[arg(long, default_value = "all")]
        part: String,
        /// Print only the dimension.
        #[arg(long)]
        dim_only: bool,
        /// Confirm a heavy monolithic elimination.
        #[arg(long)]
        confirm_heavy: bool,
    },
    /// Canonical form of a polynomial modulo the hit subspace.
    Reduce {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
        /// Input file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Verification commands.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum ArithOp {
    /// Number of ones in the dyadic expansion.
    Alpha { n: u64 },
    /// The mu function.
    Mu { n: u64 },
    /// Binomial parity C(a, i) mod 2.
    Binom { a: u64, i: u64 },
    /// The set U(t, n).
    Uset {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        n: u64,
    },
    /// Generic degree r(2^s - 1) + m 2^s.
    Degree { r: u64, s: u32, m: u64 },
    /// Inductive dimension prediction (2^t - 1) * dim.
    Predict {
        #[arg(value_parser = clap::value_parser!(u32).range(2..=63))]
        t: u32,
        dim: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Kameko map between degrees 2n + t and n.
    Kameko {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
    },
    /// First lifting conjecture at (t, n).
    #[command(name = "gtS", alias = "gts")]
    GtS {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
    },
    /// Second lifting conjecture, per weight block.
    #[command(name = "gtP", alias = "gtp")]
    GtP {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
        /// Restrict to one weight vector; all occurring blocks otherwise.
        #[arg(long)]
        weight: Option<String>,
        /// rho>=1 or rho>=0 (default: report both variants).
        #[arg(long)]
        variant: Option<String>,
    },
    /// E/F/C partition of the positive minimal-spike block.
    Efc {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
    },
    /// GL_t-invariant subspace dimension.
    Invariants {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
        /// Expected dimension (defaults to 0 for t=5, n=42).
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Weight-block decomposition bookkeeping.
    Blocks {
        #[arg(short = 't', value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(short = 'n')]
        n: u64,
    },
    /// The full paper verification table.
    #[command(name = "paper-suite")]
    PaperSuite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::MemoryCeiling { .. } => ExitCode::from(3),
                Error::Parse(_)
                | Error::Precondition(_)
                | Error::DegreeMismatch(_, _)
                | Error::ArityMismatch(_, _)
                | Error::IndexOutOfRange(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn default_cache_dir() -> PathBuf {
    std::env::var_os("HOME")
        .map(|h| PathBuf::from(h).join(".cache").join("hitcalc"))
        .unwrap_or_else(|| PathBuf::from(".hitcalc-cache"))
}

fn build_engine(opts: &RunOpts) -> hitcalc_core::error::Result<Engine> {
    Engine::new(engine_config(opts))
}

fn engine_config(opts: &RunOpts) -> EngineConfig {
    let cache_dir = if opts.no_cache {
        None
    } else {
        Some(opts.cache_dir.clone().unwrap_or_else(default_cache_dir))
    };
    EngineConfig {
        strategy: opts.strategy.into(),
        mem_limit: opts
            .mem_limit
            .unwrap_or(hitcalc_core::engine::DEFAULT_MEM_LIMIT),
        threads: opts.threads,
        cache_dir,
        ..EngineConfig::default()
    }
}

fn dispatch(cli: &Cli) -> hitcalc_core::error::Result<ExitCode> {
    match &cli.cmd {
        Cmd::Arith { op } => {
            run_arith(op);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Basis {
            t,
            n,
            weight,
            part,
            dim_only,
            confirm_heavy,
        } => cmd_basis(cli, *t, *n, weight.as_deref(), part, *dim_only, *confirm_heavy),
        Cmd::Reduce { t, n, input } => cmd_reduce(cli, *t, *n, input.as_deref()),
        Cmd::Verify { what } => cmd_verify(cli, what),
    }
}

fn run_arith(op: &ArithOp) {
    match *op {
        ArithOp::Alpha { n } => println!("{}", arith::alpha(n)),
        ArithOp::Mu { n } => println!("{}", arith::mu(n)),
        ArithOp::Binom { a, i } => println!("{}", u8::from(arith::binom_parity(a, i))),
        ArithOp::Uset { t, n } => {
            let set: Vec<String> = arith::u_set(t, n).iter().map(u32::to_string).collect();
            println!("{{{}}}", set.join(", "));
        }
        ArithOp::Degree { r, s, m } => println!("{}", arith::generic_degree(r, s, m)),
        ArithOp::Predict { t, dim } => println!("{}", arith::predict_dim_inductive(t, dim)),
    }
}

fn guard_heavy(
    engine: &Engine,
    t: u32,
    n: u64,
    confirm_heavy: bool,
) -> hitcalc_core::error::Result<()> {
    if engine.resolve_strategy(t, n) == Strategy::Monolithic
        && Engine::projected_monolithic_bytes(t, n) > HEAVY_BYTES
        && !confirm_heavy
    {
        return Err(Error::Precondition(format!(
            "monolithic elimination for t={t}, n={n} projects to {} MiB; \
             pass --confirm-heavy to proceed or use --strategy stratified",
            Engine::projected_monolithic_bytes(t, n) >> 20
        )));
    }
    Ok(())
}

fn cmd_basis(
    cli: &Cli,
    t: u32,
    n: u64,
    weight: Option<&str>,
    part: &str,
    dim_only: bool,
    confirm_heavy: bool,
) -> hitcalc_core::error::Result<ExitCode> {
    let part = Part::parse(part)?;
    let engine = build_engine(&cli.run)?;
    guard_heavy(&engine, t, n, confirm_heavy)?;

    let report: BasisReport = match weight {
        Some(w) => {
            let omega = parse_weight_vector(w)?;
            let full = engine.weight_block_basis(t, n, &omega)?;
            match part {
                Part::All => (*full).clone(),
                other => full.restricted(other),
            }
        }
        None => {
            let full = engine.admissible_basis(t, n)?;
            match part {
                Part::All => (*full).clone(),
                other => {
                    let (zero, positive) = engine.split_parts(&full)?;
                    if other == Part::Zero {
                        zero
                    } else {
                        positive
                    }
                }
            }
        }
    };

    if dim_only {
        println!("{}", report.dim);
        return Ok(ExitCode::SUCCESS);
    }
    match cli.run.format {
        FormatArg::Text => {
            eprintln!(
                "dim = {} (t={t}, n={n}, scope={}, part={}, strategy={})",
                report.dim, report.scope, report.part, report.strategy
            );
            for m in &report.admissibles {
                println!("{m}");
            }
        }
        FormatArg::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
        FormatArg::Csv => {
            for m in &report.admissibles {
                let exps: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
                println!("{}", exps.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(
    cli: &Cli,
    t: u32,
    n: u64,
    input: Option<&std::path::Path>,
) -> hitcalc_core::error::Result<ExitCode> {
    let mut text = String::new();
    match input {
        Some(path) => {
            text = std::fs::read_to_string(path)?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    let f = parse_polynomial(&text, t, n)?;
    let engine = build_engine(&cli.run)?;
    let reduced = engine.reduce_polynomial(&f)?;
    if reduced.is_zero() {
        println!("HIT");
    } else {
        println!("{reduced}");
    }
    Ok(ExitCode::SUCCESS)
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_verify(cli: &Cli, what: &VerifyCmd) -> hitcalc_core::error::Result<ExitCode> {
    let engine = build_engine(&cli.run)?;
    let ok = match what {
        VerifyCmd::Kameko { t, n } => {
            let v = engine.kameko_check(*t, *n)?;
            let ok = !v.iso_expected || (v.dims_equal && v.bijective);
            println!(
                "dim(QP_{})_{} = {}  dim(QP_{})_{} = {}  mu({}) = {}  iso_expected = {}  bijective = {}  {}",
                v.t,
                v.n_upper,
                v.dim_upper,
                v.t,
                v.n_lower,
                v.dim_lower,
                v.n_upper,
                v.mu_upper,
                v.iso_expected,
                v.bijective,
                pass_fail(ok)
            );
            ok
        }
        VerifyCmd::GtS { t, n } => {
            let v = summaps::conjecture_gts_check(&engine, *t, *n)?;
            println!("{}", serde_json::to_string(&v).expect("serializable"));
            println!("{}", pass_fail(v.holds));
            v.holds
        }
        VerifyCmd::GtP {
            t,
            n,
            weight,
            variant,
        } => {
            let variants: Vec<bool> = match variant.as_deref() {
                None => vec![false, true],
                Some("rho>=1") => vec![false],
                Some("rho>=0") => vec![true],
                Some(other) => {
                    return Err(Error::Parse(format!(
                        "bad variant `{other}` (expected rho>=1 or rho>=0)"
                    )))
                }
            };
            let omegas: Vec<WeightVector> = match weight {
                Some(w) => vec![parse_weight_vector(w)?],
                None => engine
                    .instance(*t, *n)?
                    .blocks
                    .iter()
                    .map(|b| b.weight.clone())
                    .collect(),
            };
            let mut all_ok = true;
            for omega in &omegas {
                for &rho_zero in &variants {
                    let v = summaps::conjecture_gtp_check(&engine, *t, *n, omega, rho_zero)?;
                    // Only a met hypothesis with a failed equality
                    // contradicts the proposal.
                    let contradicted = v.hypothesis_met == Some(true) && !v.holds;
                    all_ok &= !contradicted;
                    println!("{}", serde_json::to_string(&v).expect("serializable"));
                }
            }
            println!("{}", pass_fail(all_ok));
            all_ok
        }
        VerifyCmd::Efc { t, n } => {
            let p = summaps::efc_partition(&engine, *t, *n)?;
            let total = p.e.len() + p.f.len() + p.c.len();
            let ok = p.violations.is_empty() && total as u64 == p.block_positive_dim;
            println!(
                "E={} F={} C={} total={} {}",
                p.e.len(),
                p.f.len(),
                p.c.len(),
                total,
                pass_fail(ok)
            );
            ok
        }
        VerifyCmd::Invariants { t, n, expect } => {
            let inv = glt::invariant_subspace(&engine, *t, *n)?;
            let expected = expect.or(if (*t, *n) == (5, 42) { Some(0) } else { None });
            let ok = expected.is_none_or(|e| e == inv.dim());
            println!("dim={} {}", inv.dim(), pass_fail(ok));
            for i in 0..inv.dim() {
                println!("  {}", inv.describe(i));
            }
            ok
        }
        VerifyCmd::Blocks { t, n } => {
            let check = engine.block_decomposition_check(*t, *n)?;
            for (w, d) in &check.blocks {
                println!("{w} -> {d}");
            }
            println!(
                "total={} sum_of_blocks={} {}",
                check.total_dim,
                check.blocks.iter().map(|(_, d)| d).sum::<u64>(),
                pass_fail(check.holds)
            );
            check.holds
        }
        VerifyCmd::PaperSuite => {
            let outcomes = suite::paper_suite(&engine_config(&cli.run))?;
            print!("{}", suite::render_table(&outcomes));
            outcomes.iter().all(|o| o.pass)
        }
    };
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
