use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use tricon::cli::{
    emit_report, run_identity_suite, run_single_check, run_sweep, verdict_json_line, SweepConfig,
    SweepOverlay,
};
use tricon::congruences::{solve_m, CheckId};
use tricon::modnt::cornacchia_x2_4y2;
use tricon::sequences::TrinomialParams;

#[derive(Parser)]
#[command(
    name = "tricon",
    version,
    about = "Exact congruence sweeps for generalized central trinomial coefficients",
    long_about = "Verifies prime-power congruences for sums of squared generalized central \
trinomial coefficients T_n(b,c), together with the exact identities behind them. \
All arithmetic is exact; a failing verdict is a reproducible counterexample."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run congruence checks over a prime range and parameter grid
    Sweep(SweepArgs),
    /// Run exact identity and proof-step verification sweeps
    Identity {
        /// Family name or "all"
        #[arg(long, default_value = "all")]
        name: String,
        /// Cap for the sequence index n in exact identities
        #[arg(long, default_value_t = 30)]
        n_max: u32,
        /// Cap for the prime p in congruence-style identities
        #[arg(long, default_value_t = 200)]
        p_max: u64,
    },
    /// Solve (m-d)^2 = 16mc for integer m
    SolveM {
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
    },
    /// Write a prime p ≡ 1 (mod 4) as x^2 + 4y^2 with x ≡ 1 (mod 4)
    Represent {
        #[arg(long)]
        p: u64,
    },
    /// Run a single congruence check at one prime and print its verdict
    Check(CheckArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated check ids (default: all twelve)
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long)]
    prime_min: Option<u64>,
    #[arg(long)]
    prime_max: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    b_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    b_max: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c_max: Option<i64>,
    /// Explicit parameter pairs "b,c;b,c" (overrides the grid). For
    /// s_closed_form the pairs are read as (m,d); for bc2_family as (b,γ).
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Explicit comma-separated m values (default: auto-solve per pair)
    #[arg(long, allow_hyphen_values = true)]
    m_list: Option<String>,
    /// Cap the Sun–Tauraso t range (default: the full 1..p-1)
    #[arg(long)]
    t_max: Option<u64>,
    /// Worker thread count (default: $TRICON_THREADS, then all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Report destination (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format: json or csv
    #[arg(long)]
    format: Option<String>,
    /// key=value config file; explicit flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
}

fn build_sweep_config(args: &SweepArgs) -> Result<SweepConfig> {
    let mut config = SweepConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        SweepOverlay::parse_file(&text)?.apply(&mut config);
    }
    let mut flags = SweepOverlay {
        prime_min: args.prime_min,
        prime_max: args.prime_max,
        b_min: args.b_min,
        b_max: args.b_max,
        c_min: args.c_min,
        c_max: args.c_max,
        t_max: args.t_max,
        threads: args.threads,
        output: args.output.clone(),
        ..Default::default()
    };
    if let Some(names) = &args.checks {
        let ids: Result<Vec<CheckId>, String> = names.iter().map(|s| s.parse()).collect();
        flags.checks = Some(ids.map_err(|e| anyhow::anyhow!(e))?);
    }
    if let Some(s) = &args.params {
        let pairs = s
            .split(';')
            .filter(|chunk| !chunk.trim().is_empty())
            .map(|chunk| -> Result<(i64, i64)> {
                let parts: Vec<&str> = chunk.split(',').map(str::trim).collect();
                if parts.len() != 2 {
                    bail!("bad pair `{chunk}` (expected b,c)");
                }
                Ok((parts[0].parse()?, parts[1].parse()?))
            })
            .collect::<Result<Vec<_>>>()?;
        flags.params = Some(pairs);
    }
    if let Some(s) = &args.m_list {
        let ms = s
            .split(',')
            .map(|v| v.trim().parse::<i64>().context("bad m value"))
            .collect::<Result<Vec<_>>>()?;
        flags.m_list = Some(ms);
    }
    if let Some(f) = &args.format {
        flags.format = Some(f.parse::<tricon::cli::ReportFormat>()?);
    }
    flags.apply(&mut config);
    Ok(config)
}

fn cmd_sweep(args: &SweepArgs) -> Result<ExitCode> {
    let config = build_sweep_config(args)?;
    let report = run_sweep(&config)?;
    let bytes = emit_report(&report, config.format);
    match &config.output {
        Some(path) => {
            std::fs::write(path, &bytes)
                .with_context(|| format!("writing report to {}", path.display()))?;
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&bytes)?;
        }
    }
    eprintln!(
        "sweep: {} pass, {} fail, {} skip in {:.2?}",
        report.pass, report.fail, report.skip, report.wall
    );
    Ok(if report.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_identity(name: &str, n_max: u32, p_max: u64) -> Result<ExitCode> {
    let summaries = run_identity_suite(name, n_max, p_max)?;
    let mut failed = 0usize;
    for summary in &summaries {
        for failure in &summary.failures {
            println!(
                "FAIL {} [{}]: lhs={} rhs={}",
                failure.id, failure.params, failure.lhs, failure.rhs
            );
        }
        failed += summary.failures.len();
        println!(
            "{}: {} cases, {}",
            summary.name,
            summary.cases,
            if summary.failures.is_empty() {
                "all hold".to_string()
            } else {
                format!("{} FAILED", summary.failures.len())
            }
        );
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode> {
    let id: CheckId = args.name.parse().map_err(|e: String| anyhow::anyhow!(e))?;
    let verdict = run_single_check(id, args.p, args.b, args.c, args.m, args.t)?;
    println!("{}", verdict_json_line(&verdict));
    Ok(if verdict.is_fail() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Args)]
struct CheckArgs {
    /// Check id (see `sweep --help` for the list)
    #[arg(long)]
    name: String,
    #[arg(long)]
    p: u64,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    /// Also carries d for s_closed_form and γ for bc2_family
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Sweep(args) => cmd_sweep(args),
        Cmd::Identity { name, n_max, p_max } => cmd_identity(name, *n_max, *p_max),
        Cmd::SolveM { b, c } => {
            let roots = solve_m(&TrinomialParams::new(*b, *c));
            if roots.is_empty() {
                println!("no integer roots");
            } else {
                let rendered: Vec<String> = roots.iter().map(|m| m.to_string()).collect();
                println!("{}", rendered.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Represent { p } => {
            let (x, y) = cornacchia_x2_4y2(*p)?;
            println!("{p} = ({x})^2 + 4*{y}^2  (x={x}, y={y})");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check(args) => cmd_check(args),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
