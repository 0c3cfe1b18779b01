//! `cliffsym`: classify Clifford algebras, sweep signature ranges, check
//! graded tensor products and print the spinorial clock.
//!
//! Exit codes: 0 when every report conforms (or a tensor product verifies),
//! 2 when some report does not, 1 on invalid input or internal errors.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cliffsym::bw::{clock_text, tensor_report, trautman_clock};
use cliffsym::repgen::IdempotentSpec;
use cliffsym::{classify_algebra, sweep, AlgebraSig, ClockKind};

#[derive(Parser, Debug)]
#[command(name = "cliffsym", version, about = "Discrete symmetry groups of Clifford algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify every spinor representation of one algebra.
    Classify(ClassifyArgs),
    /// Classify all Cl(p,q) with p + q ≤ max-n.
    Sweep(SweepArgs),
    /// Verify a graded tensor product and its Brauer–Wall class.
    Tensor(TensorArgs),
    /// Print the spinorial clock with its signature annotations.
    Clock(ClockArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long, requires = "q", conflicts_with = "n")]
    p: Option<u32>,
    #[arg(long, requires = "p", conflicts_with = "n")]
    q: Option<u32>,
    /// Complex algebra Cₙ.
    #[arg(long)]
    n: Option<u32>,
    /// Commuting blades of the primitive idempotent, e.g. `e1,e34`.
    #[arg(long, requires = "signs")]
    idempotent: Option<String>,
    /// One sign per blade, e.g. `+,+` or `+-`.
    #[arg(long, requires = "idempotent", allow_hyphen_values = true)]
    signs: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    /// Worker threads; 0 uses one per core.
    #[arg(long, env = "CLIFFSYM_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct TensorArgs {
    /// First factor: `p,q` for Cl(p,q) or `n` for Cₙ.
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ClockArgs {
    #[arg(long, default_value = "real")]
    kind: String,
    #[command(flatten)]
    output: OutputArgs,
}

fn emit(output: &OutputArgs, text: impl FnOnce() -> String, json: &impl Serialize) -> Result<()> {
    let body = match output.format {
        Format::Text => text(),
        Format::Json => serde_json::to_string_pretty(json)? + "\n",
    };
    match &output.out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn parse_operand(text: &str) -> Result<AlgebraSig> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [n] => Ok(AlgebraSig::complex(n.parse().with_context(|| format!("invalid algebra `{text}`"))?)),
        [p, q] => Ok(AlgebraSig::real(
            p.parse().with_context(|| format!("invalid algebra `{text}`"))?,
            q.parse().with_context(|| format!("invalid algebra `{text}`"))?,
        )),
        _ => bail!("invalid algebra `{text}`: expected `p,q` or `n`"),
    }
}

fn classify(args: &ClassifyArgs) -> Result<ExitCode> {
    let sig = match (args.p, args.q, args.n) {
        (Some(p), Some(q), None) => AlgebraSig::real(p, q),
        (None, None, Some(n)) => AlgebraSig::complex(n),
        _ => bail!("give either --p and --q or --n"),
    };
    let spec = match (&args.idempotent, &args.signs) {
        (Some(b), Some(s)) => Some(IdempotentSpec::parse(b, s)?),
        _ => None,
    };
    let reports = classify_algebra(sig, spec.as_ref())?;
    emit(&args.output, || render::classification(&reports), &reports)?;
    Ok(verdict(reports.iter().all(|r| r.conformance.pass)))
}

fn run_sweep(args: &SweepArgs) -> Result<ExitCode> {
    let report = sweep(args.max_n, args.jobs)?;
    emit(&args.output, || render::sweep(&report), &report)?;
    Ok(verdict(report.all_conformant()))
}

fn tensor(args: &TensorArgs) -> Result<ExitCode> {
    let report = tensor_report(parse_operand(&args.a)?, parse_operand(&args.b)?)?;
    emit(&args.output, || render::tensor(&report), &report)?;
    Ok(verdict(report.verified()))
}

fn clock(args: &ClockArgs) -> Result<ExitCode> {
    let kind: ClockKind = args.kind.parse()?;
    let positions = trautman_clock(kind);
    emit(&args.output, || clock_text(kind), &positions)?;
    Ok(ExitCode::SUCCESS)
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Tensor(a) => tensor(a),
        Command::Clock(a) => clock(a),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(1)
    })
}
