//! `rookring`: command-line access to shadow lines, normal forms, local
//! statistics and the character checks of the `rookring` library.

mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rookring::Field;

use crate::report::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] rookring::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(rookring::Error::Resource(_)) => 2,
            _ => 1,
        }
    }
}

/// Parses `QQ`, `Q` or `rationals`, or a prime as `p`, `GF(p)` or `F_p`.
fn parse_field(text: &str) -> Result<Field, String> {
    let t = text.trim();
    if matches!(t, "QQ" | "Q" | "rationals" | "0") {
        return Ok(Field::Rationals);
    }
    let digits = t
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| t.strip_prefix("F_"))
        .unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| format!("expected QQ or a prime such as 5 or GF(5), found {text:?}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "rookring", version, about = "Exact computations in F[x_{n x n}]/I_n")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Coefficient field: QQ or a prime p.
    #[arg(long, value_parser = parse_field, default_value = "QQ", global = true)]
    field: Field,
    /// Worker threads for parallel kernels (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct SizeArg {
    /// Grid size.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schensted tableaux of a permutation in one-line notation.
    Rsk { perm: String },
    /// Shadow lines of a permutation, or of a rook placement file (`n; (i,j) ...`).
    Shadow { input: String },
    /// Ballot test of a rook placement; rewrites non-shadow sets by marching.
    CheckRook { input: String },
    /// The shadow-monomial basis.
    Basis(SizeArg),
    /// Hilbert series coefficients from degree 0 up.
    Hilbert(SizeArg),
    /// Normal form of a polynomial such as `x[1,1]*x[2,2] - 3/2*x[1,2]`.
    Reduce {
        #[command(flatten)]
        size: SizeArg,
        /// Polynomial text; omit when using `--input`.
        poly: Option<String>,
        /// Read the polynomial as JSON terms from this file.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Shadow-junta basis of k-local statistics.
    LocalBasis {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        k: usize,
    },
    /// Decomposes a statistic into shadow juntas.
    Localize {
        #[command(flatten)]
        size: SizeArg,
        /// A built-in name (exc, inv, peak, lis, constant) or a CSV file with
        /// columns `permutation,value`.
        stat: String,
        /// Locality to try; defaults to the minimal one.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Character table of S_n.
    CharTable(SizeArg),
    /// The class function alpha_{n,k}.
    Alpha {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive or randomized checks.
    Verify {
        what: VerifyTarget,
        #[command(flatten)]
        size: SizeArg,
        /// Only compare values at the identity (graded).
        #[arg(long)]
        identity_only: bool,
        /// Random polynomials to test (membership).
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Seed for random polynomials (membership).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include multiplicity tables in conjecture reports.
        #[arg(long)]
        tables: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Rsk,
    Basis,
    Hilbert,
    Graded,
    Membership,
    NovakRhoades,
    Equivariant,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let (report, code) = commands::dispatch(&cli.command, cli.field)?;
    let mut buffer = Vec::new();
    report.render(cli.format, &mut buffer)?;
    match &cli.output {
        Some(path) => std::fs::write(path, &buffer)?,
        None => io::stdout().lock().write_all(&buffer)?,
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
