//! `ccodes`: build and analyse composite-length cyclic codes from the shell.

mod commands;
mod render;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use composite_codes::codes::{Engine, DEFAULT_BUDGET};
use composite_codes::convolutional::DEFAULT_DEGREE_BOUND;
use composite_codes::Error;
use serde::Serialize;

use render::{emit, Format};
use source::SourceArgs;

#[derive(Parser, Debug)]
#[command(name = "ccodes", version, about = "Cyclic codes of composite length: constructions, distances, decompositions and convolutional encoders")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Most messages the distance engines may enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for the searches (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Reserved; every search is deterministic and ignores it
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Label roots by theta^s instead of the canonical theta (s coprime to the length)
    #[arg(long, global = true, default_value_t = 1)]
    theta_power: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum EngineArg {
    #[default]
    Auto,
    Exhaustive,
    InformationSet,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Exhaustive => Engine::Exhaustive,
            EngineArg::InformationSet => Engine::InformationSet,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generator polynomials of the selected codes
    Construct(SourceArgs),
    /// Minimum distance
    Mindist {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t)]
        engine: EngineArg,
    },
    /// Full weight distribution (small codes only)
    Weightdist(SourceArgs),
    /// Component codes and the distance lower bound they give
    Decompose {
        #[command(flatten)]
        source: SourceArgs,
        /// Component length (defaults to n, or n1 for ding)
        #[arg(long)]
        split_n: Option<usize>,
        /// Number of components (defaults to r, or n2 for ding)
        #[arg(long)]
        split_r: Option<usize>,
    },
    /// Check that each equivalence class shares its invariants
    Equiv(SourceArgs),
    /// Rate k/n convolutional encoder from a cyclic code of length n*m
    Conv {
        #[command(flatten)]
        source: SourceArgs,
        /// Input width k
        #[arg(long)]
        k: usize,
        /// Output width n (defaults to n, or n1 for ding)
        #[arg(long)]
        block: Option<usize>,
        /// Also search for the free distance
        #[arg(long)]
        free_distance: bool,
        /// Input degree bound for the free-distance search
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: usize,
    },
    /// Distance of every equivalence class of a family
    Table(SourceArgs),
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::BudgetExceeded { .. } | Error::TooLarge(_)) => 4,
            CliError::Core(Error::InvalidElement { .. }) => 2,
            CliError::Core(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Core(e) => match e {
                Error::NonPrimeCharacteristic(_) => "non-prime-characteristic",
                Error::SizeExceeded { .. } => "size-exceeded",
                Error::NotCoprime { .. } => "not-coprime",
                Error::OrderUnavailable { .. } => "order-unavailable",
                Error::ZeroElement => "zero-element",
                Error::InvalidElement { .. } => "invalid-element",
                Error::DivisionByZeroPoly => "division-by-zero",
                Error::FieldMismatch => "field-mismatch",
                Error::NotADivisor(_) => "not-a-divisor",
                Error::NotMonic => "not-monic",
                Error::DegenerateCode(_) => "degenerate-code",
                Error::LengthMismatch { .. } => "length-mismatch",
                Error::BudgetExceeded { .. } => "budget-exceeded",
                Error::TooLarge(_) => "too-large",
                Error::NoGammaExists => "no-gamma",
                Error::NotOddPrime(_) => "not-odd-prime",
                Error::QNotResidue { .. } => "q-not-residue",
                Error::NotInLambda(_) => "not-in-lambda",
                Error::AssumptionViolated(_) => "assumption-violated",
                Error::RootClassViolation { .. } => "root-class-violation",
                Error::NotMinimalBasic(_) => "not-minimal-basic",
                Error::NonCoprimeParams { .. } => "non-coprime-params",
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    exit_code: u8,
    message: String,
}

/// Runs the command; `Ok(true)` when every reported distance is exact.
fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, CliError> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--workers: {e}")))?;
    }
    let (fmt, budget) = (cli.format, cli.budget);
    match &cli.command {
        Command::Construct(src) => {
            let res = src.resolve(cli.theta_power)?;
            emit(out, &commands::construct(&res), fmt)?;
            Ok(true)
        }
        Command::Mindist { source, engine } => {
            let res = source.resolve(cli.theta_power)?;
            let recs = commands::mindist(&res, budget, (*engine).into())?;
            emit(out, &recs, fmt)?;
            Ok(recs.iter().all(|r| r.exact))
        }
        Command::Weightdist(src) => {
            let res = src.resolve(cli.theta_power)?;
            emit(out, &commands::weightdist(&res)?, fmt)?;
            Ok(true)
        }
        Command::Decompose {
            source,
            split_n,
            split_r,
        } => {
            let res = source.resolve(cli.theta_power)?;
            let recs = commands::decompose(&res, (*split_n, *split_r), budget)?;
            emit(out, &recs, fmt)?;
            Ok(recs
                .iter()
                .all(|r| r.lower.components.iter().all(|c| c.exact)))
        }
        Command::Equiv(src) => {
            let res = src.resolve(cli.theta_power)?;
            let recs = commands::equiv(&res, budget)?;
            emit(out, &recs, fmt)?;
            Ok(recs.iter().all(|r| r.exact))
        }
        Command::Conv {
            source,
            k,
            block,
            free_distance,
            degree_bound,
        } => {
            let res = source.resolve(cli.theta_power)?;
            let opts = commands::ConvOptions {
                k: *k,
                block: *block,
                free_distance: *free_distance,
                degree_bound: *degree_bound,
            };
            let recs = commands::conv(&res, &opts, budget)?;
            emit(out, &recs, fmt)?;
            Ok(true)
        }
        Command::Table(src) => {
            let res = src.resolve(cli.theta_power)?;
            let rows = commands::table(&res, budget)?;
            emit(out, &rows, fmt)?;
            Ok(rows.iter().all(|r| r.exact))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        // output is complete but some distance is only bounded
        Ok(false) => ExitCode::from(4),
        Err(e) => {
            let code = e.exit_code();
            if cli.format == Format::Json {
                let report = ErrorReport {
                    error: e.kind(),
                    exit_code: code,
                    message: e.message(),
                };
                eprintln!("{}", serde_json::to_string(&report).unwrap_or_default());
            } else {
                eprintln!("error[{}]: {}", e.kind(), e.message());
            }
            ExitCode::from(code)
        }
    }
}
