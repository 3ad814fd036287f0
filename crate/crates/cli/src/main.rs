use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyent::laws::run_laws;
use polyent::report::{AspectReport, DeriveReport, DistReport, EntropyReport};
use polyent::{parse_poly, poly_from_sample, Error, FinPoly, SampleTable};

/// Entropy of samples encoded as polynomial functors.
#[derive(Debug, Parser)]
#[command(name = "polyent", version)]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full entropy decomposition of a polynomial or a sample file.
    Entropy(EntropyArgs),
    /// Rectangular aspect (length and width) of a polynomial.
    Aspect { expr: String },
    /// Derivative and total polynomial.
    Derive { expr: String },
    /// Empirical distribution as exact rationals.
    Dist { expr: String },
    /// Run the exhaustive law suites.
    Laws {
        #[arg(long, default_value_t = 3)]
        max_positions: usize,
        #[arg(long, default_value_t = 3)]
        max_exponent: usize,
    },
}

#[derive(Debug, Args)]
struct EntropyArgs {
    /// Polynomial expression such as "y^4 + 4y".
    #[arg(required_unless_present = "sample", conflicts_with = "sample")]
    expr: Option<String>,
    /// CSV file with a `draw,outcome` header.
    #[arg(long)]
    sample: Option<PathBuf>,
    /// File listing one outcome id per line, for outcomes with no draws.
    #[arg(long, requires = "sample")]
    outcomes: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse(_) | Error::MalformedRow { .. } => Failure::Usage(err.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn parse(expr: &str) -> Result<FinPoly, Failure> {
    parse_poly(expr).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit<T: Serialize>(format: Format, report: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("reports serialize")),
        Format::Text => print!("{}", text(report)),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Entropy(args) => {
            let p = match (args.expr, args.sample) {
                (Some(expr), _) => parse(&expr)?,
                (None, Some(path)) => {
                    let mut table = SampleTable::from_csv_path(&path)?;
                    if let Some(outcomes) = args.outcomes {
                        table.declare_outcomes_from_path(outcomes)?;
                    }
                    poly_from_sample(&table)?
                }
                (None, None) => return Err(Failure::Usage("expected an expression or --sample".into())),
            };
            emit(cli.format, &EntropyReport::new(&p), EntropyReport::to_text);
        }
        Command::Aspect { expr } => {
            emit(cli.format, &AspectReport::new(&parse(&expr)?), AspectReport::to_text);
        }
        Command::Derive { expr } => {
            emit(cli.format, &DeriveReport::new(&parse(&expr)?), DeriveReport::to_text);
        }
        Command::Dist { expr } => {
            emit(cli.format, &DistReport::new(&parse(&expr)?)?, DistReport::to_text);
        }
        Command::Laws {
            max_positions,
            max_exponent,
        } => {
            let report = run_laws(max_positions, max_exponent);
            emit(cli.format, &report, |r| r.to_text());
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
