//! `bqf`: solvability of `ax² + bxy + cy² + g = 0` over ℤ.
//!
//! Exit codes: 0 success, 1 criterion/oracle disagreement, 2 domain or usage
//! error, 3 I/O error.

mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use bqf_core::criteria::{criterion_example1, criterion_example2, evaluate, CriterionSpec};
use bqf_core::localsolve::local_profile;
use bqf_core::pell::{cf_sqrt, negative_pell, pell_fundamental, solve_generalized_pell};
use bqf_core::solver::solve;
use bqf_core::{Form, Int};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bqf", version, about = "Integral solvability of ax² + bxy + cy² + g = 0")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the equation: full solution set or orbit representatives.
    #[command(allow_negative_numbers = true)]
    Solve { a: Int, b: Int, c: Int, g: Int },
    /// Local solvability at every place.
    #[command(allow_negative_numbers = true)]
    Local { a: Int, b: Int, c: Int, g: Int },
    /// Evaluate a criterion: 1, 2, or the path of a criterion config file.
    #[command(allow_negative_numbers = true)]
    Criterion { criterion: String, g: Int },
    /// Compare a criterion with the solver for every g in a range.
    #[command(allow_negative_numbers = true)]
    Verify {
        criterion: String,
        g_min: i64,
        g_max: i64,
        /// Write rows here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; 0 or unset uses every core.
        #[arg(long, env = "BQF_JOBS")]
        jobs: Option<usize>,
    },
    /// Continued fraction, Pell solutions and, with N, representatives of x² − Dy² = N.
    #[command(allow_negative_numbers = true)]
    Pell { d: Int, n: Option<Int> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Jsonl,
}

pub enum Failure {
    Disagreement,
    Domain(String),
    Io(String),
}

impl From<bqf_core::Error> for Failure {
    fn from(e: bqf_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Built-in example or a config file.
pub enum Which {
    Example1,
    Example2,
    Config(Box<CriterionSpec>),
}

impl Which {
    pub fn load(arg: &str) -> Result<Self, Failure> {
        match arg {
            "1" => Ok(Which::Example1),
            "2" => Ok(Which::Example2),
            path => {
                let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
                Ok(Which::Config(Box::new(text.parse()?)))
            }
        }
    }

    pub fn spec(&self) -> CriterionSpec {
        match self {
            Which::Example1 => CriterionSpec::example1(),
            Which::Example2 => CriterionSpec::example2(),
            Which::Config(spec) => (**spec).clone(),
        }
    }

    pub fn report(&self, g: &Int) -> bqf_core::Result<bqf_core::criteria::CriterionReport> {
        match self {
            Which::Example1 => criterion_example1(g),
            Which::Example2 => criterion_example2(g),
            Which::Config(spec) => evaluate(spec, g),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { a, b, c, g } => {
            let form = Form::new(a, b, c, g)?;
            print!("{}", report::solve(&form, &solve(&form)?));
        }
        Command::Local { a, b, c, g } => {
            let form = Form::new(a, b, c, g)?;
            print!("{}", report::local(&form, &local_profile(&form)?));
        }
        Command::Criterion { criterion, g } => {
            let which = Which::load(&criterion)?;
            print!("{}", which.report(&g)?);
        }
        Command::Verify { criterion, g_min, g_max, out, format, jobs } => {
            let which = Which::load(&criterion)?;
            return verify::run(&which, g_min, g_max, out.as_deref(), format, jobs.unwrap_or(0));
        }
        Command::Pell { d, n } => {
            let cf = cf_sqrt(&d)?;
            let fund = pell_fundamental(&d)?;
            let neg = negative_pell(&d)?;
            let reps = match &n {
                Some(n) => Some(solve_generalized_pell(&d, n)?),
                None => None,
            };
            print!("{}", report::pell(&d, &cf, &fund, neg.as_ref(), n.as_ref().zip(reps.as_deref())));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
