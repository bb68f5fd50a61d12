//! `gtcodes`: build generalized toric codes over GF(p^s), take their
//! subfield-subcodes over GF(p), compute duals and exact minimum distances,
//! and reproduce the bundled catalogue of reference code tables.

mod commands;
mod error;
mod job;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{MatrixFormat, WhichMatrix};
use error::CliError;
use job::JobSpec;

#[derive(Parser)]
#[command(name = "gtcodes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the cyclotomic cosets of the exponent lattice {0..q-2}^r.
    Cosets {
        /// Prime characteristic.
        #[arg(long)]
        p: u32,
        /// Extension degree (the field is GF(p^s)).
        #[arg(long)]
        s: u32,
        /// Torus dimension.
        #[arg(long)]
        r: usize,
    },
    /// Run the tasks in a JSON job file and report on the resulting codes.
    Run {
        /// Path to the job file.
        #[arg(long)]
        job: PathBuf,
        /// Override the enumeration budget (max codewords per enumeration).
        #[arg(long)]
        budget: Option<u128>,
        /// Write the JSON report to this file (stdout shows the text report).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild the bundled reference codes and check their parameters.
    Reproduce {
        #[arg(long, value_enum)]
        suite: SuiteSelection,
        /// Emit machine-readable JSON instead of the text table.
        #[arg(long)]
        json: bool,
        /// Override the enumeration budget.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Export a generator matrix from a job.
    Genmat {
        #[arg(long)]
        job: PathBuf,
        /// Which code: the toric code, its subfield-subcode, or the dual.
        #[arg(long, value_enum)]
        which: WhichMatrix,
        #[arg(long, value_enum, default_value = "json")]
        format: MatrixFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteSelection {
    Rs16,
    Gf8,
    Gf9,
    All,
}

impl SuiteSelection {
    fn as_str(self) -> &'static str {
        match self {
            SuiteSelection::Rs16 => "rs16",
            SuiteSelection::Gf8 => "gf8",
            SuiteSelection::Gf9 => "gf9",
            SuiteSelection::All => "all",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Cosets { p, s, r } => {
            print!("{}", commands::cmd_cosets(p, s, r)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { job, budget, out } => {
            let spec = JobSpec::from_path(&job)?;
            let report = commands::cmd_run(&spec, budget)?;
            print!("{}", report.render_text());
            let json = report.to_json();
            match out {
                Some(path) => std::fs::write(&path, json)?,
                None => print!("{json}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reproduce {
            suite,
            json,
            budget,
        } => {
            let result = suites::run_suites(
                suite.as_str(),
                budget.unwrap_or(gtcodes::weights::DEFAULT_BUDGET),
            )?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result).expect("result serializes")
                );
            } else {
                print!("{}", suites::render_table(&result));
            }
            Ok(if result.all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Genmat { job, which, format } => {
            let spec = JobSpec::from_path(&job)?;
            print!("{}", commands::cmd_genmat(&spec, which, format)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
