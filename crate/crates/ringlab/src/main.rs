use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ringlab::commands::{
    self, chain_report, classify_report, describe_report, split_report, sr1_report, CliError,
    RingHandle,
};
use ringlab::report::Report;
use ringlab::selftest;

/// Exact computations with regular elements of finite rings: element
/// classification, idempotent-power splittings, right-ideal
/// decomposition chains with unit witnesses, and stable-range checks.
#[derive(Parser)]
#[command(name = "ringlab", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArgs {
    /// Catalog ring name, e.g. M(3,2), T(2,3), FpC(2,2), prod(M(2,2),T(2,2))
    #[arg(long, value_name = "SPEC", conflicts_with = "ring_file")]
    ring: Option<String>,
    /// Path to a JSON ring-spec file
    #[arg(long, value_name = "PATH")]
    ring_file: Option<PathBuf>,
}

impl RingArgs {
    fn load(&self) -> Result<RingHandle, CliError> {
        commands::load_ring(self.ring.as_deref(), self.ring_file.as_deref())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    fn to_commands(self) -> commands::Format {
        match self {
            OutputFormat::Text => commands::Format::Text,
            OutputFormat::Json => commands::Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Show structural facts about a ring
    Describe {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Classify every element: units, idempotents, nilpotents,
    /// regularity, unit-regularity
    Classify {
        #[command(flatten)]
        ring: RingArgs,
        /// Worker count for the exhaustive scan
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Split an element along its idempotent power into a unit part
    /// and a nilpotent part
    Split {
        #[command(flatten)]
        ring: RingArgs,
        /// Element expression, e.g. "e12+e23", "[0,1,0,0]", "J"
        #[arg(long, value_name = "EXPR")]
        element: String,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Build and verify a right-ideal decomposition chain, with a
    /// unit witness when the element is nilpotent
    Chain {
        #[command(flatten)]
        ring: RingArgs,
        /// Element expression, e.g. "e12+e23", "[0,1,0,0]", "J"
        #[arg(long, value_name = "EXPR")]
        element: String,
        /// Chain route: 2 = exchange, 4 = regular powers
        #[arg(long, value_name = "2|4")]
        theorem: u8,
        /// Chain length; defaults to the nilpotency index
        #[arg(long, value_name = "N")]
        levels: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Check stable range one by exhaustive pair scan
    Sr1 {
        #[command(flatten)]
        ring: RingArgs,
        /// Worker count for the pair scan
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Run the full acceptance suite and exit nonzero on any failure
    Selftest {
        /// Worker count for the exhaustive sweeps
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

enum RunOutcome {
    Success(String),
    /// Exit code 1: the computation ran and failed; its report (if
    /// any) still goes to standard output.
    MathFailure {
        output: String,
        message: String,
    },
}

fn finish(
    result: Result<Report, CliError>,
    format: commands::Format,
) -> Result<RunOutcome, CliError> {
    match result {
        Ok(report) => Ok(RunOutcome::Success(commands::render(&report, format))),
        Err(CliError::Math { message, report }) => Ok(RunOutcome::MathFailure {
            output: report
                .map(|r| commands::render(&r, format))
                .unwrap_or_default(),
            message,
        }),
        Err(usage) => Err(usage),
    }
}

fn execute(command: Command) -> Result<RunOutcome, CliError> {
    match command {
        Command::Describe { ring, format } => {
            let h = ring.load()?;
            let format = format.unwrap_or(OutputFormat::Json).to_commands();
            Ok(RunOutcome::Success(commands::render(
                &describe_report(&h),
                format,
            )))
        }
        Command::Classify { ring, jobs, format } => {
            let h = ring.load()?;
            let format = format.unwrap_or(OutputFormat::Json).to_commands();
            finish(classify_report(&h, jobs), format)
        }
        Command::Split {
            ring,
            element,
            format,
        } => {
            let h = ring.load()?;
            let format = format.unwrap_or(OutputFormat::Json).to_commands();
            finish(split_report(&h, &element), format)
        }
        Command::Chain {
            ring,
            element,
            theorem,
            levels,
            format,
        } => {
            let h = ring.load()?;
            let format = format.unwrap_or(OutputFormat::Json).to_commands();
            finish(chain_report(&h, &element, theorem, levels), format)
        }
        Command::Sr1 { ring, jobs, format } => {
            let h = ring.load()?;
            let format = format.unwrap_or(OutputFormat::Json).to_commands();
            finish(sr1_report(&h, jobs), format)
        }
        Command::Selftest { jobs, format } => {
            if jobs == 0 {
                return Err(CliError::Usage(String::from("--jobs must be at least 1")));
            }
            let outcomes = selftest::run_all(jobs);
            let rendered = match format.unwrap_or(OutputFormat::Text) {
                OutputFormat::Text => selftest::render_lines(&outcomes),
                OutputFormat::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&selftest::outcomes_value(&outcomes))
                            .expect("outcomes serialize");
                    s.push('\n');
                    s
                }
            };
            let failed = outcomes.iter().filter(|o| !o.pass).count();
            if failed > 0 {
                Ok(RunOutcome::MathFailure {
                    output: rendered,
                    message: format!("{failed} criteria failed"),
                })
            } else {
                Ok(RunOutcome::Success(rendered))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(RunOutcome::Success(output)) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Ok(RunOutcome::MathFailure { output, message }) => {
            print!("{output}");
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Math { message, report }) => {
            if let Some(report) = report {
                print!("{}", report.render_json());
            }
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
