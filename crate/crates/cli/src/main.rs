//! Command-line front end: reads a job config and prints matrices, duals and checks.

mod commands;
mod config;
mod examples;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skewcode_core::{Error, ErrorClass};

use commands::Report;
use config::{Job, JobConfig};

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
    Lib(Error),
    /// A command ran but one of its checks failed.
    Failed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "invalid config: {m}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Failed => write!(f, "checks failed"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Lib(e) => match e.class() {
                ErrorClass::Validation => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::Bound => 4,
                ErrorClass::Internal => 5,
            },
            CliError::Failed => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Parser)]
#[command(name = "skewcode", version, about = "Linear codes from skew polynomial rings over finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Job config (JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest exhaustive enumeration allowed; overrides the config.
    #[arg(long, global = true)]
    bound: Option<u64>,
    /// Seed for sampled σ/δ verification; overrides the config.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Generating matrix G.
    GenMatrix,
    /// Control matrix H with G H = 0.
    ControlMatrix,
    /// Parity-check matrix H_* with G H_*^T = 0.
    ParityCheck,
    /// Dual code of a constacyclic code.
    Dual,
    /// Self-duality test, confirmed by brute force.
    SelfDual,
    /// Cross-check every construction against exhaustive search.
    Verify,
    /// Encode a message row vector.
    Encode {
        #[arg(long)]
        message: String,
    },
    /// Syndrome of a received word.
    Syndrome {
        #[arg(long)]
        word: String,
    },
    /// Weight distribution and minimum distance.
    Weights,
    /// Run the bundled worked examples.
    PaperExamples,
}

fn load(cli: &Cli) -> Result<Job, CliError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::Config("--config is required for this command".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(JobConfig::from_json(&text)?.resolve(cli.bound, cli.seed)?)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Command::PaperExamples = cli.command {
        return examples::run(cli.bound, cli.seed);
    }
    let job = load(cli)?;
    let report = match &cli.command {
        Command::GenMatrix => commands::gen_matrix(&job),
        Command::ControlMatrix => commands::control_matrix(&job),
        Command::ParityCheck => commands::parity_check(&job),
        Command::Dual => commands::dual(&job),
        Command::SelfDual => commands::self_dual(&job),
        Command::Verify => commands::verify(&job),
        Command::Encode { message } => commands::encode(&job, message),
        Command::Syndrome { word } => commands::syndrome(&job, word),
        Command::Weights => commands::weights(&job),
        Command::PaperExamples => unreachable!(),
    }?;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|report| {
        match cli.format {
            Format::Text => print!("{}", report.text),
            Format::Structured => {
                let out = serde_json::to_string_pretty(&report.json).expect("json values serialize");
                println!("{out}");
            }
        }
        if report.ok {
            Ok(())
        } else {
            Err(CliError::Failed)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
