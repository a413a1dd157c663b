use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gitquot::Mode;
use gitquot_cli::{cmd_invariants, cmd_quotient, cmd_sweep, CliError, Overrides, ProblemFile};

#[derive(Parser)]
#[command(name = "gitquot", version, about = "GIT quotients of torus actions on affine space")]
struct Cli {
    /// Largest degree searched for invariant-ring generators.
    #[arg(long, global = true)]
    degree_bound: Option<u64>,
    /// Overrides the mode given in the problem file.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Polynomial,
    Lattice,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant sections and invariant-ring generators.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Full quotient report.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Chamber table over the problem's sweep box.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    if cli.degree_bound == Some(0) {
        return Err(CliError::Invalid("--degree-bound must be at least 1".into()));
    }
    let overrides = Overrides {
        degree_bound: cli.degree_bound,
        mode: cli.mode.map(|m| match m {
            ModeArg::Polynomial => Mode::Polynomial,
            ModeArg::Lattice => Mode::Lattice,
        }),
    };
    match cli.command {
        Command::Invariants { file, json } => cmd_invariants(&ProblemFile::load(&file)?, &overrides, json.as_deref()),
        Command::Quotient { file, svg, json } => {
            cmd_quotient(&ProblemFile::load(&file)?, &overrides, json.as_deref(), svg.as_deref())
        }
        Command::Sweep { file, json } => cmd_sweep(&ProblemFile::load(&file)?, &overrides, json.as_deref()),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
