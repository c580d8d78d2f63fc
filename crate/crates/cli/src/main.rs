mod commands;
mod config;
mod error;
mod solution;

use std::path::PathBuf;
use std::process::ExitCode;

use aniso_monogenic::suites::DomainChoice;
use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliResult;

#[derive(Parser)]
#[command(name = "aniso", version, about = "Stress functions of plane anisotropy via monogenic functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a monogenic function to boundary data and write a solution file.
    Solve {
        #[arg(long)]
        config: PathBuf,
    },
    /// Reconstruct u on a grid over the domain and write CSV.
    Eval {
        #[arg(long)]
        solution: PathBuf,
        /// Grid size as NX,NY over the domain's bounding box.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        base_value: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        domain: DomainArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Disk,
    Ellipse,
    Rectangle,
}

impl From<DomainArg> for DomainChoice {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Disk => Self::Disk,
            DomainArg::Ellipse => Self::Ellipse,
            DomainArg::Rectangle => Self::Rectangle,
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Solve { config } => commands::solve(&config),
        Command::Eval { solution, grid, base_value, out } => {
            let grid = commands::parse_grid(&grid)?;
            commands::eval(&solution, grid, base_value, &out)
        }
        Command::Verify { p, degree, domain } => commands::verify(p, degree, domain.into()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
