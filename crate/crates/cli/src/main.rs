//! `natred`: checks, solves and parameter scans for `Ric(g) = cT` on
//! naturally reductive metrics.

mod commands;
mod config;
mod grid;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::config::Range;

#[derive(Parser)]
#[command(name = "natred", version, about = "Prescribed Ricci curvature for naturally reductive metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the solvability conditions for one configuration.
    Check(SingleArgs),
    /// Classify one configuration and solve it when possible.
    Solve(SingleArgs),
    /// Classify a grid of tensors T = (1, [t1, t2]) on a two-block structure.
    Scan(ScanArgs),
    /// Sample the scalar curvature on the slice tr_g T = 1 over (alpha1, alpha2).
    Surface(SurfaceArgs),
    /// List the built-in structures.
    Catalog(OutArgs),
}

#[derive(Args)]
struct OutArgs {
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SingleArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides solver_opts.seed.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct ScanArgs {
    /// Catalog structure to scan; ignored when --config is given.
    #[arg(long, default_value = "so6-diag")]
    structure: String,
    /// Takes the structure and solver options from a config file; its tensor is ignored.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = "0.05:0.45")]
    t1: Range,
    #[arg(long, default_value = "0.05:0.45")]
    t2: Range,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
    /// Evaluate the conditions only; the solver column is left empty.
    #[arg(long)]
    no_solve: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the four example tensors next to the output (so6-diag only).
    #[arg(long)]
    annotate_examples: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SurfaceArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long, default_value = "0.5:20")]
    a1: Range,
    #[arg(long, default_value = "0.5:20")]
    a2: Range,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
    #[command(flatten)]
    out: OutArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = config::init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Check(a) => commands::check(&a.config, a.seed, a.out.out.as_deref()),
        Command::Solve(a) => commands::solve(&a.config, a.seed, a.out.out.as_deref()),
        Command::Scan(a) => commands::scan(&commands::ScanRequest {
            structure: &a.structure,
            config: a.config.as_deref(),
            t1: a.t1,
            t2: a.t2,
            resolution: a.resolution,
            solve: !a.no_solve,
            seed: a.seed,
            annotate: a.annotate_examples,
            out: a.out.out.as_deref(),
        }),
        Command::Surface(a) => commands::surface(&a.config, a.a1, a.a2, a.resolution, a.out.out.as_deref()),
        Command::Catalog(a) => commands::catalog(a.out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
