//! `patchtop`: batch queries on finite spectral spaces, limits of finite
//! posets and support data.

mod commands;
mod report;
mod workspace;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use patchtop::{DEFAULT_BOUND, DEFAULT_DEPTH};

use commands::Settings;
use workspace::Workspace;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] patchtop::Error),
}

#[derive(Parser, Debug)]
#[command(name = "patchtop", version, about = "Patch topology, spectral closures and support data")]
struct Cli {
    /// Input file with poset, lattice, prospace and support blocks (repeatable).
    #[arg(long = "input", short = 'i', global = true)]
    inputs: Vec<PathBuf>,
    /// Working depth for limit spaces.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Largest term size in support computations.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// One `command<TAB>key<TAB>value` record per line.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Append wall-clock time (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hochster dual of a finite space.
    Dual {
        #[arg(long)]
        space: String,
    },
    /// Checks one subset, or lists all Thomason subsets.
    Thomason {
        #[arg(long)]
        space: String,
        #[arg(long)]
        subset: Option<String>,
    },
    /// Patch density of a subset of a finite space.
    Dense {
        #[arg(long)]
        space: String,
        #[arg(long)]
        subset: String,
    },
    /// Three independent density conditions for an inclusion, or for random maps.
    LemmaDenseEpi {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        random: Option<usize>,
    },
    /// Spectral closure through join-irreducibles.
    Closure {
        #[arg(long)]
        lattice: String,
    },
    /// Spectral closure through the evaluation map.
    ClosureEv {
        #[arg(long)]
        lattice: String,
    },
    /// Closure of the restricted lattice, realized inside the space.
    Realize {
        #[arg(long)]
        space: String,
        #[arg(long)]
        subset: Option<String>,
        /// `p->a,q->b`
        #[arg(long)]
        map: Option<String>,
    },
    /// Density verdict for a family of points of a limit.
    ProDense {
        #[arg(long)]
        space: String,
        /// `finite-points`, `sections` or comma-separated points.
        #[arg(long)]
        family: String,
    },
    /// Weak visibility of a point.
    Visible {
        #[arg(long)]
        space: String,
        #[arg(long)]
        point: String,
    },
    /// Whether a one-point set is constructible.
    Singleton {
        #[arg(long)]
        space: String,
        #[arg(long)]
        point: String,
    },
    /// Whether a family jointly distinguishes supports.
    Distinguish {
        #[arg(long)]
        support: String,
        /// Points of a finite space, or a family of points of a limit.
        #[arg(long)]
        family: String,
    },
    /// Ideal shadow of a Thomason subset, or all of them.
    Classify {
        #[arg(long)]
        support: String,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Rebuilds the space from supports restricted to a dense subset.
    Reconstruct {
        #[arg(long)]
        support: String,
        #[arg(long)]
        dense: String,
    },
    /// Built-in walkthroughs.
    Demo {
        #[arg(value_enum)]
        which: Demo,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Demo {
    Chromatic,
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    let s = Settings {
        depth: cli.depth,
        bound: cli.bound,
        seed: cli.seed,
    };
    let ws = Workspace::load(&cli.inputs, cli.depth)?;
    match &cli.command {
        Command::Dual { space } => commands::dual(&ws, s, space),
        Command::Thomason { space, subset } => commands::thomason(&ws, s, space, subset.as_deref()),
        Command::Dense { space, subset } => commands::dense(&ws, s, space, subset),
        Command::LemmaDenseEpi {
            space,
            subset,
            random,
        } => commands::lemma_dense_epi(&ws, s, space.as_deref(), subset.as_deref(), *random),
        Command::Closure { lattice } => commands::closure(&ws, s, lattice),
        Command::ClosureEv { lattice } => commands::closure_ev(&ws, s, lattice),
        Command::Realize { space, subset, map } => {
            commands::realize(&ws, s, space, subset.as_deref(), map.as_deref())
        }
        Command::ProDense { space, family } => commands::pro_dense(&ws, s, space, family),
        Command::Visible { space, point } => commands::visible(&ws, s, space, point),
        Command::Singleton { space, point } => commands::singleton(&ws, s, space, point),
        Command::Distinguish { support, family } => commands::distinguish(&ws, s, support, family),
        Command::Classify {
            support,
            subset,
            level,
        } => commands::classify(&ws, s, support, subset.as_deref(), *level),
        Command::Reconstruct { support, dense } => commands::reconstruct(&ws, s, support, dense),
        Command::Demo { which: Demo::Chromatic } => commands::demo_chromatic(s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.push("elapsed_ms", start.elapsed().as_millis());
            }
            print!("{}", report.render(cli.porcelain));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
