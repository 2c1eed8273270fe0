//! Command-line front end for `simpdim`. Every verb is a plain function
//! writing to caller-supplied streams, so the binary is a thin wrapper.

pub mod commands;
pub mod error;
pub mod input;
pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::commands::{RefineMode, DEFAULT_PLACES};
use crate::error::{CliError, Result};
use crate::input::Format;
use crate::verify::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "simpdim",
    version,
    about = "Exact dimension functionals of simplicial complexes"
)]
pub struct Cli {
    /// Add k-digit decimal renderings next to exact values (CSV output
    /// always has a decimal column, 12 digits unless set).
    #[arg(long, global = true, value_name = "K")]
    pub decimal: Option<usize>,

    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// File to read, or a family name such as K4, C6, K3,3, S2, icosahedron.
    #[arg(long = "in", value_name = "FILE")]
    pub input: String,

    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report f-vector, Euler characteristic, genus and all dimensions.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Also compute the inductive dimension of the 1-skeleton graph.
        #[arg(long)]
        graph_dim: bool,
    },
    /// Zykov join of two complexes.
    Join {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Barycentric refinement, explicit or on the f-vector.
    Refine {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Build the order complex (bounded by SIMPDIM_FACE_CAP).
        #[arg(long, conflicts_with = "fvector")]
        explicit: bool,
        /// Apply the refinement operator to the f-vector (default).
        #[arg(long)]
        fvector: bool,
    },
    /// Limit constants C_d for d = 0..=max-d.
    Constants {
        #[arg(long, value_name = "D")]
        max_d: usize,
        /// CSV instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Print the eigenvector profile for dimension D instead.
        #[arg(long, value_name = "D", conflicts_with = "csv")]
        profile: Option<usize>,
    },
    /// Monte-Carlo mean of delta over Erdos-Renyi graphs.
    Survey {
        #[arg(long)]
        n: usize,
        /// a:b:steps with rational endpoints, e.g. 0:1:20.
        #[arg(long, value_name = "A:B:STEPS")]
        p_grid: String,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive search over labeled graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Quantity to maximize.
        #[arg(long, value_parser = ["delta"], default_value = "delta")]
        maximize: String,
        /// Instead of maximizing, list f-vectors with this Dim+ on at most n vertices.
        #[arg(long, value_name = "P/Q")]
        level_set: Option<String>,
        /// Print the graphs in graph6, one per line.
        #[arg(long)]
        graph6: bool,
    },
    /// Run a verification suite; exits nonzero on any failed check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Skip the slowest published values (d = 500, n = 5).
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dim+ and Var+ along the refinement sequence, as CSV.
    Trajectory {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Add ln|Dim+ - C_d|.
        #[arg(long)]
        log_gap: bool,
    },
}

/// Runs `cli`, returning the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let places = cli.decimal.unwrap_or(DEFAULT_PLACES);
    match &cli.command {
        Command::Analyze { input, graph_dim } => {
            let loaded = input::load(&input.input, input.format)?;
            commands::analyze(&loaded, *graph_dim, cli.decimal, out)?;
        }
        Command::Join { a, b, format } => {
            let (a, b) = (input::load(a, *format)?, input::load(b, *format)?);
            commands::join_command(&a, &b, cli.decimal, out)?;
        }
        Command::Refine {
            input,
            steps,
            explicit,
            ..
        } => {
            let loaded = input::load(&input.input, input.format)?;
            let mode = if *explicit {
                RefineMode::Explicit
            } else {
                RefineMode::FVector
            };
            commands::refine_command(&loaded.complex, *steps, mode, cli.decimal, out)?;
        }
        Command::Constants {
            max_d,
            csv,
            profile,
        } => match profile {
            Some(d) => commands::constants_profile(*d, out)?,
            None if *csv => commands::constants(*max_d, places, out, err)?,
            None => commands::constants_json(*max_d, cli.decimal, out, err)?,
        },
        Command::Survey {
            n,
            p_grid,
            samples,
            seed,
        } => {
            let grid = commands::parse_grid(p_grid)?;
            commands::survey(*n, &grid, *samples, *seed, places, out)?;
        }
        Command::Enumerate {
            n,
            level_set,
            graph6,
            ..
        } => match level_set {
            Some(target) => {
                let target = simpdim::rational::parse(target)?;
                commands::enumerate_level_set(&target, *n, *graph6, out)?;
            }
            None => commands::enumerate_maximize(*n, *graph6, cli.decimal, out)?,
        },
        Command::Verify {
            suite,
            quick,
            samples,
            seed,
        } => {
            let opts = verify::Options {
                quick: *quick,
                samples: *samples,
                seed: *seed,
                ..Default::default()
            };
            let report = verify::run(*suite, &opts)?;
            serde_json::to_writer_pretty(&mut *out, &report.to_json(*suite))
                .map_err(std::io::Error::from)?;
            writeln!(out)?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Trajectory {
            input,
            steps,
            log_gap,
        } => {
            let loaded = input::load(&input.input, input.format)?;
            commands::trajectory(&loaded.complex, *steps, *log_gap, places, out)?;
        }
    }
    Ok(0)
}
