// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Debug, Parser)]
#[command(
    name = "cvlc",
    version,
    about = "Exact CV graph-state stabilizer calculus and LC orbits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Reading {
    Time,
    Operator,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Context {
    Source,
    Evolving,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count connected graphs on n vertices by isomorphism type.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Local complement of a graph at one vertex.
    Lc {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Labeled LC orbit of a connected graph.
    Orbit {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Classes of connected graphs under LC and isomorphism.
    Classify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check whether a gate word carries one graph state to another.
    Verify {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Reading::All)]
        reading: Reading,
        #[arg(long, value_enum, default_value_t = Context::Both)]
        context: Context,
        /// Exit 1 unless some evaluation is valid.
        #[arg(long)]
        strict: bool,
    },
    /// Shortest dictionary word between two graph states.
    Search {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 6)]
        max_depth: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Comma-separated dictionary words; defaults to the standard dictionary.
        #[arg(long, allow_hyphen_values = true)]
        dict: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Replay a built-in chain of labeled LC steps.
    AdjudicateChains {
        #[arg(long)]
        figure: u8,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Skip the fallback search for arrows with no valid reading.
        #[arg(long)]
        no_search: bool,
    },
    /// Convert between graph spec text and JSON.
    Export {
        #[arg(
            long,
            conflicts_with = "from_json",
            required_unless_present = "from_json"
        )]
        graph: Option<String>,
        #[arg(long)]
        from_json: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| commands::run(cli.command)) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}
