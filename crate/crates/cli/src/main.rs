mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use vmtk_core::corpus::DEFAULT_SEED;

#[derive(Parser, Debug)]
#[command(name = "vmtk", version, about = "Vertex-minor toolkit: linear rank-width, delta families, split decompositions")]
pub struct Cli {
    /// Seed for every randomized corpus
    #[arg(long, global = true, env = "VMTK_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Edgelist,
    G6,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact linear rank-width with a witness layout
    Lrw {
        #[arg(long)]
        input: PathBuf,
        /// Input format (default: from the file extension)
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Decide lrw <= T by search instead of computing it exactly
        #[arg(long, value_name = "T")]
        decide: Option<usize>,
        /// Search states allowed for --decide
        #[arg(long, default_value_t = vmtk_core::rank::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run a verification suite: o1, excluded-K, composition-K, canonical-K, treelocal, orbits-K
    Verify {
        target: String,
        /// Level, for targets given without a -K suffix
        #[arg(long)]
        k: Option<usize>,
    },
    /// Members of the delta-composition families
    Delta {
        #[command(subcommand)]
        sub: DeltaCommand,
    },
    /// Split decomposition of a connected graph, in marked-graph text form
    Splitdec {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Canonical decomposition (default: one split of the input)
        #[arg(long)]
        canonical: bool,
        /// Also write a Graphviz rendering
        #[arg(long, value_name = "PATH")]
        emit_dot: Option<PathBuf>,
        /// Decompose each component of a disconnected input separately
        #[arg(long)]
        per_component: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum DeltaCommand {
    /// graph6 lines, one per isomorphism class, each after a code comment
    Enumerate {
        #[arg(long)]
        k: usize,
        /// One line per rooted class
        #[arg(long)]
        rooted: bool,
    },
    /// Class counts for level K
    Count {
        #[arg(long)]
        k: usize,
    },
    /// Decide membership and print the certificate
    Recognize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Outcome of a command: 0 pass, 1 fail, 2 error.
pub enum Status {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let result = commands::run(&cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
