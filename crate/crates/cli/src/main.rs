//! `hcolor`: command-line front end for the Max Partial H-Coloring solvers.

mod commands;
mod exit;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use exit::CliError;

#[derive(Parser, Debug)]
#[command(name = "hcolor", version, about = "Exact Max Partial H-Coloring on hereditary graph classes")]
struct Cli {
    /// Write a run manifest (command, seed, config, wall clock, output digest) to this path.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
enum Command {
    /// Solve an instance with one strategy.
    Solve(SolveArgs),
    /// Brute-force optimum of an instance, or satisfiability of a list instance.
    Oracle(OracleArgs),
    /// Sample instances and check that several strategies agree.
    Crosscheck(CrosscheckArgs),
    /// Emit a named graph, a random class member or a random instance.
    Gen(GenArgs),
    /// Test class membership.
    Recognize(RecognizeArgs),
    /// Find a monitor base and show the component witnesses.
    Monitor(MonitorArgs),
    /// Print the modular decomposition tree.
    Decompose(DecomposeArgs),
    /// Summarize one level of branching on an instance.
    Branch(BranchArgs),
    /// Reduce 3-Coloring to List H0-Coloring.
    Reduce(ReduceArgs),
}

/// Solver knobs shared by `solve`, `branch` and `crosscheck`.
#[derive(Args, Debug, Clone, Serialize)]
pub struct SolverArgs {
    /// Excluded `L_s` index.
    #[arg(long, default_value_t = 3)]
    pub s: usize,
    /// Excluded `S_t` index.
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Exponent of the subexponential wrapper.
    #[arg(long, default_value_t = 1)]
    pub alpha: u32,
    /// Excluded half-graph index for the threshold strategy.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Hosts with at most this many vertices go to the oracle.
    #[arg(long, default_value_t = 4)]
    pub fallback: usize,
    /// Maximum number of guesses at one branching node.
    #[arg(long)]
    pub guess_cap: Option<usize>,
    /// Maximum pattern size in the bull-free pipeline.
    #[arg(long, default_value_t = 64)]
    pub pattern_cap: usize,
    /// Stream every guess instead of the compatible ones.
    #[arg(long)]
    pub all_guesses: bool,
    /// Verify the class promise before solving.
    #[arg(long, conflicts_with = "trust_class")]
    pub check_class: bool,
    /// Skip the class check even in debug builds.
    #[arg(long)]
    pub trust_class: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyArg {
    Oracle,
    Recursive,
    Subexp,
    Threshold,
    Cograph,
    Bullfree,
}

#[derive(Args, Debug, Serialize)]
pub struct SolveArgs {
    /// Instance JSON file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "recursive")]
    pub strategy: StrategyArg,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct OracleArgs {
    /// Instance JSON (or list instance JSON with `--list`), `-` for stdin.
    pub input: PathBuf,
    /// Read a list instance and decide satisfiability.
    #[arg(long)]
    pub list: bool,
    /// Host size cap for the exhaustive search.
    #[arg(long, default_value_t = 12)]
    pub max_vertices: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct CrosscheckArgs {
    /// Host class, e.g. `p5-free`, `p5-free,bull-free`, `cograph`.
    #[arg(long, default_value = "p5-free")]
    pub class: String,
    /// Comma-separated strategies; the first is the reference.
    #[arg(long, value_delimiter = ',', default_value = "oracle,recursive")]
    pub strategies: Vec<StrategyArg>,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    #[arg(long, default_value_t = 9)]
    pub max_n: usize,
    /// Pattern size is drawn from `1..=max_colors`.
    #[arg(long, default_value_t = 3)]
    pub max_colors: usize,
    /// Only sample connected hosts.
    #[arg(long)]
    pub connected: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Rejection-sampling attempts per host.
    #[arg(long, default_value_t = 200_000)]
    pub budget: usize,
    /// Worker threads (overridden by HCOLOR_THREADS).
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Corrupt the last strategy's optimum, to exercise the mismatch path.
    #[arg(long)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    /// Named graph: path, cycle, complete, edgeless, star-subdivision, l, qk, bull, 2k2, petersen, p7-counterexample.
    #[arg(long, conflicts_with = "class")]
    pub kind: Option<String>,
    /// Size parameter of the named graph.
    #[arg(long, visible_alias = "t", default_value_t = 1)]
    pub k: usize,
    /// Sample a random graph from this class instead.
    #[arg(long)]
    pub class: Option<String>,
    /// Vertices of the sampled graph.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Edge or join probability for sampling.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long)]
    pub connected: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200_000)]
    pub budget: usize,
    /// Wrap the graph into an instance with a random pattern on this many colors.
    #[arg(long)]
    pub colors: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct RecognizeArgs {
    /// Graph JSON file, or `-` for stdin.
    pub input: PathBuf,
    /// Comma-separated classes.
    #[arg(long)]
    pub class: String,
}

#[derive(Args, Debug, Serialize)]
pub struct MonitorArgs {
    /// Graph JSON file, or `-` for stdin.
    pub input: PathBuf,
    /// First vertex of the base.
    #[arg(long)]
    pub anchor: Option<usize>,
    /// Grow the base to three vertices.
    #[arg(long)]
    pub padded: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct DecomposeArgs {
    /// Graph JSON file, or `-` for stdin.
    pub input: PathBuf,
    /// Print the tree as JSON instead of indented text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct BranchArgs {
    /// Instance JSON file, or `-` for stdin.
    pub input: PathBuf,
    /// Use the anchored branching over positive pairs.
    #[arg(long)]
    pub full: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReduceTarget {
    Split,
    Cobipartite,
}

#[derive(Args, Debug, Serialize)]
pub struct ReduceArgs {
    /// Graph JSON file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub target: ReduceTarget,
    /// Emit the +1/-1 revenue instance instead of the list instance.
    #[arg(long)]
    pub as_revenue: bool,
}

impl Command {
    fn seed(&self) -> Option<u64> {
        match self {
            Command::Crosscheck(a) => Some(a.seed),
            Command::Gen(a) if a.class.is_some() || a.colors.is_some() => Some(a.seed),
            _ => None,
        }
    }

    fn run(&self) -> Result<String, CliError> {
        match self {
            Command::Solve(a) => commands::solve(a),
            Command::Oracle(a) => commands::oracle(a),
            Command::Crosscheck(a) => commands::crosscheck(a),
            Command::Gen(a) => commands::gen(a),
            Command::Recognize(a) => commands::recognize(a),
            Command::Monitor(a) => commands::monitor(a),
            Command::Decompose(a) => commands::decompose(a),
            Command::Branch(a) => commands::branch(a),
            Command::Reduce(a) => commands::reduce(a),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let start = Instant::now();
    let result = cli.command.run();
    let (output, code) = match &result {
        Ok(out) => (out.as_str(), exit::OK),
        Err(e) => (e.output.as_deref().unwrap_or(""), e.code),
    };
    if !output.is_empty() {
        println!("{output}");
    }
    if let Err(e) = &result {
        eprintln!("error: {}", e.message);
    }
    if let Some(path) = &cli.manifest {
        let m = manifest::RunManifest::new(&cli.command, cli.command.seed(), output, start.elapsed(), code);
        if let Err(err) = m.write(path) {
            eprintln!("error: cannot write manifest {}: {err}", path.display());
            return ExitCode::from(exit::USAGE);
        }
    }
    ExitCode::from(code)
}
