//! `rsdp`: differentially private answers to graph queries, plus the
//! brute-force checks and sensitivity experiments behind them.
//!
//! Exit status: 0 on success, 1 on bad usage or input, 2 when a computation
//! fails on valid input (LP non-convergence, oracle caps, exhausted budget,
//! a failed verification).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rsdp", version, about = "Restricted-sensitivity private query engine for labeled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a synthetic graph as an edge list and a label table.
    Gen(GenArgs),
    /// Project a graph into the bounded-degree class and report the result.
    Project(ProjectArgs),
    /// Sensitivity reports.
    #[command(subcommand)]
    Sensitivity(SensitivityCommand),
    /// Release a differentially private answer to one query.
    Answer(AnswerArgs),
    /// Check every bound exhaustively on a small universe.
    Verify(VerifyArgs),
    /// Restricted versus smooth sensitivity table as CSV.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
struct GraphFiles {
    /// Edge list, one `u v` pair per line.
    #[arg(long)]
    edges: PathBuf,
    /// Label table with header `vertex,l0,...`.
    #[arg(long)]
    labels: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Star,
    Complete,
    CompleteBipartite,
    Cycle,
    UniformRandom,
    PreferentialAttachment,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(short, long)]
    n: usize,
    /// Edge probability (uniform_random).
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    /// Edges per new vertex (preferential_attachment).
    #[arg(long, default_value_t = 2)]
    attach: usize,
    /// Left part size (complete_bipartite); defaults to n/2.
    #[arg(long)]
    left: Option<usize>,
    /// Probability of label 1 for each vertex.
    #[arg(long, default_value_t = 0.0)]
    label_p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    edges: PathBuf,
    #[arg(long)]
    labels: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProjectModel {
    Edge,
    Vertex,
    Greedy,
}

#[derive(Args, Debug)]
struct ProjectArgs {
    #[command(flatten)]
    graph: GraphFiles,
    #[arg(long, value_enum)]
    model: ProjectModel,
    #[arg(short)]
    k: u32,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the projected edge list.
    #[arg(long)]
    out_edges: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Edge,
    Vertex,
}

#[derive(Subcommand, Debug)]
enum SensitivityCommand {
    /// Analytic restricted-sensitivity bound of a query over H_k.
    Bounds {
        #[arg(long)]
        query: PathBuf,
        #[arg(short)]
        k: u32,
        #[arg(long, value_enum)]
        model: Model,
    },
    /// Exact restricted and global sensitivity on an enumerated universe,
    /// plus local and smooth sensitivity at a graph when one is given.
    Exact {
        #[arg(long)]
        query: PathBuf,
        #[arg(short)]
        k: u32,
        #[arg(long, value_enum)]
        model: Model,
        #[arg(short, long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        /// Smoothing rate for the smooth sensitivity at the graph.
        #[arg(long, default_value_t = 0.1)]
        beta: f64,
        #[arg(long, requires = "labels")]
        edges: Option<PathBuf>,
        #[arg(long, requires = "edges")]
        labels: Option<PathBuf>,
    },
    /// Smooth upper bound for given parameters, with its global envelope.
    Smooth {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 4.0)]
        c: f64,
        #[arg(long)]
        rs: f64,
        #[arg(long, default_value_t = 0.0)]
        d_hat: f64,
    },
}

#[derive(Args, Debug)]
struct AnswerArgs {
    #[command(flatten)]
    graph: GraphFiles,
    #[arg(long, value_enum)]
    model: Model,
    #[arg(short)]
    k: u32,
    #[arg(long)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON query specification.
    #[arg(long)]
    query: PathBuf,
    /// JSON budget ledger for this dataset; created on first use.
    #[arg(long)]
    budget: Option<PathBuf>,
    /// Total epsilon when creating a new budget ledger.
    #[arg(long, requires = "budget")]
    budget_epsilon: Option<f64>,
    /// Total delta when creating a new budget ledger.
    #[arg(long, requires = "budget", default_value_t = 0.0)]
    budget_delta: f64,
    /// Include the vertex mechanism's noise scale in the record. The scale
    /// depends on the data through the distance estimate and is not covered
    /// by the privacy guarantee.
    #[arg(long)]
    emit_scale: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(short, long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    alphabet: u32,
    #[arg(short, value_delimiter = ',', default_values_t = [0u32, 1, 2])]
    k: Vec<u32>,
    #[arg(long, default_value_t = 0.1)]
    beta: f64,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Bound,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(short, long)]
    n: usize,
    #[arg(short, value_delimiter = ',', default_values_t = [1u32])]
    k: Vec<u32>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Model::Edge, Model::Vertex])]
    models: Vec<Model>,
    /// JSON query specification; repeat for several. Defaults to the
    /// built-in query set.
    #[arg(long)]
    query: Vec<PathBuf>,
    #[arg(long, default_value_t = 1.0)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.135_335_283_236_612_7)]
    delta: f64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    #[arg(long, default_value_t = 2)]
    attach: usize,
    #[arg(long)]
    left: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    label_p: f64,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
