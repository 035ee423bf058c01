//! `berge`: construct, check, reduce, transform, classify and verify Berge-Turán instances.
//!
//! Exit codes: 0 success or property holds, 1 property violated, 2 usage or input error,
//! 3 budget exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "berge", version, about = "Berge paths and cycles: constructions, reductions and exact searches")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Worker threads for search and verify.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Write an extremal construction.
    Construct(ConstructArgs),
    /// Test a property of a hypergraph file.
    Check(CheckArgs),
    /// Reduce a hypergraph to a red-blue graph with a certificate.
    Reduce(ReduceArgs),
    /// Apply a Kelmans operation to a graph or red-blue graph file.
    Kelmans(KelmansArgs),
    /// Evaluate clique counts, g_r or P*, or run the recoloring pipeline.
    Gr(GrArgs),
    /// Classify components or leaf blocks of a graph file.
    Classify(ClassifyArgs),
    /// Evaluate a closed-form Turán value.
    Formula(FormulaArgs),
    /// Run the full verification suite.
    Verify(VerifyArgs),
    /// Enumerate, search and generate instances.
    Search(SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// H(n, k, r), extremal for connected Berge-P_k-free r-graphs.
    HPath,
    /// H(n, k+1, r), extremal for 2-connected r-graphs without Berge cycles of length >= k.
    HCycle,
    /// W(n, k, s).
    W,
    /// G2(n, j).
    G2,
    /// G3(n, stars).
    G3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorArg {
    Red,
    Blue,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    /// Star sizes for g3, comma separated.
    #[arg(long, value_delimiter = ',')]
    stars: Vec<usize>,
    /// Write graphs as monochrome red-blue graphs.
    #[arg(long, value_enum)]
    color: Option<ColorArg>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    BergePathFree,
    BergeCycleFree,
    Connected,
    TwoConnected,
    LongestPath,
    LongestCycle,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    property: Property,
    input: PathBuf,
    /// Path order or minimum cycle length for the freeness properties.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct ReduceArgs {
    input: PathBuf,
    /// Where to write the certificate JSON.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Where to write the red-blue graph.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Args)]
struct KelmansArgs {
    input: PathBuf,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
    /// Treat the input as a red-blue graph and use the colored operation.
    #[arg(long)]
    colored: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Cliques,
    GR,
    PStar,
    Recolor,
}

#[derive(Args)]
struct GrArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Param::GR)]
    param: Param,
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Clique size for `--param cliques`.
    #[arg(long, default_value_t = 3)]
    j: usize,
    #[arg(long, default_value_t = 22)]
    brute_limit: usize,
    /// Allow a flagged greedy lower bound above the exact limit.
    #[arg(long)]
    heuristic: bool,
    /// Forbidden path order or cycle length for `--param recolor`.
    #[arg(long)]
    k: Option<usize>,
    /// Order parameter of the W shape for `--param recolor`.
    #[arg(long)]
    w_order: Option<usize>,
    /// Size of X for `--param recolor`.
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Args)]
struct ClassifyArgs {
    input: PathBuf,
    #[arg(long)]
    k: usize,
    /// Classify leaf blocks instead of components.
    #[arg(long)]
    leaf_blocks: bool,
    /// Minimum size of a troublesome block (default 4k).
    #[arg(long)]
    threshold: Option<usize>,
}

#[derive(Args)]
struct FormulaArgs {
    family: String,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long, default_value_t = 2)]
    r: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Only `all` is supported.
    target: String,
    /// File holding the base seed (`seed = N` or `N`).
    #[arg(long)]
    seed_file: Option<PathBuf>,
    /// Where to write the JSON report.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[command(subcommand)]
    problem: SearchProblem,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    All,
    Connected,
    TwoConnected,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RandomKind {
    Graph,
    Hypergraph,
    ConnectedHypergraph,
    TwoConnectedGraph,
}

#[derive(Subcommand)]
enum SearchProblem {
    /// Graphs on n vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
        /// Print every graph, not just the count.
        #[arg(long)]
        list: bool,
    },
    /// Exhaustive check of a classical graph result.
    Graph {
        kind: String,
        #[arg(long)]
        n_max: usize,
    },
    /// Exact Berge-Turán number of small r-graphs.
    Hyper {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = PatternArg::Path)]
        pattern: PatternArg,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
        #[arg(long, default_value_t = 50_000_000)]
        node_cap: u64,
        #[arg(long, default_value_t = 40)]
        exact_limit: u64,
        #[arg(long)]
        heuristic: bool,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timings: bool,
        /// Write the witness to this file instead of inlining it.
        #[arg(long)]
        witness_file: Option<PathBuf>,
    },
    /// A seeded random instance.
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whether any single added hyperedge keeps H(n, k, r) (or H(n, k+1, r)) free.
    Maximality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Test H(n, k+1, r) against long cycles instead.
        #[arg(long)]
        cycle: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
