use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact facial-parity and facial WORM colorings of plane graphs.
///
/// Graphs travel as planegraph-v1 rotation-system documents; solver output
/// is a JSON result document on stdout.
#[derive(Debug, Parser)]
#[command(name = "facolor", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph document.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Describe a graph: faces, degrees, connectivity, Euler characteristic.
    Info(InputArgs),
    /// Solve a coloring problem and print a result document.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Re-verify the witness of a result document against a graph.
    Check(CheckArgs),
    /// Export to other formats.
    #[command(subcommand)]
    Export(ExportCommand),
    /// Reproduce the published results.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph document; stdin when omitted or "-".
    #[arg(short, long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Theta graph with paths of lengths I, J and K.
    Theta {
        i: usize,
        j: usize,
        k: usize,
        /// Allow more than one path of length 1.
        #[arg(long)]
        multigraph: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Two 5-cycles sharing a vertex.
    #[command(name = "bouquet-c5")]
    BouquetC5 {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cycle on N vertices.
    Cycle {
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The (P3,P3)-WORM obstruction, padded with a pendant path to N vertices.
    WormGadget {
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Line graph of a graph with maximum degree at most 3.
    LineGraph {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Parallel search workers; results do not depend on this.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Stop after this many search nodes (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    pub budget: u64,
    /// Accept graphs with bridges or cut vertices, counting walk appearances.
    #[arg(long)]
    pub extended: bool,
}

#[derive(Debug, Args)]
pub struct MinArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Largest color count to try.
    #[arg(long)]
    pub max_k: Option<usize>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum SolveCommand {
    /// Minimum facial-parity edge-coloring.
    FpEdge(MinArgs),
    /// Minimum facial-parity vertex-coloring.
    FpVertex(MinArgs),
    /// Facial (P_rainbow, P_mono)-WORM colorability.
    Worm {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        rainbow: usize,
        #[arg(long)]
        mono: usize,
        /// Color cap (defaults to the vertex count, which is exact).
        #[arg(long)]
        colors: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    FpEdge,
    FpVertex,
    Worm,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::FpEdge => "fp-edge",
            ProblemKind::FpVertex => "fp-vertex",
            ProblemKind::Worm => "worm",
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub problem: ProblemKind,
    #[command(flatten)]
    pub input: InputArgs,
    /// Result document to check.
    #[arg(short = 'c', long = "result")]
    pub result: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum ExportCommand {
    /// Graphviz DOT, optionally colored by a result document.
    Dot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'c', long = "result")]
        result: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Run every acceptance criterion and print a pass/fail table.
    Paper {
        /// Skip the vertex solve on L(theta(4,4,4)) and the n=21 gadget.
        #[arg(long)]
        fast: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}
