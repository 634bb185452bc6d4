use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const SCHEMAS: &str = "\
Input and output formats (JSON, \"format\": 1):

  Hypergraph
    {\"format\": 1, \"vertices\": [\"1\", \"2\", \"3\"], \"edges\": [[\"1\", \"2\"], [\"2\", \"3\"]],
     \"isolated\": []}
    Labels may be strings or integers. \"vertices\" is optional; without it
    vertices appear in order of first use in \"edges\", then \"isolated\".
    Edges must be nonempty and distinct. At most 64 vertices.

  Simplicial complex
    {\"format\": 1, \"ground\": [\"a\", \"b\"], \"kind\": \"nonvoid\",
     \"maximal_faces\": [[\"a\"], [\"b\"]]}
    \"kind\" is \"void\" (no faces; \"maximal_faces\" must be []) or
    \"nonvoid\". The empty complex {∅} is \"nonvoid\" with [[]].

  Cover system (rainbow)
    {\"hypergraph\": {..}, \"covers\": [[\"1\", \"3\"], [\"2\"]]}

  Betti numbers are reported sparsely, {\"dim\": value} for nonzero entries,
  with dimension -1 for the empty complex. \"inf\" stands for infinity.

Exit codes: 0 success, 1 verification failure, 2 input error.";

#[derive(Parser, Debug)]
#[command(
    name = "noncover",
    version,
    about = "Homology, domination parameters and Leray numbers of noncover complexes"
)]
#[command(after_long_help = SCHEMAS)]
pub struct Cli {
    /// Worker threads
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Largest vertex count accepted by exhaustive computations
    /// (default 24, or 20 for Leray numbers)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub vertex_cap: Option<u64>,

    /// Lift all size caps
    #[arg(long, global = true)]
    pub override_cap: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a hypergraph from a named family
    Generate(GenerateArgs),
    /// Reduced Betti numbers over Z2
    Betti(ComplexArgs),
    /// Homological connectivity η
    Eta(ComplexArgs),
    /// Leray number
    Leray(ComplexArgs),
    /// Domination parameters of a hypergraph
    Domination(DominationArgs),
    /// Dual hypergraph, or Alexander dual of a complex
    Dual(InputArg),
    /// Smallest rainbow cover of a cover system
    Rainbow(InputArg),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    TightPath,
    TightPathModified,
    TightCycle,
    TightCycleModified,
    CompleteUniform,
    ExampleHr,
    ExampleFr,
    ExampleAnk,
    Genpos,
    Random,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Seed for `random`
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Vertex count bound for `random`
    #[arg(long, default_value_t = 8)]
    pub max_vertices: usize,
    /// Edge size bound for `random`
    #[arg(long, default_value_t = 3)]
    pub max_edge_size: usize,
    /// Give every vertex an edge (`random`)
    #[arg(long)]
    pub no_isolated: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexChoice {
    Noncover,
    Independence,
}

impl ComplexChoice {
    pub fn name(self) -> &'static str {
        match self {
            ComplexChoice::Noncover => "noncover",
            ComplexChoice::Independence => "independence",
        }
    }
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// Input file, or - for stdin
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    /// Complex built from a hypergraph input (default noncover); not
    /// allowed with a complex input
    #[arg(long, value_enum)]
    pub complex: Option<ComplexChoice>,
    #[command(flatten)]
    pub input: InputArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    GammaTilde,
    GammaSi,
    GammaE,
    T,
    All,
}

#[derive(Args, Debug)]
pub struct DominationArgs {
    #[arg(long, value_enum, default_value_t = Param::All)]
    pub param: Param,
    /// Include witnesses
    #[arg(long)]
    pub witness: bool,
    #[command(flatten)]
    pub input: InputArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or `all`: duality, eta-dual, leray-bounds, tight-paths,
    /// tight-cycles, examples, edge-removal, genpos, rainbow, dual-hypergraph,
    /// star-cluster
    pub suite: String,
    /// Largest n in the path and cycle sweeps
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Largest k in the path and cycle sweeps
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
    #[arg(long, default_value_t = 2020)]
    pub seed: u64,
    /// Instances per random suite (defaults differ per suite)
    #[arg(long)]
    pub samples: Option<usize>,
}
