//! `ccrit`: build, verify and measure crossing-critical graph families.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes: 0 success, 1 a check failed, 2 bad parameters or input,
/// 3 a budget ran out before a verdict.
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_PARAMS: u8 = 2;
pub const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "ccrit", version, about = "Crossing-critical graph families")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Planarity tests the exact search may spend.
    #[arg(long, global = true, default_value_t = ccrit::oracle::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Seed of the insertion heuristic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Graph output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family member and write it with a JSON report.
    Build(BuildArgs),
    /// Run checks on a graph file.
    Verify(VerifyArgs),
    /// Exact crossing number of a graph file.
    Cr(CrArgs),
    /// Exact tile crossing number of a tile file.
    Tcr(TcrArgs),
    /// Write a tile as JSON.
    Tile(TileArgs),
    /// Zip two graph files at a vertex of each.
    Zip(ZipArgs),
    /// Solve the Γ parameters for a, b, k.
    Solve(SolveArgs),
    /// Γ parameters, predictions and builds.
    Gamma {
        #[command(subcommand)]
        action: GammaAction,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Staircase graph `S(n, m, c)`.
    S,
    /// `Q(a, b, n)` member at `t`.
    Q,
    /// `H(w, s)`.
    H,
    /// Zip chain `R(d, D, p)`.
    R,
    /// Complete graph `K_n`.
    K,
    /// Complete bipartite graph `K_{d,D}`.
    Kb,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Graph output file (stdout when absent).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// JSON report file (stderr when absent).
    #[arg(short, long)]
    pub report: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(value_enum, ignore_case = true)]
    pub family: Family,
    #[arg(short)]
    pub n: Option<usize>,
    #[arg(short)]
    pub m: Option<usize>,
    #[arg(short)]
    pub c: Option<usize>,
    #[arg(short)]
    pub w: Option<usize>,
    #[arg(short)]
    pub s: Option<usize>,
    #[arg(short)]
    pub d: Option<usize>,
    #[arg(short = 'D')]
    pub dp: Option<usize>,
    #[arg(short)]
    pub p: Option<usize>,
    #[arg(short)]
    pub a: Option<u64>,
    #[arg(short)]
    pub b: Option<u64>,
    #[arg(short)]
    pub t: Option<u64>,
    /// Verify the strip certificate and drawing of an `S` or `Q` build.
    #[arg(long)]
    pub certify: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Edge-list or JSON graph file.
    pub graph: PathBuf,
    #[arg(long)]
    pub planar: bool,
    #[arg(long)]
    pub simple: bool,
    /// Check vertex and edge connectivity at least this value.
    #[arg(long)]
    pub connectivity: Option<usize>,
    #[arg(long)]
    pub average_degree: bool,
    #[arg(long)]
    pub cr_exact: bool,
    /// Check crossing-criticality for this crossing number.
    #[arg(long)]
    pub critical: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CrArgs {
    pub graph: PathBuf,
    /// Stop after exhausting this level.
    #[arg(long)]
    pub max_level: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TcrArgs {
    /// Tile JSON file.
    pub tile: PathBuf,
    /// Frame multiplicity of the gadget.
    #[arg(long, default_value_t = 3)]
    pub bundle: usize,
    #[arg(long)]
    pub max_level: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileFamily {
    /// Staircase tile `S_n`.
    S,
    /// `H_w`.
    H,
}

#[derive(Args, Debug)]
pub struct TileArgs {
    #[arg(value_enum, ignore_case = true)]
    pub family: TileFamily,
    #[arg(short)]
    pub n: Option<usize>,
    #[arg(short)]
    pub w: Option<usize>,
    /// Thick slots to contract, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub contract: Vec<usize>,
    #[arg(long)]
    pub invert_right: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ZipArgs {
    pub g1: PathBuf,
    pub v1: u32,
    pub g2: PathBuf,
    pub v2: u32,
    /// Pairs `x:y` sending neighbour x of v1 to neighbour y of v2.
    #[arg(long, value_delimiter = ',')]
    pub sigma: Vec<String>,
    /// Report the isomorphism classes over all bijections instead.
    #[arg(long)]
    pub classes: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SolveArgs {
    #[arg(short, allow_negative_numbers = true)]
    pub a: i128,
    #[arg(short, allow_negative_numbers = true)]
    pub b: i128,
    #[arg(short, allow_negative_numbers = true)]
    pub k: i128,
    /// Defaults to k.
    #[arg(short, allow_negative_numbers = true)]
    pub t: Option<i128>,
    /// Accept `t < k`, flagged as outside the family.
    #[arg(long)]
    pub expert: bool,
    /// Use the least structurally valid t (implies --expert).
    #[arg(long)]
    pub minimal_t: bool,
}

#[derive(Subcommand, Debug)]
pub enum GammaAction {
    Solve(SolveArgs),
    /// Counts and average degree predicted from the parameters.
    Predict(SolveArgs),
    /// Build the zip chain and compare it with the prediction.
    Build {
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
