use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use udgds_core::instances::PaperInstance;
use udgds_core::{Algorithm, OrderPolicy};

mod commands;
mod input;
mod report;

use report::{exit_code, Usage};

/// Approximate minimum (independent) dominating sets in unit disk graphs.
#[derive(Debug, Parser)]
#[command(name = "udgds", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random point instance.
    Gen(GenArgs),
    /// Run one algorithm on an instance and write the verified solution.
    Solve(SolveArgs),
    /// Check a solution file against an instance.
    Verify(VerifyArgs),
    /// Compare solution sizes with the exact optimum over a set of instances.
    Ratio(RatioArgs),
    /// Time an algorithm on random instances of growing size.
    Bench(BenchArgs),
    /// Write a built-in instance to a file.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Points,
    Graph,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Number of points.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=u32::MAX as u64))]
    n: u64,
    /// Side length of the square the points are drawn from.
    #[arg(long = "box", value_parser = clap::value_parser!(i64).range(1..))]
    box_side: i64,
    /// Adjacency threshold (points at distance <= threshold are adjacent).
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    threshold: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw points around this many cluster centers instead of uniformly.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "flowers")]
    clusters: Option<u64>,
    /// Per-axis spread of clustered points (default: one threshold).
    #[arg(long, requires = "clusters", value_parser = clap::value_parser!(i64).range(0..))]
    spread: Option<i64>,
    /// Plant this many stars with five independent petals each.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    flowers: Option<u64>,
    /// Points file to write (standard output if omitted).
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Also write the induced graph in edge-list form.
    #[arg(long)]
    graph_output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Instance file (points or graph).
    #[arg(long, short)]
    input: PathBuf,
    /// Input format; detected from the header when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    #[command(flatten)]
    input: InputArgs,
    /// Vertex order for arbitrary choices: `id` or `seed:<n>`.
    #[arg(long, default_value = "id", value_parser = parse_order)]
    order: OrderPolicy,
    /// Largest solution size the exact solver may return.
    #[arg(long)]
    cap: Option<usize>,
    /// Node budget of the exact solver (default: $UDGDS_ORACLE_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
    /// Solution file to write (standard output if omitted; the report then
    /// goes to standard error).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Check {
    Dominating,
    Independent,
    Irreducible,
    Overwhelmed,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short)]
    solution: PathBuf,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "dominating,independent"
    )]
    check: Vec<Check>,
    /// Order used to pick witnesses for `overwhelmed`; should match the
    /// order the solution was computed with.
    #[arg(long, default_value = "id", value_parser = parse_order)]
    order: OrderPolicy,
}

#[derive(Debug, Args)]
struct RatioArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    /// `builtin`, `builtin:fig4`, `builtin:fig6`, a directory of instance
    /// files, or `random:n<N>:count<C>[:density<D>][:seed<S>]`.
    #[arg(long)]
    instances: String,
    /// Largest optimum the exact solver looks for (default: n).
    #[arg(long)]
    oracle_cap: Option<usize>,
    /// Node budget of the exact solver (default: $UDGDS_ORACLE_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
    /// Search this many vertex orders per instance for the worst run.
    #[arg(long, value_name = "BUDGET")]
    search_adversarial: Option<usize>,
    /// Order for plain runs: `id` or `seed:<n>`.
    #[arg(long, default_value = "id", value_parser = parse_order)]
    order: OrderPolicy,
    /// Seed of the adversarial search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Instances per size; the median time over them is reported.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    seeds: u64,
    /// Expected points per threshold-by-threshold square.
    #[arg(long, default_value_t = 2.0)]
    density: f64,
    /// Timed runs per instance; the fastest counts.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    rounds: u64,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[arg(long, value_parser = parse_builtin)]
    instance: PaperInstance,
    #[arg(long, value_enum, default_value = "points")]
    format: Format,
    #[arg(long, short)]
    output: PathBuf,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.label()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_order(s: &str) -> Result<OrderPolicy, String> {
    s.parse()
        .map_err(|_| "expected `id` or `seed:<n>`".to_string())
}

fn parse_builtin(s: &str) -> Result<PaperInstance, String> {
    s.parse()
        .map_err(|_| "expected `fig4` or `fig6`".to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => commands::gen(args),
        Command::Solve(args) => commands::solve(args),
        Command::Verify(args) => commands::verify(args),
        Command::Ratio(args) => commands::ratio(args),
        Command::Bench(args) => commands::bench(args),
        Command::Export(args) => commands::export(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("udgds: {err:#}");
            if err.downcast_ref::<Usage>().is_some() {
                eprintln!("run `udgds --help` for usage");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
