//! `eqcodes`: build, verify and search equidistant codes from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "eqcodes", version, about = "Equidistant subspace codes and constant-rank codes over finite fields")]
pub struct Cli {
    /// Write the produced document here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Reserved; every current code path is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code and write it as a JSON document with its profile.
    Construct(ConstructArgs),
    /// Recompute the profile of a document and check expectations.
    Verify(VerifyArgs),
    /// Print size bounds for t-intersecting codes and partial spreads.
    Bounds(BoundsArgs),
    /// Build the equidistant constant-rank code {M_v : v != 0}.
    Rankcode(RankcodeArgs),
    /// Exact search for partial spreads or t-intersecting cliques.
    Search(SearchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Spread,
    Sunflower,
    Ball,
    Plucker,
    Recursive,
    #[value(name = "example-g263")]
    ExampleG263,
    MixedProjective,
    Orthogonal,
    Extend,
}

#[derive(Args, Debug, Clone, Default)]
pub struct BudgetArgs {
    /// Maximum search nodes; accepts forms like 10000000, 10^7 or 1e7.
    #[arg(long, value_parser = commands::parse_count)]
    pub node_limit: Option<u64>,
    /// Wall-clock limit in seconds; results are then not deterministic.
    #[arg(long)]
    pub time_limit: Option<f64>,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub kind: Kind,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Number of extension steps for `extend`.
    #[arg(long, default_value_t = 1)]
    pub l: usize,
    /// Input document for `orthogonal` and `extend`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub expect_t: Option<usize>,
    #[arg(long)]
    pub expect_d: Option<usize>,
    #[arg(long)]
    pub expect_size: Option<usize>,
    #[arg(long, action = clap::ArgAction::Set)]
    pub expect_sunflower: Option<bool>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub t: Option<u64>,
}

#[derive(Args, Debug)]
pub struct RankcodeArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchKind {
    Spread,
    Clique,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    pub kind: SearchKind,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub forbid_sunflower: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
