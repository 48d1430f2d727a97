//! `solvcover` command-line front end.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "solvcover",
    version,
    about = "Solvabilizer covering numbers of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    All,
    #[value(alias = "inv")]
    Involutions,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute α and/or α_inv and write a result record.
    Solve(SolveArgs),
    /// Check a certificate file against a group.
    Verify(VerifyArgs),
    /// Render a directory of result records as a table.
    Table(TableArgs),
    /// List the family bounds that apply to a group.
    Bounds(BoundsArgs),
}

#[derive(clap::Args, Debug)]
pub struct SolveArgs {
    /// Group expression, e.g. `psl2(7)` or `wreath(psl2(4),2,cycle)`.
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value = "both")]
    pub mode: ModeArg,
    /// Wall-clock budget per solve, in seconds.
    #[arg(long, default_value_t = 120.0)]
    pub time_limit: f64,
    #[arg(long, default_value_t = 10_000_000)]
    pub node_limit: u64,
    /// Sequential search, so certificates are reproducible.
    #[arg(long)]
    pub deterministic: bool,
    /// Enumeration cap; defaults to `SOLVCOVER_CAP` or the library default.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Where to write the result record.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the covers found and keep them in the record.
    #[arg(long)]
    pub emit_certificate: bool,
    /// Worker threads for the parallel search.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Group expression; falls back to the certificate's `# group:` header.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub certificate: PathBuf,
    /// Falls back to the certificate's `# mode:` header.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(clap::Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub results: PathBuf,
    /// Tab-separated output.
    #[arg(long)]
    pub tsv: bool,
}

#[derive(clap::Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub group: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => commands::solve(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Table(a) => commands::table(&a),
        Command::Bounds(a) => commands::bounds(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
