//! `berge`: command-line front end for berge-core.
//!
//! Analysis commands read a hypergraph in the text format and print a JSON
//! report. Exit codes: 0 success, 1 a checked property failed, 2 bad input or
//! arguments, 3 the input does not meet a command's hypothesis.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use berge_core::census::RareRule;
use berge_core::search::{ex_table, format_table, SearchOptions};
use berge_core::{lower_bound_construction, random_bc4free, Hypergraph};

use report::Outcome;

#[derive(Debug, Parser)]
#[command(name = "berge", version, about = "Berge 4-cycle analysis for 3-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    Induced,
    AnyEdges,
}

impl From<RuleArg> for RareRule {
    fn from(r: RuleArg) -> RareRule {
        match r {
            RuleArg::Induced => RareRule::Induced,
            RuleArg::AnyEdges => RareRule::AnyEdges,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// 2-shadow edge list and per-vertex degrees.
    Shadow { input: PathBuf },
    /// Look for a Berge cycle of the given length.
    Check {
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    /// Block decomposition with classifications, leaves and block degrees.
    Blocks { input: PathBuf },
    /// 3-path and 4-cycle census with the counting claims.
    Census {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "induced")]
        rare_rule: RuleArg,
    },
    /// Evaluate the inequality chain; requires a Berge-C4-free input without
    /// isolated vertices.
    Verify { input: PathBuf },
    /// Print the projective-plane lower-bound construction.
    Construct {
        #[arg(long)]
        q: u64,
    },
    /// Print a seeded greedy random Berge-C4-free hypergraph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Table of exact extremal numbers for n = 3..=n-max.
    Search {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn read(path: &PathBuf) -> Result<Hypergraph, Outcome> {
    let text = fs::read_to_string(path).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    Hypergraph::parse(&text).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Outcome, Outcome> {
    match cli.command {
        Command::Shadow { input } => Ok(report::shadow(&read(&input)?)),
        Command::Check { input, length } => report::check(&read(&input)?, length),
        Command::Blocks { input } => Ok(report::blocks(&read(&input)?)),
        Command::Census { input, rare_rule } => Ok(report::census(&read(&input)?, rare_rule.into())),
        Command::Verify { input } => Ok(report::verify(&read(&input)?)),
        Command::Construct { q } => {
            let h = lower_bound_construction(q).map_err(|e| Outcome::input_error(e.to_string()))?;
            let comments = vec!["projective-plane lower-bound construction".to_string(), format!("q={q}")];
            Ok(Outcome::text(h.to_text_with_comments(&comments)))
        }
        Command::Random { n, m, seed } => {
            let h = random_bc4free(n, m, seed).map_err(|e| Outcome::input_error(e.to_string()))?;
            let comments =
                vec!["greedy random Berge-C4-free hypergraph".to_string(), format!("n={n} target_m={m} seed={seed}")];
            Ok(Outcome::text(h.to_text_with_comments(&comments)))
        }
        Command::Search { n_max, budget, threads } => {
            let rows = ex_table(n_max, SearchOptions { node_budget: budget, threads })
                .map_err(|e| Outcome::input_error(e.to_string()))?;
            Ok(Outcome::text(format_table(&rows)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = run(cli).unwrap_or_else(|o| o);
    outcome.emit()
}
