//! `closeness`: closeness metrics, payoff tables, decisions and oracle
//! verification for undirected graphs.
//!
//! Exit codes: 0 success or verification pass, 1 verification mismatch,
//! 2 usage, parse or domain error.

mod render;

use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use closeness_core::decision::{
    build_payoff_table, decide, find_saddle_points, parse_weights, Criterion, CriterionKind,
};
use closeness_core::graph::{generate, parse_graph, FamilySpec};
use closeness_core::metrics::metric_report;
use closeness_core::verify::{fixture_check, sweep, ParamRange, SweepReport, Target};
use closeness_core::{Graph, TOLERANCE};

#[derive(Debug, Parser)]
#[command(name = "closeness", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closeness, residual and additional closeness and their ratios.
    Metrics {
        /// Edge-list file, `-` for stdin, or a generator spec such as
        /// `cycle:6` or `cliques:3,4`.
        graph: String,
    },
    /// Payoff table over (deleted link) x (added link), with saddle points.
    Payoff { graph: String },
    /// Best link to build under one or more decision criteria.
    Decide {
        graph: String,

        /// Comma-separated criteria, or `all`: equal-likelihood, weighted,
        /// pessimistic, optimistic, hurwicz, paper-regret, classical-savage.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        criteria: Vec<String>,

        /// Hurwicz weight on the optimistic value.
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,

        /// File of `u v p` lines giving the failure probability of each link.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Compare closed forms with brute force.
    Verify {
        /// `fixtures`, `all`, or a sweep target such as `cycle-maximin`
        /// (alias `theorem5`).
        target: String,

        /// Parameter ranges such as `m=8..24` or `n=5`.
        ranges: Vec<String>,

        #[arg(long, default_value_t = TOLERANCE)]
        tolerance: f64,
    },
}

/// Error that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    let format = cli.format;
    match cli.command {
        Command::Metrics { graph } => {
            let g = load_graph(&graph)?;
            let report = metric_report(&g);
            print!("{}", render::metrics(&graph, &g, &report, format)?);
        }
        Command::Payoff { graph } => {
            let g = load_graph(&graph)?;
            let table = build_payoff_table(&g)?;
            let saddles = find_saddle_points(&table);
            print!("{}", render::payoff(&table, &saddles, format)?);
        }
        Command::Decide {
            graph,
            criteria,
            alpha,
            weights,
        } => {
            let g = load_graph(&graph)?;
            let weights = weights
                .map(|path| read_text(&path).and_then(|text| Ok(parse_weights(&text)?)))
                .transpose()?;
            let criteria = expand_criteria(&criteria, alpha, weights)?;
            let table = build_payoff_table(&g)?;
            let reports = criteria
                .iter()
                .map(|c| decide(&table, c))
                .collect::<Result<Vec<_>, _>>()?;
            print!("{}", render::decisions(&reports, format)?);
        }
        Command::Verify {
            target,
            ranges,
            tolerance,
        } => {
            let reports = run_verify(&target, &ranges, tolerance)?;
            print!("{}", render::sweeps(&reports, format)?);
            if reports.iter().any(|r| !r.pass) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(target: &str, ranges: &[String], tolerance: f64) -> Result<Vec<SweepReport>, UsageError> {
    let ranges = ranges
        .iter()
        .map(|r| r.parse::<ParamRange>())
        .collect::<Result<Vec<_>, _>>()?;
    match target.to_ascii_lowercase().as_str() {
        "fixtures" => {
            if !ranges.is_empty() {
                return Err(UsageError("fixtures take no ranges".into()));
            }
            Ok(vec![fixture_check()?])
        }
        "all" => {
            if !ranges.is_empty() {
                return Err(UsageError("`all` runs default ranges only".into()));
            }
            let mut out = vec![fixture_check()?];
            for t in Target::ALL {
                out.push(sweep(t, &[], tolerance)?);
            }
            Ok(out)
        }
        name => Ok(vec![sweep(name.parse()?, &ranges, tolerance)?]),
    }
}

fn expand_criteria(
    names: &[String],
    alpha: f64,
    weights: Option<closeness_core::decision::EdgeWeights>,
) -> Result<Vec<Criterion>, UsageError> {
    let mut out = Vec::new();
    for name in names {
        if name.trim().eq_ignore_ascii_case("all") {
            out.extend(Criterion::all_unweighted(alpha)?);
            if let Some(w) = &weights {
                out.insert(1, Criterion::Weighted { weights: w.clone() });
            }
            continue;
        }
        out.push(match name.parse::<CriterionKind>()? {
            CriterionKind::EqualLikelihood => Criterion::EqualLikelihood,
            CriterionKind::Weighted => Criterion::Weighted {
                weights: weights
                    .clone()
                    .ok_or_else(|| UsageError("the weighted criterion needs --weights".into()))?,
            },
            CriterionKind::Pessimistic => Criterion::Pessimistic,
            CriterionKind::Optimistic => Criterion::Optimistic,
            CriterionKind::Hurwicz => Criterion::hurwicz(alpha)?,
            CriterionKind::PaperRegret => Criterion::PaperRegret,
            CriterionKind::ClassicalSavage => Criterion::ClassicalSavage,
        });
    }
    if out.is_empty() {
        return Err(UsageError("no criteria given".into()));
    }
    Ok(out)
}

/// A readable file, `-` for stdin, or a generator spec.
fn load_graph(arg: &str) -> Result<Graph, UsageError> {
    if arg == "-" || Path::new(arg).is_file() {
        return parse_graph(&read_text(arg)?).map_err(|e| UsageError(format!("{arg}: {e}")));
    }
    if arg.contains(':') {
        return Ok(generate(&arg.parse::<FamilySpec>()?)?);
    }
    Err(UsageError(format!("`{arg}` is neither a file nor a generator spec")))
}

fn read_text(path: &str) -> Result<String, UsageError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        return Ok(buf);
    }
    fs::read_to_string(path).map_err(|e| UsageError(format!("{path}: {e}")))
}
