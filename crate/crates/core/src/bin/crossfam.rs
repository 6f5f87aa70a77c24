//! Command-line front end: generate, inspect, color and certify families.
//!
//! Exit codes: 0 on success, 1 when a property or certificate check fails
//! (or a search runs out of budget), 2 on usage and input errors.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crossfam::constructive::{color_with, Strategy};
use crossfam::exact::DEFAULT_NODE_BUDGET;
use crossfam::generators;
use crossfam::io;
use crossfam::predicates::q_set;
use crossfam::verify::{self, SuiteConfig, SuiteReport};
use crossfam::{AnalysisReport, Edge, Error, Family, Solver};

#[derive(Parser)]
#[command(name = "crossfam", version, about = "Cross-intersecting set families")]
struct Cli {
    /// Cap on search nodes for every exact solve.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    Wrap,
    GridTransversal,
    Padded,
    SimpleBased,
    Fano,
    IteratedFano,
    Triangulation,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    A,
    B,
    Union,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Prop4,
    Thm3,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Thm1,
    Thm2,
    Thm3,
    Prop1,
    LemmaFlower,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the example families.
    Gen {
        #[arg(value_enum)]
        example: Example,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        /// Base hypergraph for wrap / simple-based: c5, k3, fano, fano-pair or a family file.
        #[arg(long)]
        base: Option<String>,
        /// Output file; standard output when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Print every predicate and invariant.
    Check { file: PathBuf },
    /// Exact chromatic number.
    Chi { file: PathBuf },
    /// Exact covering number.
    Tau {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Union)]
        side: SideArg,
    },
    /// Emit a proper coloring.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Search for a flower.
    Flower {
        file: PathBuf,
        #[arg(long)]
        petals: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Union)]
        side: SideArg,
    },
    /// Intersection sizes over distinct edge pairs.
    Qset { file: PathBuf },
    /// Run a seeded verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

enum Failure {
    Violation(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(_)
            | Error::InternalContradiction(_)
            | Error::BudgetExhausted { .. } => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Family, Failure> {
    let parsed = io::read_family(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.family)
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => println!("{}", text()),
    }
}

fn named_base(name: &str) -> Result<Family, Failure> {
    Ok(match name {
        "c5" => generators::cycle(5)?,
        "k3" => generators::cycle(3)?,
        "fano" => generators::fano(),
        "fano-pair" => generators::disjoint_copies(&generators::fano(), 2)?,
        path => load(Path::new(path))?,
    })
}

fn side_edges(family: &Family, side: SideArg) -> Vec<Edge> {
    match side {
        SideArg::A => family.side_a().to_vec(),
        SideArg::B => family.side_b().to_vec(),
        SideArg::Union => family.union_edges(),
    }
}

fn set_text(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(|q| q.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let solver = Solver::with_budget(cli.node_budget);
    let format = cli.format;
    match cli.command {
        Command::Gen { example, n, m, k, grid, base, output } => {
            let family = match example {
                Example::Wrap => generators::wrap(&named_base(base.as_deref().unwrap_or("c5"))?)?,
                Example::GridTransversal => generators::grid_transversal(n.unwrap_or(3))?,
                Example::Padded => generators::padded(n.unwrap_or(3), m.unwrap_or(0))?,
                Example::SimpleBased => generators::simple_based(
                    &named_base(base.as_deref().unwrap_or("fano-pair"))?,
                    n.unwrap_or(4),
                    &solver,
                )?,
                Example::Fano => generators::fano(),
                Example::IteratedFano => generators::iterated_fano(k.unwrap_or(1))?,
                Example::Triangulation => generators::triangulation_percolation(grid.unwrap_or(3))?,
            };
            match output {
                Some(path) => io::write_family(&path, &family)?,
                None => print!("{}", io::serialize(&family)),
            }
        }
        Command::Check { file } => {
            let family = load(&file)?;
            let report = AnalysisReport::full(&family, &solver);
            emit(format, &report, || report_text(&report));
        }
        Command::Chi { file } => {
            let cert = solver.chi(&load(&file)?)?;
            emit(format, &cert, || format!("chi = {}\ncoloring = {:?}", cert.value, cert.coloring.colors()));
        }
        Command::Tau { file, side } => {
            let edges = side_edges(&load(&file)?, side);
            let cert = solver.tau(&edges)?;
            emit(format, &cert, || match &cert.transversal {
                Some(t) => format!("tau = {}\ntransversal = {t}", cert.value),
                None => format!("tau = inf (edge #{} is empty)", cert.infeasible_edge.unwrap_or(0)),
            });
        }
        Command::Color { file, strategy } => {
            let family = load(&file)?;
            let strategy = match strategy {
                StrategyArg::Exact => Strategy::Exact,
                StrategyArg::Prop4 => Strategy::Prop4,
                StrategyArg::Thm3 => Strategy::Thm3,
                StrategyArg::Auto => Strategy::Auto,
            };
            let coloring = color_with(&family, strategy, &solver)?;
            emit(format, &coloring, || {
                format!(
                    "method = {}\ncolors used = {}\ncoloring = {:?}",
                    coloring.method(),
                    coloring.distinct_colors(),
                    coloring.colors()
                )
            });
        }
        Command::Flower { file, petals, side } => {
            let edges = side_edges(&load(&file)?, side);
            let cert = solver.find_flower(&edges, petals)?;
            emit(format, &cert, || match &cert {
                Some(c) => format!("core = {}\npetals = {}\ntau(restriction) = {}", c.core, c.petals, c.tau_witness.value),
                None => "none".to_string(),
            });
        }
        Command::Qset { file } => {
            let q = q_set(&load(&file)?)?;
            emit(format, &q, || set_text(&q));
        }
        Command::Verify { suite, n, k, seed, trials } => {
            let cfg = SuiteConfig { seed, trials, n, k, solver };
            let reports: Vec<SuiteReport> = match suite {
                Suite::Thm1 => vec![verify::three_coloring(&cfg), verify::dispatcher(&cfg)],
                Suite::Thm2 => vec![verify::edge_bound(&cfg)],
                Suite::Thm3 => vec![verify::intersection_sizes(&cfg)],
                Suite::Prop1 => vec![verify::four_coloring(&cfg)],
                Suite::LemmaFlower => vec![verify::flowers(&cfg)],
            };
            emit(format, &reports, || {
                reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            });
            if let Some(bad) = reports.iter().find(|r| !r.passed()) {
                return Err(Failure::Violation(format!("suite {} failed", bad.suite)));
            }
        }
    }
    Ok(())
}

fn report_text(r: &AnalysisReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    [
        format!("vertices = {}", r.vertex_count),
        format!("edges = {} (a) + {} (b)", r.edges_a, r.edges_b),
        format!("intersecting = {}", r.is_intersecting),
        format!("cross-intersecting = {}", r.is_cross_intersecting),
        format!("sperner = {}", r.is_sperner),
        format!("uniform = {}", opt(r.is_uniform.map(|n| n.to_string()))),
        format!("critical = {}", r.is_critical),
        format!("n = {}", r.max_edge_size),
        format!("Q = {}", opt(r.q_set.as_ref().map(set_text))),
        format!("exceptional = {}", opt(r.exceptional.as_ref().map(|e| format!("m={} l={}", e.m, e.l)))),
        format!("chi = {}", opt(r.chi.map(|c| c.to_string()))),
        format!("tau(a) = {}", opt(r.tau_a.map(|t| t.to_string()))),
        format!("tau(b) = {}", opt(r.tau_b.map(|t| t.to_string()))),
    ]
    .join("\n")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
