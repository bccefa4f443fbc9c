use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use clutterkit::bounds::{self, BoundKind, BoundsError};
use clutterkit::constructions::{self, default_size_range};
use clutterkit::graph::DEFAULT_CAP;
use clutterkit::hardness::{self, HardnessError, Method};
use clutterkit::io::{self as kio, edge_report_json, hardness_report_json};
use clutterkit::Clutter;

#[derive(Parser)]
#[command(name = "clutterkit", version, about = "Exact hardness of clutters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a clutter and report (C1) and (C2).
    Validate(Input),
    /// Compute edge and clutter hardness.
    Hardness {
        #[command(flatten)]
        input: Input,
        /// Report only this edge (0-based, in file order).
        #[arg(long)]
        edge: Option<usize>,
        /// Include a smallest recognizing subset per edge.
        #[arg(long)]
        witness: bool,
        /// Use exhaustive search instead of branch and bound.
        #[arg(long)]
        oracle: bool,
    },
    /// Generate a clutter or graph.
    Gen(Gen),
    /// Derive a clutter from a graph.
    FromGraph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Mode::Mis)]
        mode: Mode,
        /// Maximum number of sets to enumerate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the clutter's hardness with a lower bound.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Bound::Main)]
        bound: Bound,
    },
    /// Replay the lower-bound argument step by step.
    Trace(Input),
}

#[derive(Args)]
struct Input {
    /// Input file; `-` or nothing reads standard input.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Gen {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    min_size: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    /// Edge probability as `num/den`.
    #[arg(long, default_value = "1/2")]
    p: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Require (C1) and (C2), retrying on derived seeds.
    #[arg(long)]
    c1c2: bool,
    #[arg(long, default_value_t = 1000)]
    retries: usize,
    /// For `extremal`: write the underlying graph instead of the clutter.
    #[arg(long)]
    graph: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Example1,
    Extremal,
    Kn,
    Kmn,
    Random,
    RandomGraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Mis,
    Matchings,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    Main,
    General,
    Mis,
}

impl From<Bound> for BoundKind {
    fn from(b: Bound) -> Self {
        match b {
            Bound::Main => BoundKind::Main,
            Bound::General => BoundKind::General,
            Bound::Mis => BoundKind::Mis,
        }
    }
}

enum Failure {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
    /// The report has already been printed.
    Falsified(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(input: &Input) -> anyhow::Result<String> {
    match input.file.as_deref() {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
    }
}

fn read_stdin() -> anyhow::Result<String> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .context("cannot read standard input")?;
    Ok(s)
}

fn load_clutter(input: &Input) -> Result<Clutter, Failure> {
    Ok(kio::parse_clutter(&read_input(input)?)?)
}

fn emit(value: &impl Serialize, out: Option<&PathBuf>) -> Outcome {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct Validation {
    valid: bool,
    n: usize,
    m: usize,
    /// Undefined for the empty family.
    c1: Option<bool>,
    c2: bool,
}

fn validate(input: &Input) -> Outcome {
    let c = load_clutter(input)?;
    let report = Validation {
        valid: true,
        n: c.n(),
        m: c.m(),
        c1: c.check_c1().ok(),
        c2: c.check_c2(),
    };
    emit(&report, None)
}

fn hardness_cmd(input: &Input, edge: Option<usize>, witness: bool, oracle: bool) -> Outcome {
    let c = load_clutter(input)?;
    let method = if oracle {
        Method::Exhaustive
    } else {
        Method::BranchAndBound
    };
    match edge {
        Some(i) => match hardness::edge_report(&c, i, method) {
            Ok(h) => emit(&edge_report_json(&c, &h, witness), None),
            Err(e @ HardnessError::IndexOutOfRange { .. }) => Err(Failure::Usage(e.into())),
            Err(e) => Err(e.into()),
        },
        None => {
            let r = hardness::clutter_hardness_with(&c, method)?;
            emit(&hardness_report_json(&c, &r, witness), None)
        }
    }
}

fn require(name: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(anyhow!("--{name} is required for this family")))
}

fn parse_probability(p: &str) -> Result<(u64, u64), Failure> {
    let parsed = p
        .split_once('/')
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
    parsed.ok_or_else(|| Failure::Usage(anyhow!("--p must look like num/den, got {p:?}")))
}

fn gen(g: &Gen) -> Outcome {
    let usage = |e: constructions::ConstructionError| Failure::Usage(e.into());
    let out = g.out.as_ref();
    match g.family {
        Family::Example1 => emit(
            &constructions::example1(require("n", g.n)?).map_err(usage)?,
            out,
        ),
        Family::Extremal => {
            let k = require("k", g.k)?;
            if g.graph {
                emit(&constructions::extremal_graph(k).map_err(usage)?, out)
            } else {
                emit(&constructions::extremal_clutter(k).map_err(usage)?, out)
            }
        }
        Family::Kn => emit(
            &constructions::complete_graph(require("n", g.n)?).map_err(usage)?,
            out,
        ),
        Family::Kmn => {
            let graph = constructions::complete_bipartite(require("a", g.a)?, require("b", g.b)?)
                .map_err(usage)?;
            emit(&graph, out)
        }
        Family::Random => {
            let n = require("n", g.n)?;
            let m = require("m", g.m)?;
            let (lo, hi) = default_size_range(n);
            let range = (g.min_size.unwrap_or(lo), g.max_size.unwrap_or(hi));
            let c = if g.c1c2 {
                match constructions::random_clutter_c1c2(n, m, range, g.seed, g.retries) {
                    Err(e @ constructions::ConstructionError::RetriesExhausted(_)) => {
                        return Err(Failure::Domain(e.into()))
                    }
                    other => other.map_err(usage)?,
                }
            } else {
                constructions::random_clutter(n, m, range, g.seed).map_err(usage)?
            };
            emit(&c, out)
        }
        Family::RandomGraph => {
            let (num, den) = parse_probability(&g.p)?;
            let graph =
                constructions::random_graph(require("n", g.n)?, num, den, g.seed).map_err(usage)?;
            emit(&graph, out)
        }
    }
}

fn from_graph(input: &Input, mode: Mode, cap: usize, out: Option<&PathBuf>) -> Outcome {
    let g = kio::parse_graph(&read_input(input)?)?;
    let c = match mode {
        Mode::Mis => g.mis_clutter(cap)?,
        Mode::Matchings => g.matching_clutter(cap)?,
    };
    emit(&c, out)
}

fn verify(input: &Input, bound: Bound) -> Outcome {
    let c = load_clutter(input)?;
    match bounds::verify_bound(&c, bound.into()) {
        Ok(report) => emit(&report, None),
        Err(BoundsError::TheoremViolated(report)) => {
            emit(&report, None)?;
            Err(Failure::Falsified(report.summary()))
        }
        Err(e) => Err(e.into()),
    }
}

fn trace(input: &Input) -> Outcome {
    let c = load_clutter(input)?;
    match bounds::proof_trace(&c) {
        Ok(t) => emit(&t, None),
        Err(BoundsError::TraceAssertionFailed { trace, failed }) => {
            emit(&trace, None)?;
            Err(Failure::Falsified(failed.join("; ")))
        }
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Validate(input) => validate(input),
        Command::Hardness {
            input,
            edge,
            witness,
            oracle,
        } => hardness_cmd(input, *edge, *witness, *oracle),
        Command::Gen(g) => gen(g),
        Command::FromGraph {
            input,
            mode,
            cap,
            out,
        } => from_graph(input, *mode, *cap, out.as_ref()),
        Command::Verify { input, bound } => verify(input, *bound),
        Command::Trace(input) => trace(input),
    }
}

/// The error chain, skipping causes whose text the outer message already
/// carries.
fn describe(e: &anyhow::Error) -> String {
    let mut out = String::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if !out.contains(&text) {
            if !out.is_empty() {
                out.push_str(": ");
            }
            out.push_str(&text);
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("usage error: {}", describe(&e));
            ExitCode::from(2)
        }
        Err(Failure::Falsified(why)) => {
            eprintln!("falsified: {why}");
            ExitCode::from(3)
        }
    }
}
