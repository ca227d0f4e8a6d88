//! `gel`: graph entropies from the command line.
//!
//! Exit codes: 0 success, 1 runtime error, 2 a proven bound failed (a bug),
//! 3 a conjecture or hypothesis was refuted, 64 bad usage.

mod claims;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use gel_core::entropy::{entropy_augmentation, entropy_report, von_neumann_entropy};
use gel_core::enumerate::{stream_graph6, ParseMode};
use gel_core::graph::{complete, complete_bipartite, path, star};
use gel_core::verify::{round_sig12, table1_row, GraphParam, TreeEntropy, VerificationResult, VerifyConfig, VerifyError};
use gel_core::{write_graph6, Graph};

use output::{float, Format};

const EXIT_ERROR: u8 = 1;
const EXIT_THEOREM: u8 = 2;
const EXIT_REFUTED: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "gel", version, about = "Von Neumann and Renyi entropies of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Worker threads for exhaustive searches.
    #[arg(long, env = "GEL_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    /// Maximum number of witnesses stored per result; counts stay exact.
    #[arg(long, default_value_t = gel_core::verify::DEFAULT_WITNESS_CAP)]
    witness_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl Common {
    fn config(&self) -> VerifyConfig {
        VerifyConfig { threads: self.threads as usize, witness_cap: self.witness_cap }
    }
}

#[derive(Args, Clone)]
struct GraphSource {
    /// graph6 file, one graph per line; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Skip malformed lines with a warning instead of stopping.
    #[arg(long)]
    lenient: bool,
    /// Use a built-in family instead of reading graph6.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Order for --family.
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes for --family bipartite.
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Star,
    Path,
    Complete,
    Bipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum EntropyKind {
    S,
    H2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Matching,
    Diameter,
    MaxDegree,
}

#[derive(Subcommand)]
enum Command {
    /// Entropies, tr2 and test verdicts for each input graph.
    Entropy {
        #[command(flatten)]
        source: GraphSource,
        /// Renyi order to report (repeatable).
        #[arg(long = "alpha")]
        alphas: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Star-test failure counts over connected graphs.
    Table1 {
        /// Order or inclusive range such as 2..8.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        /// Write every failing graph as graph6 to this file.
        #[arg(long)]
        emit_failing: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run an exhaustive claim check and print the result as JSON.
    #[command(after_help = format!("Claims:\n{}", claims::listing()))]
    Verify {
        claim: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "alpha")]
        alphas: Vec<f64>,
        /// Entropy for tree-extremes.
        #[arg(long, value_enum, default_value_t = EntropyKind::S)]
        entropy: EntropyKind,
        /// Parameter for param-compare (repeatable; all when absent).
        #[arg(long = "param", value_enum)]
        params: Vec<Param>,
        /// Grouping tolerance for coentropy.
        #[arg(long, default_value_t = 1e-9)]
        group_tol: f64,
        /// Include wall-clock runtime in the output.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Smallest set of at most k non-edges raising S to at least x.
    Augment {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        x: f64,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad order {t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
enum Failure {
    /// stdout was closed by the reader; not an error.
    ClosedPipe,
    Usage(String),
    Runtime(String),
    Theorem(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::ClosedPipe
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => io.into(),
            other => Failure::Runtime(format!("{other:?}")),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::TheoremViolation { .. } => Failure::Theorem(e.to_string()),
            VerifyError::BadInput(msg) => Failure::Usage(msg),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn runtime<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn family_graph(src: &GraphSource, family: Family) -> Result<Graph, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--family needs --{flag}")));
    let g = match family {
        Family::Star => star(need(src.n, "n")?),
        Family::Path => path(need(src.n, "n")?),
        Family::Complete => complete(need(src.n, "n")?),
        Family::Bipartite => complete_bipartite(need(src.a, "a")?, need(src.b, "b")?),
    };
    g.map_err(|e| Failure::Usage(e.to_string()))
}

/// Calls `f` on every input graph, honoring the strict/lenient policy.
fn for_each_input(src: &GraphSource, mut f: impl FnMut(&Graph) -> Result<(), Failure>) -> Result<(), Failure> {
    if let Some(family) = src.family {
        return f(&family_graph(src, family)?);
    }
    let mode = if src.lenient { ParseMode::Lenient } else { ParseMode::Strict };
    let mut reader = stream_graph6(src.input.as_deref(), mode).map_err(runtime)?;
    for item in reader.by_ref() {
        let (_, g) = item.map_err(runtime)?;
        f(&g)?;
    }
    for skipped in reader.skipped() {
        eprintln!("warning: skipped {skipped}");
    }
    Ok(())
}

fn cmd_entropy(source: &GraphSource, alphas: &[f64], common: &Common) -> Result<u8, Failure> {
    if let Some(a) = alphas.iter().find(|a| !(**a >= 0.0 && a.is_finite())) {
        return Err(Failure::Usage(format!("--alpha must be a finite real >= 0, got {a}")));
    }
    let stdout = io::stdout().lock();
    let mut writer = output::EntropyWriter::new(BufWriter::new(stdout), common.format, alphas)?;
    for_each_input(source, |g| {
        if g.size() == 0 {
            eprintln!("warning: {} has no edges; entropy is undefined", write_graph6(g));
        }
        let rep = entropy_report(g, alphas).map_err(runtime)?;
        Ok(writer.write(&rep, g.order(), g.size())?)
    })?;
    writer.finish()?;
    Ok(0)
}

fn cmd_table1(range: (usize, usize), emit: Option<&PathBuf>, common: &Common) -> Result<u8, Failure> {
    let cfg = common.config();
    let mut rows = Vec::new();
    for n in range.0..=range.1 {
        rows.push(table1_row(n, &cfg)?);
        eprintln!("table1: n={n} done");
    }
    if let Some(path) = emit {
        let mut out = BufWriter::new(File::create(path)?);
        for line in rows.iter().flat_map(|r| &r.failing) {
            writeln!(out, "{line}")?;
        }
        out.flush()?;
        let total: u64 = rows.iter().map(|r| r.failures).sum();
        let written: usize = rows.iter().map(|r| r.failing.len()).sum();
        if (written as u64) < total {
            eprintln!("warning: wrote {written} of {total} failing graphs; raise --witness-cap");
        }
    }
    output::write_table1(io::stdout().lock(), &rows, common.format)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    claim: &str,
    n: usize,
    alphas: &[f64],
    entropy: EntropyKind,
    params: &[Param],
    group_tol: f64,
    timing: bool,
    common: &Common,
) -> Result<u8, Failure> {
    let entry = claims::find(claim)
        .ok_or_else(|| Failure::Usage(format!("unknown claim {claim:?}; known claims:\n{}", claims::listing())))?;
    if common.format != Format::Json && common.format != Format::Text {
        return Err(Failure::Usage("verify prints JSON; --format csv is not supported".into()));
    }
    let args = claims::ClaimArgs {
        n,
        alphas: alphas.to_vec(),
        entropy: match entropy {
            EntropyKind::S => TreeEntropy::VonNeumann,
            EntropyKind::H2 => TreeEntropy::Renyi2,
        },
        params: params
            .iter()
            .map(|p| match p {
                Param::Matching => GraphParam::Matching,
                Param::Diameter => GraphParam::Diameter,
                Param::MaxDegree => GraphParam::MaxDegree,
            })
            .collect(),
        group_tol,
    };
    let mut results: Vec<VerificationResult> = (entry.run)(&args, &common.config())?;
    if !timing {
        results.iter_mut().for_each(|r| r.runtime_seconds = None);
    }
    let json = if results.len() == 1 {
        serde_json::to_string_pretty(&results[0])
    } else {
        serde_json::to_string_pretty(&results)
    }
    .map_err(runtime)?;
    match writeln!(io::stdout().lock(), "{json}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    Ok(if results.iter().all(|r| r.holds) { 0 } else { EXIT_REFUTED })
}

#[derive(Serialize)]
struct AugmentRecord {
    graph6: String,
    k: usize,
    x: f64,
    answer: &'static str,
    edges: Option<Vec<(usize, usize)>>,
    entropy_before: f64,
    entropy_after: Option<f64>,
}

fn cmd_augment(source: &GraphSource, k: usize, x: f64, common: &Common) -> Result<u8, Failure> {
    let mut graphs = Vec::new();
    for_each_input(source, |g| {
        graphs.push(g.clone());
        Ok(())
    })?;
    let g = match graphs.as_slice() {
        [g] => g,
        other => return Err(Failure::Usage(format!("augment takes exactly one graph, got {}", other.len()))),
    };
    let room = g.complement_edges().len();
    let k = if k > room {
        eprintln!("warning: k = {k} exceeds the {room} missing edges; using {room}");
        room
    } else {
        k
    };
    let entropy = |h: &Graph| if h.size() == 0 { Ok(0.0) } else { von_neumann_entropy(h) };
    let before = entropy(g).map_err(runtime)?;
    let found = entropy_augmentation(g, k, x).map_err(runtime)?;
    let after = match &found {
        Some(edges) => Some(entropy(&g.add_edges(edges).map_err(runtime)?).map_err(runtime)?),
        None => None,
    };
    let mut out = io::stdout().lock();
    match common.format {
        Format::Json => {
            let v = AugmentRecord {
                graph6: write_graph6(g),
                k,
                x,
                answer: if found.is_some() { "YES" } else { "NO" },
                edges: found.clone(),
                entropy_before: round_sig12(before),
                entropy_after: after.map(round_sig12),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(runtime)?)?;
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(out);
            c.write_record(["graph6", "k", "x", "answer", "edges", "entropy_before", "entropy_after"])?;
            let edges = found
                .as_ref()
                .map(|es| es.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            let answer = if found.is_some() { "YES" } else { "NO" };
            c.write_record([
                write_graph6(g),
                k.to_string(),
                x.to_string(),
                answer.to_string(),
                edges,
                float(before),
                after.map(float).unwrap_or_default(),
            ])?;
            c.flush()?;
        }
        Format::Text => match &found {
            Some(edges) => {
                writeln!(out, "YES")?;
                for (u, v) in edges {
                    writeln!(out, "{u} {v}")?;
                }
            }
            None => writeln!(out, "NO")?,
        },
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Entropy { source, alphas, common } => cmd_entropy(source, alphas, common),
        Command::Table1 { n, emit_failing, common } => cmd_table1(*n, emit_failing.as_ref(), common),
        Command::Verify { claim, n, alphas, entropy, params, group_tol, timing, common } => {
            cmd_verify(claim, *n, alphas, *entropy, params, *group_tol, *timing, common)
        }
        Command::Augment { source, k, x, common } => cmd_augment(source, *k, *x, common),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
        Err(Failure::Theorem(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_THEOREM)
        }
    }
}
