//! `kspath`: generate benchmark graphs, query k shortest loop-less paths,
//! inspect the reduction, and run timed benchmark sweeps.
//!
//! Exit codes: 0 success, 2 bad invocation, 1 runtime failure.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use kspath_cli::bench::{self, Algo, BenchConfig, Family, SizeRule};
use kspath_cli::edgelist;
use kspath_core::ksp::{brute_force_ksp, k_bidirectional, k_dijkstra};
use kspath_core::reduction::{reduce_and_search, reduce_speeded, NoClock};
use kspath_core::sssp::{dijkstra_tree, Direction};
use kspath_core::{Graph, KspResult, VertexId};

/// Environment variable consulted when a seed flag is omitted.
const SEED_ENV: &str = "KSPATH_SEED";

#[derive(Parser)]
#[command(name = "kspath", version, about = "k shortest loop-less paths with graph reduction")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a benchmark graph and write it as an edge list
    Gen(GenArgs),
    /// Find the k shortest loop-less paths between two vertices
    Ksp(KspArgs),
    /// Reduce a graph for one query and write the surviving subgraph
    Reduce(ReduceArgs),
    /// Run benchmark cells and write a CSV
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// hypercube or scalefree
    #[arg(long, value_parser = Family::from_str)]
    family: Family,
    /// Hypercube dimension; the graph gets 2^dim vertices
    #[arg(long)]
    dim: Option<u32>,
    /// Scale-free vertex count
    #[arg(long)]
    n: Option<usize>,
    /// Scale-free attachment count: integer or "sqrt"
    #[arg(long, default_value = "2", value_parser = SizeRule::from_str)]
    m0: SizeRule,
    /// Weight seed (default: $KSPATH_SEED, else 1)
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KspArgs {
    /// Edge-list file to search
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "gr-kbidij", value_parser = Algo::from_str)]
    algo: Algo,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    source: VertexId,
    #[arg(long)]
    target: VertexId,
    /// Output file (stdout if omitted); one `LENGTH v0 v1 ... vM` line per path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// Edge-list file to reduce
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    source: VertexId,
    #[arg(long)]
    target: VertexId,
    /// Output file for the reduced subgraph
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// hypercube or scalefree
    #[arg(long, value_parser = Family::from_str)]
    family: Family,
    /// Comma-separated vertex counts (hypercube sizes must be powers of two)
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Comma-separated weight seeds (default: $KSPATH_SEED, else 1)
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
    /// Comma-separated algorithms
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "kdij,kbidij,gr-kdij,gr-kbidij",
        value_parser = Algo::from_str
    )]
    algos: Vec<Algo>,
    /// Scale-free attachment count: integer or "sqrt"
    #[arg(long, default_value = "2", value_parser = SizeRule::from_str)]
    m0: SizeRule,
    /// k per size: integer or "sqrt"
    #[arg(long, default_value = "sqrt", value_parser = SizeRule::from_str)]
    k: SizeRule,
    /// Precompute all-pairs trees once per graph; GR cells then time lookups
    #[arg(long)]
    apsp: bool,
    /// Timing repetitions per cell (median is reported)
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// CSV output file (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A bad invocation discovered after clap parsing; exits with code 2 like
/// clap's own errors.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Ksp(a) => cmd_ksp(a),
        Cmd::Reduce(a) => cmd_reduce(a),
        Cmd::Bench(a) => cmd_bench(a),
    }
}

fn default_seed() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .parse()
            .map_err(|_| usage(format!("{SEED_ENV}={s:?} is not a 64-bit unsigned seed"))),
        Err(_) => Ok(1),
    }
}

/// Buffered writer over `path`, or stdout when absent.
fn sink(path: Option<&FsPath>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(io::stdout().lock()),
    })
}

fn load(path: &FsPath) -> Result<Graph> {
    edgelist::load_graph(path).with_context(|| format!("loading {}", path.display()))
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let seed = match a.seed {
        Some(s) => s,
        None => default_seed()?,
    };
    let g = match a.family {
        Family::Hypercube => {
            if a.n.is_some() {
                return Err(usage("hypercube takes --dim, not --n"));
            }
            let dim = a.dim.ok_or_else(|| usage("hypercube needs --dim"))?;
            kspath_core::graph::hypercube(dim, seed).map_err(|e| usage(e.to_string()))?
        }
        Family::ScaleFree => {
            if a.dim.is_some() {
                return Err(usage("scalefree takes --n, not --dim"));
            }
            let n = a.n.ok_or_else(|| usage("scalefree needs --n"))?;
            kspath_core::graph::scale_free(n, a.m0.apply(n), seed)
                .map_err(|e| usage(e.to_string()))?
        }
    };
    let mut out = sink(a.out.as_deref())?;
    edgelist::write_graph(&g, &mut out, &[])?;
    out.flush()?;
    Ok(())
}

fn run_query(g: &Graph, algo: Algo, s: VertexId, t: VertexId, k: usize) -> Result<KspResult> {
    let res = match algo {
        Algo::KDij => k_dijkstra(g, s, t, k),
        Algo::KBidij => k_bidirectional(g, s, t, k),
        Algo::Brute => brute_force_ksp(g, s, t, k),
        Algo::GrKDij => {
            reduce_and_search(g, s, t, k, k_dijkstra, None, &NoClock).map(|(r, _)| r)
        }
        Algo::GrKBidij => {
            reduce_and_search(g, s, t, k, k_bidirectional, None, &NoClock).map(|(r, _)| r)
        }
    };
    // Query validation failures are bad invocations, not runtime faults.
    res.map_err(|e| usage(e.to_string()))
}

fn cmd_ksp(a: KspArgs) -> Result<()> {
    let g = load(&a.graph)?;
    let res = run_query(&g, a.algo, a.source, a.target, a.k)?;
    let mut out = sink(a.out.as_deref())?;
    for p in &res.paths {
        write!(out, "{}", bench::fmt_sig(p.length, 9))?;
        for v in &p.vertices {
            write!(out, " {v}")?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_reduce(a: ReduceArgs) -> Result<()> {
    let g = load(&a.graph)?;
    let ts = dijkstra_tree(&g, a.source, Direction::Forward);
    let tt = dijkstra_tree(&g, a.target, Direction::Backward);
    let reduced = reduce_speeded(&g, a.source, a.target, a.k, &ts, &tt)
        .map_err(|e| usage(e.to_string()))?;

    let kept: Vec<String> = reduced.kept().iter().map(ToString::to_string).collect();
    let comments = vec![
        format!(
            "reduced for source={} target={} k={}; local id i is original id below",
            a.source, a.target, a.k
        ),
        format!("kept: {}", kept.join(" ")),
    ];
    let mut out = sink(Some(&a.out))?;
    edgelist::write_graph(reduced.subgraph(), &mut out, &comments)?;
    out.flush()?;

    let sub = reduced.subgraph();
    println!(
        "n_reduced={} n={} reduction_rate={} edges={} insufficient={}",
        sub.vertex_count(),
        g.vertex_count(),
        bench::fmt_sig(sub.vertex_count() as f64 / g.vertex_count() as f64, 6),
        sub.edge_count(),
        reduced.insufficient(),
    );
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let seeds = if a.seeds.is_empty() { vec![default_seed()?] } else { a.seeds };
    let cfg = BenchConfig {
        family: a.family,
        sizes: a.sizes,
        density: a.m0,
        k_rule: a.k,
        algos: a.algos,
        seeds,
        apsp: a.apsp,
        repetitions: a.reps,
    };
    let outcome = bench::run_benchmark(&cfg).map_err(usage)?;
    for f in &outcome.failures {
        eprintln!("warning: {f}");
    }
    let mut out = sink(a.out.as_deref())?;
    bench::write_csv(&outcome.records, &mut out)?;
    out.flush()?;
    Ok(())
}
