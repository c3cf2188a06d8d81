//! Benchmark harness: generate a family graph, run each configured searcher
//! on the antipodal query, time the phases, and emit CSV rows.
//!
//! Row order is (n, seed, algorithm) regardless of configuration order, and
//! every non-timing column is a pure function of the seed, so repeated runs
//! diff clean once the four `t_*` columns are dropped.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use kspath_core::graph::{self, Graph, GraphError};
use kspath_core::ksp::{brute_force_ksp, k_bidirectional, k_dijkstra};
use kspath_core::reduction::{reduce_and_search, Clock};
use kspath_core::sssp::{all_pairs_trees, AllPairsTrees};
use kspath_core::{KspError, KspResult, VertexId};

/// Monotonic wall clock counting seconds from its construction.
#[derive(Debug, Clone)]
pub struct WallClock {
    start: Instant,
}

impl WallClock {
    pub fn new() -> Self {
        WallClock { start: Instant::now() }
    }
}

impl Default for WallClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for WallClock {
    fn seconds(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Hypercube,
    ScaleFree,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Hypercube => "hypercube",
            Family::ScaleFree => "scalefree",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hypercube" => Ok(Family::Hypercube),
            "scalefree" => Ok(Family::ScaleFree),
            _ => Err(format!("unknown family {s:?} (hypercube, scalefree)")),
        }
    }
}

/// Searcher selection. The `gr-` variants reduce the graph first and run
/// the same engine on the survivors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algo {
    KDij,
    KBidij,
    GrKDij,
    GrKBidij,
    Brute,
}

pub const ALL_ALGOS: [Algo; 5] =
    [Algo::KDij, Algo::KBidij, Algo::GrKDij, Algo::GrKBidij, Algo::Brute];

impl Algo {
    pub fn reduces(self) -> bool {
        matches!(self, Algo::GrKDij | Algo::GrKBidij)
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::KDij => "kdij",
            Algo::KBidij => "kbidij",
            Algo::GrKDij => "gr-kdij",
            Algo::GrKBidij => "gr-kbidij",
            Algo::Brute => "brute",
        })
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kdij" => Ok(Algo::KDij),
            "kbidij" => Ok(Algo::KBidij),
            "gr-kdij" => Ok(Algo::GrKDij),
            "gr-kbidij" => Ok(Algo::GrKBidij),
            "brute" => Ok(Algo::Brute),
            _ => Err(format!(
                "unknown algorithm {s:?} (kdij, kbidij, gr-kdij, gr-kbidij, brute)"
            )),
        }
    }
}

/// Size-dependent positive integer: a fixed value, or ⌊√n⌋ (at least 1).
/// Parameterizes both the scale-free attachment count and the default k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeRule {
    Fixed(usize),
    SqrtN,
}

impl SizeRule {
    pub fn apply(self, n: usize) -> usize {
        match self {
            SizeRule::Fixed(v) => v,
            SizeRule::SqrtN => isqrt(n).max(1),
        }
    }
}

impl fmt::Display for SizeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeRule::Fixed(v) => write!(f, "{v}"),
            SizeRule::SqrtN => f.write_str("sqrt"),
        }
    }
}

impl FromStr for SizeRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sqrt" {
            return Ok(SizeRule::SqrtN);
        }
        s.parse::<usize>()
            .map(SizeRule::Fixed)
            .map_err(|_| format!("expected a positive integer or \"sqrt\", got {s:?}"))
    }
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    /// Scale-free attachment count (ignored for hypercubes).
    pub density: SizeRule,
    /// k per size; defaults to ⌊√n⌋.
    pub k_rule: SizeRule,
    pub algos: Vec<Algo>,
    pub seeds: Vec<u64>,
    /// Build all-pairs trees once per graph and let GR cells look trees up
    /// instead of running Dijkstra inside the timed section.
    pub apsp: bool,
    /// Timing repetitions per cell; the reported figure is the median.
    pub repetitions: usize,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.sizes.is_empty() || self.seeds.is_empty() || self.algos.is_empty() {
            return Err("sizes, seeds, and algos must all be non-empty".into());
        }
        if self.repetitions == 0 {
            return Err("repetitions must be at least 1".into());
        }
        for &n in &self.sizes {
            if self.family == Family::Hypercube && (n < 2 || !n.is_power_of_two()) {
                return Err(format!("hypercube size {n} is not a power of two ≥ 2"));
            }
            if self.k_rule.apply(n) == 0 {
                return Err(format!("k rule {} yields k = 0 at n = {n}", self.k_rule));
            }
            if self.family == Family::ScaleFree {
                let m0 = self.density.apply(n);
                if m0 == 0 || m0 > n {
                    return Err(format!("attachment count {m0} invalid for n = {n}"));
                }
            }
        }
        Ok(())
    }
}

/// One benchmark cell. Baseline rows (no reduction phase) carry zeros in
/// `t_sssp_s`, `t_reduce_s`, `n_reduced`, and `reduction_rate`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub algo: Algo,
    pub t_sssp_s: f64,
    pub t_reduce_s: f64,
    pub t_search_s: f64,
    pub t_total_s: f64,
    pub n_reduced: usize,
    pub reduction_rate: f64,
    pub paths_found: usize,
}

#[derive(Debug, Default)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    /// One line per cell that errored or disagreed; the run continues.
    pub failures: Vec<String>,
}

/// The measured query endpoints: vertex 0 and its unweighted-furthest
/// counterpart. On a hypercube that is the all-bits complement of 0, which
/// is also the highest id, so both families come out as (0, n−1).
pub fn select_endpoints(family: Family, n: usize) -> (VertexId, VertexId) {
    match family {
        Family::Hypercube => (0, n as VertexId - 1),
        Family::ScaleFree => (0, n as VertexId - 1),
    }
}

pub fn generate(
    family: Family,
    n: usize,
    density: SizeRule,
    seed: u64,
) -> Result<Graph, GraphError> {
    match family {
        Family::Hypercube => graph::hypercube(n.trailing_zeros(), seed),
        Family::ScaleFree => graph::scale_free(n, density.apply(n), seed),
    }
}

fn engine_for(algo: Algo) -> fn(&Graph, VertexId, VertexId, usize) -> Result<KspResult, KspError> {
    match algo {
        Algo::KDij | Algo::GrKDij => k_dijkstra,
        Algo::KBidij | Algo::GrKBidij => k_bidirectional,
        Algo::Brute => brute_force_ksp,
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        0.5 * (xs[mid - 1] + xs[mid])
    }
}

fn run_cell(
    g: &Graph,
    algo: Algo,
    s: VertexId,
    t: VertexId,
    k: usize,
    reps: usize,
    store: Option<&AllPairsTrees>,
) -> Result<(BenchRecord, Vec<f64>), KspError> {
    let engine = engine_for(algo);
    let n = g.vertex_count();
    let mut record = BenchRecord {
        family: Family::Hypercube, // caller overwrites
        n,
        m: g.edge_count(),
        k,
        seed: 0,
        algo,
        t_sssp_s: 0.0,
        t_reduce_s: 0.0,
        t_search_s: 0.0,
        t_total_s: 0.0,
        n_reduced: 0,
        reduction_rate: 0.0,
        paths_found: 0,
    };

    let mut totals = Vec::with_capacity(reps);
    let result = if algo.reduces() {
        let mut sssp = Vec::with_capacity(reps);
        let mut reduce = Vec::with_capacity(reps);
        let mut search = Vec::with_capacity(reps);
        let mut last = None;
        for _ in 0..reps {
            let clock = WallClock::new();
            let t0 = clock.seconds();
            let (res, stats) = reduce_and_search(g, s, t, k, engine, store, &clock)?;
            totals.push(clock.seconds() - t0);
            sssp.push(stats.sssp_seconds);
            reduce.push(stats.reduce_seconds);
            search.push(stats.search_seconds);
            record.n_reduced = stats.kept_vertices;
            last = Some(res);
        }
        record.t_sssp_s = median(sssp);
        record.t_reduce_s = median(reduce);
        record.t_search_s = median(search);
        record.reduction_rate = record.n_reduced as f64 / n as f64;
        last.expect("reps >= 1")
    } else {
        let mut last = None;
        for _ in 0..reps {
            let start = Instant::now();
            let res = engine(g, s, t, k)?;
            totals.push(start.elapsed().as_secs_f64());
            last = Some(res);
        }
        let t = median(totals.clone());
        record.t_search_s = t;
        last.expect("reps >= 1")
    };
    record.t_total_s = median(totals);
    record.paths_found = result.paths.len();
    Ok((record, result.lengths()))
}

/// Runs every (size, seed, algorithm) cell. Cells that error are reported
/// in [`BenchOutcome::failures`] and skipped; so are cross-algorithm
/// disagreements on the same query (same paths_found, lengths within 1e-9).
pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchOutcome, String> {
    cfg.validate()?;
    let mut out = BenchOutcome::default();

    for &n in &cfg.sizes {
        for &seed in &cfg.seeds {
            let g = match generate(cfg.family, n, cfg.density, seed) {
                Ok(g) => g,
                Err(e) => {
                    out.failures.push(format!("{} n={n} seed={seed}: {e}", cfg.family));
                    continue;
                }
            };
            let (s, t) = select_endpoints(cfg.family, n);
            let k = cfg.k_rule.apply(n);
            let store = if cfg.apsp && cfg.algos.iter().any(|a| a.reduces()) {
                Some(all_pairs_trees(&g))
            } else {
                None
            };

            let mut agreed: Option<(Algo, Vec<f64>)> = None;
            for &algo in &cfg.algos {
                let cell = format!("{} n={n} seed={seed} {algo}", cfg.family);
                match run_cell(&g, algo, s, t, k, cfg.repetitions, store.as_ref()) {
                    Err(e) => out.failures.push(format!("{cell}: {e}")),
                    Ok((mut record, lengths)) => {
                        record.family = cfg.family;
                        record.seed = seed;
                        match &agreed {
                            None => agreed = Some((algo, lengths)),
                            Some((first, want)) => {
                                let ok = lengths.len() == want.len()
                                    && lengths
                                        .iter()
                                        .zip(want)
                                        .all(|(a, b)| (a - b).abs() <= 1e-9);
                                if !ok {
                                    out.failures.push(format!(
                                        "{cell}: paths disagree with {first}"
                                    ));
                                }
                            }
                        }
                        out.records.push(record);
                    }
                }
            }
        }
    }

    out.records.sort_by_key(|r| (r.n, r.seed, r.algo));
    Ok(out)
}

/// `x` with `digits` significant digits, fixed notation, trailing zeros
/// trimmed — small enough for CSV cells, exact enough to diff.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    debug_assert!(digits >= 1);
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    let dec = (digits as i32 - 1 - mag).max(0) as usize;
    let mut s = format!("{x:.dec$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

pub const CSV_HEADER: &str =
    "family,n,m,k,seed,algo,t_sssp_s,t_reduce_s,t_search_s,t_total_s,n_reduced,reduction_rate,paths_found";

pub fn write_csv<W: Write>(records: &[BenchRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.n,
            r.m,
            r.k,
            r.seed,
            r.algo,
            fmt_sig(r.t_sssp_s, 6),
            fmt_sig(r.t_reduce_s, 6),
            fmt_sig(r.t_search_s, 6),
            fmt_sig(r.t_total_s, 6),
            r.n_reduced,
            fmt_sig(r.reduction_rate, 6),
            r.paths_found,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_names_round_trip() {
        for algo in ALL_ALGOS {
            assert_eq!(algo.to_string().parse::<Algo>().unwrap(), algo);
        }
        for family in [Family::Hypercube, Family::ScaleFree] {
            assert_eq!(family.to_string().parse::<Family>().unwrap(), family);
        }
        assert!("yen".parse::<Algo>().is_err());
        assert_eq!("sqrt".parse::<SizeRule>().unwrap(), SizeRule::SqrtN);
        assert_eq!("2".parse::<SizeRule>().unwrap(), SizeRule::Fixed(2));
    }

    #[test]
    fn sqrt_rule_matches_integer_sqrt() {
        for (n, want) in [(1, 1), (2, 1), (4, 2), (64, 8), (100, 10), (1023, 31), (1024, 32)] {
            assert_eq!(SizeRule::SqrtN.apply(n), want, "n = {n}");
        }
    }

    #[test]
    fn endpoints_are_the_antipodal_pair() {
        assert_eq!(select_endpoints(Family::Hypercube, 8), (0, 7));
        assert_eq!(select_endpoints(Family::Hypercube, 2), (0, 1));
        assert_eq!(select_endpoints(Family::ScaleFree, 1024), (0, 1023));
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0, 6), "0");
        assert_eq!(fmt_sig(0.30612241, 6), "0.306122");
        assert_eq!(fmt_sig(123.456789, 6), "123.457");
        assert_eq!(fmt_sig(0.00000012345678, 6), "0.000000123457");
        assert_eq!(fmt_sig(1.0, 6), "1");
        assert_eq!(fmt_sig(2.5, 9), "2.5");
        assert_eq!(fmt_sig(1.0 / 3.0, 9), "0.333333333");
    }

    #[test]
    fn config_validation_rejects_bad_shapes() {
        let base = BenchConfig {
            family: Family::Hypercube,
            sizes: vec![64],
            density: SizeRule::Fixed(2),
            k_rule: SizeRule::SqrtN,
            algos: vec![Algo::KDij],
            seeds: vec![1],
            apsp: false,
            repetitions: 3,
        };
        assert!(base.validate().is_ok());

        let mut c = base.clone();
        c.sizes = vec![48];
        assert!(c.validate().is_err(), "48 is not a power of two");

        let mut c = base.clone();
        c.seeds.clear();
        assert!(c.validate().is_err());

        let mut c = base.clone();
        c.k_rule = SizeRule::Fixed(0);
        assert!(c.validate().is_err());

        let mut c = base.clone();
        c.family = Family::ScaleFree;
        c.sizes = vec![48]; // fine for scale-free
        assert!(c.validate().is_ok());
        c.density = SizeRule::Fixed(100);
        assert!(c.validate().is_err(), "m0 > n");
    }

    #[test]
    fn benchmark_cells_agree_and_sort() {
        let cfg = BenchConfig {
            family: Family::Hypercube,
            sizes: vec![64, 16],
            density: SizeRule::Fixed(2),
            k_rule: SizeRule::SqrtN,
            algos: vec![Algo::GrKDij, Algo::KDij, Algo::KBidij, Algo::GrKBidij],
            seeds: vec![2, 1],
            apsp: false,
            repetitions: 1,
        };
        let out = run_benchmark(&cfg).unwrap();
        assert_eq!(out.failures, Vec::<String>::new());
        assert_eq!(out.records.len(), 16);

        let order: Vec<(usize, u64, Algo)> =
            out.records.iter().map(|r| (r.n, r.seed, r.algo)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted, "rows sorted by (n, seed, algo)");

        for r in &out.records {
            assert_eq!(r.k, isqrt(r.n));
            assert_eq!(r.paths_found, r.k, "hypercubes have plenty of paths");
            if r.algo.reduces() {
                assert!(r.n_reduced > 0 && r.n_reduced <= r.n);
                assert!((r.reduction_rate - r.n_reduced as f64 / r.n as f64).abs() < 1e-15);
            } else {
                assert_eq!((r.n_reduced, r.reduction_rate), (0, 0.0));
                assert_eq!((r.t_sssp_s, r.t_reduce_s), (0.0, 0.0));
            }
        }

        // Same seed ⇒ same non-timing payload on a rerun.
        let again = run_benchmark(&cfg).unwrap();
        for (a, b) in out.records.iter().zip(&again.records) {
            assert_eq!((a.n, a.m, a.k, a.seed, a.algo), (b.n, b.m, b.k, b.seed, b.algo));
            assert_eq!((a.n_reduced, a.paths_found), (b.n_reduced, b.paths_found));
        }
    }

    #[test]
    fn oversized_brute_cell_is_recorded_not_fatal() {
        let cfg = BenchConfig {
            family: Family::ScaleFree,
            sizes: vec![64],
            density: SizeRule::Fixed(2),
            k_rule: SizeRule::Fixed(4),
            algos: vec![Algo::Brute, Algo::KDij],
            seeds: vec![7],
            apsp: false,
            repetitions: 1,
        };
        let out = run_benchmark(&cfg).unwrap();
        assert_eq!(out.records.len(), 1, "brute fails, kdij survives");
        assert_eq!(out.records[0].algo, Algo::KDij);
        assert_eq!(out.failures.len(), 1);
        assert!(out.failures[0].contains("brute"), "{}", out.failures[0]);
    }

    #[test]
    fn apsp_mode_changes_timing_source_not_results() {
        let mut cfg = BenchConfig {
            family: Family::Hypercube,
            sizes: vec![64],
            density: SizeRule::Fixed(2),
            k_rule: SizeRule::SqrtN,
            algos: vec![Algo::GrKBidij],
            seeds: vec![3],
            apsp: false,
            repetitions: 1,
        };
        let plain = run_benchmark(&cfg).unwrap();
        cfg.apsp = true;
        let cached = run_benchmark(&cfg).unwrap();
        assert_eq!(plain.records.len(), 1);
        assert_eq!(cached.records.len(), 1);
        assert_eq!(plain.records[0].n_reduced, cached.records[0].n_reduced);
        assert_eq!(plain.records[0].paths_found, cached.records[0].paths_found);
    }

    #[test]
    fn csv_layout_is_stable() {
        let record = BenchRecord {
            family: Family::Hypercube,
            n: 64,
            m: 192,
            k: 8,
            seed: 1,
            algo: Algo::GrKDij,
            t_sssp_s: 0.000123456789,
            t_reduce_s: 0.0000123,
            t_search_s: 0.0005,
            t_total_s: 0.000635756789,
            n_reduced: 20,
            reduction_rate: 0.3125,
            paths_found: 8,
        };
        let mut buf = Vec::new();
        write_csv(&[record], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(
            lines.next(),
            Some("hypercube,64,192,8,1,gr-kdij,0.000123457,0.0000123,0.0005,0.000635757,20,0.3125,8")
        );
        assert_eq!(lines.next(), None);

        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap(), format!("{CSV_HEADER}\n"));
    }
}
