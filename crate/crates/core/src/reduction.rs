//! Graph reduction driven by two shortest-path trees.
//!
//! For a query (source, target, k), every vertex v has a by-way distance:
//! the length of the shortest route source -> v -> target, which is
//! `dist_s(v) + dist_t(v)` from a forward tree at the source and a backward
//! tree at the target. Concatenating the two tree paths gives the by-way
//! path through v; it may revisit a vertex, in which case v sits on a dead
//! side branch and only v itself (not the whole walk) is worth keeping.
//!
//! Scanning by-way entries in distance order until k distinct loop-less
//! paths have been produced yields a vertex set V' whose induced subgraph
//! provably contains the k shortest loop-less paths of the full graph. Any
//! searcher can then run on the (much smaller) subgraph, and its answers
//! map back by vertex id. If fewer than k loop-less by-way paths exist the
//! scan is inconclusive and the whole graph is kept.

use alloc::{vec, vec::Vec};

use crate::graph::{Graph, VertexId};
use crate::ksp::{validate_query, KspError, KspResult, Path};
use crate::sssp::{dijkstra_tree, AllPairsTrees, Direction, ShortestPathTree};

/// One vertex's shortest source -> v -> target length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BywayEntry {
    pub vertex: VertexId,
    pub distance: f64,
}

/// By-way distances for every vertex reachable from the source and able to
/// reach the target, in ascending vertex order. Empty when the target is
/// unreachable (no vertex can lie on both trees).
///
/// `ts` must be a forward tree at the source; `tt` a backward tree at the
/// target, or a forward one on an undirected graph.
pub fn byway_distances(ts: &ShortestPathTree, tt: &ShortestPathTree) -> Vec<BywayEntry> {
    debug_assert_eq!(ts.vertex_count(), tt.vertex_count());
    let n = ts.vertex_count() as VertexId;
    (0..n)
        .filter(|&v| ts.is_reachable(v) && tt.is_reachable(v))
        .map(|v| BywayEntry { vertex: v, distance: ts.dist(v) + tt.dist(v) })
        .collect()
}

/// The by-way path through `v`: the tree path source -> v followed by the
/// tree path v -> target. May revisit vertices; `None` if `v` is
/// unreachable on either side.
pub fn byway_path(ts: &ShortestPathTree, tt: &ShortestPathTree, v: VertexId) -> Option<Path> {
    let head = ts.extract_path(v)?;
    let tail = tt.extract_path(v)?;
    let mut vertices = head.vertices;
    match tt.direction() {
        // Backward trees extract v -> target already.
        Direction::Backward => vertices.extend(tail.vertices.iter().skip(1)),
        // A forward tree at the target (undirected graphs) extracts
        // target -> v; walk it from the v end.
        Direction::Forward => vertices.extend(tail.vertices.iter().rev().skip(1)),
    }
    Some(Path { vertices, length: head.length + tail.length })
}

const NOT_KEPT: VertexId = VertexId::MAX;

/// A vertex-induced subgraph with the id maps to cross between it and the
/// original graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedGraph {
    /// Kept original ids, ascending; position is the local id.
    kept: Vec<VertexId>,
    subgraph: Graph,
    to_local: Vec<VertexId>,
    insufficient: bool,
}

impl ReducedGraph {
    pub fn kept(&self) -> &[VertexId] {
        &self.kept
    }

    pub fn subgraph(&self) -> &Graph {
        &self.subgraph
    }

    /// True when the reduction could not certify k loop-less paths and fell
    /// back to keeping every vertex.
    pub fn insufficient(&self) -> bool {
        self.insufficient
    }

    pub fn local_id(&self, original: VertexId) -> Option<VertexId> {
        match self.to_local[original as usize] {
            NOT_KEPT => None,
            local => Some(local),
        }
    }

    pub fn original_id(&self, local: VertexId) -> VertexId {
        self.kept[local as usize]
    }

    /// Rewrites a path over local ids into original ids; the length is the
    /// same, the induced subgraph preserves weights.
    pub fn map_path(&self, mut p: Path) -> Path {
        for v in &mut p.vertices {
            *v = self.kept[*v as usize];
        }
        p
    }
}

/// Subgraph induced by `kept` (deduplicated, order-insensitive), carrying
/// both id maps. Panics if `kept` is empty or holds an invalid id.
pub fn induced_subgraph(g: &Graph, kept: &[VertexId]) -> ReducedGraph {
    assert!(!kept.is_empty(), "induced subgraph needs at least one vertex");
    let mut kept: Vec<VertexId> = kept.into();
    kept.sort_unstable();
    kept.dedup();
    let n = g.vertex_count();
    assert!((*kept.last().unwrap() as usize) < n, "kept vertex out of range");

    let mut to_local = vec![NOT_KEPT; n];
    for (i, &v) in kept.iter().enumerate() {
        to_local[v as usize] = i as VertexId;
    }
    // Scan only the kept vertices' adjacency, not the whole edge list.
    let mut edges: Vec<(VertexId, VertexId, f64)> = Vec::new();
    for (lu, &u) in kept.iter().enumerate() {
        for &(v, w) in g.neighbors(u) {
            let lv = to_local[v as usize];
            // Undirected adjacency lists each edge from both ends.
            if lv == NOT_KEPT || (!g.is_directed() && v < u) {
                continue;
            }
            edges.push((lu as VertexId, lv, w));
        }
    }
    let subgraph = Graph::build(kept.len(), g.is_directed(), &edges)
        .expect("an induced subgraph preserves construction invariants");
    ReducedGraph { kept, subgraph, to_local, insufficient: false }
}

fn whole_graph(g: &Graph, insufficient: bool) -> ReducedGraph {
    let all: Vec<VertexId> = (0..g.vertex_count() as VertexId).collect();
    let mut r = induced_subgraph(g, &all);
    r.insufficient = insufficient;
    r
}

fn check_trees(
    g: &Graph,
    source: VertexId,
    target: VertexId,
    ts: &ShortestPathTree,
    tt: &ShortestPathTree,
) {
    assert_eq!(ts.vertex_count(), g.vertex_count(), "source tree size mismatch");
    assert_eq!(tt.vertex_count(), g.vertex_count(), "target tree size mismatch");
    assert_eq!(ts.root(), source, "source tree has the wrong root");
    assert_eq!(tt.root(), target, "target tree has the wrong root");
    assert_eq!(ts.direction(), Direction::Forward, "source tree must be forward");
    assert!(
        tt.direction() == Direction::Backward || !g.is_directed(),
        "target tree must be backward on a directed graph"
    );
}

/// Reference vertex selection: materialize every by-way path, deduplicate
/// identical vertex sequences, sort by `(length, vertex sequence)`, and scan
/// until the k-th loop-less path. V' is every vertex appearing up to and
/// including that point. Falls back to the whole graph when fewer than k
/// loop-less by-way paths exist.
pub fn reduce_primitive(
    g: &Graph,
    source: VertexId,
    target: VertexId,
    k: usize,
    ts: &ShortestPathTree,
    tt: &ShortestPathTree,
) -> Result<ReducedGraph, KspError> {
    validate_query(g, source, target, k)?;
    check_trees(g, source, target, ts, tt);

    let entries = byway_distances(ts, tt);
    let mut paths: Vec<Path> = entries
        .iter()
        .map(|e| byway_path(ts, tt, e.vertex).expect("entries are reachable on both sides"))
        .collect();
    // Different vertices of one shortest route share the same by-way path;
    // keep each sequence once (the shortest copy, should rounding differ).
    paths.sort_unstable_by(|a, b| {
        a.vertices.cmp(&b.vertices).then_with(|| a.length.total_cmp(&b.length))
    });
    paths.dedup_by(|a, b| a.vertices == b.vertices);
    paths.sort_unstable_by(|a, b| {
        a.length.total_cmp(&b.length).then_with(|| a.vertices.cmp(&b.vertices))
    });

    let mut loopless = 0usize;
    let mut cutoff = None;
    for (i, p) in paths.iter().enumerate() {
        if !p.has_loop() {
            loopless += 1;
            if loopless == k {
                cutoff = Some(i);
                break;
            }
        }
    }
    match cutoff {
        None => Ok(whole_graph(g, true)),
        Some(e) => {
            let mut kept = vec![false; g.vertex_count()];
            for p in &paths[..=e] {
                for &v in &p.vertices {
                    kept[v as usize] = true;
                }
            }
            let kept: Vec<VertexId> = (0..g.vertex_count() as VertexId)
                .filter(|&v| kept[v as usize])
                .collect();
            Ok(induced_subgraph(g, &kept))
        }
    }
}

/// Worklist vertex selection, equivalent in effect to [`reduce_primitive`]
/// but keeping no more (usually fewer) vertices and materializing only the
/// paths it accepts.
///
/// Entries are processed in `(distance, vertex)` order. A loop-less front
/// path contributes all its vertices and retires every entry on it; a path
/// with a repeated vertex contributes only its own entry vertex. The scan
/// stops at k accepted paths, or keeps the whole graph if the worklist runs
/// out first.
pub fn reduce_speeded(
    g: &Graph,
    source: VertexId,
    target: VertexId,
    k: usize,
    ts: &ShortestPathTree,
    tt: &ShortestPathTree,
) -> Result<ReducedGraph, KspError> {
    validate_query(g, source, target, k)?;
    check_trees(g, source, target, ts, tt);

    let mut entries = byway_distances(ts, tt);
    entries.sort_unstable_by(|a, b| {
        a.distance.total_cmp(&b.distance).then_with(|| a.vertex.cmp(&b.vertex))
    });

    let n = g.vertex_count();
    let mut retired = vec![false; n];
    let mut kept = vec![false; n];
    // The two tree paths are each simple, so the by-way path through v has
    // a loop iff the v -> target chain re-enters the source -> v chain.
    // Stamping vertices with the entry index makes that an O(1) probe and
    // spares materializing a path per entry.
    let mut stamp = vec![u32::MAX; n];
    let mut walk: Vec<VertexId> = Vec::new();
    let mut accepted = 0usize;
    for (i, e) in entries.iter().enumerate() {
        if retired[e.vertex as usize] {
            continue;
        }
        walk.clear();
        let mut x = e.vertex;
        loop {
            stamp[x as usize] = i as u32;
            walk.push(x);
            match ts.parent(x) {
                Some(p) => x = p,
                None => break,
            }
        }
        let mut loopless = true;
        let mut x = e.vertex;
        while let Some(p) = tt.parent(x) {
            if stamp[p as usize] == i as u32 {
                loopless = false;
                break;
            }
            walk.push(p);
            x = p;
        }
        if loopless {
            for &v in &walk {
                kept[v as usize] = true;
                retired[v as usize] = true;
            }
            accepted += 1;
            if accepted == k {
                break;
            }
        } else {
            kept[e.vertex as usize] = true;
            retired[e.vertex as usize] = true;
        }
    }
    if accepted < k {
        return Ok(whole_graph(g, true));
    }
    let kept: Vec<VertexId> = (0..n as VertexId).filter(|&v| kept[v as usize]).collect();
    Ok(induced_subgraph(g, &kept))
}

/// Monotonic time source for phase measurements. The core crate carries no
/// clock of its own; callers inject one, or [`NoClock`] to skip timing.
pub trait Clock {
    /// Seconds since an arbitrary fixed origin.
    fn seconds(&self) -> f64;
}

/// Clock that always reads zero; every phase duration comes out as zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn seconds(&self) -> f64 {
        0.0
    }
}

/// Phase durations and reduction size of one [`reduce_and_search`] run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionStats {
    /// Building (or looking up) the two shortest-path trees.
    pub sssp_seconds: f64,
    /// Vertex selection and subgraph construction.
    pub reduce_seconds: f64,
    /// The engine's search on the reduced graph, including the id mapping.
    pub search_seconds: f64,
    /// |V'|: vertex count of the graph the engine actually searched.
    pub kept_vertices: usize,
    pub insufficient: bool,
}

/// Reduce-then-search: build the two shortest-path trees (or fetch them
/// from `trees`), select V' with [`reduce_speeded`], run `engine` on the
/// induced subgraph, and map the paths back to original vertex ids.
///
/// `engine` is any searcher with the common query signature, e.g.
/// [`crate::ksp::k_dijkstra`] or [`crate::ksp::k_bidirectional`].
pub fn reduce_and_search<E>(
    g: &Graph,
    source: VertexId,
    target: VertexId,
    k: usize,
    engine: E,
    trees: Option<&AllPairsTrees>,
    clock: &dyn Clock,
) -> Result<(KspResult, ReductionStats), KspError>
where
    E: Fn(&Graph, VertexId, VertexId, usize) -> Result<KspResult, KspError>,
{
    validate_query(g, source, target, k)?;
    let t0 = clock.seconds();
    let built;
    let (ts, tt) = match trees {
        Some(store) => (
            store.tree(source, Direction::Forward),
            store.tree(target, Direction::Backward),
        ),
        None => {
            built = (
                dijkstra_tree(g, source, Direction::Forward),
                dijkstra_tree(g, target, Direction::Backward),
            );
            (&built.0, &built.1)
        }
    };
    let t1 = clock.seconds();
    let reduced = reduce_speeded(g, source, target, k, ts, tt)?;
    let t2 = clock.seconds();
    let ls = reduced.local_id(source).expect("the source always survives reduction");
    let lt = reduced.local_id(target).expect("the target always survives reduction");
    let inner = engine(reduced.subgraph(), ls, lt, k)?;
    let paths: Vec<Path> = inner.paths.into_iter().map(|p| reduced.map_path(p)).collect();
    let t3 = clock.seconds();

    let stats = ReductionStats {
        sssp_seconds: t1 - t0,
        reduce_seconds: t2 - t1,
        search_seconds: t3 - t2,
        kept_vertices: reduced.kept().len(),
        insufficient: reduced.insufficient(),
    };
    Ok((KspResult { source, target, k, paths }, stats))
}
