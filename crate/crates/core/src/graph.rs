//! Weighted graph model and deterministic benchmark-family generators.
//!
//! Graphs are immutable after construction. Adjacency lists are kept sorted
//! by neighbor id, so iteration order (and everything derived from it) is
//! independent of the order edges were supplied in.

use alloc::{vec, vec::Vec};
use core::fmt;

use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense vertex identifier in `[0, n)`.
pub type VertexId = u32;

/// Rejections raised while building or generating a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphError {
    /// Graphs must have at least one vertex.
    NoVertices,
    /// An edge endpoint is not a valid vertex id.
    VertexOutOfRange { vertex: VertexId, n: usize },
    /// Self-loops are rejected.
    SelfLoop { vertex: VertexId },
    /// The same vertex pair appeared twice (in either order, if undirected).
    DuplicateEdge { u: VertexId, v: VertexId },
    /// Weights must be finite and strictly positive.
    BadWeight { u: VertexId, v: VertexId, weight: f64 },
    /// Hypercube dimension outside the supported range.
    BadDimension { dim: u32 },
    /// Scale-free attachment count must satisfy `1 <= m0 <= n`.
    BadAttachment { n: usize, m0: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::NoVertices => write!(f, "graph needs at least one vertex"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::BadWeight { u, v, weight } => {
                write!(f, "edge ({u}, {v}) has non-positive or non-finite weight {weight}")
            }
            GraphError::BadDimension { dim } => {
                write!(f, "hypercube dimension {dim} outside 1..=24")
            }
            GraphError::BadAttachment { n, m0 } => {
                write!(f, "attachment count {m0} invalid for {n} vertices")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Finite weighted graph, directed or undirected, with strictly positive
/// edge weights and no self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    directed: bool,
    edge_count: usize,
    out: Vec<Vec<(VertexId, f64)>>,
    /// Reverse adjacency, allocated for directed graphs only.
    rev: Option<Vec<Vec<(VertexId, f64)>>>,
}

impl Graph {
    /// Builds a graph from an edge list, validating every construction
    /// invariant. Undirected edges are supplied once in either orientation.
    pub fn build(
        n: usize,
        directed: bool,
        edges: &[(VertexId, VertexId, f64)],
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut seen: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(GraphError::BadWeight { u, v, weight: w });
            }
            seen.push(if directed || u < v { (u, v) } else { (v, u) });
        }
        seen.sort_unstable();
        if let Some(dup) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: dup[0].0, v: dup[0].1 });
        }

        let mut out = vec![Vec::new(); n];
        let mut rev = if directed { Some(vec![Vec::new(); n]) } else { None };
        for &(u, v, w) in edges {
            out[u as usize].push((v, w));
            match rev.as_mut() {
                Some(rev) => rev[v as usize].push((u, w)),
                None => out[v as usize].push((u, w)),
            }
        }
        for adj in out.iter_mut().chain(rev.iter_mut().flatten()) {
            adj.sort_unstable_by_key(|&(v, _)| v);
        }
        Ok(Graph { n, directed, edge_count: edges.len(), out, rev })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges as supplied: undirected edges count once.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Outgoing (or, undirected, incident) edges of `v`, sorted by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.out[v as usize]
    }

    /// Incoming edges of `v`; identical to [`Self::neighbors`] when undirected.
    pub fn in_neighbors(&self, v: VertexId) -> &[(VertexId, f64)] {
        match &self.rev {
            Some(rev) => &rev[v as usize],
            None => &self.out[v as usize],
        }
    }

    /// Weight of the edge `u -> v`, if present.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<f64> {
        let adj = self.neighbors(u);
        adj.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| adj[i].1)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out[v as usize].len()
    }

    /// All edges, each reported once; undirected edges come out with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, f64)> + '_ {
        self.out.iter().enumerate().flat_map(move |(u, adj)| {
            let u = u as VertexId;
            adj.iter()
                .filter(move |&&(v, _)| self.directed || u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    /// Whether every vertex is reachable from vertex 0, ignoring direction.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0 as VertexId];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            let incident = self.neighbors(v).iter().chain(self.in_neighbors(v).iter());
            for &(w, _) in incident {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }
}

/// Hypercube of dimension `dim`: `2^dim` vertices, edges join ids differing
/// in exactly one bit, weights drawn uniformly from the open interval (0, 1).
///
/// Edges are enumerated with `u` ascending and the flipped bit ascending, so
/// a seed fixes the graph bit for bit.
pub fn hypercube(dim: u32, seed: u64) -> Result<Graph, GraphError> {
    if dim == 0 || dim > 24 {
        return Err(GraphError::BadDimension { dim });
    }
    let n = 1usize << dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(dim as usize * n / 2);
    for u in 0..n {
        for b in 0..dim {
            let v = u | (1 << b);
            if v != u {
                let w: f64 = rng.sample(Open01);
                edges.push((u as VertexId, v as VertexId, w));
            }
        }
    }
    Graph::build(n, false, &edges)
}

/// Scale-free graph by preferential attachment: a complete seed graph on the
/// first `m0` vertices, then each new vertex attaches to `m0` distinct
/// existing vertices chosen with probability proportional to current degree.
/// Weights are uniform on (0, 1). `m0 = n` yields the complete graph.
pub fn scale_free(n: usize, m0: usize, seed: u64) -> Result<Graph, GraphError> {
    if m0 == 0 || m0 > n {
        return Err(GraphError::BadAttachment { n, m0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m0 * (m0 - 1) / 2 + (n - m0) * m0);
    // One entry per edge end; sampling an entry uniformly at random is
    // sampling a vertex proportional to its degree.
    let mut endpoints: Vec<VertexId> = Vec::new();
    for u in 0..m0 {
        for v in (u + 1)..m0 {
            let w: f64 = rng.sample(Open01);
            edges.push((u as VertexId, v as VertexId, w));
            endpoints.push(u as VertexId);
            endpoints.push(v as VertexId);
        }
    }
    for v in m0..n {
        let mut chosen: Vec<VertexId> = Vec::with_capacity(m0);
        while chosen.len() < m0 {
            let candidate = if endpoints.is_empty() {
                // All existing vertices have degree zero (m0 = 1 seed graph):
                // fall back to a uniform choice.
                rng.random_range(0..v) as VertexId
            } else {
                endpoints[rng.random_range(0..endpoints.len())]
            };
            if chosen.contains(&candidate) {
                continue;
            }
            let w: f64 = rng.sample(Open01);
            edges.push((v as VertexId, candidate, w));
            chosen.push(candidate);
        }
        // Degrees update only once the vertex has picked all m0 neighbors,
        // so a new vertex never attaches to itself through its own edges.
        for &c in &chosen {
            endpoints.push(c);
            endpoints.push(v as VertexId);
        }
    }
    Graph::build(n, false, &edges)
}
