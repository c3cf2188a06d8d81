//! Single-source shortest-path trees via Dijkstra, plus an all-pairs store
//! that trades memory for O(1) tree lookups.
//!
//! Trees are deterministic: equal-length relaxations keep the smallest
//! parent id, and the heap settles equal-distance vertices in id order.

use alloc::collections::BinaryHeap;
use alloc::{vec, vec::Vec};
use core::cmp::Ordering;

use crate::graph::{Graph, VertexId};
use crate::ksp::Path;

/// Sentinel parent id for the root and for unreachable vertices.
pub const NO_PARENT: VertexId = VertexId::MAX;

/// Orientation of a tree: `Forward` follows edges away from the root,
/// `Backward` follows edges toward it (distinct only on directed graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Shortest-path tree rooted at one vertex; unreachable vertices carry
/// infinite distance and no parent.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPathTree {
    root: VertexId,
    direction: Direction,
    dist: Vec<f64>,
    parent: Vec<VertexId>,
}

impl ShortestPathTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Number of vertices of the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    /// Shortest distance between `v` and the root (infinite if unreachable).
    pub fn dist(&self, v: VertexId) -> f64 {
        self.dist[v as usize]
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        match self.parent[v as usize] {
            NO_PARENT => None,
            p => Some(p),
        }
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.dist[v as usize].is_finite()
    }

    /// Tree path between `v` and the root: root-to-`v` for a forward tree,
    /// `v`-to-root for a backward one. `None` if `v` is unreachable.
    pub fn extract_path(&self, v: VertexId) -> Option<Path> {
        if !self.is_reachable(v) {
            return None;
        }
        let mut vertices = vec![v];
        let mut cur = v;
        while cur != self.root {
            // Finite distance guarantees the parent chain ends at the root.
            cur = self.parent[cur as usize];
            vertices.push(cur);
        }
        if self.direction == Direction::Forward {
            vertices.reverse();
        }
        Some(Path { vertices, length: self.dist[v as usize] })
    }
}

/// Max-heap entry ordered so the binary heap pops the smallest distance,
/// breaking ties toward the smallest vertex id.
#[derive(Debug, Clone, Copy)]
struct HeapEntry {
    dist: f64,
    vertex: VertexId,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Dijkstra with lazy deletion. Distances accumulate root-outward, so
/// `dist(v) == dist(parent(v)) + w(parent(v), v)` holds bit for bit.
///
/// Panics if `root` is out of range. Edge weights are positive by
/// construction, which is what makes the settle-once scheme correct.
pub fn dijkstra_tree(g: &Graph, root: VertexId, direction: Direction) -> ShortestPathTree {
    let n = g.vertex_count();
    assert!((root as usize) < n, "root {root} out of range for {n} vertices");
    let mut dist = vec![f64::INFINITY; n];
    let mut parent = vec![NO_PARENT; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[root as usize] = 0.0;
    heap.push(HeapEntry { dist: 0.0, vertex: root });

    while let Some(HeapEntry { dist: d, vertex: v }) = heap.pop() {
        if settled[v as usize] {
            continue;
        }
        settled[v as usize] = true;
        let edges = match direction {
            Direction::Forward => g.neighbors(v),
            Direction::Backward => g.in_neighbors(v),
        };
        for &(w, wt) in edges {
            if settled[w as usize] {
                continue;
            }
            let nd = d + wt;
            if nd < dist[w as usize] {
                dist[w as usize] = nd;
                parent[w as usize] = v;
                heap.push(HeapEntry { dist: nd, vertex: w });
            } else if nd == dist[w as usize] && v < parent[w as usize] {
                // Equal-length alternative: keep the smallest parent id.
                parent[w as usize] = v;
            }
        }
    }
    ShortestPathTree { root, direction, dist, parent }
}

/// Every shortest-path tree of a graph, indexed by root and direction.
///
/// Undirected graphs store one tree per root and serve it for both
/// directions; directed graphs store both orientations. Building this costs
/// n (or 2n) Dijkstra runs up front, after which lookups are O(1).
#[derive(Debug, Clone, PartialEq)]
pub struct AllPairsTrees {
    directed: bool,
    forward: Vec<ShortestPathTree>,
    backward: Vec<ShortestPathTree>,
}

/// Runs Dijkstra from every root and stores the trees.
pub fn all_pairs_trees(g: &Graph) -> AllPairsTrees {
    let n = g.vertex_count() as VertexId;
    let forward = (0..n).map(|r| dijkstra_tree(g, r, Direction::Forward)).collect();
    let backward = if g.is_directed() {
        (0..n).map(|r| dijkstra_tree(g, r, Direction::Backward)).collect()
    } else {
        Vec::new()
    };
    AllPairsTrees { directed: g.is_directed(), forward, backward }
}

impl AllPairsTrees {
    pub fn vertex_count(&self) -> usize {
        self.forward.len()
    }

    /// The stored tree for `root` in `direction`.
    ///
    /// On undirected graphs the forward tree doubles as the backward one
    /// (the returned tree is tagged `Forward`; consumers that need the
    /// opposite orientation reverse extracted paths).
    pub fn tree(&self, root: VertexId, direction: Direction) -> &ShortestPathTree {
        match direction {
            Direction::Backward if self.directed => &self.backward[root as usize],
            _ => &self.forward[root as usize],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::diamond;
    use crate::graph::Graph;
    use rand::distr::Open01;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::vec::Vec;

    /// Independent reference: minimum length over all simple `from -> to`
    /// paths by exhaustive DFS.
    fn exhaustive_dist(g: &Graph, from: VertexId, to: VertexId) -> f64 {
        fn go(g: &Graph, to: VertexId, v: VertexId, on_path: &mut [bool], len: f64, best: &mut f64) {
            if v == to {
                if len < *best {
                    *best = len;
                }
                return;
            }
            for &(w, wt) in g.neighbors(v) {
                if !on_path[w as usize] {
                    on_path[w as usize] = true;
                    go(g, to, w, on_path, len + wt, best);
                    on_path[w as usize] = false;
                }
            }
        }
        let mut best = f64::INFINITY;
        let mut on_path = vec![false; g.vertex_count()];
        on_path[from as usize] = true;
        go(g, to, from, &mut on_path, 0.0, &mut best);
        best
    }

    fn random_graph(n: usize, directed: bool, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n as VertexId {
            for v in 0..n as VertexId {
                let ordered_pair = if directed { u != v } else { u < v };
                if ordered_pair && rng.random_bool(0.5) {
                    edges.push((u, v, rng.sample::<f64, _>(Open01)));
                }
            }
        }
        Graph::build(n, directed, &edges).unwrap()
    }

    #[test]
    fn diamond_tree_from_zero() {
        let t = dijkstra_tree(&diamond(), 0, Direction::Forward);
        assert_eq!(t.root(), 0);
        assert_eq!(t.direction(), Direction::Forward);
        assert_eq!([t.dist(0), t.dist(1), t.dist(2), t.dist(3)], [0.0, 1.0, 1.0, 2.0]);
        assert_eq!(t.parent(0), None);
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.parent(2), Some(0));
        assert_eq!(t.parent(3), Some(1));
    }

    #[test]
    fn equal_length_routes_keep_smallest_parent() {
        // Two length-2 routes to vertex 3; the tie goes to parent 1, not 2.
        let g = Graph::build(4, false, &[(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)])
            .unwrap();
        let t = dijkstra_tree(&g, 0, Direction::Forward);
        assert_eq!(t.dist(3), 2.0);
        assert_eq!(t.parent(3), Some(1));
    }

    #[test]
    fn extract_path_cases() {
        let t = dijkstra_tree(&diamond(), 0, Direction::Forward);
        let p = t.extract_path(3).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 3]);
        assert_eq!(p.length, 2.0);

        let root = t.extract_path(0).unwrap();
        assert_eq!(root.vertices, vec![0]);
        assert_eq!(root.length, 0.0);

        let g = Graph::build(3, false, &[(0, 1, 1.0)]).unwrap();
        let t = dijkstra_tree(&g, 0, Direction::Forward);
        assert!(!t.is_reachable(2));
        assert!(t.extract_path(2).is_none());
    }

    #[test]
    fn backward_tree_on_directed_chain() {
        let g = Graph::build(3, true, &[(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        let t = dijkstra_tree(&g, 2, Direction::Backward);
        assert_eq!([t.dist(0), t.dist(1), t.dist(2)], [5.0, 3.0, 0.0]);
        assert_eq!(t.parent(0), Some(1));
        assert_eq!(t.parent(1), Some(2));
        // Backward extraction runs vertex-to-root.
        assert_eq!(t.extract_path(0).unwrap().vertices, vec![0, 1, 2]);

        // No forward path back to 0.
        let f = dijkstra_tree(&g, 2, Direction::Forward);
        assert!(!f.is_reachable(0));
    }

    #[test]
    fn matches_exhaustive_reference_on_random_graphs() {
        for seed in 0..40 {
            let n = 2 + (seed as usize % 8);
            let directed = seed % 3 == 0;
            let g = random_graph(n, directed, seed);
            let t = dijkstra_tree(&g, 0, Direction::Forward);
            for v in 0..n as VertexId {
                let want = exhaustive_dist(&g, 0, v);
                let got = t.dist(v);
                if want.is_infinite() {
                    assert!(got.is_infinite());
                } else {
                    assert!((got - want).abs() < 1e-12, "seed {seed} v {v}: {got} vs {want}");
                }
            }
        }
    }

    #[test]
    fn tree_edges_exist_and_distances_accumulate_exactly() {
        for seed in 0..20 {
            let g = random_graph(7, seed % 2 == 0, seed);
            for (root, dir) in [(0, Direction::Forward), (3, Direction::Backward)] {
                let t = dijkstra_tree(&g, root, dir);
                for v in 0..7u32 {
                    if let Some(p) = t.parent(v) {
                        let w = match dir {
                            Direction::Forward => g.weight(p, v),
                            Direction::Backward => g.weight(v, p),
                        };
                        let w = w.expect("tree edge must exist in the graph");
                        assert_eq!(t.dist(v), t.dist(p) + w);
                    }
                }
            }
        }
    }

    #[test]
    fn all_pairs_lookup_matches_single_runs() {
        let g = diamond();
        let store = all_pairs_trees(&g);
        assert_eq!(store.vertex_count(), 4);
        assert_eq!(store.tree(0, Direction::Forward), &dijkstra_tree(&g, 0, Direction::Forward));
        // Undirected: the backward request is served by the forward tree.
        assert_eq!(store.tree(3, Direction::Backward).dist(0), 2.0);

        let d = Graph::build(3, true, &[(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        let store = all_pairs_trees(&d);
        assert_eq!(store.tree(2, Direction::Backward), &dijkstra_tree(&d, 2, Direction::Backward));
        assert_eq!(store.tree(2, Direction::Backward).dist(0), 5.0);
        assert!(!store.tree(2, Direction::Forward).is_reachable(0));
    }

    #[test]
    fn undirected_distances_are_symmetric() {
        let g = random_graph(8, false, 11);
        let store = all_pairs_trees(&g);
        for u in 0..8u32 {
            for v in 0..8u32 {
                let duv = store.tree(u, Direction::Forward).dist(v);
                let dvu = store.tree(v, Direction::Forward).dist(u);
                // Same edge set in either direction; sums may differ in
                // rounding only when the orders differ, which they do not
                // here: both trees accumulate along the same vertex sequence.
                assert!((duv - dvu).abs() < 1e-12 || (duv.is_infinite() && dvu.is_infinite()));
            }
        }
    }
}
