//! Compact undirected graph representation on at most [`MAX_VERTICES`] vertices.
//!
//! Graphs are simple (no loops, no parallel edges), undirected, and immutable
//! after construction: every mutating operation returns a new graph. Adjacency
//! is stored as one bitset word per vertex, so adjacency tests are O(1) and
//! neighborhood scans are single-word bit iteration.

use std::fmt;

use crate::error::GraphError;

/// Hard cap on the number of vertices: one machine word of adjacency per
/// vertex. Everything in scope fits into the graph6 single-byte range (62),
/// so one word is enough; raise this to a larger word-multiple if a future
/// target needs it.
pub const MAX_VERTICES: usize = 64;

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[v]` has bit `u` set iff `uv` is an edge. Symmetric, no diagonal.
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Edges may repeat; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { v: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Internal constructor from adjacency rows assumed valid (symmetric, no
    /// diagonal, no bits at or above `n`). Debug-checked.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n >= 1 && n <= MAX_VERTICES);
        #[cfg(debug_assertions)]
        {
            let mask = if n == 64 { u64::MAX } else { bit(n) - 1 };
            for v in 0..n {
                debug_assert_eq!(adj[v] & !mask, 0, "adjacency bit outside 0..n");
                debug_assert_eq!(adj[v] & bit(v), 0, "self-loop at {v}");
                for u in 0..v {
                    debug_assert_eq!(
                        (adj[u] >> v) & 1,
                        (adj[v] >> u) & 1,
                        "asymmetric adjacency at ({u},{v})"
                    );
                }
            }
        }
        Graph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    #[inline]
    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Bitmask with one bit per vertex of the graph.
    #[inline]
    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.adj[u] & !(bit(u) | (bit(u) - 1))).map(move |v| (u, v))
        })
    }

    /// New graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u.max(v), n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph { n: self.n, adj })
    }

    /// New graph with the edge `uv` removed. The vertex set is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u.max(v), n: self.n });
        }
        if u == v || !self.adjacent(u, v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Graph { n: self.n, adj })
    }

    /// New graph with vertex `v` and its incident edges removed. Remaining
    /// vertices are relabeled to `0..n-1` preserving their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if self.n == 1 {
            return Err(GraphError::NoVertices);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `verts`, relabeled to `0..verts.len()` in the
    /// given order. `verts` must be nonempty, in-range, and duplicate-free.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        assert!(!verts.is_empty(), "induced subgraph needs at least one vertex");
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate() {
                if i != j && self.adjacent(u, w) {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Per-vertex degree statistics.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let v3_count = degrees.iter().filter(|&&d| d == 3).count();
        let v_ge4_count = degrees.iter().filter(|&&d| d >= 4).count();
        let regular_k = (min_degree == max_degree).then_some(min_degree);
        DegreeProfile { degrees, min_degree, v3_count, v_ge4_count, regular_k }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The k-core: the unique maximal vertex set whose induced subgraph has
    /// all degrees >= k, as a sorted vertex list (possibly empty). Computed by
    /// repeatedly peeling any vertex whose degree among the survivors is
    /// below k; the result does not depend on the peel order.
    pub fn k_core(&self, k: usize) -> Vec<usize> {
        BitIter(self.k_core_mask(k, self.full_mask())).collect()
    }

    /// k-core of the subgraph induced by `mask`, as a bitmask.
    pub(crate) fn k_core_mask(&self, k: usize, mask: u64) -> u64 {
        let mut core = mask;
        let mut queue: Vec<usize> = BitIter(core)
            .filter(|&v| (self.adj[v] & core).count_ones() < k as u32)
            .collect();
        while let Some(v) = queue.pop() {
            if core & bit(v) == 0 {
                continue;
            }
            core &= !bit(v);
            for u in BitIter(self.adj[v] & core) {
                if (self.adj[u] & core).count_ones() < k as u32 {
                    queue.push(u);
                }
            }
        }
        core
    }

    /// Connected components as sorted vertex lists, ordered by their smallest
    /// vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| BitIter(m).collect()).collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            loop {
                let mut grown = comp;
                for u in BitIter(comp) {
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() == 1
    }

    /// Complete graph `K_n`. Panics if `n` is out of range.
    pub fn complete(n: usize) -> Graph {
        let all: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, all).expect("valid complete graph order")
    }

    /// Cycle `C_n` on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle order")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path order")
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<(usize, usize)> =
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edges(a + b, edges).expect("valid bipartite orders")
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner 5-cycle 5..10 with step
    /// 2, spokes between them.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for v in 0..5 {
            edges.push((v, (v + 1) % 5));
            edges.push((5 + v, 5 + (v + 2) % 5));
            edges.push((v, 5 + v));
        }
        Graph::from_edges(10, edges).expect("petersen graph is valid")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterator over the set bits of a word, ascending.
#[derive(Clone)]
pub struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Degree statistics of a graph: the degree sequence plus the counts the
/// structural conditions are stated in terms of.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    /// Number of vertices of degree exactly 3.
    pub v3_count: usize,
    /// Number of vertices of degree at least 4.
    pub v_ge4_count: usize,
    /// The common degree if the graph is regular.
    pub regular_k: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_k4() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn from_edges_single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.degree(0), 0);
    }

    #[test]
    fn from_edges_five_cycle() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert_eq!(g, Graph::cycle(5));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        ));
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop { v: 1 })));
        assert!(matches!(Graph::from_edges(0, []), Err(GraphError::NoVertices)));
        assert!(matches!(
            Graph::empty(65),
            Err(GraphError::TooManyVertices { n: 65, max: 64 })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degree_profile_examples() {
        let p = Graph::complete(4).degree_profile();
        assert_eq!(p.degrees, vec![3, 3, 3, 3]);
        assert_eq!(p.min_degree, 3);
        assert_eq!(p.v3_count, 4);
        assert_eq!(p.v_ge4_count, 0);
        assert_eq!(p.regular_k, Some(3));

        let p = Graph::complete(5).degree_profile();
        assert_eq!(p.v3_count, 0);
        assert_eq!(p.v_ge4_count, 5);
        assert_eq!(p.regular_k, Some(4));

        let p = Graph::complete_bipartite(3, 4).degree_profile();
        assert_eq!(p.degrees.iter().filter(|&&d| d == 4).count(), 3);
        assert_eq!(p.degrees.iter().filter(|&&d| d == 3).count(), 4);
        assert_eq!(p.regular_k, None);
    }

    #[test]
    fn delete_edge_k4_degrees() {
        let g = Graph::complete(4).delete_edge(0, 1).unwrap();
        let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3]);
    }

    #[test]
    fn delete_vertex_k4_gives_triangle() {
        for v in 0..4 {
            let g = Graph::complete(4).delete_vertex(v).unwrap();
            assert_eq!(g, Graph::complete(3));
        }
    }

    #[test]
    fn delete_then_readd_restores_adjacency() {
        let g = Graph::petersen();
        let h = g.delete_edge(0, 1).unwrap().with_edge(0, 1).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn delete_missing_edge_or_vertex_errors() {
        let g = Graph::cycle(5);
        assert!(matches!(g.delete_edge(0, 2), Err(GraphError::MissingEdge { u: 0, v: 2 })));
        assert!(matches!(g.delete_vertex(9), Err(GraphError::VertexOutOfRange { v: 9, n: 5 })));
    }

    #[test]
    fn delete_vertex_reduces_degree_sum_by_twice_degree() {
        let g = Graph::petersen();
        let total: usize = (0..10).map(|v| g.degree(v)).sum();
        for v in 0..10 {
            let h = g.delete_vertex(v).unwrap();
            let new_total: usize = h.vertices().map(|u| h.degree(u)).sum();
            assert_eq!(total - new_total, 2 * g.degree(v));
        }
    }

    #[test]
    fn k_core_examples() {
        assert_eq!(Graph::complete(4).k_core(3), vec![0, 1, 2, 3]);
        assert_eq!(Graph::cycle(5).k_core(3), Vec::<usize>::new());
        // K_{3,3} minus an edge: both endpoints drop to degree 2 and peeling
        // cascades through the whole graph.
        let g = Graph::complete_bipartite(3, 3).delete_edge(0, 3).unwrap();
        assert_eq!(g.k_core(3), Vec::<usize>::new());
    }

    #[test]
    fn k_core_zero_is_everything() {
        let g = Graph::path(4);
        assert_eq!(g.k_core(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn connected_components_examples() {
        assert_eq!(Graph::complete(4).connected_components(), vec![vec![0, 1, 2, 3]]);

        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(
            two_triangles.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );

        let isolated = Graph::empty(4).unwrap();
        assert_eq!(isolated.connected_components().len(), 4);
        assert!(!isolated.is_connected());
        assert!(Graph::from_edges(1, []).unwrap().is_connected());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::complete_bipartite(2, 2);
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Graph::petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.degree_profile().regular_k, Some(3));
        assert!(g.is_connected());
    }
}
