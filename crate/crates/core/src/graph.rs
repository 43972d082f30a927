//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! A [`Graph`] is an immutable value. Every operation that changes the
//! structure (vertex deletion, edge contraction) returns a fresh graph.

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// An undirected simple graph with set-valued adjacency and optional
/// per-vertex labels.
///
/// Adjacency is symmetric, loop-free, and only references ids below `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<Option<String>>,
}

/// Result of [`Graph::remove_vertices`]: the induced subgraph together with
/// the old-to-new id map (`None` for removed vertices).
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(); n],
            labels: vec![None; n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut row = full.clone();
                row.remove(v);
                row
            })
            .collect();
        Graph {
            adj,
            labels: vec![None; n],
        }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    /// Graph on `n <= 11` vertices whose edges are the set bits of `mask`,
    /// enumerating pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
                bit += 1;
            }
        }
        g
    }

    /// Replaces all labels. `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_label(mut self, v: usize, label: impl Into<String>) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        self.labels[v] = Some(label.into());
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Every vertex id, as a set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// First vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// True when both graphs have the same vertex count and edge set,
    /// ignoring labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        match x.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Open neighborhood of a vertex set: vertices outside `x` adjacent to
    /// some member of `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(x)?;
        Ok(self.open_neighborhood(x))
    }

    pub(crate) fn open_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(x);
        out
    }

    /// Induced subgraph on `V \ x`, re-indexed densely in increasing id order.
    /// Labels travel with their vertices.
    pub fn remove_vertices(&self, x: &VertexSet) -> Result<Induced, GraphError> {
        self.check_set(x)?;
        let mut old_to_new = vec![None; self.n()];
        let mut kept = Vec::with_capacity(self.n());
        for v in (0..self.n()).filter(|&v| !x.contains(v)) {
            old_to_new[v] = Some(kept.len());
            kept.push(v);
        }
        let adj = kept
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|w| old_to_new[w]).collect())
            .collect();
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Induced {
            graph: Graph { adj, labels },
            old_to_new,
        })
    }

    /// Contracts the edge `uv`: `u` becomes adjacent to `N({u, v})` and `v` is
    /// removed. Vertex ids above `v` shift down by one; `u` keeps its label.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut merged = self.clone();
        let absorbed = self.open_neighborhood(&VertexSet::from([u, v]));
        for w in &absorbed {
            merged.adj[w].insert(u);
        }
        merged.adj[u] = absorbed;
        Ok(merged
            .remove_vertices(&VertexSet::singleton(v))
            .expect("v was range-checked")
            .graph)
    }

    /// Connected components, each sorted internally, listed by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of the subgraph induced by `within`.
    pub(crate) fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut rest = within.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.component_of(start, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within` (`start` must be in it).
    pub(crate) fn component_of(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = self.open_neighborhood(&frontier);
            next.intersect_with(within);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.n()).map(|v| g.degree(v)).collect()
    }

    fn assert_invariants(g: &Graph) {
        for u in 0..g.n() {
            assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                assert!(v < g.n());
                assert!(g.has_edge(v, u));
            }
        }
    }

    /// Plain adjacency-list BFS, independent of the bitset machinery.
    fn bfs_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    #[test]
    fn build_path_and_edgeless() {
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(degrees(&p), vec![1, 2, 1]);
        let e = Graph::new(2, []).unwrap();
        assert_eq!(degrees(&e), vec![0, 0]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_invariants(&g);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn neighborhood_of_sets() {
        let p = Graph::path(3);
        assert_eq!(p.neighborhood(&VertexSet::from([1])).unwrap(), VertexSet::from([0, 2]));
        assert_eq!(p.neighborhood(&VertexSet::from([0, 1])).unwrap(), VertexSet::from([2]));
        assert!(p.neighborhood(&VertexSet::from([5])).is_err());
    }

    #[test]
    fn remove_vertices_cases() {
        let p = Graph::path(3);
        let r = p.remove_vertices(&VertexSet::from([1])).unwrap();
        assert_eq!(r.graph, Graph::empty(2));
        assert_eq!(r.old_to_new, vec![Some(0), None, Some(1)]);

        let c = Graph::cycle(5);
        let same = c.remove_vertices(&VertexSet::new()).unwrap();
        assert!(same.graph.same_adjacency(&c));
        assert_eq!(same.old_to_new, (0..5).map(Some).collect::<Vec<_>>());

        let c4 = Graph::cycle(4).remove_vertices(&VertexSet::from([0])).unwrap();
        assert!(c4.graph.same_adjacency(&Graph::path(3)));

        assert!(p.remove_vertices(&VertexSet::from([3])).is_err());
    }

    #[test]
    fn contraction_cases() {
        // a=0, u=1, x=2
        let p = Graph::path(3);
        let g = p.contract_edge(0, 1).unwrap();
        assert!(g.same_adjacency(&Graph::path(2)));

        let t = Graph::complete(3).contract_edge(2, 0).unwrap();
        assert!(t.same_adjacency(&Graph::path(2)));

        let c = Graph::cycle(4).contract_edge(1, 2).unwrap();
        assert!(c.same_adjacency(&Graph::complete(3)));

        assert_eq!(p.contract_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn contraction_keeps_u_label() {
        let g = Graph::path(3).with_label(2, "x").unwrap().with_label(0, "a").unwrap();
        let h = g.contract_edge(0, 1).unwrap();
        assert_eq!(h.label(0), Some("a"));
        assert_eq!(h.label(1), Some("x"));
    }

    #[test]
    fn components_sorted_by_smallest_member() {
        let e = Graph::empty(3);
        assert_eq!(
            e.connected_components(),
            vec![VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])]
        );
        assert_eq!(Graph::path(3).connected_components(), vec![VertexSet::full(3)]);
        let g = Graph::new(5, [(0, 4), (1, 3)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![VertexSet::from([0, 4]), VertexSet::from([1, 3]), VertexSet::from([2])]
        );
    }

    #[test]
    fn components_match_bfs_on_all_small_graphs() {
        for mask in 0..1u64 << 10 {
            let g = Graph::from_edge_mask(5, mask);
            let edges: Vec<_> = g.edges().collect();
            let ours: Vec<Vec<usize>> = g.connected_components().iter().map(|c| c.to_vec()).collect();
            assert_eq!(ours, bfs_components(5, &edges), "mask {mask}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..30)
                    .prop_map(move |pairs| Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap())
            })
        }

        proptest! {
            #[test]
            fn neighborhood_excludes_set(g in arb_graph(), seed in any::<u64>()) {
                let x: VertexSet = (0..g.n()).filter(|v| seed >> v & 1 == 1).collect();
                let nx = g.neighborhood(&x).unwrap();
                prop_assert!(nx.is_disjoint(&x));
            }

            #[test]
            fn removal_components_are_separated(g in arb_graph(), seed in any::<u64>()) {
                let x: VertexSet = (0..g.n()).filter(|v| seed >> v & 1 == 1).collect();
                let h = g.remove_vertices(&x).unwrap().graph;
                let comps = h.connected_components();
                let mut owner = vec![usize::MAX; h.n()];
                for (i, c) in comps.iter().enumerate() {
                    prop_assert_eq!(h.component_of(c.first().unwrap(), c), c.clone());
                    for v in c {
                        owner[v] = i;
                    }
                }
                for (u, v) in h.edges() {
                    prop_assert_eq!(owner[u], owner[v]);
                }
            }

            #[test]
            fn contraction_drops_one_vertex(g in arb_graph(), pick in any::<usize>()) {
                let edges: Vec<_> = g.edges().collect();
                prop_assume!(!edges.is_empty());
                let (u, v) = edges[pick % edges.len()];
                let (u, v) = if pick % 2 == 0 { (u, v) } else { (v, u) };
                let h = g.contract_edge(u, v).unwrap();
                prop_assert_eq!(h.n(), g.n() - 1);
                assert_invariants(&h);
            }
        }
    }
}
