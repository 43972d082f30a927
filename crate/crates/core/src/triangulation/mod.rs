//! Chordality, minimal triangulations and potential maximal cliques.

mod pmc;

pub use pmc::{check_corollary, is_pmc, pmcs_characterized, pmcs_definitional, CorollaryReport, PmcSet, PmcSource};

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

/// Largest graph accepted by [`minimal_triangulations`].
pub const MAX_TRIANGULATION_N: usize = 8;

/// Up to this size every candidate is also checked against all proper
/// sub-fills, not only single-edge removals.
pub const FULL_SUBSET_CHECK_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("a potential maximal clique candidate must be nonempty")]
    EmptySet,
}

/// A chordal supergraph of `base` given by its fill edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub base: Graph,
    /// Added edges `(u, v)` with `u < v`; disjoint from the base edges.
    pub fill: BTreeSet<(usize, usize)>,
}

impl Triangulation {
    /// The triangulated graph `base + fill`, keeping the base labels.
    pub fn graph(&self) -> Graph {
        with_fill(&self.base, self.fill.iter().copied())
    }
}

fn with_fill(g: &Graph, fill: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::new(g.n(), g.edges().chain(fill))
        .expect("fill edges are in range")
        .with_labels(g.labels().to_vec())
        .expect("same vertex count")
}

/// Maximum cardinality search order, checked for the perfect elimination
/// property. Returns a perfect elimination ordering (first vertex eliminated
/// first) when `g` is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::new();
    let mut position = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&x, &y| weight[x].cmp(&weight[y]).then(y.cmp(&x)))
            .expect("an unvisited vertex remains");
        let earlier = g.neighbors(v).intersection(&visited);
        if let Some(parent) = earlier.iter().max_by_key(|&w| position[w]) {
            let mut rest = earlier.clone();
            rest.remove(parent);
            if !rest.is_subset(g.neighbors(parent)) {
                return None;
            }
        }
        visited.insert(v);
        position[v] = step;
        order.push(v);
        for w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    order.reverse();
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Maximal cliques by Bron–Kerbosch with pivoting, in canonical order.
pub fn maximal_cliques(g: &Graph) -> BTreeSet<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut BTreeSet<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.insert(r);
            }
            return;
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        for v in p.difference(g.neighbors(pivot)).iter() {
            let mut r2 = r.clone();
            r2.insert(v);
            expand(
                g,
                r2,
                p.intersection(g.neighbors(v)),
                x.intersection(g.neighbors(v)),
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = BTreeSet::new();
    if g.n() > 0 {
        expand(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    }
    out
}

/// Fill edges produced by eliminating every possible vertex order. Each
/// minimal triangulation is the elimination graph of its own perfect
/// elimination ordering, so it appears here.
fn elimination_fills(g: &Graph) -> HashSet<BTreeSet<(usize, usize)>> {
    fn go(
        adj: &mut Vec<VertexSet>,
        remaining: &VertexSet,
        fill: &mut BTreeSet<(usize, usize)>,
        seen: &mut HashSet<(VertexSet, BTreeSet<(usize, usize)>)>,
        out: &mut HashSet<BTreeSet<(usize, usize)>>,
    ) {
        if remaining.is_empty() {
            out.insert(fill.clone());
            return;
        }
        if !seen.insert((remaining.clone(), fill.clone())) {
            return;
        }
        for v in remaining {
            let nbrs = adj[v].intersection(remaining);
            let mut added = Vec::new();
            for x in &nbrs {
                for y in nbrs.iter().filter(|&y| y > x) {
                    if !adj[x].contains(y) {
                        adj[x].insert(y);
                        adj[y].insert(x);
                        added.push((x, y));
                    }
                }
            }
            fill.extend(added.iter().copied());
            let mut rest = remaining.clone();
            rest.remove(v);
            go(adj, &rest, fill, seen, out);
            for &(x, y) in &added {
                adj[x].remove(y);
                adj[y].remove(x);
                fill.remove(&(x, y));
            }
        }
    }
    let mut adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    let mut out = HashSet::new();
    go(
        &mut adj,
        &g.vertices(),
        &mut BTreeSet::new(),
        &mut HashSet::new(),
        &mut out,
    );
    out
}

fn chordal_with(g: &Graph, fill: impl IntoIterator<Item = (usize, usize)>) -> bool {
    is_chordal(&with_fill(g, fill))
}

/// No single fill edge can be dropped while staying chordal.
fn minimal_by_single_removal(g: &Graph, fill: &BTreeSet<(usize, usize)>) -> bool {
    fill.iter()
        .all(|e| !chordal_with(g, fill.iter().copied().filter(|f| f != e)))
}

/// No proper subset of the fill is chordal.
fn minimal_by_subsets(g: &Graph, fill: &BTreeSet<(usize, usize)>) -> bool {
    let edges: Vec<_> = fill.iter().copied().collect();
    let full = (1u64 << edges.len()) - 1;
    (0..full).all(|mask| {
        !chordal_with(
            g,
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
    })
}

/// Every minimal triangulation of `g`, ordered by fill set.
pub fn minimal_triangulations(g: &Graph) -> Result<Vec<Triangulation>, TriangulationError> {
    if g.n() > MAX_TRIANGULATION_N {
        return Err(TriangulationError::TooLarge {
            n: g.n(),
            cap: MAX_TRIANGULATION_N,
        });
    }
    let mut fills: Vec<_> = elimination_fills(g)
        .into_iter()
        .filter(|f| minimal_by_single_removal(g, f))
        .filter(|f| g.n() > FULL_SUBSET_CHECK_N || minimal_by_subsets(g, f))
        .collect();
    fills.sort();
    Ok(fills
        .into_iter()
        .map(|fill| Triangulation { base: g.clone(), fill })
        .collect())
}
