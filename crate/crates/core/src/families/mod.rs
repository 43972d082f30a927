//! Generators for the extremal graph families and their separator counts.
//!
//! All generators share a fixed numbering: the terminals are `a = 0` and
//! `b = 1`, followed by the path vertices layer by layer. Vertex `v_{i,j}`
//! is position `i` along the `j`-th layer (both 1-based).
//!
//! * [`melon`]: `k` internally disjoint `a`-`b` paths with three inner
//!   vertices each. Every layer forces a choice of one of its three inner
//!   vertices, giving `3^k` minimal `(a,b)`-separators on `3k + 2` vertices.
//! * [`block`]: `m` layers of two half-paths `a - v1 - v2 - v3` and
//!   `v4 - v5 - v6 - b`, with `v_{3,j} v_{4,k}` joined for every `j ≠ k`.
//!   Sacrificing one layer `j` leaves a free top and bottom choice in each
//!   of the other `m - 1` layers, which is the family [`layer_family`].
//! * [`glued`]: `ell` copies of `block(m)` sharing `a` and `b`; separator
//!   counts multiply across copies.

mod formula;

pub use formula::{best_layer_count, growth_base, lb_count, ln_biguint, ln_lb_count, GrowthBase, GROWTH_DIGITS};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::separators::is_minimal_ab_separator;
use crate::vertex_set::VertexSet;

pub const A: usize = 0;
pub const B: usize = 1;

/// Half-path depth of a block layer: three vertices on the `a` side and
/// three on the `b` side.
pub const LAYER_WIDTH: usize = 6;

/// Above this many members [`layer_family`] refuses to materialize a family.
pub const MAX_LAYER_FAMILY: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("melon needs at least one layer")]
    NoLayers,
    #[error("block graphs need at least two layers, got {0}")]
    TooFewLayers(usize),
    #[error("glued graphs need at least one copy")]
    NoCopies,
    #[error("layer {j} out of range 1..={m}")]
    LayerOutOfRange { j: usize, m: usize },
    #[error("graph is not a block graph")]
    NotABlock,
    #[error("layer family would have {0} members")]
    TooLarge(u64),
}

/// Parameters selecting one generated graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Melon { k: usize },
    Block { m: usize },
    Glued { ell: usize, m: usize },
}

impl Family {
    pub fn generate(self) -> Result<Graph, FamilyError> {
        match self {
            Family::Melon { k } => melon(k),
            Family::Block { m } => block(m),
            Family::Glued { ell, m } => glued(ell, m),
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            Family::Melon { k } => 3 * k + 2,
            Family::Block { m } => LAYER_WIDTH * m + 2,
            Family::Glued { ell, m } => ell * LAYER_WIDTH * m + 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Melon { k } => write!(f, "melon(k={k})"),
            Family::Block { m } => write!(f, "block(m={m})"),
            Family::Glued { ell, m } => write!(f, "glued(ell={ell}, m={m})"),
        }
    }
}

/// Id of `v_{i,j}` in `melon(k)`; `i ∈ 1..=3`, `j ∈ 1..=k`.
pub fn melon_vertex(i: usize, j: usize) -> usize {
    debug_assert!((1..=3).contains(&i) && j >= 1);
    2 + (j - 1) * 3 + (i - 1)
}

/// Id of `v_{i,j}` in `block(m)`; `i ∈ 1..=6`, `j ∈ 1..=m`.
pub fn block_vertex(i: usize, j: usize) -> usize {
    debug_assert!((1..=LAYER_WIDTH).contains(&i) && j >= 1);
    2 + (j - 1) * LAYER_WIDTH + (i - 1)
}

/// Id of `v_{i,j}` in copy `c ∈ 1..=ell` of `glued(ell, m)`.
pub fn glued_vertex(c: usize, i: usize, j: usize, m: usize) -> usize {
    (c - 1) * LAYER_WIDTH * m + block_vertex(i, j)
}

fn terminal_labels(n: usize) -> Vec<Option<String>> {
    let mut labels = vec![None; n];
    labels[A] = Some("a".into());
    labels[B] = Some("b".into());
    labels
}

pub fn melon(k: usize) -> Result<Graph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::NoLayers);
    }
    let n = 3 * k + 2;
    let mut edges = Vec::with_capacity(4 * k);
    let mut labels = terminal_labels(n);
    for j in 1..=k {
        let v = |i| melon_vertex(i, j);
        edges.extend([(A, v(1)), (v(1), v(2)), (v(2), v(3)), (v(3), B)]);
        for i in 1..=3 {
            labels[v(i)] = Some(format!("v{i},{j}"));
        }
    }
    Ok(Graph::new(n, edges)
        .expect("melon ids are in range")
        .with_labels(labels)
        .expect("n labels"))
}

pub fn block(m: usize) -> Result<Graph, FamilyError> {
    if m < 2 {
        return Err(FamilyError::TooFewLayers(m));
    }
    let n = LAYER_WIDTH * m + 2;
    let mut labels = terminal_labels(n);
    let mut edges = Vec::with_capacity(6 * m + m * (m - 1));
    for j in 1..=m {
        let v = |i| block_vertex(i, j);
        edges.extend([(A, v(1)), (v(1), v(2)), (v(2), v(3))]);
        edges.extend([(v(4), v(5)), (v(5), v(6)), (v(6), B)]);
        for i in 1..=LAYER_WIDTH {
            labels[v(i)] = Some(format!("v{i},{j}"));
        }
    }
    for j in 1..=m {
        for k in (1..=m).filter(|&k| k != j) {
            edges.push((block_vertex(3, j), block_vertex(4, k)));
        }
    }
    Ok(Graph::new(n, edges)
        .expect("block ids are in range")
        .with_labels(labels)
        .expect("n labels"))
}

/// `ell` copies of `block(m)` with all copies of `a` merged and all copies
/// of `b` merged. Copy `c` occupies ids `2 + (c-1)·6m ..`; labels of the
/// inner vertices carry a `/c` suffix when `ell > 1`.
pub fn glued(ell: usize, m: usize) -> Result<Graph, FamilyError> {
    if ell == 0 {
        return Err(FamilyError::NoCopies);
    }
    let one = block(m)?;
    if ell == 1 {
        return Ok(one);
    }
    let per_copy = LAYER_WIDTH * m;
    let n = ell * per_copy + 2;
    // Block ids 0 and 1 are the shared terminals; inner ids shift per copy.
    let lift = |c: usize, v: usize| if v < 2 { v } else { v + (c - 1) * per_copy };
    let mut labels = terminal_labels(n);
    let mut edges = Vec::with_capacity(ell * one.edge_count());
    for c in 1..=ell {
        edges.extend(one.edges().map(|(u, v)| (lift(c, u), lift(c, v))));
        for v in 2..one.n() {
            labels[lift(c, v)] = one.label(v).map(|l| format!("{l}/{c}"));
        }
    }
    Ok(Graph::new(n, edges)
        .expect("glued ids are in range")
        .with_labels(labels)
        .expect("n labels"))
}

/// The product sets of `block(m)` that avoid layer `j`, split by whether
/// they are minimal `(a,b)`-separators.
///
/// For `m = 2` every one of the `9^{m-1}` product sets is verified. From
/// `m = 3` on, most are not even separators: with `S` avoiding layer `j`,
/// the walk `a → v_{3,j} → v_{4,k} → v_{3,l} → v_{4,j} → b` (for distinct
/// `j, k, l`) survives whenever `S` holds neither `v_{4,k}` nor `v_{3,l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerFamily {
    pub j: usize,
    /// Product sets that passed [`is_minimal_ab_separator`].
    pub separators: BTreeSet<VertexSet>,
    /// Product sets that failed it.
    pub rejected: BTreeSet<VertexSet>,
}

impl LayerFamily {
    /// Number of product sets built, `9^{m-1}`.
    pub fn candidates(&self) -> usize {
        self.separators.len() + self.rejected.len()
    }

    /// Every product set was verified.
    pub fn is_complete(&self) -> bool {
        self.rejected.is_empty()
    }
}

/// Recovers `m` from a graph that must equal `block(m)` up to labels.
pub fn block_layers(g: &Graph) -> Result<usize, FamilyError> {
    let n = g.n();
    if n < 2 || !(n - 2).is_multiple_of(LAYER_WIDTH) || (n - 2) / LAYER_WIDTH < 2 {
        return Err(FamilyError::NotABlock);
    }
    let m = (n - 2) / LAYER_WIDTH;
    if !g.same_adjacency(&block(m)?) {
        return Err(FamilyError::NotABlock);
    }
    Ok(m)
}

/// Builds the layer-`j` family as the product of one top choice
/// (`v_{1,k}`, `v_{2,k}` or `v_{3,k}`) and one bottom choice (`v_{4,k}`,
/// `v_{5,k}` or `v_{6,k}`) for every layer `k ≠ j`, and checks each
/// product member against [`is_minimal_ab_separator`].
pub fn layer_family(g: &Graph, j: usize) -> Result<LayerFamily, FamilyError> {
    let m = block_layers(g)?;
    if !(1..=m).contains(&j) {
        return Err(FamilyError::LayerOutOfRange { j, m });
    }
    let size = 9u64.checked_pow((m - 1) as u32).unwrap_or(u64::MAX);
    if size > MAX_LAYER_FAMILY {
        return Err(FamilyError::TooLarge(size));
    }

    let others: Vec<usize> = (1..=m).filter(|&k| k != j).collect();
    let mut separators = BTreeSet::new();
    let mut rejected = BTreeSet::new();
    // Mixed-radix counter: digit t picks (top, bottom) for layer others[t].
    for code in 0..size {
        let mut rest = code;
        let mut s = VertexSet::new();
        for &k in &others {
            let choice = (rest % 9) as usize;
            rest /= 9;
            s.insert(block_vertex(1 + choice % 3, k));
            s.insert(block_vertex(4 + choice / 3, k));
        }
        if is_minimal_ab_separator(g, &s, A, B).expect("product sets avoid a and b") {
            separators.insert(s);
        } else {
            rejected.insert(s);
        }
    }
    Ok(LayerFamily {
        j,
        separators,
        rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separators::enumerate_minimal_ab_separators;

    fn layer_vertices(j: usize) -> VertexSet {
        (1..=LAYER_WIDTH).map(|i| block_vertex(i, j)).collect()
    }

    #[test]
    fn melon_shapes() {
        assert!(melon(1)
            .unwrap()
            .same_adjacency(&Graph::new(5, [(0, 2), (2, 3), (3, 4), (4, 1)]).unwrap()));
        let two = melon(2).unwrap();
        assert_eq!((two.n(), two.edge_count()), (8, 8));
        assert_eq!(two.vertex_by_label("v3,2"), Some(melon_vertex(3, 2)));
        assert_eq!(melon(0), Err(FamilyError::NoLayers));
    }

    #[test]
    fn melon_neighborhood_of_a() {
        let g = melon(2).unwrap();
        let nbr = g.neighborhood(&VertexSet::singleton(A)).unwrap();
        let expected: VertexSet = [g.vertex_by_label("v1,1").unwrap(), g.vertex_by_label("v1,2").unwrap()].into();
        assert_eq!(nbr, expected);
    }

    #[test]
    fn melon_components_after_removal() {
        let g = melon(2).unwrap();
        let x = VertexSet::from([melon_vertex(1, 1), melon_vertex(2, 2)]);
        let r = g.remove_vertices(&x).unwrap();
        let comps: Vec<Vec<usize>> = r
            .graph
            .connected_components()
            .iter()
            .map(|c| {
                let mut old: Vec<usize> = c
                    .iter()
                    .map(|v| r.old_to_new.iter().position(|&o| o == Some(v)).unwrap())
                    .collect();
                old.sort();
                old
            })
            .collect();
        // a=0 with v1,2=5 ; b=1 with v2,1=3 v3,1=4 v3,2=7
        assert_eq!(comps, vec![vec![0, 5], vec![1, 3, 4, 7]]);
    }

    #[test]
    fn block_shapes() {
        let g = block(2).unwrap();
        assert_eq!(g.n(), 14);
        let v31 = block_vertex(3, 1);
        assert_eq!(
            g.neighbors(v31),
            &VertexSet::from([block_vertex(2, 1), block_vertex(4, 2)])
        );
        assert_eq!(g.label(v31), Some("v3,1"));
        assert_eq!(block(24).unwrap().n(), 146);
        assert_eq!(block(1), Err(FamilyError::TooFewLayers(1)));
    }

    #[test]
    fn block_degrees_and_cross_edges() {
        for m in 2..=6 {
            let g = block(m).unwrap();
            // (position, layer) of an inner vertex
            let coord = |v: usize| ((v - 2) % LAYER_WIDTH + 1, (v - 2) / LAYER_WIDTH + 1);
            let cross = g
                .edges()
                .filter(|&(u, v)| u >= 2 && v >= 2)
                .filter(|&(u, v)| {
                    let ((iu, ju), (iv, jv)) = (coord(u), coord(v));
                    matches!((iu, iv), (3, 4) | (4, 3)) && ju != jv
                })
                .count();
            assert_eq!(cross, m * (m - 1));
            assert_eq!(g.degree(A), m);
            assert_eq!(g.degree(B), m);
            for j in 1..=m {
                assert_eq!(g.degree(block_vertex(2, j)), 2);
                assert_eq!(g.degree(block_vertex(5, j)), 2);
                assert!(!g.has_edge(block_vertex(3, j), block_vertex(4, j)));
            }
        }
    }

    #[test]
    fn glued_shapes() {
        for m in 2..=4 {
            assert_eq!(glued(1, m).unwrap(), block(m).unwrap());
        }
        let g = glued(2, 2).unwrap();
        assert_eq!(g.n(), 26);
        assert_eq!(g.edge_count(), 2 * block(2).unwrap().edge_count());
        assert_eq!(g.degree(A), 4);
        assert_eq!(g.label(glued_vertex(2, 3, 1, 2)), Some("v3,1/2"));
        assert_eq!(glued(0, 2), Err(FamilyError::NoCopies));
        assert_eq!(glued(2, 1), Err(FamilyError::TooFewLayers(1)));
        assert_eq!(Family::Glued { ell: 3, m: 4 }.vertex_count(), glued(3, 4).unwrap().n());
    }

    #[test]
    fn layer_families_two_layers_are_complete() {
        let g = block(2).unwrap();
        let f1 = layer_family(&g, 1).unwrap();
        let f2 = layer_family(&g, 2).unwrap();
        for (j, fam) in [(1, &f1), (2, &f2)] {
            assert!(fam.is_complete());
            assert_eq!(fam.separators.len(), 9);
            for s in &fam.separators {
                assert_eq!(s.len(), 2);
                assert!(s.is_disjoint(&layer_vertices(j)));
            }
        }
        assert!(f1.separators.is_disjoint(&f2.separators));
    }

    #[test]
    fn layer_families_three_layers_lose_zigzag_sets() {
        let g = block(3).unwrap();
        for j in 1..=3 {
            let fam = layer_family(&g, j).unwrap();
            assert_eq!(fam.candidates(), 81);
            // frozen from the exhaustive (a,b) enumeration of block(3)
            assert_eq!(fam.separators.len(), 25);
            assert!(fam
                .separators
                .iter()
                .all(|s| s.len() == 4 && s.is_disjoint(&layer_vertices(j))));
        }
        // Layer 1 sacrificed: v1,2 v5,2 v1,3 v4,3 leaves the walk
        // a v1,1 v2,1 v3,1 v4,2 v3,3 v4,1 v5,1 v6,1 b open.
        let s = VertexSet::from([
            block_vertex(1, 2),
            block_vertex(5, 2),
            block_vertex(1, 3),
            block_vertex(4, 3),
        ]);
        assert!(layer_family(&g, 1).unwrap().rejected.contains(&s));
        assert!(!crate::separators::is_ab_separator(&g, &s, A, B).unwrap());
    }

    #[test]
    fn verified_layer_members_match_enumeration() {
        let g = block(3).unwrap();
        let all = enumerate_minimal_ab_separators(&g, A, B).unwrap().separators;
        for j in 1..=3 {
            let avoiding: BTreeSet<VertexSet> = all
                .iter()
                .filter(|s| s.is_disjoint(&layer_vertices(j)))
                .cloned()
                .collect();
            assert_eq!(layer_family(&g, j).unwrap().separators, avoiding);
        }
    }

    #[test]
    fn layer_family_errors() {
        let g = block(2).unwrap();
        assert_eq!(layer_family(&g, 3), Err(FamilyError::LayerOutOfRange { j: 3, m: 2 }));
        assert_eq!(layer_family(&g, 0), Err(FamilyError::LayerOutOfRange { j: 0, m: 2 }));
        assert_eq!(layer_family(&melon(4).unwrap(), 1), Err(FamilyError::NotABlock));
        assert_eq!(
            layer_family(&block(9).unwrap(), 1),
            Err(FamilyError::TooLarge(9u64.pow(8)))
        );
    }

    #[test]
    fn melon_count_is_three_to_the_k() {
        for k in 1..=4 {
            let r = enumerate_minimal_ab_separators(&melon(k).unwrap(), A, B).unwrap();
            assert_eq!(r.count(), 3usize.pow(k as u32));
        }
    }
}
