//! Branching enumeration of minimal separators.
//!
//! For a root `a`, the search grows a connected set `A ∋ a` and an
//! accumulated separator `S`. At every node the lowest-id vertex
//! `u ∈ N(A) \ S` is either committed to `S` (the branch that deletes `u`,
//! lowering the measure `|V| - d` by one) or absorbed into `A` (the branch
//! that contracts `au`, which removes a vertex and raises the imbalance `d`,
//! lowering the measure by two). When `N(A) ⊆ S` the node is a leaf and
//! `S = N(A)` is the candidate.
//!
//! Since `A` is connected with `N(A) = S`, it is a full component of
//! `G - S`, so the candidate is a minimal separator exactly when
//! `B = V \ (A ∪ S)` contains another full component.
//!
//! In [`Mode::Balanced`] a node is cut as soon as `2|A| > n - |S|`; both
//! sides only grow, so no descendant could satisfy `|A| ≤ |B|`. Every
//! unpruned node then has measure at least 2, which gives the
//! `ρ^{μ-1} + ρ^{μ-2} = ρ^μ` recurrence and at most `ρ^n` leaves per root.

use std::collections::BTreeSet;
use std::thread;

use serde::Serialize;

use super::SeparatorError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Keep only separations with `|A| ≤ |B|`.
    Balanced,
    /// No balance pruning.
    All,
}

/// A partition `(A, S, B)` of the vertex set reached at an accepting leaf.
///
/// `A` is connected, contains `root`, and `S = N(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub root: usize,
    pub a_side: VertexSet,
    pub separator: VertexSet,
    pub b_side: VertexSet,
}

impl Separation {
    /// `|B| - |A|`: the largest `d` with `|A| ≤ |B| - d`. Negative only for
    /// separations found in [`Mode::All`].
    pub fn imbalance(&self) -> isize {
        self.b_side.len() as isize - self.a_side.len() as isize
    }

    /// Re-checks every structural property against `g`: partition, root in
    /// `A`, `A` connected, `S = N(A)`, and a full component inside `B`.
    pub fn verify(&self, g: &Graph) -> bool {
        let (a, s, b) = (&self.a_side, &self.separator, &self.b_side);
        let partition = a.is_disjoint(s) && a.is_disjoint(b) && s.is_disjoint(b) && a.union(s).union(b) == g.vertices();
        partition
            && a.contains(self.root)
            && g.component_of(self.root, a) == *a
            && g.open_neighborhood(a) == *s
            && g.components_within(b).iter().any(|c| g.open_neighborhood(c) == *s)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RootStats {
    pub root: usize,
    pub leaf_count: u64,
    pub node_count: u64,
    /// Leaves whose candidate was accepted (counted with multiplicity).
    pub accepted: u64,
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub mode: Mode,
    pub n: usize,
    /// Deduplicated union over all roots, in canonical order.
    pub separators: BTreeSet<VertexSet>,
    pub leaf_count: u64,
    pub node_count: u64,
    pub per_root: Vec<RootStats>,
}

impl EnumerationReport {
    pub fn count(&self) -> usize {
        self.separators.len()
    }

    /// Largest per-root leaf count.
    pub fn max_root_leaves(&self) -> u64 {
        self.per_root.iter().map(|r| r.leaf_count).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct RootEnumeration {
    pub stats: RootStats,
    pub separations: Vec<Separation>,
}

/// Minimal `(a,b)`-separators plus the size of the search tree that found them.
#[derive(Clone, Debug)]
pub struct AbReport {
    pub a: usize,
    pub b: usize,
    pub separators: BTreeSet<VertexSet>,
    pub leaf_count: u64,
    pub node_count: u64,
}

impl AbReport {
    pub fn count(&self) -> usize {
        self.separators.len()
    }
}

#[derive(Clone, Copy)]
enum Target {
    Any(Mode),
    Pair(usize),
}

struct Search<'g, F> {
    g: &'g Graph,
    target: Target,
    stats: RootStats,
    on_leaf: F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&VertexSet, &VertexSet, Option<VertexSet>),
{
    /// `nbr` is `N(A)`; `sep ⊆ nbr` always holds.
    fn branch(&mut self, a: VertexSet, nbr: VertexSet, sep: VertexSet) {
        self.stats.node_count += 1;
        let n = self.g.n();
        let dead = match self.target {
            Target::Any(Mode::Balanced) => 2 * a.len() + sep.len() > n,
            Target::Any(Mode::All) => false,
            // b may never join A or S.
            Target::Pair(b) => nbr.contains(b),
        };
        if dead {
            self.stats.leaf_count += 1;
            return;
        }
        match nbr.first_not_in(&sep) {
            None => {
                self.stats.leaf_count += 1;
                let b_side = self.g.vertices().difference(&a).difference(&sep);
                let accepted = match self.target {
                    Target::Any(_) => self
                        .g
                        .components_within(&b_side)
                        .iter()
                        .any(|c| self.g.open_neighborhood(c) == sep),
                    Target::Pair(b) => {
                        let cb = self.g.component_of(b, &b_side);
                        self.g.open_neighborhood(&cb) == sep
                    }
                };
                if accepted {
                    self.stats.accepted += 1;
                }
                (self.on_leaf)(&a, &sep, accepted.then_some(b_side));
            }
            Some(u) => {
                let mut with_u = sep.clone();
                with_u.insert(u);
                self.branch(a.clone(), nbr.clone(), with_u);

                let mut grown = a;
                grown.insert(u);
                let mut grown_nbr = nbr;
                grown_nbr.union_with(self.g.neighbors(u));
                grown_nbr.difference_with(&grown);
                self.branch(grown, grown_nbr, sep);
            }
        }
    }
}

fn run_root<F>(g: &Graph, root: usize, target: Target, on_leaf: F) -> RootStats
where
    F: FnMut(&VertexSet, &VertexSet, Option<VertexSet>),
{
    let mut search = Search {
        g,
        target,
        stats: RootStats {
            root,
            ..RootStats::default()
        },
        on_leaf,
    };
    search.branch(VertexSet::singleton(root), g.neighbors(root).clone(), VertexSet::new());
    search.stats
}

/// Runs the search from a single root and returns every accepting leaf as a
/// [`Separation`], in search order.
pub fn separations_from_root(g: &Graph, root: usize, mode: Mode) -> Result<RootEnumeration, SeparatorError> {
    g.check_vertex(root)?;
    let mut separations = Vec::new();
    let stats = run_root(g, root, Target::Any(mode), |a, s, b| {
        if let Some(b_side) = b {
            separations.push(Separation {
                root,
                a_side: a.clone(),
                separator: s.clone(),
                b_side,
            });
        }
    });
    Ok(RootEnumeration { stats, separations })
}

fn roots_worker(g: &Graph, mode: Mode, roots: impl Iterator<Item = usize>) -> Vec<(RootStats, BTreeSet<VertexSet>)> {
    roots
        .map(|root| {
            let mut found = BTreeSet::new();
            let stats = run_root(g, root, Target::Any(mode), |_, s, b| {
                if b.is_some() {
                    found.insert(s.clone());
                }
            });
            (stats, found)
        })
        .collect()
}

fn merge(g: &Graph, mode: Mode, mut parts: Vec<(RootStats, BTreeSet<VertexSet>)>) -> EnumerationReport {
    parts.sort_by_key(|(stats, _)| stats.root);
    let mut report = EnumerationReport {
        mode,
        n: g.n(),
        separators: BTreeSet::new(),
        leaf_count: 0,
        node_count: 0,
        per_root: Vec::with_capacity(parts.len()),
    };
    for (stats, found) in parts {
        report.leaf_count += stats.leaf_count;
        report.node_count += stats.node_count;
        report.separators.extend(found);
        report.per_root.push(stats);
    }
    report
}

/// All minimal separators of `g`, as the union of the per-root searches.
pub fn enumerate_minimal_separators(g: &Graph, mode: Mode) -> EnumerationReport {
    merge(g, mode, roots_worker(g, mode, 0..g.n()))
}

/// Same result as [`enumerate_minimal_separators`], with the roots spread
/// over `jobs` threads.
pub fn enumerate_minimal_separators_par(g: &Graph, mode: Mode, jobs: usize) -> EnumerationReport {
    let jobs = jobs.clamp(1, g.n().max(1));
    if jobs == 1 {
        return enumerate_minimal_separators(g, mode);
    }
    let parts = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| scope.spawn(move || roots_worker(g, mode, (w..g.n()).step_by(jobs))))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    merge(g, mode, parts)
}

/// All minimal `(a,b)`-separators, by the same search rooted at `a` with
/// every branch that would place `b` in `A` or `S` cut off.
pub fn enumerate_minimal_ab_separators(g: &Graph, a: usize, b: usize) -> Result<AbReport, SeparatorError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(SeparatorError::SameTerminal(a));
    }
    let mut separators = BTreeSet::new();
    let stats = run_root(g, a, Target::Pair(b), |_, s, accepted| {
        if accepted.is_some() {
            separators.insert(s.clone());
        }
    });
    Ok(AbReport {
        a,
        b,
        separators,
        leaf_count: stats.leaf_count,
        node_count: stats.node_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{block, melon, A, B};
    use crate::separators::{brute_force_minimal_separators, is_minimal_ab_separator};
    use std::collections::HashSet;

    const RHO: f64 = 1.618_033_988_749_895;

    fn brute(g: &Graph) -> BTreeSet<VertexSet> {
        brute_force_minimal_separators(g, 22).unwrap()
    }

    #[test]
    fn path_of_three() {
        let p = Graph::path(3);
        for mode in [Mode::Balanced, Mode::All] {
            let r = enumerate_minimal_separators(&p, mode);
            assert_eq!(r.separators, BTreeSet::from([VertexSet::from([1])]));
            assert!(r.per_root[0].leaf_count as f64 <= RHO.powi(3));
        }
        let ab = enumerate_minimal_ab_separators(&p, 0, 2).unwrap();
        assert_eq!(ab.separators, BTreeSet::from([VertexSet::from([1])]));
    }

    #[test]
    fn every_root_tree_is_binary() {
        let g = melon(2).unwrap();
        for mode in [Mode::Balanced, Mode::All] {
            for r in enumerate_minimal_separators(&g, mode).per_root {
                assert_eq!(r.node_count, 2 * r.leaf_count - 1);
            }
        }
    }

    #[test]
    fn matches_brute_force_on_all_five_vertex_graphs() {
        for mask in 0..1u64 << 10 {
            let g = Graph::from_edge_mask(5, mask);
            let expected = brute(&g);
            for mode in [Mode::Balanced, Mode::All] {
                assert_eq!(
                    enumerate_minimal_separators(&g, mode).separators,
                    expected,
                    "mask {mask}"
                );
            }
        }
    }

    #[test]
    fn melon_three_against_brute_force() {
        let g = melon(3).unwrap();
        let expected = brute(&g);
        let r = enumerate_minimal_separators(&g, Mode::Balanced);
        assert_eq!(r.separators, expected);
        assert!(r.max_root_leaves() as f64 <= RHO.powi(11));
        assert_eq!(enumerate_minimal_separators(&g, Mode::All).separators, expected);
    }

    #[test]
    fn parallel_run_is_identical() {
        let g = melon(3).unwrap();
        let seq = enumerate_minimal_separators(&g, Mode::Balanced);
        let par = enumerate_minimal_separators_par(&g, Mode::Balanced, 4);
        assert_eq!(seq.separators, par.separators);
        assert_eq!(seq.per_root, par.per_root);
        assert_eq!(seq.leaf_count, par.leaf_count);
    }

    #[test]
    fn separations_verify_and_are_distinct_per_root() {
        let g = block(2).unwrap();
        for mode in [Mode::Balanced, Mode::All] {
            for root in 0..g.n() {
                let run = separations_from_root(&g, root, mode).unwrap();
                let mut seen = HashSet::new();
                for sep in &run.separations {
                    assert!(sep.verify(&g));
                    if mode == Mode::Balanced {
                        assert!(sep.imbalance() >= 0);
                    }
                    assert!(seen.insert((sep.a_side.clone(), sep.separator.clone())));
                }
                assert_eq!(run.stats.accepted as usize, run.separations.len());
            }
        }
    }

    #[test]
    fn all_leaves_are_distinct_per_root() {
        let g = melon(2).unwrap();
        for root in 0..g.n() {
            let mut seen = HashSet::new();
            let mut leaves = 0;
            let stats = run_root(&g, root, Target::Any(Mode::All), |a, s, _| {
                leaves += 1;
                assert!(seen.insert((a.clone(), s.clone())), "repeated leaf from root {root}");
            });
            // Unpruned search: every leaf is reported.
            assert_eq!(stats.leaf_count, leaves);
        }
    }

    #[test]
    fn ab_search_agrees_with_predicate() {
        let g = block(2).unwrap();
        let r = enumerate_minimal_ab_separators(&g, A, B).unwrap();
        for s in &r.separators {
            assert!(is_minimal_ab_separator(&g, s, A, B).unwrap());
        }
        let from_brute: BTreeSet<_> = brute(&g)
            .into_iter()
            .filter(|s| !s.contains(A) && !s.contains(B) && is_minimal_ab_separator(&g, s, A, B).unwrap())
            .collect();
        assert_eq!(r.separators, from_brute);
    }

    #[test]
    fn ab_search_edge_cases() {
        assert_eq!(
            enumerate_minimal_ab_separators(&Graph::path(3), 1, 1).unwrap_err(),
            SeparatorError::SameTerminal(1)
        );
        // adjacent terminals: nothing separates them
        assert!(enumerate_minimal_ab_separators(&Graph::path(2), 0, 1)
            .unwrap()
            .separators
            .is_empty());
        // disconnected terminals: only the empty set
        let r = enumerate_minimal_ab_separators(&Graph::empty(3), 0, 2).unwrap();
        assert_eq!(r.separators, BTreeSet::from([VertexSet::new()]));
    }
}
