use std::collections::BTreeSet;

use super::{has_two_full_components, SeparatorError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default vertex cap for the `2^n` subset scan.
pub const DEFAULT_BRUTE_CAP: usize = 22;

/// Largest `n` accepted by [`max_sep_exhaustive`] (`2^21` labeled graphs).
pub const MAX_EXHAUSTIVE_N: usize = 7;

/// Every minimal separator of `g`, found by testing all `2^n` subsets.
pub fn brute_force_minimal_separators(g: &Graph, cap: usize) -> Result<BTreeSet<VertexSet>, SeparatorError> {
    let n = g.n();
    if n > cap.min(63) {
        return Err(SeparatorError::CapExceeded { n, cap });
    }
    Ok((0..1u64 << n)
        .map(VertexSet::from_mask)
        .filter(|s| has_two_full_components(g, s))
        .collect())
}

#[derive(Debug, Clone)]
pub struct MaxSep {
    pub n: usize,
    /// `sep(n)`: the largest number of minimal separators over all labeled
    /// graphs on `n` vertices.
    pub count: usize,
    /// First maximizer in edge-mask order.
    pub witness: Graph,
}

/// Exact `sep(n)` by scanning every labeled graph on `n` vertices.
pub fn max_sep_exhaustive(n: usize) -> Result<MaxSep, SeparatorError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(SeparatorError::CapExceeded {
            n,
            cap: MAX_EXHAUSTIVE_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut best = MaxSep {
        n,
        count: 0,
        witness: Graph::empty(n),
    };
    for mask in 0..1u64 << pairs {
        let g = Graph::from_edge_mask(n, mask);
        let count = (0..1u64 << n)
            .filter(|&s| has_two_full_components(&g, &VertexSet::from_mask(s)))
            .count();
        if count > best.count {
            best = MaxSep { n, count, witness: g };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(lists: &[&[usize]]) -> BTreeSet<VertexSet> {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    }

    #[test]
    fn complete_graph_has_none() {
        assert!(brute_force_minimal_separators(&Graph::complete(4), 22)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn four_cycle_has_the_opposite_pairs() {
        let found = brute_force_minimal_separators(&Graph::cycle(4), 22).unwrap();
        assert_eq!(found, sets(&[&[0, 2], &[1, 3]]));
    }

    #[test]
    fn disconnected_pair_counts_the_empty_separator() {
        let found = brute_force_minimal_separators(&Graph::empty(2), 22).unwrap();
        assert_eq!(found, sets(&[&[]]));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            brute_force_minimal_separators(&Graph::path(6), 5),
            Err(SeparatorError::CapExceeded { n: 6, cap: 5 })
        );
        assert!(max_sep_exhaustive(8).is_err());
    }

    #[test]
    fn tiny_extremal_values() {
        assert_eq!(max_sep_exhaustive(0).unwrap().count, 0);
        assert_eq!(max_sep_exhaustive(1).unwrap().count, 0);
        // The edgeless pair: ∅ separates the two vertices.
        let two = max_sep_exhaustive(2).unwrap();
        assert_eq!(two.count, 1);
        assert_eq!(two.witness.edge_count(), 0);
        // Three vertices: edgeless graph (∅) and the path (its middle vertex)
        // both give 1; nothing gives 2.
        assert_eq!(max_sep_exhaustive(3).unwrap().count, 1);
    }
}
