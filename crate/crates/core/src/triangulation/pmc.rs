use std::collections::BTreeSet;

use serde::Serialize;

use super::{maximal_cliques, minimal_triangulations, TriangulationError};
use crate::graph::Graph;
use crate::separators::{brute_force_minimal_separators, SeparatorError};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PmcSource {
    /// Union of maximal cliques over all minimal triangulations.
    Definitional,
    /// All sets passing [`is_pmc`].
    Characterization,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmcSet {
    pub members: BTreeSet<VertexSet>,
    pub source: PmcSource,
}

impl PmcSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `Ω` is a potential maximal clique iff no component of `G - Ω` sees all
/// of `Ω`, and every two vertices of `Ω` are adjacent or both see a common
/// component of `G - Ω`.
pub fn is_pmc(g: &Graph, omega: &VertexSet) -> Result<bool, TriangulationError> {
    if omega.is_empty() {
        return Err(TriangulationError::EmptySet);
    }
    g.check_set(omega)?;
    let rest = g.vertices().difference(omega);
    // reach[u]: vertices of Ω that u sees directly or through a component
    let mut reach: Vec<VertexSet> = omega.iter().map(|u| g.neighbors(u).intersection(omega)).collect();
    let members = omega.to_vec();
    for comp in g.components_within(&rest) {
        let border = g.open_neighborhood(&comp);
        if border == *omega {
            return Ok(false);
        }
        for (idx, &u) in members.iter().enumerate() {
            if border.contains(u) {
                reach[idx].union_with(&border);
            }
        }
    }
    Ok(members.iter().zip(&reach).all(|(&u, r)| {
        let mut r = r.clone();
        r.insert(u);
        omega.is_subset(&r)
    }))
}

pub fn pmcs_definitional(g: &Graph) -> Result<PmcSet, TriangulationError> {
    let mut members = BTreeSet::new();
    for t in minimal_triangulations(g)? {
        members.extend(maximal_cliques(&t.graph()));
    }
    Ok(PmcSet {
        members,
        source: PmcSource::Definitional,
    })
}

/// Filters every nonempty vertex subset through [`is_pmc`]; `2^n` work.
pub fn pmcs_characterized(g: &Graph, cap: usize) -> Result<PmcSet, TriangulationError> {
    let n = g.n();
    if n > cap.min(63) {
        return Err(TriangulationError::TooLarge { n, cap });
    }
    let mut members = BTreeSet::new();
    for mask in 1..1u64 << n {
        let omega = VertexSet::from_mask(mask);
        if is_pmc(g, &omega)? {
            members.insert(omega);
        }
    }
    Ok(PmcSet {
        members,
        source: PmcSource::Characterization,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub n: usize,
    pub pmc_count: usize,
    pub sep_count: usize,
    /// `pmc_count · n ≥ sep_count`.
    pub corollary_holds: bool,
}

/// Counts PMCs and minimal separators by exhaustive subset scans and checks
/// `pmc(G) ≥ sep(G) / n`.
pub fn check_corollary(g: &Graph, cap: usize) -> Result<CorollaryReport, TriangulationError> {
    let pmc_count = pmcs_characterized(g, cap)?.len();
    let sep_count = brute_force_minimal_separators(g, cap)
        .map_err(|e| match e {
            SeparatorError::CapExceeded { n, cap } => TriangulationError::TooLarge { n, cap },
            other => unreachable!("brute force only fails on the cap: {other}"),
        })?
        .len();
    let n = g.n();
    Ok(CorollaryReport {
        n,
        pmc_count,
        sep_count,
        corollary_holds: pmc_count * n >= sep_count,
    })
}
