//! Minimal separators: predicates, the exhaustive subset oracle, and the
//! branching enumerator.
//!
//! A set `S ⊆ V \ {a, b}` is an `(a,b)`-separator when `a` and `b` lie in
//! different components of `G - S`, and a minimal one when no proper subset
//! also separates them. `S` is a minimal separator when it is a minimal
//! `(a,b)`-separator for some pair. Equivalently, `G - S` has at least two
//! *full* components, i.e. components whose neighborhood is all of `S`.
//!
//! The empty set counts: in a disconnected graph, `∅` is a minimal
//! separator for any two vertices in different components. Some literature
//! excludes it; this crate follows the literal definition.

mod branching;
mod brute_force;

pub use branching::{
    enumerate_minimal_ab_separators, enumerate_minimal_separators, enumerate_minimal_separators_par,
    separations_from_root, AbReport, EnumerationReport, Mode, RootEnumeration, RootStats, Separation,
};
pub use brute_force::{
    brute_force_minimal_separators, max_sep_exhaustive, MaxSep, DEFAULT_BRUTE_CAP, MAX_EXHAUSTIVE_N,
};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the two terminals must be distinct (got {0} twice)")]
    SameTerminal(usize),
    #[error("terminal {0} lies inside the candidate separator")]
    TerminalInSeparator(usize),
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

fn check_terminals(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<(), SeparatorError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    g.check_set(s)?;
    if a == b {
        return Err(SeparatorError::SameTerminal(a));
    }
    for t in [a, b] {
        if s.contains(t) {
            return Err(SeparatorError::TerminalInSeparator(t));
        }
    }
    Ok(())
}

/// Whether `a` and `b` end up in different components of `G - S`.
pub fn is_ab_separator(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<bool, SeparatorError> {
    check_terminals(g, s, a, b)?;
    let rest = g.vertices().difference(s);
    Ok(!g.component_of(a, &rest).contains(b))
}

/// Full-component test: `S` is a minimal `(a,b)`-separator iff the
/// components of `a` and of `b` in `G - S` are distinct and both have
/// neighborhood exactly `S`.
pub fn is_minimal_ab_separator(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<bool, SeparatorError> {
    check_terminals(g, s, a, b)?;
    let rest = g.vertices().difference(s);
    let ca = g.component_of(a, &rest);
    if ca.contains(b) {
        return Ok(false);
    }
    let cb = g.component_of(b, &rest);
    Ok(g.open_neighborhood(&ca) == *s && g.open_neighborhood(&cb) == *s)
}

/// Whether at least two components of `G - S` are full.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> Result<bool, SeparatorError> {
    g.check_set(s)?;
    Ok(has_two_full_components(g, s))
}

pub(crate) fn has_two_full_components(g: &Graph, s: &VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    g.components_within(&rest)
        .iter()
        .filter(|c| g.open_neighborhood(c) == *s)
        .nth(1)
        .is_some()
}

/// Components of `G - S` whose neighborhood is exactly `S`.
pub fn full_components(g: &Graph, s: &VertexSet) -> Result<Vec<VertexSet>, SeparatorError> {
    g.check_set(s)?;
    let rest = g.vertices().difference(s);
    Ok(g.components_within(&rest)
        .into_iter()
        .filter(|c| g.open_neighborhood(c) == *s)
        .collect())
}
