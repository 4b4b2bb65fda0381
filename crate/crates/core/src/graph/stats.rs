use std::fmt;

use super::{Graph, GraphError};

/// A degree sum extended with the two sentinels used for degenerate graphs.
///
/// Variant order gives `NegInfinity < Finite(_) < Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OreDegree {
    NegInfinity,
    Finite(usize),
    Infinity,
}

impl OreDegree {
    pub fn finite(self) -> Option<usize> {
        match self {
            OreDegree::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// `self >= bound`, treating the sentinels as infinite.
    pub fn at_least(self, bound: usize) -> bool {
        self >= OreDegree::Finite(bound)
    }
}

impl fmt::Display for OreDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OreDegree::NegInfinity => f.write_str("-inf"),
            OreDegree::Finite(v) => write!(f, "{v}"),
            OreDegree::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    /// Minimum degree.
    pub delta: usize,
    /// Maximum degree.
    pub max_degree: usize,
    /// Minimum `d(x) + d(y)` over non-adjacent pairs; `Infinity` for complete graphs.
    pub sigma2: OreDegree,
    /// Maximum `d(x) + d(y)` over edges; `NegInfinity` for edgeless graphs.
    pub theta: OreDegree,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let d = g.degrees();
    DegreeStats {
        delta: d.iter().copied().min().unwrap_or(0),
        max_degree: d.iter().copied().max().unwrap_or(0),
        sigma2: sigma2(g),
        theta: theta(g),
    }
}

fn sigma2(g: &Graph) -> OreDegree {
    let n = g.n();
    let mut best = OreDegree::Infinity;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(OreDegree::Finite(g.degree(u) + g.degree(v)));
            }
        }
    }
    best
}

/// Maximum Ore-degree `max_{xy ∈ E} d(x) + d(y)`.
pub fn theta(g: &Graph) -> OreDegree {
    g.edges()
        .map(|(u, v)| OreDegree::Finite(g.degree(u) + g.degree(v)))
        .max()
        .unwrap_or(OreDegree::NegInfinity)
}

/// `‖A, B‖`: the number of pairs `(u, v)` with `u ∈ A`, `v ∈ B`, `uv ∈ E`.
///
/// `A` and `B` are sets; repeated entries are counted once. They need not be
/// disjoint, so `edges_between(V, V) = 2‖G‖`.
pub fn edges_between(g: &Graph, a: &[usize], b: &[usize]) -> Result<usize, GraphError> {
    let n = g.n();
    if let Some(&vertex) = a.iter().chain(b).find(|&&v| v >= n) {
        return Err(GraphError::VertexOutOfRange { vertex, n });
    }
    let a = g.set_of(a.iter().copied());
    let b = g.set_of(b.iter().copied());
    Ok(a.iter().map(|u| g.degree_within(u, &b)).sum())
}
