use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{complement, degree_stats, Graph};

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Lower bounds on the minimum degree and on `σ₂`. Both survive adding
/// edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub min_degree: Option<usize>,
    pub min_sigma2: Option<usize>,
}

impl GraphFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        let stats = degree_stats(g);
        self.min_degree.is_none_or(|d| stats.delta >= d)
            && self.min_sigma2.is_none_or(|s| stats.sigma2.at_least(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("cannot enumerate graphs on {n} vertices (at most {MAX_ENUMERATION_ORDER})")]
pub struct OrderTooLarge {
    pub n: usize,
}

/// One graph per isomorphism class on `n` vertices passing `filter`, in
/// canonical labeling, ordered by edge count and then canonical code.
///
/// Works on complements: starting from the edgeless complement of `K_n`,
/// each level adds one complement edge in every possible way and keeps the
/// canonical representatives whose complement passes the filter. Since the
/// filter survives adding edges to `G`, every passing graph is reached
/// through passing graphs only.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter) -> Result<Vec<Graph>, OrderTooLarge> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(OrderTooLarge { n });
    }
    let mut out = Vec::new();
    let start = Graph::empty(n);
    if !filter.accepts(&complement(&start)) {
        return Ok(out);
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(start.canonical_code().to_string(), start);
    while !level.is_empty() {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for h in level.values() {
            for u in 0..n {
                for v in u + 1..n {
                    if h.has_edge(u, v) {
                        continue;
                    }
                    let bigger = h.with_edge(u, v).expect("distinct vertices");
                    let code = bigger.canonical_code();
                    if next.contains_key(code) || !filter.accepts(&complement(&bigger)) {
                        continue;
                    }
                    let canonical = bigger.relabel(&bigger.canonical_form().labeling);
                    next.insert(code.to_string(), canonical);
                }
            }
        }
        out.extend(level.into_values().map(|h| complement(&h)));
        level = next;
    }
    out.sort_by_cached_key(|g| (g.edge_count(), g.canonical_code().to_string()));
    Ok(out)
}
