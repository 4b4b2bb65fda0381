//! Exact maximum independent set by branch-and-bound.
//!
//! Branching is on a vertex of maximum degree in the candidate set; the
//! bound is a greedy clique cover of the candidates. Vertices of degree at
//! most one are taken greedily, which never loses optimality.

use super::{Graph, VertexSet};
use crate::budget::{BudgetExceeded, Meter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    pub vertices: VertexSet,
}

impl IndependentSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Exact `α(G)` with a maximum independent set as witness.
pub fn independence_number(g: &Graph, node_limit: u64) -> Result<IndependentSet, BudgetExceeded> {
    let mut search = Search::new(g, None, node_limit);
    search.run()?;
    Ok(IndependentSet {
        vertices: search.best,
    })
}

/// Threshold query "is `α(G) > threshold`?". Returns an independent set of
/// size exactly `threshold + 1` as soon as one is found.
pub fn independent_set_larger_than(
    g: &Graph,
    threshold: usize,
    node_limit: u64,
) -> Result<Option<VertexSet>, BudgetExceeded> {
    if threshold + 1 > g.n() {
        return Ok(None);
    }
    let mut search = Search::new(g, Some(threshold + 1), node_limit);
    search.run()?;
    if search.best.len() > threshold {
        let trimmed = search.best.iter().take(threshold + 1);
        Ok(Some(g.set_of(trimmed)))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    g: &'a Graph,
    target: Option<usize>,
    best: VertexSet,
    current: Vec<usize>,
    meter: Meter,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, target: Option<usize>, limit: u64) -> Self {
        Search {
            g,
            target,
            best: g.empty_set(),
            current: Vec::new(),
            meter: Meter::new("independence number", limit),
        }
    }

    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    fn run(&mut self) -> Result<(), BudgetExceeded> {
        let all = self.g.vertex_set();
        self.branch(all)
    }

    fn branch(&mut self, mut candidates: VertexSet) -> Result<(), BudgetExceeded> {
        self.meter.tick()?;
        let mark = self.current.len();

        // Low-degree vertices belong to some maximum independent set.
        loop {
            let low = candidates
                .iter()
                .find(|&v| self.g.degree_within(v, &candidates) <= 1);
            match low {
                Some(v) => {
                    self.current.push(v);
                    candidates.remove(v);
                    candidates.difference_with(self.g.neighbors(v));
                }
                None => break,
            }
        }

        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.g.set_of(self.current.iter().copied());
            }
        } else if self.current.len() + clique_cover(self.g, &candidates) > self.best.len() {
            let pivot = candidates
                .iter()
                .max_by_key(|&v| (self.g.degree_within(v, &candidates), std::cmp::Reverse(v)))
                .expect("candidates are non-empty");

            let mut with = candidates.clone();
            with.remove(pivot);
            with.difference_with(self.g.neighbors(pivot));
            self.current.push(pivot);
            self.branch(with)?;
            self.current.pop();

            if !self.done() {
                candidates.remove(pivot);
                self.branch(candidates)?;
            }
        }
        self.current.truncate(mark);
        Ok(())
    }
}

/// Number of cliques in a greedy clique cover: an upper bound on `α(G[set])`.
fn clique_cover(g: &Graph, set: &VertexSet) -> usize {
    let mut rest = set.clone();
    let mut count = 0;
    while let Some(u) = rest.first() {
        rest.remove(u);
        let mut pool = rest.intersection(g.neighbors(u));
        while let Some(w) = pool.first() {
            rest.remove(w);
            pool.remove(w);
            pool.intersect_with(g.neighbors(w));
        }
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, FamilySpec};

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                g.edges()
                    .all(|(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn is_independent(g: &Graph, s: &VertexSet) -> bool {
        s.iter().all(|v| g.neighbors(v).is_disjoint(s))
    }

    #[test]
    fn named_examples() {
        let c5 = named_family(&FamilySpec::C5BlowupK3bar).unwrap();
        let set = independence_number(&c5, u64::MAX).unwrap();
        assert_eq!(set.size(), 6);
        assert!(is_independent(&c5, &set.vertices));
        let k33 = named_family(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(independence_number(&k33, u64::MAX).unwrap().size(), 3);
        assert_eq!(independence_number(&Graph::empty(0), 10).unwrap().size(), 0);
    }

    #[test]
    fn threshold_query() {
        let h = named_family(&FamilySpec::Hsharp(3)).unwrap();
        let big = independent_set_larger_than(&h, 3, u64::MAX)
            .unwrap()
            .unwrap();
        assert_eq!(big.len(), 4);
        assert!(is_independent(&h, &big));
        assert_eq!(independent_set_larger_than(&h, 4, u64::MAX).unwrap(), None);
        assert_eq!(independent_set_larger_than(&h, 20, u64::MAX).unwrap(), None);
    }

    #[test]
    fn budget_signal() {
        let g = named_family(&FamilySpec::Petersen).unwrap();
        assert!(independence_number(&g, 1).is_err());
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let set = independence_number(&g, u64::MAX).unwrap();
            assert!(is_independent(&g, &set.vertices));
            assert_eq!(set.size(), brute_alpha(&g), "{g:?}");
        }
    }
}
