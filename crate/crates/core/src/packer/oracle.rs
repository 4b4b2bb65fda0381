//! Exact maximum number of vertex-disjoint cycles.
//!
//! Branches on the lowest-index live vertex `v`: either `v` lies on no
//! cycle of the packing, or it lies on some chordless cycle through `v`
//! (any packing can be shortened to chordless cycles). Cycles are tried
//! shortest first, states are memoized on the live vertex set, and vertices
//! of degree at most one are peeled off before each step.

use std::collections::HashMap;

use super::cycles::chordless_cycles_through;
use crate::budget::{BudgetExceeded, Meter};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPacking {
    /// Maximum number of disjoint cycles, or `stop_at` when the search
    /// stopped early after reaching it.
    pub count: usize,
    /// `count` pairwise disjoint cycles.
    pub cycles: Vec<Vec<usize>>,
}

pub fn oracle_max_packing(
    g: &Graph,
    stop_at: Option<usize>,
    node_limit: u64,
) -> Result<MaxPacking, BudgetExceeded> {
    oracle_within(g, &g.vertex_set(), stop_at, node_limit)
}

/// [`oracle_max_packing`] restricted to the induced subgraph `G[within]`.
pub fn oracle_within(
    g: &Graph,
    within: &VertexSet,
    stop_at: Option<usize>,
    node_limit: u64,
) -> Result<MaxPacking, BudgetExceeded> {
    let mut search = Search {
        g,
        memo: HashMap::new(),
        meter: Meter::new("maximum cycle packing", node_limit),
    };
    let root = search.peel(within.clone());
    let cap = stop_at.unwrap_or(usize::MAX).min(root.len() / 3);
    let count = search.solve(root.clone(), cap)?;

    let mut cycles = Vec::with_capacity(count);
    let mut state = root;
    while cycles.len() < count {
        let state_key = search.peel(state);
        let Some(entry) = search.memo.get(&state_key) else {
            break;
        };
        state = match &entry.next {
            Next::Exclude(v) => {
                let mut s = state_key.clone();
                s.remove(*v);
                s
            }
            Next::Take(cycle) => {
                cycles.push(cycle.clone());
                state_key.difference(&g.set_of(cycle.iter().copied()))
            }
            Next::Stop => break,
        };
    }
    debug_assert_eq!(cycles.len(), count);
    Ok(MaxPacking { count, cycles })
}

#[derive(Debug, Clone)]
enum Next {
    Exclude(usize),
    Take(Vec<usize>),
    Stop,
}

#[derive(Debug, Clone)]
struct Entry {
    value: usize,
    /// `value` is the true maximum; otherwise it is a lower bound.
    exact: bool,
    next: Next,
}

struct Search<'a> {
    g: &'a Graph,
    memo: HashMap<VertexSet, Entry>,
    meter: Meter,
}

impl Search<'_> {
    fn peel(&self, mut s: VertexSet) -> VertexSet {
        loop {
            let low: Vec<usize> = s
                .iter()
                .filter(|&v| self.g.degree_within(v, &s) <= 1)
                .collect();
            if low.is_empty() {
                return s;
            }
            for v in low {
                s.remove(v);
            }
        }
    }

    /// `min(maximum packing of G[s], cap)`; `s` must already be peeled.
    fn solve(&mut self, s: VertexSet, cap: usize) -> Result<usize, BudgetExceeded> {
        let upper = s.len() / 3;
        let cap = cap.min(upper);
        if cap == 0 {
            return Ok(0);
        }
        if let Some(e) = self.memo.get(&s) {
            if e.exact || e.value >= cap {
                return Ok(e.value.min(cap));
            }
        }
        self.meter.tick()?;

        let v = s.first().expect("non-empty state");
        let mut cycles = chordless_cycles_through(self.g, v, &s, &mut self.meter)?;
        cycles.sort_by_key(Vec::len);

        let mut best = 0;
        let mut next = Next::Stop;
        let mut stopped_early = false;
        for cycle in cycles {
            let rest = self.peel(s.difference(&self.g.set_of(cycle.iter().copied())));
            if rest.len() / 3 < best {
                continue;
            }
            let value = 1 + self.solve(rest, cap - 1)?;
            if value > best {
                best = value;
                next = Next::Take(cycle);
            }
            if best >= cap {
                stopped_early = true;
                break;
            }
        }
        if !stopped_early {
            let mut without = s.clone();
            without.remove(v);
            let without = self.peel(without);
            if without.len() / 3 > best {
                let value = self.solve(without, cap)?;
                if value > best {
                    best = value;
                    next = Next::Exclude(v);
                }
                stopped_early = best >= cap;
            }
        }
        let exact = !stopped_early || best == upper;
        self.memo.insert(
            s,
            Entry {
                value: best,
                exact,
                next,
            },
        );
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, FamilySpec};
    use crate::packer::cycles::is_cycle;

    fn max(g: &Graph) -> usize {
        let m = oracle_max_packing(g, None, u64::MAX).unwrap();
        assert_eq!(m.cycles.len(), m.count);
        let mut used = g.empty_set();
        for c in &m.cycles {
            assert!(is_cycle(g, c), "{c:?}");
            for &v in c {
                assert!(used.insert(v));
            }
        }
        m.count
    }

    #[test]
    fn named_values() {
        assert_eq!(max(&named_family(&FamilySpec::Y1).unwrap()), 2);
        assert_eq!(max(&named_family(&FamilySpec::Y2).unwrap()), 2);
        assert_eq!(max(&named_family(&FamilySpec::C5BlowupK3bar).unwrap()), 3);
        assert_eq!(max(&Graph::complete(6)), 2);
        assert_eq!(max(&named_family(&FamilySpec::Petersen).unwrap()), 2);
        assert_eq!(max(&named_family(&FamilySpec::Wheel(8)).unwrap()), 1);
        assert_eq!(max(&Graph::empty(5)), 0);
        assert_eq!(max(&Graph::empty(0)), 0);
    }

    #[test]
    fn stop_at_short_circuits() {
        let k12 = Graph::complete(12);
        let m = oracle_max_packing(&k12, Some(2), u64::MAX).unwrap();
        assert_eq!(m.count, 2);
        assert_eq!(m.cycles.len(), 2);
        assert_eq!(max(&k12), 4);
    }

    #[test]
    fn budget_is_signalled() {
        let g = named_family(&FamilySpec::C5BlowupK3bar).unwrap();
        assert!(oracle_max_packing(&g, None, 2).is_err());
    }
}
