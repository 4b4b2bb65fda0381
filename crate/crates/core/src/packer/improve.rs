//! First-improvement local search over packings.
//!
//! Moves, tried in order; the first one that strictly improves the
//! optimality key wins:
//!
//! 1. [`Move::AddCycle`]: a cycle inside the remainder `G[R]`.
//! 2. [`Move::Shorten`]: replace one cycle `C` by a strictly shorter cycle of
//!    `G[V(C) ∪ R]`.
//! 3. [`Move::Exchange`]: replace one or two cycles by one more disjoint
//!    cycle found by bounded exhaustive search in their union with `R`.
//! 4. [`Move::Rebalance`]: replace `C` by a cycle of the same length in
//!    `G[V(C) ∪ R]` that lengthens the remainder's longest path or adds
//!    remainder edges.

use std::fmt;
use std::ops::ControlFlow;

use super::cycles::{for_each_cycle_of_length, shortest_cycle};
use super::key::{optimality_key, OptimalityKey};
use super::oracle::oracle_within;
use super::{CyclePacking, Diagnostics, PackerConfig};
use crate::budget::Meter;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    AddCycle,
    Shorten,
    Exchange,
    Rebalance,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::AddCycle => "add-cycle",
            Move::Shorten => "shorten",
            Move::Exchange => "exchange",
            Move::Rebalance => "rebalance",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Improvement {
    pub packing: CyclePacking,
    pub key: OptimalityKey,
    pub applied: Move,
}

/// One first-improvement step with the default configuration and no cap on
/// the number of cycles.
pub fn improve_step(g: &Graph, p: &CyclePacking) -> Option<CyclePacking> {
    let config = PackerConfig::default();
    let mut diagnostics = Diagnostics::default();
    let mut improver = Improver::new(g, &config, None, &mut diagnostics);
    let key = improver.key(p);
    improver.step(p, &key).map(|i| i.packing)
}

pub(crate) struct Improver<'a> {
    g: &'a Graph,
    config: &'a PackerConfig,
    /// Moves that add a cycle are disabled once the packing has this many.
    target: Option<usize>,
    diagnostics: &'a mut Diagnostics,
}

impl<'a> Improver<'a> {
    pub(crate) fn new(
        g: &'a Graph,
        config: &'a PackerConfig,
        target: Option<usize>,
        diagnostics: &'a mut Diagnostics,
    ) -> Self {
        Improver {
            g,
            config,
            target,
            diagnostics,
        }
    }

    pub(crate) fn key(&mut self, p: &CyclePacking) -> OptimalityKey {
        let key = optimality_key(self.g, p, self.config.budget.longest_path);
        if !key.exact {
            self.diagnostics.note_budget("longest path");
        }
        key
    }

    fn may_add(&self, p: &CyclePacking) -> bool {
        self.target.is_none_or(|t| p.cycles().len() < t)
    }

    pub(crate) fn step(&mut self, p: &CyclePacking, key: &OptimalityKey) -> Option<Improvement> {
        let found = self
            .add_cycle(p)
            .or_else(|| self.shorten(p, self.config.claim_prune))
            .or_else(|| self.exchange(p))
            .or_else(|| self.rebalance(p, key));
        if let Some(imp) = &found {
            debug_assert!(imp.key.beats(key), "{} does not beat {}", imp.key, key);
            self.diagnostics.count_move(imp.applied);
        }
        found
    }

    /// Runs `step` until no move applies or the iteration allowance is
    /// used up. Returns `false` in the second case.
    pub(crate) fn run(&mut self, p: &mut CyclePacking, iterations_left: &mut u64) -> bool {
        let mut key = self.key(p);
        loop {
            if *iterations_left == 0 {
                return false;
            }
            match self.step(p, &key) {
                Some(imp) => {
                    *iterations_left -= 1;
                    self.diagnostics.iterations += 1;
                    *p = imp.packing;
                    key = imp.key;
                }
                None => return true,
            }
        }
    }

    fn add_cycle(&mut self, p: &CyclePacking) -> Option<Improvement> {
        if !self.may_add(p) {
            return None;
        }
        let cycle = shortest_cycle(self.g, p.remainder())?;
        let mut cycles = p.cycles().to_vec();
        cycles.push(cycle);
        Some(self.finish(cycles, Move::AddCycle))
    }

    fn length_cap(&self, p: &CyclePacking) -> usize {
        self.config
            .length_cap
            .unwrap_or_else(|| p.cycles().iter().map(Vec::len).max().unwrap_or(0).max(6))
    }

    /// Replaces the first cycle admitting a strictly shorter replacement,
    /// choosing the best key among replacements of minimum length.
    ///
    /// With `prune`, a remainder vertex `w` with `m = ‖w,C‖ ≥ 2` neighbors
    /// on `C` splits `C` into `m` arcs; closing the shortest arc through `w`
    /// gives a cycle of at most `⌊|C|/m⌋ + 2` vertices, so the search depth
    /// is capped there whenever that is below `|C|`.
    pub(crate) fn shorten(&mut self, p: &CyclePacking, prune: bool) -> Option<Improvement> {
        let cap = self.length_cap(p);
        for (i, cycle) in p.cycles().iter().enumerate() {
            if cycle.len() <= 3 {
                continue;
            }
            let on_cycle = self.g.set_of(cycle.iter().copied());
            let mut max_len = (cycle.len() - 1).min(cap);
            if prune {
                for w in p.remainder().iter() {
                    let m = self.g.degree_within(w, &on_cycle);
                    if m >= 2 {
                        max_len = max_len.min(cycle.len() / m + 2);
                    }
                }
            }
            let within = on_cycle.union(p.remainder());
            for len in 3..=max_len {
                if let Some(imp) = self.best_replacement(p, i, &within, len, Move::Shorten) {
                    return Some(imp);
                }
            }
        }
        None
    }

    fn exchange(&mut self, p: &CyclePacking) -> Option<Improvement> {
        if !self.may_add(p) {
            return None;
        }
        let count = p.cycles().len();
        let groups = (0..count)
            .map(|i| vec![i])
            .chain((0..count).flat_map(|i| (i + 1..count).map(move |j| vec![i, j])));
        for group in groups {
            let mut within = p.remainder().clone();
            for &i in &group {
                within.union_with(&self.g.set_of(p.cycles()[i].iter().copied()));
            }
            let want = group.len() + 1;
            match oracle_within(self.g, &within, Some(want), self.config.budget.exchange) {
                Ok(found) if found.count >= want => {
                    let mut cycles: Vec<Vec<usize>> = p
                        .cycles()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !group.contains(i))
                        .map(|(_, c)| c.clone())
                        .collect();
                    cycles.extend(found.cycles);
                    return Some(self.finish(cycles, Move::Exchange));
                }
                Ok(_) => {}
                Err(_) => self.diagnostics.note_budget("cycle exchange"),
            }
        }
        None
    }

    fn rebalance(&mut self, p: &CyclePacking, key: &OptimalityKey) -> Option<Improvement> {
        let cap = self.length_cap(p);
        for (i, cycle) in p.cycles().iter().enumerate() {
            if cycle.len() > cap {
                continue;
            }
            let within = self.g.set_of(cycle.iter().copied()).union(p.remainder());
            if let Some(imp) = self.best_replacement(p, i, &within, cycle.len(), Move::Rebalance) {
                if imp.key.beats(key) {
                    return Some(imp);
                }
            }
        }
        None
    }

    /// Best-key packing obtained by replacing cycle `i` with a cycle of
    /// exactly `len` vertices from `G[within]`.
    fn best_replacement(
        &mut self,
        p: &CyclePacking,
        i: usize,
        within: &VertexSet,
        len: usize,
        applied: Move,
    ) -> Option<Improvement> {
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        let mut meter = Meter::new("cycle enumeration", self.config.budget.cycle_enumeration);
        let res = for_each_cycle_of_length(self.g, within, len, &mut meter, |c| {
            candidates.push(c.to_vec());
            ControlFlow::Continue(())
        });
        if res.is_err() {
            self.diagnostics.note_budget("cycle enumeration");
        }
        let mut best: Option<Improvement> = None;
        for candidate in candidates {
            let mut cycles = p.cycles().to_vec();
            cycles[i] = candidate;
            let imp = self.finish(cycles, applied);
            if best.as_ref().is_none_or(|b| imp.key.beats(&b.key)) {
                best = Some(imp);
            }
        }
        best
    }

    fn finish(&mut self, cycles: Vec<Vec<usize>>, applied: Move) -> Improvement {
        let packing = CyclePacking::new(self.g, cycles).expect("moves preserve validity");
        let key = self.key(&packing);
        Improvement {
            packing,
            key,
            applied,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, named_family, FamilySpec, GraphBuilder};

    #[test]
    fn adds_cycle_from_remainder() {
        let g = disjoint_union(&Graph::complete(3), &Graph::complete(3));
        let p = CyclePacking::new(&g, vec![vec![0, 1, 2]]).unwrap();
        let q = improve_step(&g, &p).unwrap();
        assert_eq!(q.cycles().len(), 2);
        assert!(q.remainder().is_empty());
    }

    #[test]
    fn shortens_four_cycle_in_k4() {
        // K4 on 0..4 with the pendant path 3 - 4 - 5.
        let mut b =
            GraphBuilder::from_graph(&disjoint_union(&Graph::complete(4), &Graph::empty(2)));
        b.add_edge(3, 4).unwrap();
        b.add_edge(4, 5).unwrap();
        let g = b.build();
        let p = CyclePacking::new(&g, vec![vec![0, 1, 2, 3]]).unwrap();
        let q = improve_step(&g, &p).unwrap();
        assert_eq!(q.cycles().len(), 1);
        assert_eq!(q.cycles()[0].len(), 3);
    }

    #[test]
    fn y1_never_reaches_three_cycles() {
        let g = named_family(&FamilySpec::Y1).unwrap();
        let mut p = CyclePacking::new(&g, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let config = PackerConfig::default();
        let mut diagnostics = Diagnostics::default();
        let mut improver = Improver::new(&g, &config, None, &mut diagnostics);
        let mut budget = 10_000;
        assert!(improver.run(&mut p, &mut budget));
        assert_eq!(p.cycles().len(), 2);
    }

    #[test]
    fn steps_strictly_improve() {
        let g = named_family(&FamilySpec::Petersen).unwrap();
        let mut p = CyclePacking::new(&g, vec![]).unwrap();
        let mut last = optimality_key(&g, &p, u64::MAX);
        while let Some(q) = improve_step(&g, &p) {
            let key = optimality_key(&g, &q, u64::MAX);
            assert!(key.beats(&last));
            last = key;
            p = q;
        }
        assert_eq!(p.cycles().len(), 2);
    }
}
