//! Equitable colorings and the triangle-partition test for graphs on `3k`
//! vertices.
//!
//! `G` on `3k` vertices splits into `k` vertex-disjoint triangles exactly
//! when the complement has an equitable `k`-coloring: each color class is
//! then an independent triple of `Ḡ`, a triangle of `G`.

use std::cmp::Reverse;
use std::collections::VecDeque;

use thiserror::Error;

use crate::budget::{BudgetExceeded, Meter, SearchBudget};
use crate::characterizer::{is_exceptional, Decision, ExceptionKind, Rule, Verdict};
use crate::graph::{complement, degree_stats, independent_set_larger_than, Graph, VertexSet};
use crate::packer::CyclePacking;

pub use crate::graph::theta;

/// A proper coloring whose class sizes differ by at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitableColoring {
    classes: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {0} is not colored exactly once")]
    NotPartition(usize),
    #[error("vertices {0} and {1} share a class")]
    Improper(usize, usize),
    #[error("class sizes {0} and {1} differ by more than one")]
    Unbalanced(usize, usize),
}

impl EquitableColoring {
    pub fn r(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    pub fn check(&self, g: &Graph) -> Result<(), ColoringError> {
        for v in 0..g.n() {
            if self.classes.iter().filter(|c| c.contains(v)).count() != 1 {
                return Err(ColoringError::NotPartition(v));
            }
        }
        for class in &self.classes {
            for u in class.iter() {
                if let Some(v) = g.neighbors(u).intersection(class).first() {
                    return Err(ColoringError::Improper(u.min(v), u.max(v)));
                }
            }
        }
        let sizes = self.classes.iter().map(VertexSet::len);
        let (lo, hi) = (sizes.clone().min().unwrap_or(0), sizes.max().unwrap_or(0));
        if hi > lo + 1 {
            return Err(ColoringError::Unbalanced(lo, hi));
        }
        Ok(())
    }
}

/// The exact search ran out of budget before settling existence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("equitable coloring undetermined: {0}")]
pub struct Undetermined(pub BudgetExceeded);

pub fn equitable_coloring(g: &Graph, r: usize) -> Result<Option<EquitableColoring>, Undetermined> {
    equitable_coloring_with(g, r, SearchBudget::default().coloring)
}

/// Greedy coloring and class balancing first; an exact backtracking search
/// settles the cases the heuristic cannot.
pub fn equitable_coloring_with(
    g: &Graph,
    r: usize,
    node_limit: u64,
) -> Result<Option<EquitableColoring>, Undetermined> {
    let n = g.n();
    if r == 0 {
        return Ok((n == 0).then(|| EquitableColoring {
            classes: Vec::new(),
        }));
    }
    if let Some(classes) = greedy(g, r).and_then(|c| balance(g, c)) {
        return Ok(Some(EquitableColoring { classes }));
    }
    exact(g, r, node_limit).map_err(Undetermined)
}

fn greedy(g: &Graph, r: usize) -> Option<Vec<VertexSet>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut classes = vec![g.empty_set(); r];
    for v in order {
        let target = (0..r)
            .filter(|&c| g.neighbors(v).is_disjoint(&classes[c]))
            .min_by_key(|&c| (classes[c].len(), c))?;
        classes[target].insert(v);
    }
    Some(classes)
}

/// Moves vertices along chains `X₀ → X₁ → … → Xₘ`, where each step moves a
/// vertex of `Xᵢ` with no neighbor in `Xᵢ₊₁`, from a largest class to one
/// at least two smaller. `None` when no such chain remains.
fn balance(g: &Graph, mut classes: Vec<VertexSet>) -> Option<Vec<VertexSet>> {
    let r = classes.len();
    loop {
        let max = classes.iter().map(VertexSet::len).max()?;
        let min = classes.iter().map(VertexSet::len).min()?;
        if max <= min + 1 {
            return Some(classes);
        }
        let movable = |classes: &[VertexSet], from: usize, to: usize| {
            classes[from]
                .iter()
                .find(|&v| g.neighbors(v).is_disjoint(&classes[to]))
        };
        // BFS over classes from every largest class.
        let mut parent: Vec<Option<usize>> = vec![None; r];
        let mut seen = vec![false; r];
        let mut queue: VecDeque<usize> = (0..r).filter(|&c| classes[c].len() == max).collect();
        for &c in &queue {
            seen[c] = true;
        }
        let mut sink = None;
        while let Some(x) = queue.pop_front() {
            if classes[x].len() + 2 <= max {
                sink = Some(x);
                break;
            }
            for y in 0..r {
                if !seen[y] && movable(&classes, x, y).is_some() {
                    seen[y] = true;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        let mut to = sink?;
        let mut chain = Vec::new();
        while let Some(from) = parent[to] {
            chain.push((from, to));
            to = from;
        }
        // Choose every mover against the classes before the shift.
        let movers: Vec<(usize, usize, usize)> = chain
            .iter()
            .map(|&(from, to)| {
                (
                    movable(&classes, from, to).expect("edge of BFS tree"),
                    from,
                    to,
                )
            })
            .collect();
        for (v, from, to) in movers {
            classes[from].remove(v);
            classes[to].insert(v);
        }
    }
}

fn exact(g: &Graph, r: usize, limit: u64) -> Result<Option<EquitableColoring>, BudgetExceeded> {
    let n = g.n();
    let mut search = Exact {
        g,
        floor: n / r,
        extra: n % r,
        classes: vec![g.empty_set(); r],
        color: vec![usize::MAX; n],
        meter: Meter::new("equitable coloring", limit),
    };
    Ok(search.solve(0)?.then(|| EquitableColoring {
        classes: search.classes,
    }))
}

struct Exact<'a> {
    g: &'a Graph,
    floor: usize,
    /// Number of classes that end with `floor + 1` vertices.
    extra: usize,
    classes: Vec<VertexSet>,
    color: Vec<usize>,
    meter: Meter,
}

impl Exact<'_> {
    fn solve(&mut self, colored: usize) -> Result<bool, BudgetExceeded> {
        if colored == self.g.n() {
            return Ok(true);
        }
        self.meter.tick()?;
        let v = self.pick();
        let full = self.classes.iter().filter(|c| c.len() > self.floor).count();
        let mut tried_empty = false;
        for c in 0..self.classes.len() {
            let size = self.classes[c].len();
            let cap_ok = size < self.floor || (size == self.floor && full < self.extra);
            if !cap_ok || !self.g.neighbors(v).is_disjoint(&self.classes[c]) {
                continue;
            }
            if size == 0 {
                // Empty classes are interchangeable.
                if tried_empty {
                    continue;
                }
                tried_empty = true;
            }
            self.classes[c].insert(v);
            self.color[v] = c;
            if self.solve(colored + 1)? {
                return Ok(true);
            }
            self.classes[c].remove(v);
            self.color[v] = usize::MAX;
        }
        Ok(false)
    }

    /// Uncolored vertex with the most distinct neighbor colors, then the
    /// highest degree, then the lowest index.
    fn pick(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen = vec![false; self.classes.len()];
                let saturation = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&u| {
                        let c = self.color[u];
                        c != usize::MAX && !std::mem::replace(&mut seen[c], true)
                    })
                    .count();
                (saturation, self.g.degree(v), Reverse(v))
            })
            .expect("some vertex is uncolored")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePartition {
    pub decision: Decision,
    /// `k` disjoint triangles when one was constructed.
    pub triangles: Option<CyclePacking>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("triangle partition needs n = 3k, got n = {n}, k = {k}")]
pub struct OrderMismatch {
    pub n: usize,
    pub k: usize,
}

pub fn has_k_triangle_partition(g: &Graph, k: usize) -> Result<TrianglePartition, OrderMismatch> {
    has_k_triangle_partition_with(g, k, &SearchBudget::default())
}

pub fn has_k_triangle_partition_with(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<TrianglePartition, OrderMismatch> {
    let n = g.n();
    if n != 3 * k {
        return Err(OrderMismatch { n, k });
    }
    let coloring = equitable_coloring_with(&complement(g), k, budget.coloring);
    let triangles = match &coloring {
        Ok(Some(c)) => {
            let cycles = c.classes().iter().map(VertexSet::to_vec).collect();
            Some(
                CyclePacking::new(g, cycles)
                    .expect("color classes of the complement are triangles"),
            )
        }
        _ => None,
    };

    let mut decision = Decision::new();
    let delta = degree_stats(g).delta;
    let small_alpha = independent_set_larger_than(g, k, budget.independence)
        .ok()
        .map(|s| s.is_none());
    if k > 0 && delta + 1 >= 2 * k && small_alpha == Some(true) {
        let decision = if is_exceptional(g, k) == Some(ExceptionKind::TwoKkJoinKkBar) {
            decision.settle(
                Rule::TrianglePartition,
                Verdict::NoKCycles,
                format!("G is {}", ExceptionKind::TwoKkJoinKkBar),
            )
        } else {
            decision.settle(
                Rule::TrianglePartition,
                Verdict::HasKCycles,
                format!("delta={delta} >= {}, alpha <= {k}", 2 * k - 1),
            )
        };
        return Ok(TrianglePartition {
            decision,
            triangles,
        });
    }
    decision.note(
        Rule::TrianglePartition,
        format!("delta={delta}, alpha bound not met"),
    );
    let decision = match coloring {
        Ok(Some(_)) => decision.settle(
            Rule::Oracle,
            Verdict::HasKCycles,
            "complement colored equitably".into(),
        ),
        Ok(None) => decision.settle(
            Rule::Oracle,
            Verdict::NoKCycles,
            "complement has no equitable coloring".into(),
        ),
        Err(e) => {
            decision.note(Rule::Oracle, e.to_string());
            decision
        }
    };
    Ok(TrianglePartition {
        decision,
        triangles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, FamilySpec, OreDegree};

    fn family(spec: FamilySpec) -> Graph {
        named_family(&spec).unwrap()
    }

    fn sizes(c: &EquitableColoring) -> Vec<usize> {
        let mut s: Vec<usize> = c.classes().iter().map(VertexSet::len).collect();
        s.sort();
        s
    }

    #[test]
    fn colorings() {
        let c = equitable_coloring(&Graph::empty(6), 3).unwrap().unwrap();
        assert_eq!(sizes(&c), vec![2, 2, 2]);
        let c9 = family(FamilySpec::Cycle(9));
        let c = equitable_coloring(&c9, 3).unwrap().unwrap();
        c.check(&c9).unwrap();
        assert_eq!(sizes(&c), vec![3, 3, 3]);
        let sharp = family(FamilySpec::KkkPlusKk(3));
        assert_eq!(equitable_coloring(&sharp, 3), Ok(None));
        assert!(equitable_coloring(&Graph::complete(4), 3)
            .unwrap()
            .is_none());
        let c = equitable_coloring(&Graph::complete(4), 4).unwrap().unwrap();
        c.check(&Graph::complete(4)).unwrap();
    }

    #[test]
    fn check_rejects_bad_colorings() {
        let g = Graph::complete(2);
        let bad = EquitableColoring {
            classes: vec![g.set_of([0, 1])],
        };
        assert_eq!(bad.check(&g), Err(ColoringError::Improper(0, 1)));
        let e = Graph::empty(4);
        let lopsided = EquitableColoring {
            classes: vec![e.set_of([0, 1, 2]), e.set_of([3]), e.empty_set()],
        };
        assert!(matches!(
            lopsided.check(&e),
            Err(ColoringError::Unbalanced(0, 3))
        ));
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(&Graph::complete(4)), OreDegree::Finite(6));
        assert_eq!(
            theta(&complement(&family(FamilySpec::Y1))),
            OreDegree::Finite(9)
        );
        assert_eq!(theta(&Graph::empty(5)), OreDegree::NegInfinity);
    }

    #[test]
    fn triangle_partitions() {
        let p = has_k_triangle_partition(&Graph::complete(9), 3).unwrap();
        assert_eq!(p.decision.verdict, Verdict::HasKCycles);
        assert_eq!(p.triangles.unwrap().len(), 3);

        let p = has_k_triangle_partition(&family(FamilySpec::TwoKkJoinKkBar(3)), 3).unwrap();
        assert_eq!(p.decision.verdict, Verdict::NoKCycles);
        assert!(p.triangles.is_none());

        let p = has_k_triangle_partition(&family(FamilySpec::Cycle(9)), 3).unwrap();
        assert_eq!(p.decision.verdict, Verdict::NoKCycles);

        assert!(has_k_triangle_partition(&Graph::complete(8), 3).is_err());
    }

    #[test]
    fn exact_search_reports_budget() {
        let sharp = family(FamilySpec::KkkPlusKk(5));
        assert!(exact(&sharp, 5, 3).is_err());
    }
}
