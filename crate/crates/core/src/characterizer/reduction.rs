use std::collections::HashMap;

use crate::budget::Meter;
use crate::graph::{Multigraph, VertexSet};
use crate::packer::cycles::chordless_cycles_through;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    /// Removed a vertex of degree at most one.
    DeleteBud {
        vertex: usize,
        neighbor: Option<usize>,
    },
    /// Removed a degree-2 vertex and joined its two edge ends; `x == y`
    /// means a loop was created at `x`.
    Suppress { vertex: usize, ends: (usize, usize) },
}

impl ReductionStep {
    pub fn vertex(&self) -> usize {
        match *self {
            ReductionStep::DeleteBud { vertex, .. } | ReductionStep::Suppress { vertex, .. } => {
                vertex
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: Multigraph,
    pub trace: Vec<ReductionStep>,
}

/// Deletes buds and suppresses degree-2 vertices, lowest index first,
/// until neither applies. Multiplicities are kept exact.
///
/// A vertex whose only edge is a single loop has degree 2 but is left in
/// place, so a bare cycle ends as one looped vertex.
pub fn reduce_multigraph(m: &Multigraph) -> Reduction {
    let mut h = m.clone();
    let mut trace = Vec::new();
    while let Some(step) = next_step(&h) {
        apply(&mut h, step);
        trace.push(step);
    }
    Reduction { reduced: h, trace }
}

fn next_step(h: &Multigraph) -> Option<ReductionStep> {
    h.vertices().iter().find_map(|v| {
        let degree = h.degree(v);
        if degree <= 1 {
            let neighbor = h.incident(v).next().map(|(u, _)| u);
            return Some(ReductionStep::DeleteBud {
                vertex: v,
                neighbor,
            });
        }
        if degree == 2 && h.loops(v) == 0 {
            let ends: Vec<usize> = h
                .incident(v)
                .flat_map(|(u, mult)| std::iter::repeat_n(u, mult))
                .collect();
            return Some(ReductionStep::Suppress {
                vertex: v,
                ends: (ends[0], ends[1]),
            });
        }
        None
    })
}

fn apply(h: &mut Multigraph, step: ReductionStep) {
    match step {
        ReductionStep::DeleteBud { vertex, .. } => h.remove_vertex(vertex),
        ReductionStep::Suppress {
            vertex,
            ends: (x, y),
        } => {
            h.remove_vertex(vertex);
            h.add_edge(x, y, 1);
        }
    }
}

/// Re-applies `trace` to `m`, checking that every step is legal.
pub fn replay(m: &Multigraph, trace: &[ReductionStep]) -> Option<Multigraph> {
    let mut h = m.clone();
    for &step in trace {
        let v = step.vertex();
        if !h.is_alive(v) {
            return None;
        }
        let legal = match step {
            ReductionStep::DeleteBud { neighbor, .. } => {
                h.degree(v) <= 1 && h.incident(v).next().map(|(u, _)| u) == neighbor
            }
            ReductionStep::Suppress { ends: (x, y), .. } => {
                h.degree(v) == 2
                    && h.loops(v) == 0
                    && if x == y {
                        h.multiplicity(v, x) == 2
                    } else {
                        h.multiplicity(v, x) == 1 && h.multiplicity(v, y) == 1
                    }
            }
        };
        if !legal {
            return None;
        }
        apply(&mut h, step);
    }
    Some(h)
}

/// Maximum number of vertex-disjoint cycles of a multigraph, where a loop
/// and a pair of parallel edges each count as a cycle. Exponential; meant
/// for small inputs.
pub fn max_disjoint_cycles(m: &Multigraph) -> usize {
    let simple = m.underlying_simple();
    let mut memo = HashMap::new();
    solve(m, &simple, m.vertices().clone(), &mut memo)
}

fn solve(
    m: &Multigraph,
    simple: &crate::graph::Graph,
    s: VertexSet,
    memo: &mut HashMap<VertexSet, usize>,
) -> usize {
    let Some(v) = s.first() else {
        return 0;
    };
    if let Some(&value) = memo.get(&s) {
        return value;
    }
    let mut supports: Vec<VertexSet> = Vec::new();
    let single =
        |vs: &[usize]| VertexSet::from_iter_with_capacity(m.universe(), vs.iter().copied());
    if m.loops(v) > 0 {
        supports.push(single(&[v]));
    }
    for (u, mult) in m.incident(v) {
        if mult >= 2 && s.contains(u) {
            supports.push(single(&[v, u]));
        }
    }
    let mut meter = Meter::new("multigraph cycles", u64::MAX);
    let cycles = chordless_cycles_through(simple, v, &s, &mut meter).expect("unbounded meter");
    supports.extend(cycles.iter().map(|c| single(c)));

    let mut without = s.clone();
    without.remove(v);
    let mut best = solve(m, simple, without, memo);
    for c in supports {
        best = best.max(1 + solve(m, simple, s.difference(&c), memo));
    }
    memo.insert(s, best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, FamilySpec, Graph, GraphBuilder};

    fn reduce(g: &Graph) -> Reduction {
        reduce_multigraph(&Multigraph::from_simple(g))
    }

    #[test]
    fn cycle_collapses_to_looped_vertex() {
        let r = reduce(&named_family(&FamilySpec::Cycle(7)).unwrap());
        assert_eq!(r.reduced.order(), 1);
        let v = r.reduced.vertices().first().unwrap();
        assert_eq!(r.reduced.loops(v), 1);
        assert_eq!(r.trace.len(), 6);
        assert!(
            matches!(r.trace.last(), Some(ReductionStep::Suppress { ends: (x, y), .. }) if x == y)
        );
    }

    #[test]
    fn subdivided_k5_returns_to_k5() {
        let mut b = GraphBuilder::from_graph(&Graph::complete(5));
        b.remove_edge(0, 1);
        let mut b =
            GraphBuilder::from_graph(&crate::graph::disjoint_union(&b.build(), &Graph::empty(1)));
        b.add_edge(0, 5).unwrap();
        b.add_edge(5, 1).unwrap();
        let r = reduce(&b.build());
        assert!(r.reduced.is_simple());
        assert_eq!(
            r.reduced
                .underlying_simple()
                .induced_subgraph(r.reduced.vertices())
                .0,
            Graph::complete(5)
        );
        assert_eq!(
            r.trace,
            vec![ReductionStep::Suppress {
                vertex: 5,
                ends: (0, 1)
            }]
        );
    }

    #[test]
    fn y1_reduces_to_k8() {
        // Suppressing the two subdivision vertices restores the deleted edge.
        let r = reduce(&named_family(&FamilySpec::Y1).unwrap());
        assert_eq!(r.reduced.order(), 8);
        assert!(r.reduced.is_simple());
        assert_eq!(r.reduced.edge_count(), 28);
    }

    #[test]
    fn replay_matches() {
        let g = named_family(&FamilySpec::Y1).unwrap();
        let m = Multigraph::from_simple(&g);
        let r = reduce_multigraph(&m);
        assert_eq!(replay(&m, &r.trace), Some(r.reduced.clone()));
        let mut bad = r.trace.clone();
        bad.reverse();
        assert_eq!(replay(&m, &bad), None);
    }

    #[test]
    fn multigraph_cycles() {
        let mut m = Multigraph::new(4);
        m.add_edge(0, 0, 1);
        m.add_edge(1, 2, 2);
        m.add_edge(2, 3, 1);
        assert_eq!(max_disjoint_cycles(&m), 2);
        let k6 = Multigraph::from_simple(&Graph::complete(6));
        assert_eq!(max_disjoint_cycles(&k6), 2);
    }
}
