//! Recognition of graphs without two disjoint cycles.
//!
//! A graph is reduced to a multigraph of minimum degree at least 3 and the
//! result is matched against the four obstruction types: `K₅`, a wheel
//! whose spokes may be multiple, `K₃,ₜ` plus edges inside the 3-class, and a
//! forest plus one vertex carrying all loops.

use std::fmt;

use thiserror::Error;

use super::reduction::{reduce_multigraph, replay, Reduction, ReductionStep};
use crate::graph::{degree_stats, Graph, Multigraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LovaszKind {
    K5,
    WheelLike {
        hub: usize,
        rim: Vec<usize>,
    },
    K3t {
        class: [usize; 3],
    },
    /// `apex` is `None` only when everything reduced away.
    ForestPlusVertex {
        apex: Option<usize>,
    },
}

impl fmt::Display for LovaszKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LovaszKind::K5 => f.write_str("K5"),
            LovaszKind::WheelLike { hub, rim } => write!(f, "wheel-like(hub={hub}, rim={rim:?})"),
            LovaszKind::K3t { class } => write!(f, "K3,t(class={class:?})"),
            LovaszKind::ForestPlusVertex { apex: Some(x) } => {
                write!(f, "forest-plus-vertex(apex={x})")
            }
            LovaszKind::ForestPlusVertex { apex: None } => f.write_str("forest"),
        }
    }
}

/// The five families of simple graphs on at least six vertices with
/// `σ₂ ≥ 5` and no two disjoint cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    /// `K₅ + K₂`.
    A,
    /// `K₅` with a pendant edge, possibly subdivided.
    B,
    /// `K₅` with one edge subdivided and a leaf on the subdivision vertex.
    C,
    /// A simple obstruction with at most one edge subdivided.
    D,
    /// An obstruction with one double edge, one parallel part subdivided.
    E,
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyLabel::A => "a",
            FamilyLabel::B => "b",
            FamilyLabel::C => "c",
            FamilyLabel::D => "d",
            FamilyLabel::E => "e",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LovaszMatch {
    pub kind: LovaszKind,
    /// Set when the input has at least six vertices and `σ₂ ≥ 5`.
    pub family: Option<FamilyLabel>,
    pub reduction: Reduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("reduction trace does not replay on the input")]
    Trace,
    #[error("reduced multigraph does not match the stated type")]
    Kind,
}

impl LovaszMatch {
    /// Replays the reduction on `g` and re-checks the type witness.
    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        let reduced = replay(&Multigraph::from_simple(g), &self.reduction.trace)
            .ok_or(WitnessError::Trace)?;
        if reduced != self.reduction.reduced {
            return Err(WitnessError::Trace);
        }
        if !check_kind(&reduced, &self.kind) {
            return Err(WitnessError::Kind);
        }
        Ok(())
    }
}

/// `Some` exactly when `G` has no two vertex-disjoint cycles.
pub fn classify_no_two_cycles(g: &Graph) -> Option<LovaszMatch> {
    let reduction = reduce_multigraph(&Multigraph::from_simple(g));
    let h = &reduction.reduced;
    let kind = match_k5(h)
        .or_else(|| match_wheel(h))
        .or_else(|| match_k3t(h))
        .or_else(|| match_forest_plus_vertex(h))?;
    let family = (g.n() >= 6 && degree_stats(g).sigma2.at_least(5))
        .then(|| family_label(g, &kind, &reduction))
        .flatten();
    Some(LovaszMatch {
        kind,
        family,
        reduction,
    })
}

fn family_label(g: &Graph, kind: &LovaszKind, r: &Reduction) -> Option<FamilyLabel> {
    let buds = r
        .trace
        .iter()
        .filter(|s| matches!(s, ReductionStep::DeleteBud { .. }))
        .count();
    let suppressions = r.trace.len() - buds;
    let h = &r.reduced;
    let doubles = h.edges().filter(|&(_, m)| m == 2).count();
    let loopless = h.vertices().iter().all(|v| h.loops(v) == 0);
    let max_mult = h.edges().map(|(_, m)| m).max().unwrap_or(0);
    match kind {
        LovaszKind::K5 if suppressions == 0 && buds > 0 => {
            let removed: Vec<usize> = r.trace.iter().map(ReductionStep::vertex).collect();
            let isolated = removed
                .iter()
                .all(|&q| g.neighbors(q).is_disjoint(h.vertices()));
            Some(if isolated {
                FamilyLabel::A
            } else {
                FamilyLabel::B
            })
        }
        LovaszKind::K5 if suppressions == 1 && buds == 1 => Some(FamilyLabel::C),
        LovaszKind::K5 | LovaszKind::WheelLike { .. } | LovaszKind::K3t { .. }
            if buds == 0 && h.is_simple() && suppressions <= 2 =>
        {
            Some(FamilyLabel::D)
        }
        LovaszKind::WheelLike { .. } | LovaszKind::K3t { .. }
            if buds == 0
                && loopless
                && doubles == 1
                && max_mult == 2
                && (1..=2).contains(&suppressions) =>
        {
            Some(FamilyLabel::E)
        }
        _ => None,
    }
}

fn match_k5(h: &Multigraph) -> Option<LovaszKind> {
    check_kind(h, &LovaszKind::K5).then_some(LovaszKind::K5)
}

fn match_wheel(h: &Multigraph) -> Option<LovaszKind> {
    if h.order() < 4 {
        return None;
    }
    h.vertices().iter().find_map(|hub| {
        let mut rim_set = h.vertices().clone();
        rim_set.remove(hub);
        let rim = cycle_order(h, &rim_set)?;
        let kind = LovaszKind::WheelLike { hub, rim };
        check_kind(h, &kind).then_some(kind)
    })
}

/// The vertices of `set` in cyclic order when `H[set]` is a simple cycle.
fn cycle_order(h: &Multigraph, set: &VertexSet) -> Option<Vec<usize>> {
    let start = set.first()?;
    let rim_neighbors = |v: usize| -> Vec<usize> {
        let mut out: Vec<usize> = h
            .incident(v)
            .filter(|(u, _)| set.contains(*u))
            .map(|(u, _)| u)
            .collect();
        out.sort_unstable();
        out
    };
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *rim_neighbors(start).first()?;
    while cur != start {
        if order.len() > set.len() {
            return None;
        }
        order.push(cur);
        let next = rim_neighbors(cur).into_iter().find(|&w| w != prev)?;
        (prev, cur) = (cur, next);
    }
    Some(order)
}

fn match_k3t(h: &Multigraph) -> Option<LovaszKind> {
    let vs = h.vertices().to_vec();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            for &c in &vs[j + 1..] {
                let kind = LovaszKind::K3t { class: [a, b, c] };
                if check_kind(h, &kind) {
                    return Some(kind);
                }
            }
        }
    }
    None
}

fn match_forest_plus_vertex(h: &Multigraph) -> Option<LovaszKind> {
    if h.order() == 0 {
        return Some(LovaszKind::ForestPlusVertex { apex: None });
    }
    h.vertices().iter().find_map(|x| {
        let kind = LovaszKind::ForestPlusVertex { apex: Some(x) };
        check_kind(h, &kind).then_some(kind)
    })
}

fn check_kind(h: &Multigraph, kind: &LovaszKind) -> bool {
    let vs = h.vertices();
    let no_loops = || vs.iter().all(|v| h.loops(v) == 0);
    match kind {
        LovaszKind::K5 => {
            h.order() == 5 && h.is_simple() && vs.iter().all(|v| h.incident(v).count() == 4)
        }
        LovaszKind::WheelLike { hub, rim } => {
            if !no_loops() || !vs.contains(*hub) || rim.len() < 3 || rim.len() + 1 != h.order() {
                return false;
            }
            let rim_set = VertexSet::from_iter_with_capacity(h.universe(), rim.iter().copied());
            if rim_set.len() != rim.len() || rim_set.contains(*hub) || !rim_set.is_subset(vs) {
                return false;
            }
            let spokes = rim.iter().all(|&v| h.multiplicity(*hub, v) >= 1);
            let rim_edges = h
                .edges()
                .filter(|&((u, v), _)| u != *hub && v != *hub)
                .collect::<Vec<_>>();
            let consecutive =
                (0..rim.len()).all(|i| h.multiplicity(rim[i], rim[(i + 1) % rim.len()]) == 1);
            spokes
                && consecutive
                && rim_edges.len() == rim.len()
                && rim_edges.iter().all(|&(_, m)| m == 1)
        }
        LovaszKind::K3t { class } => {
            let a = VertexSet::from_iter_with_capacity(h.universe(), class.iter().copied());
            no_loops()
                && a.len() == 3
                && a.is_subset(vs)
                && vs.iter().filter(|v| !a.contains(*v)).all(|u| {
                    let inc: Vec<(usize, usize)> = h.incident(u).collect();
                    inc.len() == 3 && inc.iter().all(|&(w, m)| m == 1 && a.contains(w))
                })
        }
        LovaszKind::ForestPlusVertex { apex: None } => h.order() == 0,
        LovaszKind::ForestPlusVertex { apex: Some(x) } => {
            if !vs.contains(*x) || vs.iter().any(|v| v != *x && h.loops(v) > 0) {
                return false;
            }
            let rest: Vec<((usize, usize), usize)> = h
                .edges()
                .filter(|&((u, v), _)| u != *x && v != *x)
                .collect();
            if rest.iter().any(|&(_, m)| m > 1) {
                return false;
            }
            // Acyclic iff union-find never joins two already-connected ends.
            let mut parent: Vec<usize> = (0..h.universe()).collect();
            fn root(parent: &mut [usize], mut v: usize) -> usize {
                while parent[v] != v {
                    parent[v] = parent[parent[v]];
                    v = parent[v];
                }
                v
            }
            rest.iter().all(|&((u, v), _)| {
                let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
                parent[ru] = rv;
                ru != rv
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, named_family, FamilySpec, GraphBuilder};

    #[test]
    fn k5_plus_k2() {
        let g = disjoint_union(&Graph::complete(5), &Graph::complete(2));
        let m = classify_no_two_cycles(&g).unwrap();
        assert_eq!(m.kind, LovaszKind::K5);
        assert_eq!(m.family, Some(FamilyLabel::A));
        assert!(m.validate(&g).is_ok());
    }

    #[test]
    fn k5_with_pendant_and_subdivision() {
        let base = disjoint_union(&Graph::complete(5), &Graph::empty(1));
        let mut b = GraphBuilder::from_graph(&base);
        b.add_edge(0, 5).unwrap();
        let g = b.build();
        assert_eq!(
            classify_no_two_cycles(&g).unwrap().family,
            Some(FamilyLabel::B)
        );

        let mut b =
            GraphBuilder::from_graph(&disjoint_union(&Graph::complete(5), &Graph::empty(2)));
        b.remove_edge(0, 1);
        for (u, v) in [(0, 5), (5, 1), (5, 6)] {
            b.add_edge(u, v).unwrap();
        }
        let g = b.build();
        let m = classify_no_two_cycles(&g).unwrap();
        assert_eq!(
            (m.kind.clone(), m.family),
            (LovaszKind::K5, Some(FamilyLabel::C))
        );
        assert!(m.validate(&g).is_ok());
    }

    #[test]
    fn complete_bipartite() {
        let g = named_family(&FamilySpec::CompleteBipartite(3, 5)).unwrap();
        let m = classify_no_two_cycles(&g).unwrap();
        assert!(matches!(m.kind, LovaszKind::K3t { class: [0, 1, 2] }));
        assert_eq!(m.family, Some(FamilyLabel::D));
        assert!(m.validate(&g).is_ok());
    }

    #[test]
    fn wheels_and_cycles() {
        let w = named_family(&FamilySpec::Wheel(7)).unwrap();
        let m = classify_no_two_cycles(&w).unwrap();
        assert!(matches!(m.kind, LovaszKind::WheelLike { hub: 0, .. }));
        assert!(m.validate(&w).is_ok());
        let c = named_family(&FamilySpec::Cycle(7)).unwrap();
        let m = classify_no_two_cycles(&c).unwrap();
        assert!(matches!(
            m.kind,
            LovaszKind::ForestPlusVertex { apex: Some(_) }
        ));
        assert_eq!(m.family, None);
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let m = classify_no_two_cycles(&tree).unwrap();
        assert_eq!(m.kind, LovaszKind::ForestPlusVertex { apex: None });
    }

    #[test]
    fn petersen_has_two_cycles() {
        assert!(classify_no_two_cycles(&named_family(&FamilySpec::Petersen).unwrap()).is_none());
        assert!(classify_no_two_cycles(&Graph::complete(6)).is_none());
    }

    #[test]
    fn tampered_witness_fails() {
        let g = named_family(&FamilySpec::CompleteBipartite(3, 4)).unwrap();
        let mut m = classify_no_two_cycles(&g).unwrap();
        m.kind = LovaszKind::K3t { class: [0, 1, 3] };
        assert_eq!(m.validate(&g), Err(WitnessError::Kind));
    }
}
