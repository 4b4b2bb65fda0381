//! Constructors for the named graph families.

use super::ops::{blowup, disjoint_union, join};
use super::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K₈` with one edge `wz` replaced by the path `wxyz`.
    Y1,
    /// `K₁ ∨ Q`, where `Q` is `K₄,₄` with one vertex split into an edge `uu'`.
    Y2,
    /// `K̄_{2k−2} ∨ (K̄_{2k−3} + K₃)`, `k ≥ 3`.
    Gk(usize),
    /// `G_r ∨ K_{2t}` with `k = r + t` and `k + 3 ≤ 2r`.
    GkExtended {
        r: usize,
        t: usize,
    },
    /// `C₅[K̄₃]`.
    C5BlowupK3bar,
    /// `C₅[K̄₃] ∨ K̄_{2k−8}`, `4 ≤ k ≤ 6`.
    C5BlowupExtended(usize),
    /// `K̄_{k+1} ∨ K_{2k−1}`, the minimum-degree sharpness graph.
    Hsharp(usize),
    /// `2K_k ∨ K̄_k`.
    TwoKkJoinKkBar(usize),
    /// Hub `0` joined to a rim cycle `1..n`; `n ≥ 4` vertices in total.
    Wheel(usize),
    CompleteK(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    /// `K_{k,k} + K_k`.
    KkkPlusKk(usize),
    Empty(usize),
    Petersen,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Y1 => "Y1",
            FamilySpec::Y2 => "Y2",
            FamilySpec::Gk(_) => "Gk",
            FamilySpec::GkExtended { .. } => "Gk-extended",
            FamilySpec::C5BlowupK3bar => "C5-blowup",
            FamilySpec::C5BlowupExtended(_) => "C5-blowup-extended",
            FamilySpec::Hsharp(_) => "H-sharp",
            FamilySpec::TwoKkJoinKkBar(_) => "2Kk-join-Kk-bar",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::CompleteK(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete-bipartite",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::KkkPlusKk(_) => "Kkk-plus-Kk",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Petersen => "petersen",
        }
    }
}

pub fn named_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    let invalid = |reason: &str| GraphError::InvalidFamily {
        family: spec.name(),
        reason: reason.to_string(),
    };
    let g = match *spec {
        FamilySpec::Y1 => y1(),
        FamilySpec::Y2 => y2(),
        FamilySpec::Gk(k) => {
            if k < 3 {
                return Err(invalid("requires k >= 3"));
            }
            gk(k)
        }
        FamilySpec::GkExtended { r, t } => {
            if r < 3 || t + 3 > r {
                return Err(invalid("requires r >= 3 and k + 3 <= 2r with k = r + t"));
            }
            join(&gk(r), &Graph::complete(2 * t))
        }
        FamilySpec::C5BlowupK3bar => c5_blowup(),
        FamilySpec::C5BlowupExtended(k) => {
            if !(4..=6).contains(&k) {
                return Err(invalid("requires 4 <= k <= 6"));
            }
            join(&c5_blowup(), &Graph::empty(2 * k - 8))
        }
        FamilySpec::Hsharp(k) => {
            if k < 1 {
                return Err(invalid("requires k >= 1"));
            }
            join(&Graph::empty(k + 1), &Graph::complete(2 * k - 1))
        }
        FamilySpec::TwoKkJoinKkBar(k) => {
            if k < 1 {
                return Err(invalid("requires k >= 1"));
            }
            let kk = Graph::complete(k);
            join(&disjoint_union(&kk, &kk), &Graph::empty(k))
        }
        FamilySpec::Wheel(n) => {
            if n < 4 {
                return Err(invalid("requires n >= 4"));
            }
            let mut b = GraphBuilder::new(n);
            for v in 1..n {
                b.add_edge_unchecked(0, v);
                b.add_edge_unchecked(v, if v + 1 < n { v + 1 } else { 1 });
            }
            b.build()
        }
        FamilySpec::CompleteK(n) => Graph::complete(n),
        FamilySpec::CompleteBipartite(s, t) => join(&Graph::empty(s), &Graph::empty(t)),
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid("requires n >= 3"));
            }
            cycle(n)
        }
        FamilySpec::KkkPlusKk(k) => {
            let kkk = join(&Graph::empty(k), &Graph::empty(k));
            disjoint_union(&kkk, &Graph::complete(k))
        }
        FamilySpec::Empty(n) => Graph::empty(n),
        FamilySpec::Petersen => petersen(),
    };
    Ok(g)
}

fn cycle(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge_unchecked(i, (i + 1) % n);
    }
    b.build()
}

/// Vertices 0..8 are the original `K₈` with `w = 6`, `z = 7`; the path is
/// `6 - 8 - 9 - 7`.
fn y1() -> Graph {
    let mut b = GraphBuilder::new(10);
    for u in 0..8 {
        for v in u + 1..8 {
            b.add_edge_unchecked(u, v);
        }
    }
    b.remove_edge(6, 7);
    b.add_edge_unchecked(6, 8);
    b.add_edge_unchecked(8, 9);
    b.add_edge_unchecked(9, 7);
    b.build()
}

/// `K₄,₄` has classes `{v,1,2,3}` and `{4,5,6,7}`; `v` is split into
/// `u = 0` (adjacent to 4, 5) and `u' = 8` (adjacent to 6, 7). Vertex 9 is
/// the apex of the join.
fn y2() -> Graph {
    let mut b = GraphBuilder::new(10);
    for a in 1..4 {
        for c in 4..8 {
            b.add_edge_unchecked(a, c);
        }
    }
    for (x, y) in [(0, 8), (0, 4), (0, 5), (8, 6), (8, 7)] {
        b.add_edge_unchecked(x, y);
    }
    for v in 0..9 {
        b.add_edge_unchecked(9, v);
    }
    b.build()
}

fn gk(k: usize) -> Graph {
    let inner = disjoint_union(&Graph::empty(2 * k - 3), &Graph::complete(3));
    join(&Graph::empty(2 * k - 2), &inner)
}

fn c5_blowup() -> Graph {
    blowup(&cycle(5), &Graph::empty(3))
}

fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge_unchecked(i, (i + 1) % 5);
        b.add_edge_unchecked(i, i + 5);
        b.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degree_stats, independence_number, OreDegree};

    fn alpha(g: &Graph) -> usize {
        independence_number(g, u64::MAX).unwrap().size()
    }

    #[test]
    fn y1_parameters() {
        let g = named_family(&FamilySpec::Y1).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(degree_stats(&g).sigma2, OreDegree::Finite(9));
        assert_eq!(alpha(&g), 2);
    }

    #[test]
    fn y2_parameters() {
        let g = named_family(&FamilySpec::Y2).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(degree_stats(&g).sigma2, OreDegree::Finite(9));
        assert_eq!(alpha(&g), 4);
        // Contracting uu' in Q recovers K₄,₄.
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(8), 4);
    }

    #[test]
    fn gk_parameters() {
        for k in 3..=5 {
            let g = named_family(&FamilySpec::Gk(k)).unwrap();
            let s = degree_stats(&g);
            assert_eq!(g.n(), 4 * k - 2);
            assert_eq!(s.delta, 2 * k - 2);
            assert_eq!(s.sigma2, OreDegree::Finite(4 * k - 4));
            assert_eq!(alpha(&g), g.n() - 2 * k);
        }
        assert!(named_family(&FamilySpec::Gk(2)).is_err());
    }

    #[test]
    fn gk_extended_parameters() {
        let (r, t) = (4, 1);
        let k = r + t;
        let g = named_family(&FamilySpec::GkExtended { r, t }).unwrap();
        assert_eq!(g.n(), 2 * k + 2 * r - 2);
        assert_eq!(degree_stats(&g).delta, 2 * k - 2);
        assert_eq!(alpha(&g), g.n() - 2 * k);
        assert!(named_family(&FamilySpec::GkExtended { r: 4, t: 2 }).is_err());
    }

    #[test]
    fn c5_blowup_parameters() {
        let g = named_family(&FamilySpec::C5BlowupK3bar).unwrap();
        assert_eq!((g.n(), degree_stats(&g).delta, alpha(&g)), (15, 6, 6));
        for k in 5..=6 {
            let h = named_family(&FamilySpec::C5BlowupExtended(k)).unwrap();
            assert_eq!(h.n(), 2 * k + 7);
            assert_eq!(degree_stats(&h).delta, 2 * k - 2);
            assert_eq!(alpha(&h), 6);
        }
        assert!(named_family(&FamilySpec::C5BlowupExtended(7)).is_err());
    }

    #[test]
    fn small_families() {
        let w = named_family(&FamilySpec::Wheel(6)).unwrap();
        assert_eq!(w.degree(0), 5);
        assert!((1..6).all(|v| w.degree(v) == 3));
        assert_eq!(w.edge_count(), 10);
        let h = named_family(&FamilySpec::Hsharp(3)).unwrap();
        assert_eq!((h.n(), degree_stats(&h).delta, alpha(&h)), (9, 5, 4));
        let p = named_family(&FamilySpec::Petersen).unwrap();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        let t = named_family(&FamilySpec::TwoKkJoinKkBar(3)).unwrap();
        assert_eq!((t.n(), degree_stats(&t).delta), (9, 5));
        let kk = named_family(&FamilySpec::KkkPlusKk(3)).unwrap();
        assert_eq!((kk.n(), kk.edge_count()), (9, 12));
    }
}
