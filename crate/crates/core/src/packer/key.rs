use std::cmp::{Ordering, Reverse};
use std::fmt;

use super::cycles::longest_path;
use super::CyclePacking;
use crate::graph::Graph;

/// Lexicographic quality of a packing: more cycles, then less total cycle
/// length, then a longer longest path in the remainder, then more remainder
/// edges. `Greater` means better.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalityKey {
    pub cycles: usize,
    pub total_length: usize,
    /// Vertices on a longest path of `G[R]`.
    pub longest_path: usize,
    /// `‖G[R]‖`.
    pub remainder_edges: usize,
    /// `false` when the longest-path search ran out of budget and
    /// `longest_path` is only a lower bound.
    pub exact: bool,
}

impl OptimalityKey {
    fn rank(&self) -> (usize, Reverse<usize>, usize, usize) {
        (
            self.cycles,
            Reverse(self.total_length),
            self.longest_path,
            self.remainder_edges,
        )
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (
            self.cycles,
            self.total_length,
            self.longest_path,
            self.remainder_edges,
        )
    }

    pub fn beats(&self, other: &OptimalityKey) -> bool {
        self.cmp(other) == Ordering::Greater
    }
}

impl Ord for OptimalityKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for OptimalityKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OptimalityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}){}",
            self.cycles,
            self.total_length,
            self.longest_path,
            self.remainder_edges,
            if self.exact { "" } else { "~" }
        )
    }
}

pub fn optimality_key(g: &Graph, p: &CyclePacking, path_limit: u64) -> OptimalityKey {
    let (longest, exact) = longest_path(g, p.remainder(), path_limit);
    OptimalityKey {
        cycles: p.cycles().len(),
        total_length: p.cycles().iter().map(Vec::len).sum(),
        longest_path: longest,
        remainder_edges: g.edges_within(p.remainder()),
        exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, FamilySpec};

    #[test]
    fn complete_graph_keys() {
        let k6 = Graph::complete(6);
        let two = CyclePacking::new(&k6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(optimality_key(&k6, &two, 1000).as_tuple(), (2, 6, 0, 0));
        let one = CyclePacking::new(&k6, vec![vec![0, 1, 2, 3]]).unwrap();
        let key = optimality_key(&k6, &one, 1000);
        assert_eq!(key.as_tuple(), (1, 4, 2, 1));
        assert!(optimality_key(&k6, &two, 1000).beats(&key));
    }

    #[test]
    fn ordering_directions() {
        let base = OptimalityKey {
            cycles: 2,
            total_length: 8,
            longest_path: 3,
            remainder_edges: 2,
            exact: true,
        };
        let shorter = OptimalityKey {
            total_length: 7,
            longest_path: 0,
            ..base
        };
        let longer_path = OptimalityKey {
            longest_path: 4,
            remainder_edges: 0,
            ..base
        };
        let more_edges = OptimalityKey {
            remainder_edges: 3,
            ..base
        };
        let fewer_cycles = OptimalityKey {
            cycles: 1,
            total_length: 3,
            ..base
        };
        assert!(shorter.beats(&base));
        assert!(longer_path.beats(&base));
        assert!(more_edges.beats(&base));
        assert!(base.beats(&fewer_cycles));
        assert!(!base.beats(&base));
    }

    #[test]
    fn y1_triangle_pairs() {
        // Brute force over pairs of disjoint triangles of Y1: each lies in the
        // original K8 and leaves four vertices behind.
        let y1 = named_family(&FamilySpec::Y1).unwrap();
        let triangles: Vec<[usize; 3]> = (0..10)
            .flat_map(|a| (a + 1..10).flat_map(move |b| (b + 1..10).map(move |c| [a, b, c])))
            .filter(|&[a, b, c]| y1.has_edge(a, b) && y1.has_edge(b, c) && y1.has_edge(a, c))
            .collect();
        let mut pairs = 0;
        for (i, s) in triangles.iter().enumerate() {
            for t in &triangles[i + 1..] {
                if s.iter().any(|v| t.contains(v)) {
                    continue;
                }
                pairs += 1;
                assert!(s.iter().chain(t).all(|&v| v < 8));
                let p = CyclePacking::new(&y1, vec![s.to_vec(), t.to_vec()]).unwrap();
                let key = optimality_key(&y1, &p, 10_000);
                assert_eq!((key.cycles, key.total_length), (2, 6));
                assert_eq!(p.remainder().len(), 4);
            }
        }
        assert!(pairs > 0);
    }
}
