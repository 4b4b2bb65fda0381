use std::collections::BTreeMap;

use super::{Graph, VertexSet};

/// Undirected multigraph with loops. Vertices keep their original indices
/// when removed, so reductions can be traced back to the source graph.
///
/// A loop contributes 2 to the degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    alive: VertexSet,
    /// Multiplicity of each unordered pair `(u, v)` with `u < v`; always ≥ 1.
    edges: BTreeMap<(usize, usize), usize>,
    loops: Vec<usize>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            alive: VertexSet::full(n),
            edges: BTreeMap::new(),
            loops: vec![0; n],
        }
    }

    pub fn from_simple(g: &Graph) -> Self {
        let mut m = Self::new(g.n());
        for (u, v) in g.edges() {
            m.add_edge(u, v, 1);
        }
        m
    }

    /// Size of the original vertex universe (including removed vertices).
    pub fn universe(&self) -> usize {
        self.loops.len()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.alive
    }

    pub fn order(&self) -> usize {
        self.alive.len()
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    /// Adds `count` copies of `uv` (a loop when `u == v`).
    pub fn add_edge(&mut self, u: usize, v: usize, count: usize) {
        if count == 0 {
            return;
        }
        if u == v {
            self.loops[u] += count;
        } else {
            *self.edges.entry(key(u, v)).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        if u == v {
            self.loops[u]
        } else {
            self.edges.get(&key(u, v)).copied().unwrap_or(0)
        }
    }

    pub fn loops(&self, v: usize) -> usize {
        self.loops[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        2 * self.loops[v] + self.incident(v).map(|(_, m)| m).sum::<usize>()
    }

    /// Non-loop neighbors of `v` with multiplicities.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .filter(move |((a, b), _)| *a == v || *b == v)
            .map(move |(&(a, b), &m)| (if a == v { b } else { a }, m))
    }

    /// Distinct non-loop neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.universe());
        for (u, _) in self.incident(v) {
            s.insert(u);
        }
        s
    }

    /// Non-loop edges `((u, v), multiplicity)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().sum::<usize>() + self.loops.iter().sum::<usize>()
    }

    pub fn is_simple(&self) -> bool {
        self.loops.iter().all(|&l| l == 0) && self.edges.values().all(|&m| m == 1)
    }

    /// Removes `v` and all incident edges and loops.
    pub fn remove_vertex(&mut self, v: usize) {
        self.alive.remove(v);
        self.loops[v] = 0;
        self.edges.retain(|&(a, b), _| a != v && b != v);
    }

    /// Underlying simple graph on the live vertices (loops dropped,
    /// multiplicities collapsed), keeping original indices.
    pub fn underlying_simple(&self) -> Graph {
        let mut b = super::GraphBuilder::new(self.universe());
        for &(u, v) in self.edges.keys() {
            b.add_edge_unchecked(u, v);
        }
        b.build()
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_count_loops_twice() {
        let mut m = Multigraph::new(3);
        m.add_edge(0, 1, 2);
        m.add_edge(1, 1, 1);
        m.add_edge(2, 1, 1);
        assert_eq!(m.degree(1), 5);
        assert_eq!(m.degree(0), 2);
        assert_eq!(m.multiplicity(1, 0), 2);
        assert_eq!(m.edge_count(), 4);
        assert!(!m.is_simple());
        m.remove_vertex(1);
        assert_eq!(m.order(), 2);
        assert_eq!(m.edge_count(), 0);
    }
}
