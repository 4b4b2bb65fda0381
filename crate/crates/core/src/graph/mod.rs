//! Simple undirected graphs on dense vertex indices `0..n`.

mod canon;
mod edgelist;
mod families;
mod graph6;
mod independence;
mod multigraph;
mod ops;
mod stats;
mod vertex_set;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use canon::CanonicalForm;
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use families::{named_family, FamilySpec};
pub use graph6::{emit_graph6, parse_graph6};
pub use independence::{independence_number, independent_set_larger_than, IndependentSet};
pub use multigraph::Multigraph;
pub use ops::{blowup, complement, disjoint_union, join};
pub use stats::{degree_stats, edges_between, theta, DegreeStats, OreDegree};
pub use vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 payload truncated: expected {expected} bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("graph6 payload has {0} unexpected trailing bytes")]
    TrailingData(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidCharacter { byte: u8, offset: usize },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid parameters for {family}: {reason}")]
    InvalidFamily {
        family: &'static str,
        reason: String,
    },
}

/// Immutable simple graph with a degree cache.
///
/// The canonical form is computed lazily and cached; the cache is
/// write-once, so graphs can be shared freely across threads.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    degrees: Vec<usize>,
    edge_count: usize,
    canonical: OnceLock<CanonicalForm>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge_unchecked(u, v);
            }
        }
        b.build()
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n(), vertices)
    }

    /// Degree of `v` inside the induced subgraph on `within`.
    #[inline]
    pub fn degree_within(&self, v: usize, within: &VertexSet) -> usize {
        self.adjacency[v].intersection_len(within)
    }

    /// Number of edges of the induced subgraph on `within`.
    pub fn edges_within(&self, within: &VertexSet) -> usize {
        within
            .iter()
            .map(|v| self.degree_within(v, within))
            .sum::<usize>()
            / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Induced subgraph on `vertices`, relabeled in increasing order.
    /// Returns the subgraph and the map from new index to old index.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = vertices.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut b = GraphBuilder::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adjacency[v].intersection(vertices).iter() {
                if index[w] > i {
                    b.add_edge_unchecked(i, index[w]);
                }
            }
        }
        (b.build(), map)
    }

    /// Copy of the graph with `(u, v)` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v)?;
        Ok(b.build())
    }

    /// Copy of the graph with `(u, v)` removed (if present).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut b = GraphBuilder::from_graph(self);
        b.remove_edge(u, v);
        b.build()
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut b = GraphBuilder::new(self.n());
        for (u, v) in self.edges() {
            b.add_edge_unchecked(perm[u], perm[v]);
        }
        b.build()
    }

    /// Canonical form under vertex relabeling, computed once and cached.
    pub fn canonical_form(&self) -> &CanonicalForm {
        self.canonical.get_or_init(|| canon::canonical_form(self))
    }

    /// Canonical graph6 string: equal for two graphs iff they are isomorphic.
    pub fn canonical_code(&self) -> &str {
        &self.canonical_form().code
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        is_isomorphic(self, other)
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }
}

/// `true` iff an adjacency-preserving bijection exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees.clone();
    let mut dh = h.degrees.clone();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && g.canonical_code() == h.canonical_code()
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.n(), emit_graph6(self))
    }
}

/// Mutable staging area for [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adjacency: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adjacency: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            adjacency: g.adjacency.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Adds `uv`; returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.add_edge_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        self.adjacency[v].insert(u);
        self.adjacency[u].insert(v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        self.adjacency[v].remove(u);
        self.adjacency[u].remove(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    pub fn build(self) -> Graph {
        let degrees: Vec<usize> = self.adjacency.iter().map(VertexSet::len).collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        Graph {
            adjacency: self.adjacency,
            degrees,
            edge_count,
            canonical: OnceLock::new(),
        }
    }
}
