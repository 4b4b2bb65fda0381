use super::{Graph, GraphBuilder};

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                b.add_edge_unchecked(u, v);
            }
        }
    }
    b.build()
}

/// `G + H`: vertices of `h` are shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.n();
    let mut b = GraphBuilder::new(offset + h.n());
    for (u, v) in g.edges() {
        b.add_edge_unchecked(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge_unchecked(u + offset, v + offset);
    }
    b.build()
}

/// `G ∨ H`: the disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let offset = g.n();
    let mut b = GraphBuilder::from_graph(&disjoint_union(g, h));
    for u in 0..offset {
        for v in 0..h.n() {
            b.add_edge_unchecked(u, v + offset);
        }
    }
    b.build()
}

/// Blow-up `G[H]` (lexicographic product). Vertex `(x, y)` gets index
/// `x * |H| + y`; `(x,y)(x',y')` is an edge iff `xx' ∈ E(G)`, or `x = x'`
/// and `yy' ∈ E(H)`.
pub fn blowup(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let mut b = GraphBuilder::new(g.n() * m);
    for (x, x2) in g.edges() {
        for y in 0..m {
            for y2 in 0..m {
                b.add_edge_unchecked(x * m + y, x2 * m + y2);
            }
        }
    }
    for x in 0..g.n() {
        for (y, y2) in h.edges() {
            b.add_edge_unchecked(x * m + y, x * m + y2);
        }
    }
    b.build()
}
