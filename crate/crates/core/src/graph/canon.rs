//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell at each level and refines to an equitable partition.
//! Leaves are compared by their relabeled adjacency bits; the maximum is the
//! canonical form. Automorphisms discovered between equivalent leaves prune
//! siblings in the same orbit and cut subtrees equivalent to the first path.

use super::graph6::emit_graph6;
use super::{Graph, GraphBuilder, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical index of vertex `v`.
    pub labeling: Vec<usize>,
    /// graph6 encoding of the canonically relabeled graph.
    pub code: String,
}

pub(super) fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm {
            labeling: Vec::new(),
            code: emit_graph6(g),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut root = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut root);
    search.descend(root, &mut Vec::new());

    let (labeling, _) = search.best.expect("at least one leaf");
    let code = emit_graph6(&g.relabel(&labeling));
    CanonicalForm { labeling, code }
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<(Vec<usize>, Vec<u64>)>,
    automorphisms: Vec<Vec<usize>>,
}

struct Leaf {
    labeling: Vec<usize>,
    bits: Vec<u64>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the caller should unwind to the node at
    /// `depth` on the current path.
    fn descend(&mut self, partition: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = target_cell(&partition) else {
            return self.leaf(&partition, path);
        };
        let depth = path.len();
        let cell = partition[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            let mut child = partition.clone();
            individualize(&mut child, target, v);
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, partition: &Partition, path: &[usize]) -> Option<usize> {
        let n = self.g.n();
        let mut labeling = vec![0; n];
        for (label, cell) in partition.iter().enumerate() {
            labeling[cell[0]] = label;
        }
        let bits = leaf_bits(self.g, &labeling);

        let Some(first) = &self.first else {
            self.best = Some((labeling.clone(), bits.clone()));
            self.first = Some(Leaf {
                labeling,
                bits,
                path: path.to_vec(),
            });
            return None;
        };

        if bits == first.bits {
            self.automorphisms
                .push(automorphism(&labeling, &first.labeling));
            let common = path
                .iter()
                .zip(&first.path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let (best_labeling, best_bits) = self.best.as_ref().expect("best is set with first");
        match bits.cmp(best_bits) {
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&labeling, best_labeling);
                self.automorphisms.push(gamma);
            }
            std::cmp::Ordering::Greater => self.best = Some((labeling, bits)),
            std::cmp::Ordering::Less => {}
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

/// `gamma = other⁻¹ ∘ labeling`, an automorphism when both leaves yield the
/// same relabeled graph.
fn automorphism(labeling: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; other.len()];
    for (v, &l) in other.iter().enumerate() {
        inverse[l] = v;
    }
    labeling.iter().map(|&l| inverse[l]).collect()
}

/// Upper-triangle adjacency of the relabeled graph, most significant bit
/// first, so that `Vec<u64>` ordering is bit-lexicographic.
fn leaf_bits(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = g.n();
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut by_label = vec![0; n];
    for (v, &l) in labeling.iter().enumerate() {
        by_label[l] = v;
    }
    let mut k = 0;
    for j in 1..n {
        let row = g.neighbors(by_label[j]);
        for &u in by_label.iter().take(j) {
            if row.contains(u) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

fn target_cell(partition: &Partition) -> Option<usize> {
    partition
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

fn individualize(partition: &mut Partition, target: usize, v: usize) {
    let rest: Vec<usize> = partition[target]
        .iter()
        .copied()
        .filter(|&u| u != v)
        .collect();
    partition[target] = vec![v];
    partition.insert(target + 1, rest);
}

/// Refines to the coarsest equitable partition finer than `partition`.
/// Split cells are ordered by neighbor count, which keeps the result
/// independent of vertex names.
fn refine(g: &Graph, partition: &mut Partition) {
    'outer: loop {
        for w in 0..partition.len() {
            let splitter = VertexSet::from_iter_with_capacity(g.n(), partition[w].iter().copied());
            for x in 0..partition.len() {
                let cell = &partition[x];
                if cell.len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.degree_within(v, &splitter), v))
                    .collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (count, v) in keyed {
                    if count != last {
                        pieces.push(Vec::new());
                        last = count;
                    }
                    pieces.last_mut().expect("piece pushed").push(v);
                }
                partition.splice(x..=x, pieces);
                continue 'outer;
            }
        }
        break;
    }
}

/// Canonical relabeling as a graph, mainly for tests and enumeration.
#[allow(dead_code)]
pub(crate) fn canonical_graph(g: &Graph) -> Graph {
    let labeling = &g.canonical_form().labeling;
    let mut b = GraphBuilder::new(g.n());
    for (u, v) in g.edges() {
        b.add_edge_unchecked(labeling[u], labeling[v]);
    }
    b.build()
}
