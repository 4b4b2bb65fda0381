//! Construction of `k` disjoint cycles by local improvement.
//!
//! The packer seeds `k` triangles using helper edges, improves the packing
//! to a local optimum of [`OptimalityKey`], and removes the helpers one at a
//! time. When it ends with fewer than `k` cycles it reports a checkable
//! certificate instead.

pub mod cycles;
mod improve;
pub mod key;
pub mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::budget::SearchBudget;
use crate::characterizer::{is_exceptional, ExceptionKind};
use crate::graph::{degree_stats, independent_set_larger_than, Graph, OreDegree, VertexSet};

pub use cycles::is_cycle;
pub use improve::{improve_step, Improvement, Move};
pub use key::{optimality_key, OptimalityKey};
pub use oracle::{oracle_max_packing, oracle_within, MaxPacking};

use improve::Improver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidPacking {
    #[error("cycle {index} is not a cycle of the graph")]
    NotACycle { index: usize },
    #[error("vertex {vertex} lies on two cycles")]
    SharedVertex { vertex: usize },
}

/// Vertex-disjoint cycles of a host graph together with the remainder
/// `R = V ∖ ⋃ cycles`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePacking {
    cycles: Vec<Vec<usize>>,
    remainder: VertexSet,
}

impl CyclePacking {
    pub fn new(g: &Graph, cycles: Vec<Vec<usize>>) -> Result<Self, InvalidPacking> {
        let mut remainder = g.vertex_set();
        for (index, cycle) in cycles.iter().enumerate() {
            if !is_cycle(g, cycle) {
                return Err(InvalidPacking::NotACycle { index });
            }
            for &vertex in cycle {
                if !remainder.remove(vertex) {
                    return Err(InvalidPacking::SharedVertex { vertex });
                }
            }
        }
        Ok(CyclePacking { cycles, remainder })
    }

    pub fn empty(g: &Graph) -> Self {
        CyclePacking {
            cycles: Vec::new(),
            remainder: g.vertex_set(),
        }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn remainder(&self) -> &VertexSet {
        &self.remainder
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }

    /// Re-checks the packing against `g`, which may differ from the graph it
    /// was built for.
    pub fn check(&self, g: &Graph) -> Result<(), InvalidPacking> {
        let rebuilt = CyclePacking::new(g, self.cycles.clone())?;
        debug_assert_eq!(rebuilt.remainder, self.remainder);
        Ok(())
    }

    fn uses_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.cycles.iter().position(|c| {
            (0..c.len()).any(|i| {
                let (a, b) = (c[i], c[(i + 1) % c.len()]);
                (a, b) == (u, v) || (a, b) == (v, u)
            })
        })
    }
}

/// A hypothesis of the packing theorem that fails for the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisViolation {
    /// `n < required`.
    Order { n: usize, required: usize },
    /// `σ₂ < required`.
    OreDegree { sigma2: OreDegree, required: usize },
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisViolation::Order { n, required } => write!(f, "n={n} < {required}"),
            HypothesisViolation::OreDegree { sigma2, required } => {
                write!(f, "sigma2={sigma2} < {required}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Improvements applied over the whole run.
    pub iterations: u64,
    pub iteration_cap: u64,
    pub cap_reached: bool,
    pub moves: BTreeMap<Move, u64>,
    /// Helper edges added during seeding.
    pub helpers: usize,
    /// Searches that hit their budget at least once.
    pub budget_hits: BTreeSet<&'static str>,
    /// The packing was completed by the exact search after local
    /// improvement stalled.
    pub completed_exactly: bool,
}

impl Diagnostics {
    pub(crate) fn note_budget(&mut self, search: &'static str) {
        self.budget_hits.insert(search);
    }

    pub(crate) fn count_move(&mut self, m: Move) {
        *self.moves.entry(m).or_insert(0) += 1;
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "iterations={}/{} helpers={}",
            self.iterations, self.iteration_cap, self.helpers
        )?;
        for (m, count) in &self.moves {
            write!(f, " {m}={count}")?;
        }
        if !self.budget_hits.is_empty() {
            let hits: Vec<&str> = self.budget_hits.iter().copied().collect();
            write!(f, " budget-hits={}", hits.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PackerResult {
    Packing(CyclePacking),
    /// An independent set of size at least `n − 2k + 1`.
    IndependentSet(VertexSet),
    Exceptional(ExceptionKind),
    HypothesisViolation(HypothesisViolation),
    /// Fewer than `k` cycles and no certificate. Under the theorem's
    /// hypotheses this indicates a defect.
    CandidateCounterexample {
        packing: CyclePacking,
        diagnostics: Diagnostics,
    },
}

impl PackerResult {
    pub fn is_packing(&self) -> bool {
        matches!(self, PackerResult::Packing(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PackError {
    #[error("graph has no vertices")]
    EmptyGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PackerConfig {
    pub budget: SearchBudget,
    /// The improvement loop stops after `iteration_factor · n⁴` steps.
    pub iteration_factor: u64,
    /// Cap the shorten move's search depth using remainder attachments.
    pub claim_prune: bool,
    /// Longest replacement cycle tried by the shorten and rebalance moves;
    /// `None` means `max(6, longest current cycle)`.
    pub length_cap: Option<usize>,
    /// Run the exact search before falling back to certificates.
    pub exhaustive_completion: bool,
}

impl Default for PackerConfig {
    fn default() -> Self {
        PackerConfig {
            budget: SearchBudget::default(),
            iteration_factor: 8,
            claim_prune: true,
            length_cap: None,
            exhaustive_completion: true,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Packer {
    pub config: PackerConfig,
}

impl Packer {
    pub fn new(config: PackerConfig) -> Self {
        Packer { config }
    }

    pub fn find(&self, g: &Graph, k: usize) -> Result<PackerResult, PackError> {
        self.run(g, k).map(|(r, _)| r)
    }

    /// Like [`Packer::find`], also returning the run's diagnostics.
    pub fn run(&self, g: &Graph, k: usize) -> Result<(PackerResult, Diagnostics), PackError> {
        let n = g.n();
        if n == 0 {
            return Err(PackError::EmptyGraph);
        }
        let mut diagnostics = Diagnostics::default();
        if k == 0 {
            return Ok((PackerResult::Packing(CyclePacking::empty(g)), diagnostics));
        }
        if n < 3 * k {
            let v = HypothesisViolation::Order { n, required: 3 * k };
            return Ok((PackerResult::HypothesisViolation(v), diagnostics));
        }

        let n4 = (n as u64).saturating_pow(4);
        diagnostics.iteration_cap = self.config.iteration_factor.saturating_mul(n4);
        let mut iterations_left = diagnostics.iteration_cap;

        let (mut host, mut helpers, mut packing) = seed(g, k);
        diagnostics.helpers = helpers.len();
        loop {
            let finished = Improver::new(&host, &self.config, Some(k), &mut diagnostics)
                .run(&mut packing, &mut iterations_left);
            if !finished {
                return Ok(self.give_up(g, packing, diagnostics));
            }
            helpers.retain(|&(u, v)| {
                let used = packing.uses_edge(u, v).is_some();
                if !used {
                    host = host.without_edge(u, v);
                }
                used
            });
            if helpers.is_empty() {
                break;
            }
            let (u, v) = helpers.remove(0);
            let dropped = packing
                .uses_edge(u, v)
                .expect("retained helpers lie on cycles");
            host = host.without_edge(u, v);
            let mut cycles = packing.into_cycles();
            cycles.remove(dropped);
            packing = CyclePacking::new(&host, cycles).expect("other cycles avoid the helper");
        }
        debug_assert_eq!(&host, g);

        if packing.len() >= k {
            return Ok(finish_packing(g, packing, diagnostics));
        }
        if self.config.exhaustive_completion {
            match oracle_max_packing(g, Some(k), self.config.budget.oracle) {
                Ok(found) if found.count >= k => {
                    diagnostics.completed_exactly = true;
                    let p = CyclePacking::new(g, found.cycles).expect("oracle cycles are valid");
                    return Ok(finish_packing(g, p, diagnostics));
                }
                Ok(_) => {}
                Err(_) => diagnostics.note_budget("maximum cycle packing"),
            }
        }
        Ok(self.certify(g, k, packing, diagnostics))
    }

    fn give_up(
        &self,
        g: &Graph,
        packing: CyclePacking,
        mut diagnostics: Diagnostics,
    ) -> (PackerResult, Diagnostics) {
        diagnostics.cap_reached = true;
        let mut cycles = packing.into_cycles();
        cycles.retain(|c| is_cycle(g, c));
        let packing = CyclePacking::new(g, cycles).expect("subset of a packing");
        let result = PackerResult::CandidateCounterexample {
            packing,
            diagnostics: diagnostics.clone(),
        };
        (result, diagnostics)
    }

    fn certify(
        &self,
        g: &Graph,
        k: usize,
        packing: CyclePacking,
        diagnostics: Diagnostics,
    ) -> (PackerResult, Diagnostics) {
        let n = g.n();
        let mut diagnostics = diagnostics;
        match independent_set_larger_than(g, n - 2 * k, self.config.budget.independence) {
            Ok(Some(set)) => return (PackerResult::IndependentSet(set), diagnostics),
            Ok(None) => {}
            Err(_) => diagnostics.note_budget("independent set"),
        }
        if let Some(kind) = is_exceptional(g, k) {
            return (PackerResult::Exceptional(kind), diagnostics);
        }
        if n < 3 * k + 1 {
            let v = HypothesisViolation::Order {
                n,
                required: 3 * k + 1,
            };
            return (PackerResult::HypothesisViolation(v), diagnostics);
        }
        let sigma2 = degree_stats(g).sigma2;
        if !sigma2.at_least(4 * k - 3) {
            let v = HypothesisViolation::OreDegree {
                sigma2,
                required: 4 * k - 3,
            };
            return (PackerResult::HypothesisViolation(v), diagnostics);
        }
        let result = PackerResult::CandidateCounterexample {
            packing,
            diagnostics: diagnostics.clone(),
        };
        (result, diagnostics)
    }
}

/// Runs the packer with the default configuration.
pub fn find_disjoint_cycles(g: &Graph, k: usize) -> Result<PackerResult, PackError> {
    Packer::default().find(g, k)
}

fn finish_packing(
    g: &Graph,
    packing: CyclePacking,
    diagnostics: Diagnostics,
) -> (PackerResult, Diagnostics) {
    packing
        .check(g)
        .expect("final packing is valid in the input graph");
    (PackerResult::Packing(packing), diagnostics)
}

/// `G` plus the helper edges that turn consecutive triples of the `3k`
/// highest-degree vertices into triangles.
fn seed(g: &Graph, k: usize) -> (Graph, Vec<(usize, usize)>, CyclePacking) {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut host = g.clone();
    let mut helpers = Vec::new();
    let mut cycles = Vec::with_capacity(k);
    for triple in order[..3 * k].chunks(3) {
        let [a, b, c] = [triple[0], triple[1], triple[2]];
        for (u, v) in [(a, b), (b, c), (a, c)] {
            if !host.has_edge(u, v) {
                host = host.with_edge(u, v).expect("distinct vertices");
                helpers.push((u.min(v), u.max(v)));
            }
        }
        cycles.push(vec![a, b, c]);
    }
    let packing = CyclePacking::new(&host, cycles).expect("seed triangles are disjoint");
    (host, helpers, packing)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error(transparent)]
    InvalidPacking(#[from] InvalidPacking),
    #[error("expected {expected} cycles, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("independent set of size {size} is below {required}")]
    SetTooSmall { size: usize, required: usize },
    #[error("graph is not exceptional of kind {0}")]
    NotExceptional(ExceptionKind),
    #[error("stated violation {0} does not hold")]
    HypothesisHolds(HypothesisViolation),
}

/// Independently re-checks a packer result.
pub fn validate_result(g: &Graph, k: usize, r: &PackerResult) -> Result<(), ValidationError> {
    let n = g.n();
    match r {
        PackerResult::Packing(p) => {
            p.check(g)?;
            if p.len() != k {
                return Err(ValidationError::WrongCount {
                    expected: k,
                    found: p.len(),
                });
            }
        }
        PackerResult::CandidateCounterexample { packing, .. } => {
            packing.check(g)?;
            if packing.len() >= k {
                return Err(ValidationError::WrongCount {
                    expected: k.saturating_sub(1),
                    found: packing.len(),
                });
            }
        }
        PackerResult::IndependentSet(set) => {
            let vertices = set.to_vec();
            if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
                return Err(ValidationError::VertexOutOfRange(v));
            }
            for (i, &u) in vertices.iter().enumerate() {
                if let Some(&v) = vertices[i + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                    return Err(ValidationError::NotIndependent(u, v));
                }
            }
            let required = (n + 1).saturating_sub(2 * k);
            if vertices.len() < required {
                return Err(ValidationError::SetTooSmall {
                    size: vertices.len(),
                    required,
                });
            }
        }
        PackerResult::Exceptional(kind) => {
            if is_exceptional(g, k) != Some(*kind) {
                return Err(ValidationError::NotExceptional(*kind));
            }
        }
        PackerResult::HypothesisViolation(v) => {
            let holds = match *v {
                HypothesisViolation::Order {
                    n: stated,
                    required,
                } => {
                    stated != n
                        || stated >= required
                        || !(required == 3 * k || required == 3 * k + 1)
                }
                HypothesisViolation::OreDegree { sigma2, required } => {
                    sigma2 != degree_stats(g).sigma2
                        || sigma2.at_least(required)
                        || required + 3 != 4 * k
                }
            };
            if holds {
                return Err(ValidationError::HypothesisHolds(*v));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, join, named_family, FamilySpec};

    #[test]
    fn complete_graph_packs() {
        let g = Graph::complete(10);
        let r = find_disjoint_cycles(&g, 3).unwrap();
        let PackerResult::Packing(p) = &r else {
            panic!("{r:?}")
        };
        assert!(p.cycles().iter().all(|c| c.len() == 3));
        assert!(validate_result(&g, 3, &r).is_ok());
    }

    #[test]
    fn large_independent_set_is_certified() {
        let g = join(&Graph::empty(4), &Graph::complete(5));
        let r = find_disjoint_cycles(&g, 3).unwrap();
        let PackerResult::IndependentSet(s) = &r else {
            panic!("{r:?}")
        };
        assert_eq!(s.len(), 4);
        assert!(validate_result(&g, 3, &r).is_ok());
    }

    #[test]
    fn y1_is_exceptional() {
        let g = named_family(&FamilySpec::Y1).unwrap();
        let r = find_disjoint_cycles(&g, 3).unwrap();
        assert_eq!(r, PackerResult::Exceptional(ExceptionKind::Y1));
        assert!(validate_result(&g, 3, &r).is_ok());
    }

    #[test]
    fn petersen_two_five_cycles() {
        let g = named_family(&FamilySpec::Petersen).unwrap();
        let r = find_disjoint_cycles(&g, 2).unwrap();
        let PackerResult::Packing(p) = &r else {
            panic!("{r:?}")
        };
        assert!(p.cycles().iter().all(|c| c.len() == 5));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            find_disjoint_cycles(&Graph::empty(0), 1),
            Err(PackError::EmptyGraph)
        );
        let g = Graph::complete(2);
        assert!(matches!(
            find_disjoint_cycles(&g, 0).unwrap(),
            PackerResult::Packing(p) if p.is_empty()
        ));
        let r = find_disjoint_cycles(&g, 1).unwrap();
        assert!(matches!(
            r,
            PackerResult::HypothesisViolation(HypothesisViolation::Order { .. })
        ));
        assert!(validate_result(&g, 1, &r).is_ok());
    }

    #[test]
    fn rejects_bad_results() {
        let g = Graph::complete(10);
        let bogus = PackerResult::IndependentSet(g.set_of([0, 1]));
        assert_eq!(
            validate_result(&g, 3, &bogus),
            Err(ValidationError::NotIndependent(0, 1))
        );
        let short = PackerResult::Packing(CyclePacking::new(&g, vec![vec![0, 1, 2]]).unwrap());
        assert!(validate_result(&g, 3, &short).is_err());
        let hv = PackerResult::HypothesisViolation(HypothesisViolation::Order {
            n: 10,
            required: 10,
        });
        assert!(validate_result(&g, 3, &hv).is_err());
        let ex = PackerResult::Exceptional(ExceptionKind::Y1);
        assert!(validate_result(&g, 3, &ex).is_err());
    }

    #[test]
    fn sharp_complement_has_no_triangle_partition() {
        let g = complement(&named_family(&FamilySpec::KkkPlusKk(3)).unwrap());
        let r = find_disjoint_cycles(&g, 3).unwrap();
        assert!(!r.is_packing());
        assert!(validate_result(&g, 3, &r).is_ok());
    }
}
