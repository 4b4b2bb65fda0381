//! Checking the packing theorems against exact ground truth over graph
//! streams.

mod enumerate;
mod random;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::budget::SearchBudget;
use crate::characterizer::{classify_no_two_cycles, is_exceptional, ExceptionKind, Verdict};
use crate::equitable::has_k_triangle_partition_with;
use crate::graph::{degree_stats, independent_set_larger_than, Graph};
use crate::packer::{oracle_max_packing, validate_result, Packer, PackerConfig, PackerResult};

pub use enumerate::{enumerate_graphs, GraphFilter, OrderTooLarge, MAX_ENUMERATION_ORDER};
pub use random::{gnp, random_graphs, seeded_rng, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `n ≥ 3k` and `δ ≥ 2k` give `k` disjoint cycles.
    MinDegree,
    /// For `n ≥ 3k` and `δ ≥ 2k − 1`: `k` disjoint cycles iff `α ≤ n − 2k`
    /// and `G` is neither `2K_k ∨ K̄_k` (odd `k`, `n = 3k`) nor a wheel
    /// (`k = 2`).
    MinDegreeCharacterization,
    /// `n ≥ 3k` and `σ₂ ≥ 4k − 1` give `k` disjoint cycles.
    OreDegree,
    /// `k ≥ 3`, `n ≥ 3k + 1`, `σ₂ ≥ 4k − 3` and `α ≤ n − 2k` give `k`
    /// disjoint cycles unless `G` is `Y₁` or `Y₂`.
    OreDegreeRefined,
    /// A graph has no two disjoint cycles iff it reduces to an obstruction.
    TwoCycles,
    /// On `3k` vertices, the triangle-partition test agrees with ground truth.
    TrianglePartition,
    /// `k` disjoint cycles force `α ≤ n − 2k`.
    IndependenceNecessity,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::MinDegree,
        TheoremId::MinDegreeCharacterization,
        TheoremId::OreDegree,
        TheoremId::OreDegreeRefined,
        TheoremId::TwoCycles,
        TheoremId::TrianglePartition,
        TheoremId::IndependenceNecessity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MinDegree => "min-degree",
            TheoremId::MinDegreeCharacterization => "min-degree-characterization",
            TheoremId::OreDegree => "ore-degree",
            TheoremId::OreDegreeRefined => "ore-degree-refined",
            TheoremId::TwoCycles => "two-cycles",
            TheoremId::TrianglePartition => "triangle-partition",
            TheoremId::IndependenceNecessity => "independence-necessity",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem id {0:?}")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// Reservoir sample of `count` graphs drawn with `seed`.
    Sampled {
        seed: u64,
        count: usize,
    },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sampled { seed, count } => write!(f, "sampled(seed={seed}, count={count})"),
        }
    }
}

/// Result of checking one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses hold and the conclusion was confirmed.
    Confirmed,
    /// Hypotheses fail; nothing to check.
    Vacuous,
    /// A stated exception, confirmed to lack the cycles.
    Exceptional(ExceptionKind),
    /// A search ran out of budget.
    Skipped(String),
    Counterexample(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: TheoremCheck,
    pub mode: Mode,
    pub total: usize,
    pub confirmed: usize,
    pub vacuous: usize,
    pub exceptional: usize,
    pub skipped: usize,
    /// In stream order.
    pub counterexamples: Vec<Counterexample>,
}

impl Report {
    fn empty(check: TheoremCheck, mode: Mode) -> Self {
        Report {
            check,
            mode,
            total: 0,
            confirmed: 0,
            vacuous: 0,
            exceptional: 0,
            skipped: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, g: &Graph, outcome: Outcome) {
        self.total += 1;
        match outcome {
            Outcome::Confirmed => self.confirmed += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Exceptional(_) => self.exceptional += 1,
            Outcome::Skipped(_) => self.skipped += 1,
            Outcome::Counterexample(reason) => self.counterexamples.push(Counterexample {
                graph6: g.to_graph6(),
                reason,
            }),
        }
    }

    /// Combines reports of consecutive chunks, `self` first.
    fn merge(mut self, other: Report) -> Report {
        self.total += other.total;
        self.confirmed += other.confirmed;
        self.vacuous += other.vacuous;
        self.exceptional += other.exceptional;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
        self
    }

    /// One line per counterexample, then a summary line.
    pub fn machine_lines(&self) -> Vec<String> {
        let theorem = self.check.theorem;
        let mut lines: Vec<String> = self
            .counterexamples
            .iter()
            .map(|c| format!("counterexample\t{}\t{theorem}\t{}", c.graph6, c.reason))
            .collect();
        lines.push(format!(
            "summary\t{theorem}\tk={}\tmode={}\ttotal={}\tconfirmed={}\tvacuous={}\texceptional={}\tskipped={}\tcounterexamples={}",
            self.check.k,
            self.mode,
            self.total,
            self.confirmed,
            self.vacuous,
            self.exceptional,
            self.skipped,
            self.counterexamples.len()
        ));
        lines
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (k={}, {}): {}",
            self.check.theorem,
            self.check.k,
            self.mode,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        writeln!(
            f,
            "  graphs={} confirmed={} vacuous={} exceptional={} skipped={}",
            self.total, self.confirmed, self.vacuous, self.exceptional, self.skipped
        )?;
        for c in &self.counterexamples {
            writeln!(f, "  counterexample {}: {}", c.graph6, c.reason)?;
        }
        Ok(())
    }
}

pub fn verify<I>(stream: I, check: TheoremCheck, mode: Mode) -> Report
where
    I: IntoIterator<Item = Graph>,
{
    verify_with(stream, check, mode, &SearchBudget::default())
}

pub fn verify_with<I>(stream: I, check: TheoremCheck, mode: Mode, budget: &SearchBudget) -> Report
where
    I: IntoIterator<Item = Graph>,
{
    let graphs = match mode {
        Mode::Exhaustive => stream.into_iter().collect(),
        Mode::Sampled { seed, count } => reservoir(stream, seed, count),
    };
    const CHUNK: usize = 16;
    graphs
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut report = Report::empty(check, mode);
            for g in chunk {
                report.record(g, check_graph(g, check, budget));
            }
            report
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Report::empty(check, mode), Report::merge)
}

/// Seeded reservoir sample, returned in stream order.
fn reservoir<I: IntoIterator<Item = Graph>>(stream: I, seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = seeded_rng(seed);
    let mut kept: Vec<(usize, Graph)> = Vec::with_capacity(count);
    for (i, g) in stream.into_iter().enumerate() {
        if kept.len() < count {
            kept.push((i, g));
        } else {
            let j = rng.gen_range(0..=i);
            if j < count {
                kept[j] = (i, g);
            }
        }
    }
    kept.sort_by_key(|(i, _)| *i);
    kept.into_iter().map(|(_, g)| g).collect()
}

/// Exact test for `k` disjoint cycles, `None` on budget exhaustion.
fn has_cycles(g: &Graph, k: usize, budget: &SearchBudget) -> Option<bool> {
    oracle_max_packing(g, Some(k), budget.oracle)
        .ok()
        .map(|m| m.count >= k)
}

fn alpha_small(g: &Graph, k: usize, budget: &SearchBudget) -> Option<bool> {
    let n = g.n();
    if n < 2 * k {
        return Some(false);
    }
    independent_set_larger_than(g, n - 2 * k, budget.independence)
        .ok()
        .map(|s| s.is_none())
}

/// The packer must return a validated packing.
fn packer_confirms(g: &Graph, k: usize, budget: &SearchBudget) -> Outcome {
    let packer = Packer::new(PackerConfig {
        budget: *budget,
        ..PackerConfig::default()
    });
    match packer.find(g, k) {
        Ok(r @ PackerResult::Packing(_)) => match validate_result(g, k, &r) {
            Ok(()) => Outcome::Confirmed,
            Err(e) => Outcome::Counterexample(format!("packer returned an invalid packing: {e}")),
        },
        Ok(r) => Outcome::Counterexample(format!("packer returned {}", describe(&r))),
        Err(e) => Outcome::Counterexample(e.to_string()),
    }
}

fn describe(r: &PackerResult) -> String {
    match r {
        PackerResult::Packing(p) => format!("{} cycles", p.len()),
        PackerResult::IndependentSet(s) => format!("independent set of size {}", s.len()),
        PackerResult::Exceptional(kind) => format!("exceptional {kind}"),
        PackerResult::HypothesisViolation(v) => format!("hypothesis violation {v}"),
        PackerResult::CandidateCounterexample { packing, .. } => {
            format!("candidate counterexample with {} cycles", packing.len())
        }
    }
}

macro_rules! known {
    ($e:expr, $what:expr) => {
        match $e {
            Some(v) => v,
            None => return Outcome::Skipped(format!("{} budget exceeded", $what)),
        }
    };
}

pub fn check_graph(g: &Graph, check: TheoremCheck, budget: &SearchBudget) -> Outcome {
    let TheoremCheck { theorem, k } = check;
    let n = g.n();
    let stats = degree_stats(g);
    let (delta, sigma2) = (stats.delta, stats.sigma2);
    match theorem {
        TheoremId::MinDegree | TheoremId::OreDegree => {
            let applies = n >= 3 * k
                && if theorem == TheoremId::MinDegree {
                    delta >= 2 * k
                } else {
                    sigma2.at_least((4 * k).saturating_sub(1))
                };
            if !applies || n == 0 {
                return Outcome::Vacuous;
            }
            if !known!(has_cycles(g, k, budget), "oracle") {
                return Outcome::Counterexample(format!("no {k} disjoint cycles"));
            }
            packer_confirms(g, k, budget)
        }
        TheoremId::MinDegreeCharacterization => {
            if k < 2 || n < 3 * k || delta + 1 < 2 * k {
                return Outcome::Vacuous;
            }
            let truth = known!(has_cycles(g, k, budget), "oracle");
            let h3 = known!(alpha_small(g, k, budget), "independence");
            let exception = is_exceptional(g, k)
                .filter(|e| matches!(e, ExceptionKind::Wheel | ExceptionKind::TwoKkJoinKkBar));
            let predicted = h3 && exception.is_none();
            match (truth == predicted, exception) {
                (false, _) => Outcome::Counterexample(format!(
                    "oracle says {truth}, characterization says {predicted}"
                )),
                (true, Some(kind)) if h3 => Outcome::Exceptional(kind),
                _ => Outcome::Confirmed,
            }
        }
        TheoremId::OreDegreeRefined => {
            if k < 3 || n < 3 * k + 1 || !sigma2.at_least(4 * k - 3) {
                return Outcome::Vacuous;
            }
            if !known!(alpha_small(g, k, budget), "independence") {
                return Outcome::Vacuous;
            }
            let truth = known!(has_cycles(g, k, budget), "oracle");
            match is_exceptional(g, k) {
                Some(kind @ (ExceptionKind::Y1 | ExceptionKind::Y2)) => {
                    if truth {
                        Outcome::Counterexample(format!("{kind} has {k} disjoint cycles"))
                    } else {
                        Outcome::Exceptional(kind)
                    }
                }
                _ if !truth => Outcome::Counterexample(format!("no {k} disjoint cycles")),
                _ => packer_confirms(g, k, budget),
            }
        }
        TheoremId::TwoCycles => {
            let truth = known!(has_cycles(g, 2, budget), "oracle");
            let matched = classify_no_two_cycles(g);
            match (&matched, truth) {
                (Some(m), false) => {
                    if let Err(e) = m.validate(g) {
                        return Outcome::Counterexample(format!("witness does not validate: {e}"));
                    }
                    let in_scope = n >= 6 && sigma2.at_least(5);
                    if in_scope && m.family.is_none() {
                        return Outcome::Counterexample(format!(
                            "{} matched without a family",
                            m.kind
                        ));
                    }
                    Outcome::Confirmed
                }
                (None, true) => Outcome::Confirmed,
                (Some(m), true) => Outcome::Counterexample(format!(
                    "matched {} but has two disjoint cycles",
                    m.kind
                )),
                (None, false) => {
                    Outcome::Counterexample("no match but lacks two disjoint cycles".into())
                }
            }
        }
        TheoremId::TrianglePartition => {
            if n != 3 * k {
                return Outcome::Vacuous;
            }
            let truth = known!(has_cycles(g, k, budget), "oracle");
            let p = has_k_triangle_partition_with(g, k, budget).expect("n = 3k");
            let claimed = match p.decision.verdict {
                Verdict::HasKCycles => true,
                Verdict::NoKCycles => false,
                Verdict::Unknown => return Outcome::Skipped("coloring budget exceeded".into()),
            };
            if claimed != truth {
                return Outcome::Counterexample(format!(
                    "partition test says {claimed}, oracle says {truth}"
                ));
            }
            if let Some(t) = &p.triangles {
                if t.check(g).is_err() || t.len() != k || t.cycles().iter().any(|c| c.len() != 3) {
                    return Outcome::Counterexample("invalid triangles".into());
                }
            }
            match is_exceptional(g, k) {
                Some(kind @ ExceptionKind::TwoKkJoinKkBar) => Outcome::Exceptional(kind),
                _ => Outcome::Confirmed,
            }
        }
        TheoremId::IndependenceNecessity => {
            if !known!(has_cycles(g, k, budget), "oracle") {
                return Outcome::Vacuous;
            }
            if known!(alpha_small(g, k, budget), "independence") {
                Outcome::Confirmed
            } else {
                Outcome::Counterexample(format!(
                    "{k} disjoint cycles but alpha > {}",
                    n.saturating_sub(2 * k)
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, FamilySpec};

    fn family(spec: FamilySpec) -> Graph {
        named_family(&spec).unwrap()
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>(), Ok(t));
        }
        assert!("T1".parse::<TheoremId>().is_err());
    }

    #[test]
    fn refined_on_named_stream() {
        let stream = vec![
            family(FamilySpec::Y1),
            family(FamilySpec::Y2),
            family(FamilySpec::Gk(3)),
        ];
        let check = TheoremCheck {
            theorem: TheoremId::OreDegreeRefined,
            k: 3,
        };
        let r = verify(stream, check, Mode::Exhaustive);
        assert!(r.passed());
        assert_eq!((r.exceptional, r.vacuous), (2, 1));
    }

    #[test]
    fn min_degree_on_seven_vertices() {
        let f = GraphFilter {
            min_degree: Some(4),
            min_sigma2: None,
        };
        let stream = enumerate_graphs(7, &f).unwrap();
        let check = TheoremCheck {
            theorem: TheoremId::MinDegree,
            k: 2,
        };
        let r = verify(stream, check, Mode::Exhaustive);
        assert!(r.passed(), "{r}");
        assert_eq!(r.confirmed, r.total);
    }

    #[test]
    fn sampling_is_reproducible() {
        let stream = || enumerate_graphs(5, &GraphFilter::default()).unwrap();
        let check = TheoremCheck {
            theorem: TheoremId::IndependenceNecessity,
            k: 1,
        };
        let mode = Mode::Sampled { seed: 3, count: 10 };
        let a = verify(stream(), check, mode);
        let b = verify(stream(), check, mode);
        assert_eq!(a, b);
        assert_eq!(a.total, 10);
        assert!(a.passed());
    }

    #[test]
    fn machine_output() {
        let check = TheoremCheck {
            theorem: TheoremId::TwoCycles,
            k: 2,
        };
        let r = verify(vec![family(FamilySpec::Petersen)], check, Mode::Exhaustive);
        let lines = r.machine_lines();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].starts_with("summary\ttwo-cycles\tk=2"));
    }
}
