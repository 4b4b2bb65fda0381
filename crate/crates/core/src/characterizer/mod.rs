//! Hypothesis checks, exceptional graphs and the decision procedure for
//! "does `G` contain `k` disjoint cycles?".

mod lovasz;
mod reduction;

use std::fmt;
use std::sync::OnceLock;

use crate::budget::SearchBudget;
use crate::graph::{
    degree_stats, independence_number, independent_set_larger_than, named_family, FamilySpec,
    Graph, OreDegree,
};
use crate::packer::oracle_max_packing;

pub use lovasz::{classify_no_two_cycles, FamilyLabel, LovaszKind, LovaszMatch, WitnessError};
pub use reduction::{max_disjoint_cycles, reduce_multigraph, replay, Reduction, ReductionStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionKind {
    Y1,
    Y2,
    Wheel,
    TwoKkJoinKkBar,
}

impl fmt::Display for ExceptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionKind::Y1 => "Y1",
            ExceptionKind::Y2 => "Y2",
            ExceptionKind::Wheel => "wheel",
            ExceptionKind::TwoKkJoinKkBar => "2Kk-join-Kk-bar",
        })
    }
}

fn template(spec: FamilySpec, cell: &'static OnceLock<Graph>) -> &'static Graph {
    cell.get_or_init(|| named_family(&spec).expect("fixed template"))
}

/// One vertex adjacent to all others, which induce a single cycle.
pub fn is_wheel(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || g.edge_count() != 2 * (n - 1) {
        return false;
    }
    (0..n).filter(|&h| g.degree(h) == n - 1).any(|hub| {
        let mut rim = g.vertex_set();
        rim.remove(hub);
        if rim.iter().any(|v| g.degree_within(v, &rim) != 2) {
            return false;
        }
        // 2-regular: a single cycle iff connected.
        let start = rim.first().expect("n ≥ 4");
        let (mut prev, mut cur, mut seen) = (usize::MAX, start, 1);
        loop {
            let next = g
                .neighbors(cur)
                .intersection(&rim)
                .iter()
                .find(|&w| w != prev)
                .expect("degree two");
            if next == start {
                break;
            }
            (prev, cur, seen) = (cur, next, seen + 1);
        }
        seen == n - 1
    })
}

/// The exceptional graph `G` is isomorphic to, among those that matter
/// for this `k`.
pub fn is_exceptional(g: &Graph, k: usize) -> Option<ExceptionKind> {
    static Y1: OnceLock<Graph> = OnceLock::new();
    static Y2: OnceLock<Graph> = OnceLock::new();
    let n = g.n();
    if k == 3 && n == 10 {
        if g.is_isomorphic(template(FamilySpec::Y1, &Y1)) {
            return Some(ExceptionKind::Y1);
        }
        if g.is_isomorphic(template(FamilySpec::Y2, &Y2)) {
            return Some(ExceptionKind::Y2);
        }
    }
    if k == 2 && is_wheel(g) {
        return Some(ExceptionKind::Wheel);
    }
    if k % 2 == 1 && n == 3 * k {
        let t = named_family(&FamilySpec::TwoKkJoinKkBar(k)).expect("k ≥ 1");
        if g.is_isomorphic(&t) {
            return Some(ExceptionKind::TwoKkJoinKkBar);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub sigma2: OreDegree,
    /// `None` when the search ran out of budget.
    pub alpha: Option<usize>,
    /// `n ≥ 3k + 1`.
    pub h1: bool,
    /// `σ₂ ≥ 4k − 3`.
    pub h2: bool,
    /// `α ≤ n − 2k`; `None` when undetermined.
    pub h3: Option<bool>,
    /// `σ₂ ≥ 4k − 1`.
    pub e2: bool,
    /// `n ≥ 3k`.
    pub ch_i: bool,
    /// `δ ≥ 2k`.
    pub ch_ii: bool,
    /// `δ ≥ 2k − 1`.
    pub dirac_ii: bool,
    /// Not `2K_k ∨ K̄_k` with `k` odd and `n = 3k`, and not a wheel when `k = 2`.
    pub h4: bool,
}

pub fn check_hypotheses(g: &Graph, k: usize) -> HypothesisReport {
    check_hypotheses_with(g, k, &SearchBudget::default())
}

pub fn check_hypotheses_with(g: &Graph, k: usize, budget: &SearchBudget) -> HypothesisReport {
    let n = g.n();
    let stats = degree_stats(g);
    let alpha = independence_number(g, budget.independence)
        .ok()
        .map(|s| s.size());
    let h3 = match alpha {
        Some(a) => Some(a + 2 * k <= n),
        None => alpha_exceeds(g, k, budget).map(|e| !e),
    };
    let h4 = !matches!(
        is_exceptional(g, k),
        Some(ExceptionKind::Wheel | ExceptionKind::TwoKkJoinKkBar)
    );
    HypothesisReport {
        n,
        k,
        delta: stats.delta,
        sigma2: stats.sigma2,
        alpha,
        h1: n > 3 * k,
        h2: stats.sigma2.at_least((4 * k).saturating_sub(3)),
        h3,
        e2: stats.sigma2.at_least((4 * k).saturating_sub(1)),
        ch_i: n >= 3 * k,
        ch_ii: stats.delta >= 2 * k,
        dirac_ii: stats.delta + 1 >= 2 * k,
        h4,
    }
}

/// Whether `α > n − 2k`, via the threshold query.
fn alpha_exceeds(g: &Graph, k: usize, budget: &SearchBudget) -> Option<bool> {
    let n = g.n();
    if n < 2 * k {
        return Some(true);
    }
    independent_set_larger_than(g, n - 2 * k, budget.independence)
        .ok()
        .map(|s| s.is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    HasKCycles,
    NoKCycles,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HasKCycles => "HasKCycles",
            Verdict::NoKCycles => "NoKCycles",
            Verdict::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `k = 0`.
    Trivial,
    /// `n < 3k`.
    Order,
    /// `α > n − 2k`.
    IndependenceNecessity,
    MinDegree,
    OreDegree,
    OreDegreeRefined,
    MinDegreeCharacterization,
    TwoCycles,
    TrianglePartition,
    Oracle,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Trivial => "trivial",
            Rule::Order => "order",
            Rule::IndependenceNecessity => "independence-necessity",
            Rule::MinDegree => "min-degree",
            Rule::OreDegree => "ore-degree",
            Rule::OreDegreeRefined => "ore-degree-refined",
            Rule::MinDegreeCharacterization => "min-degree-characterization",
            Rule::TwoCycles => "two-cycles",
            Rule::TrianglePartition => "triangle-partition",
            Rule::Oracle => "oracle",
        })
    }
}

/// One checked condition. `applies` is whether the rule decided the
/// verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub applies: bool,
    pub detail: String,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub justification: Vec<Step>,
}

impl Decision {
    /// The rule that settled the verdict.
    pub fn deciding_rule(&self) -> Option<Rule> {
        self.justification
            .iter()
            .rev()
            .find(|s| s.applies)
            .map(|s| s.rule)
    }

    pub(crate) fn new() -> Self {
        Decision {
            verdict: Verdict::Unknown,
            justification: Vec::new(),
        }
    }

    pub(crate) fn note(&mut self, rule: Rule, detail: String) {
        self.justification.push(Step {
            rule,
            applies: false,
            detail,
        });
    }

    pub(crate) fn settle(mut self, rule: Rule, verdict: Verdict, detail: String) -> Self {
        self.justification.push(Step {
            rule,
            applies: true,
            detail,
        });
        self.verdict = verdict;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideConfig {
    pub budget: SearchBudget,
    /// Largest order on which the exact search is attempted.
    pub oracle_max_n: usize,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            budget: SearchBudget::default(),
            oracle_max_n: 20,
        }
    }
}

pub fn decide(g: &Graph, k: usize) -> Decision {
    decide_with(g, k, &DecideConfig::default())
}

pub fn decide_with(g: &Graph, k: usize, config: &DecideConfig) -> Decision {
    use Verdict::{HasKCycles as Has, NoKCycles as No};
    let d = Decision::new();
    let n = g.n();
    if k == 0 {
        return d.settle(Rule::Trivial, Has, "k=0".into());
    }
    if n < 3 * k {
        return d.settle(Rule::Order, No, format!("n={n} < {}", 3 * k));
    }
    let mut d = d;
    let stats = degree_stats(g);
    let (delta, sigma2) = (stats.delta, stats.sigma2);
    let excess = alpha_exceeds(g, k, &config.budget);
    match excess {
        Some(true) => {
            return d.settle(
                Rule::IndependenceNecessity,
                No,
                format!("alpha > {}", n - 2 * k),
            );
        }
        Some(false) => d.note(
            Rule::IndependenceNecessity,
            format!("alpha <= {}", n - 2 * k),
        ),
        None => d.note(Rule::IndependenceNecessity, "alpha undetermined".into()),
    }
    let h3 = excess.map(|e| !e);

    if delta >= 2 * k {
        return d.settle(Rule::MinDegree, Has, format!("delta={delta} >= {}", 2 * k));
    }
    d.note(Rule::MinDegree, format!("delta={delta} < {}", 2 * k));

    if sigma2.at_least(4 * k - 1) {
        return d.settle(
            Rule::OreDegree,
            Has,
            format!("sigma2={sigma2} >= {}", 4 * k - 1),
        );
    }
    d.note(Rule::OreDegree, format!("sigma2={sigma2} < {}", 4 * k - 1));

    if k >= 3 {
        let bound = 4 * k - 3;
        if n <= 3 * k {
            d.note(Rule::OreDegreeRefined, format!("n={n} < {}", 3 * k + 1));
        } else if !sigma2.at_least(bound) {
            d.note(Rule::OreDegreeRefined, format!("sigma2={sigma2} < {bound}"));
        } else if let Some(kind) = is_exceptional(g, k) {
            return d.settle(Rule::OreDegreeRefined, No, format!("G is {kind}"));
        } else if h3 == Some(true) {
            return d.settle(
                Rule::OreDegreeRefined,
                Has,
                format!(
                    "n={n} >= {}, sigma2={sigma2} >= {bound}, alpha <= {}",
                    3 * k + 1,
                    n - 2 * k
                ),
            );
        }
    }

    if k >= 2 {
        if delta + 1 >= 2 * k {
            if let Some(h3) = h3 {
                let kind = is_exceptional(g, k)
                    .filter(|e| matches!(e, ExceptionKind::Wheel | ExceptionKind::TwoKkJoinKkBar));
                return match (h3, kind) {
                    (true, None) => d.settle(
                        Rule::MinDegreeCharacterization,
                        Has,
                        format!(
                            "delta={delta} >= {}, alpha <= {}, not exceptional",
                            2 * k - 1,
                            n - 2 * k
                        ),
                    ),
                    (_, Some(kind)) => {
                        d.settle(Rule::MinDegreeCharacterization, No, format!("G is {kind}"))
                    }
                    (false, None) => d.settle(
                        Rule::MinDegreeCharacterization,
                        No,
                        format!("alpha > {}", n - 2 * k),
                    ),
                };
            }
        } else {
            d.note(
                Rule::MinDegreeCharacterization,
                format!("delta={delta} < {}", 2 * k - 1),
            );
        }
    }

    if k == 2 && n >= 6 && sigma2.at_least(5) {
        return match classify_no_two_cycles(g) {
            Some(m) => d.settle(Rule::TwoCycles, No, format!("reduces to {}", m.kind)),
            None => d.settle(Rule::TwoCycles, Has, "no obstruction matches".into()),
        };
    }

    if n <= config.oracle_max_n {
        return match oracle_max_packing(g, Some(k), config.budget.oracle) {
            Ok(m) if m.count >= k => {
                d.settle(Rule::Oracle, Has, format!("found {k} disjoint cycles"))
            }
            Ok(m) => d.settle(Rule::Oracle, No, format!("max={} < {k}", m.count)),
            Err(e) => {
                d.note(Rule::Oracle, e.to_string());
                d
            }
        };
    }
    d.note(Rule::Oracle, format!("n={n} > {}", config.oracle_max_n));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;

    fn family(spec: FamilySpec) -> Graph {
        named_family(&spec).unwrap()
    }

    #[test]
    fn hypothesis_reports() {
        let r = check_hypotheses(&family(FamilySpec::Y1), 3);
        assert!(r.h1 && r.h2 && r.h3 == Some(true));
        assert_eq!(r.sigma2, OreDegree::Finite(9));
        assert_eq!(r.alpha, Some(2));
        let r = check_hypotheses(&join(&Graph::empty(4), &Graph::complete(5)), 3);
        assert_eq!((r.alpha, r.h3), (Some(4), Some(false)));
        let r = check_hypotheses(&Graph::complete(9), 3);
        assert!(r.ch_i && r.ch_ii && r.h4);
        assert_eq!(r.sigma2, OreDegree::Infinity);
    }

    #[test]
    fn exceptional_graphs() {
        assert_eq!(
            is_exceptional(&family(FamilySpec::Y2), 3),
            Some(ExceptionKind::Y2)
        );
        assert_eq!(
            is_exceptional(&family(FamilySpec::Y1), 3),
            Some(ExceptionKind::Y1)
        );
        assert_eq!(is_exceptional(&family(FamilySpec::Y1), 2), None);
        assert_eq!(
            is_exceptional(&family(FamilySpec::Wheel(7)), 2),
            Some(ExceptionKind::Wheel)
        );
        assert_eq!(is_exceptional(&family(FamilySpec::Wheel(7)), 3), None);
        assert_eq!(
            is_exceptional(&family(FamilySpec::TwoKkJoinKkBar(3)), 3),
            Some(ExceptionKind::TwoKkJoinKkBar)
        );
        assert_eq!(
            is_exceptional(&family(FamilySpec::TwoKkJoinKkBar(2)), 2),
            None
        );
        assert_eq!(is_exceptional(&Graph::complete(10), 3), None);
    }

    #[test]
    fn wheel_detection() {
        assert!(is_wheel(&Graph::complete(4)));
        assert!(is_wheel(
            &family(FamilySpec::Wheel(5)).relabel(&[4, 2, 0, 1, 3])
        ));
        assert!(!is_wheel(&Graph::complete(5)));
        // Hub plus two disjoint triangles: right edge count, wrong rim.
        let hub = join(
            &Graph::empty(1),
            &crate::graph::disjoint_union(&Graph::complete(3), &Graph::complete(3)),
        );
        assert!(!is_wheel(&hub));
    }

    #[test]
    fn decisions() {
        let y1 = decide(&family(FamilySpec::Y1), 3);
        assert_eq!(y1.verdict, Verdict::NoKCycles);
        assert_eq!(y1.deciding_rule(), Some(Rule::OreDegreeRefined));

        let k9 = decide(&Graph::complete(9), 3);
        assert_eq!(
            (k9.verdict, k9.deciding_rule()),
            (Verdict::HasKCycles, Some(Rule::MinDegree))
        );

        let w = decide(&family(FamilySpec::Wheel(8)), 2);
        assert_eq!(
            (w.verdict, w.deciding_rule()),
            (Verdict::NoKCycles, Some(Rule::MinDegreeCharacterization))
        );

        let c5 = decide(&family(FamilySpec::C5BlowupK3bar), 4);
        assert_eq!(
            (c5.verdict, c5.deciding_rule()),
            (Verdict::NoKCycles, Some(Rule::Oracle))
        );

        let gk = decide(&family(FamilySpec::Gk(3)), 3);
        assert_eq!(
            (gk.verdict, gk.deciding_rule()),
            (Verdict::NoKCycles, Some(Rule::Oracle))
        );
        assert!(gk.justification.iter().any(|s| s.detail == "sigma2=8 < 9"));
    }
}
