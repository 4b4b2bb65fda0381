use proptest::prelude::*;

use cyclepack::characterizer::{decide, Verdict};
use cyclepack::equitable::{equitable_coloring, has_k_triangle_partition};
use cyclepack::graph::{complement, degree_stats, parse_graph6, Graph, OreDegree};
use cyclepack::packer::{find_disjoint_cycles, oracle_max_packing, validate_result, PackerResult};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

fn oracle(g: &Graph) -> usize {
    oracle_max_packing(g, None, u64::MAX).unwrap().count
}

/// Brute force: does some assignment of colors `0..r` give an equitable
/// proper coloring?
fn brute_equitable(g: &Graph, r: usize) -> bool {
    let n = g.n();
    let (lo, hi) = (n / r, n.div_ceil(r));
    let mut colors = vec![0usize; n];
    loop {
        let mut sizes = vec![0usize; r];
        for &c in &colors {
            sizes[c] += 1;
        }
        if sizes.iter().all(|&s| s >= lo && s <= hi)
            && g.edges().all(|(u, v)| colors[u] != colors[v])
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < r {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Brute force: can the vertex set be split into triangles?
fn brute_triangle_partition(g: &Graph, left: &[usize]) -> bool {
    let Some(&a) = left.first() else { return true };
    for i in 1..left.len() {
        for j in i + 1..left.len() {
            let (b, c) = (left[i], left[j]);
            if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                let rest: Vec<usize> = left
                    .iter()
                    .copied()
                    .filter(|&v| v != a && v != b && v != c)
                    .collect();
                if brute_triangle_partition(g, &rest) {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in graph(14)) {
        prop_assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_invariants((g, perm) in relabelled(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canonical_code(), h.canonical_code());
        prop_assert_eq!(degree_stats(&g), degree_stats(&h));
        prop_assert_eq!(oracle(&g), oracle(&h));
    }

    #[test]
    fn theta_of_complement(g in graph(10)) {
        let n = g.n();
        let s = degree_stats(&g);
        let t = degree_stats(&complement(&g)).theta;
        match s.sigma2 {
            OreDegree::Finite(v) => prop_assert_eq!(t, OreDegree::Finite(2 * n - v - 2)),
            _ => prop_assert_eq!(t, OreDegree::NegInfinity),
        }
    }

    #[test]
    fn stop_at_agrees_with_full_search(g in graph(9), stop in 0usize..4) {
        let full = oracle(&g);
        let early = oracle_max_packing(&g, Some(stop), u64::MAX).unwrap();
        prop_assert_eq!(early.count, full.min(stop));
        prop_assert_eq!(early.cycles.len(), early.count);
    }

    #[test]
    fn packer_results_validate_and_agree_with_oracle(g in graph(9), k in 1usize..4) {
        prop_assume!(g.n() > 0);
        let r = find_disjoint_cycles(&g, k).unwrap();
        prop_assert!(validate_result(&g, k, &r).is_ok());
        let max = oracle(&g);
        match r {
            PackerResult::Packing(_) => prop_assert!(max >= k),
            PackerResult::IndependentSet(_) | PackerResult::Exceptional(_) => prop_assert!(max < k),
            _ => {}
        }
    }

    #[test]
    fn decide_agrees_with_oracle(g in graph(9), k in 1usize..4) {
        let max = oracle(&g);
        match decide(&g, k).verdict {
            Verdict::HasKCycles => prop_assert!(max >= k),
            Verdict::NoKCycles => prop_assert!(max < k),
            Verdict::Unknown => prop_assert!(false, "small graphs are always decided"),
        }
    }

    #[test]
    fn equitable_coloring_matches_brute_force(g in graph(7), r in 1usize..5) {
        let found = equitable_coloring(&g, r).unwrap();
        if let Some(c) = &found {
            prop_assert!(c.check(&g).is_ok());
        }
        prop_assert_eq!(found.is_some(), brute_equitable(&g, r));
    }

    #[test]
    fn triangle_partition_matches_brute_force(g in graph(9).prop_filter("n = 3k", |g| g.n() % 3 == 0 && g.n() > 0)) {
        let k = g.n() / 3;
        let t = has_k_triangle_partition(&g, k).unwrap();
        let expected = brute_triangle_partition(&g, &(0..g.n()).collect::<Vec<_>>());
        let want = if expected { Verdict::HasKCycles } else { Verdict::NoKCycles };
        prop_assert_eq!(t.decision.verdict, want);
        if let Some(p) = t.triangles {
            prop_assert_eq!(p.len(), k);
            prop_assert!(p.cycles().iter().all(|c| c.len() == 3));
            prop_assert!(p.check(&g).is_ok());
        }
    }
}
