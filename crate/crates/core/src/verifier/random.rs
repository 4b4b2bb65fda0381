use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphBuilder};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x005e_edc7_c1e5;

/// `G(n, p)`: each pair is an edge independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                b.add_edge(u, v).expect("distinct in-range vertices");
            }
        }
    }
    b.build()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` graphs with order drawn uniformly from `orders` and edge
/// probability uniform in `densities`, reproducible from `seed`.
pub fn random_graphs(
    seed: u64,
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
    densities: std::ops::RangeInclusive<f64>,
) -> Vec<Graph> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let p = rng.gen_range(densities.clone());
            gnp(n, p, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_graphs(7, 20, 5..=9, 0.2..=0.8);
        let b = random_graphs(7, 20, 5..=9, 0.2..=0.8);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (5..=9).contains(&g.n())));
        assert_ne!(a, random_graphs(8, 20, 5..=9, 0.2..=0.8));
    }

    #[test]
    fn extreme_densities() {
        let mut rng = seeded_rng(1);
        assert_eq!(gnp(6, 1.0, &mut rng), Graph::complete(6));
        assert_eq!(gnp(6, 0.0, &mut rng), Graph::empty(6));
    }
}
