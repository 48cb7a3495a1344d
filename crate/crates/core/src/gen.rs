//! Seeded random instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Digraph, Weight};

/// Inclusive weight range; `1..=1` produces an unweighted graph.
pub type WeightRange = std::ops::RangeInclusive<Weight>;

/// Each ordered pair `(u, v)`, `u != v`, becomes an arc independently with
/// probability `p`. Output depends only on the arguments.
pub fn gen_random(n: usize, p: f64, weights: WeightRange, seed: u64) -> Digraph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v, rng.gen_range(weights.clone())));
            }
        }
    }
    let weighted = *weights.start() != 1 || *weights.end() != 1;
    Digraph::directed(n, arcs)
        .expect("generated graph is simple")
        .with_weighted_flag(weighted)
}

/// Undirected counterpart of [`gen_random`] over unordered pairs.
pub fn gen_random_undirected(n: usize, p: f64, weights: WeightRange, seed: u64) -> Digraph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(weights.clone())));
            }
        }
    }
    let weighted = *weights.start() != 1 || *weights.end() != 1;
    Digraph::undirected(n, edges)
        .expect("generated graph is simple")
        .with_weighted_flag(weighted)
}
