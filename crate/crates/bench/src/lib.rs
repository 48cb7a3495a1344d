//! Seeded instance families shared by the benchmarks.

use vorder::gen::{gen_random, gen_random_undirected};
use vorder::Digraph;

pub const SEED: u64 = 0x5eed;

/// Random digraph with about `2n` arcs.
pub fn sparse(n: usize) -> Digraph {
    gen_random(n, density(n), 1..=1, SEED + n as u64)
}

pub fn sparse_weighted(n: usize) -> Digraph {
    gen_random(n, density(n), 1..=1_000, SEED + n as u64)
}

pub fn sparse_undirected(n: usize) -> Digraph {
    gen_random_undirected(n, 2.0 * density(n), 1..=1, SEED + n as u64)
}

fn density(n: usize) -> f64 {
    if n < 2 {
        0.0
    } else {
        (2.0 / (n - 1) as f64).min(1.0)
    }
}
