//! Objective evaluators for a fixed ordering.
//!
//! All functions are pure and assume `pi.len() == g.n()`.

use crate::graph::{Arc, Digraph, Ordering, Weight};

/// Total weight of backward arcs, i.e. arcs `(u, v)` with `pi(u) > pi(v)`.
pub fn backward_weight(g: &Digraph, pi: &Ordering) -> Weight {
    debug_assert_eq!(g.n(), pi.len());
    g.arcs()
        .iter()
        .filter(|a| pi.position(a.tail) > pi.position(a.head))
        .map(|a| a.weight)
        .sum()
}

/// Arcs of `cut_pi^i`: tail placed after position `i`, head at or before it.
/// For undirected graphs this lists one orientation of every crossing edge.
pub fn cut_at(g: &Digraph, pi: &Ordering, i: usize) -> (Vec<Arc>, Weight) {
    let arcs: Vec<Arc> = g
        .arcs()
        .iter()
        .filter(|a| pi.position(a.tail) > i && pi.position(a.head) <= i)
        .copied()
        .collect();
    let weight = arcs.iter().map(|a| a.weight).sum();
    (arcs, weight)
}

/// Weights of `cut_pi^i` for `i = 1..n-1` (index `i - 1`), in `O(n + m)`.
pub fn cut_profile(g: &Digraph, pi: &Ordering) -> Vec<Weight> {
    let n = g.n();
    if n < 2 {
        return Vec::new();
    }
    // A backward arc from position p to q < p lies in the cuts q..p-1.
    let mut diff = vec![0i128; n + 1];
    for a in g.arcs() {
        let (p, q) = (pi.position(a.tail), pi.position(a.head));
        if p > q {
            diff[q] += a.weight as i128;
            diff[p] -= a.weight as i128;
        }
    }
    let mut acc = 0i128;
    (1..n)
        .map(|i| {
            acc += diff[i];
            acc as Weight
        })
        .collect()
}

pub fn cutwidth_of(g: &Digraph, pi: &Ordering) -> Weight {
    cut_profile(g, pi).into_iter().max().unwrap_or(0)
}

pub fn ola_of(g: &Digraph, pi: &Ordering) -> Weight {
    cut_profile(g, pi).into_iter().sum()
}

/// Directed pathwidth of an ordering: the largest number of placed vertices
/// that still have an in-neighbour placed later. Weights are ignored.
pub fn dpw_of(g: &Digraph, pi: &Ordering) -> Weight {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let mut diff = vec![0i64; n + 1];
    for v in 0..n {
        let p = pi.position(v);
        let last = g
            .in_arcs(v)
            .iter()
            .map(|&(u, _)| pi.position(u))
            .max()
            .unwrap_or(0);
        // v counts at positions p..last-1
        if last > p {
            diff[p] += 1;
            diff[last] -= 1;
        }
    }
    let mut acc = 0i64;
    let mut best = 0i64;
    for d in diff.iter().take(n).skip(1) {
        acc += d;
        best = best.max(acc);
    }
    best as Weight
}

/// Sum of `weight * stretch` over backward arcs; equals [`ola_of`].
pub fn backward_stretch(g: &Digraph, pi: &Ordering) -> Weight {
    g.arcs()
        .iter()
        .filter_map(|a| {
            let (p, q) = (pi.position(a.tail), pi.position(a.head));
            (p > q).then(|| a.weight * (p - q) as Weight)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Ordering;

    // vertices 1..6 of the small six-vertex example, shifted to 0-based
    fn example_cut_graph() -> Digraph {
        Digraph::unweighted(6, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (5, 2), (4, 1)]).unwrap()
    }

    fn path(n: usize) -> Digraph {
        Digraph::unweighted(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle3() -> Digraph {
        Digraph::unweighted(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn backward_weight_examples() {
        let id3 = Ordering::identity(3);
        assert_eq!(backward_weight(&cycle3(), &id3), 1);
        assert_eq!(backward_weight(&path(5), &Ordering::identity(5)), 0);
        assert_eq!(backward_weight(&example_cut_graph(), &Ordering::identity(6)), 2);
    }

    #[test]
    fn cut_at_examples() {
        let g = example_cut_graph();
        let id = Ordering::identity(6);
        assert_eq!(cut_at(&g, &id, 1), (vec![], 0));
        let (arcs, w) = cut_at(&g, &id, 3);
        let pairs: Vec<_> = arcs.iter().map(|a| (a.tail, a.head)).collect();
        assert_eq!(pairs, vec![(4, 1), (5, 2)]);
        assert_eq!(w, 2);
        let single = Digraph::unweighted(2, [(0, 1)]).unwrap();
        assert_eq!(cut_at(&single, &Ordering::identity(2), 1).1, 0);
    }

    #[test]
    fn cutwidth_examples() {
        assert_eq!(cutwidth_of(&path(6), &Ordering::identity(6)), 0);
        assert_eq!(cutwidth_of(&cycle3(), &Ordering::identity(3)), 1);
        let g = example_cut_graph();
        assert_eq!(cut_profile(&g, &Ordering::identity(6)), vec![0, 1, 2, 2, 1]);
        assert_eq!(cutwidth_of(&g, &Ordering::identity(6)), 2);
    }

    #[test]
    fn ola_examples() {
        assert_eq!(ola_of(&path(6), &Ordering::identity(6)), 0);
        let g = example_cut_graph();
        assert_eq!(ola_of(&g, &Ordering::identity(6)), 6);
        assert_eq!(backward_stretch(&g, &Ordering::identity(6)), 6);
        let edge = Digraph::undirected(4, [(0, 1, 1)]).unwrap();
        let pi = Ordering::from_positions(vec![1, 4, 2, 3]).unwrap();
        assert_eq!(ola_of(&edge, &pi), 3);
    }

    #[test]
    fn dpw_examples() {
        assert_eq!(dpw_of(&path(5), &Ordering::identity(5)), 0);
        let back = Digraph::unweighted(2, [(1, 0)]).unwrap();
        assert_eq!(dpw_of(&back, &Ordering::identity(2)), 1);
        assert_eq!(dpw_of(&cycle3(), &Ordering::identity(3)), 1);
    }

    #[test]
    fn dpw_matches_definition_directly() {
        let g = example_cut_graph();
        let pi = Ordering::from_sequence(vec![5, 2, 4, 0, 1, 3]).unwrap();
        let n = g.n();
        let brute = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&v| {
                        pi.position(v) <= i
                            && g.in_arcs(v).iter().any(|&(u, _)| pi.position(u) > i)
                    })
                    .count() as Weight
            })
            .max()
            .unwrap();
        assert_eq!(dpw_of(&g, &pi), brute);
    }
}
