//! Directed minimum `(k, n-k)`-cut: choose `L` with `|L| = k` minimising the
//! weight of arcs from `V - L` into `L`.
//!
//! The exact solver splits `V` into three fixed parts `V1, V2, V3`, guesses
//! how many vertices of `L` fall into each part, and builds an auxiliary
//! tripartite graph with one node per candidate subset of each part. Edge
//! weights are set up so that the weight of every triangle is twice the cut
//! value of the union of its three subsets; the minimum-weight triangle over
//! all guesses is therefore an optimal cut.

use std::cmp::Ordering as CmpOrdering;
use std::ops::Add;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexSet, Weight, MAX_SUBSET_VERTICES};
use crate::report::Stats;
use crate::subset_dp::Adjacency;

/// Subset-enumeration budget for [`dkmc_oracle`].
pub const ORACLE_MAX_SUBSETS: u128 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutSolution {
    pub set: VertexSet,
    pub k: usize,
    pub value: Weight,
}

impl CutSolution {
    fn better_than(&self, other: &CutSolution) -> bool {
        match self.value.cmp(&other.value) {
            CmpOrdering::Less => true,
            CmpOrdering::Greater => false,
            CmpOrdering::Equal => self.set.lex_cmp(other.set) == CmpOrdering::Less,
        }
    }
}

/// Weight of arcs from `V - set` into `set`.
pub fn cut_value(g: &Digraph, set: VertexSet) -> Weight {
    g.arcs()
        .iter()
        .filter(|a| set.contains(a.head) && !set.contains(a.tail))
        .map(|a| a.weight)
        .sum()
}

/// Deterministic tripartition by vertex index with sizes
/// `ceil(n/3)`, `ceil((n - ceil(n/3)) / 2)` and the remainder.
pub fn tripartition(n: usize) -> [Vec<usize>; 3] {
    let a = n.div_ceil(3);
    let b = (n - a).div_ceil(2);
    [(0..a).collect(), (a..a + b).collect(), (a + b..n).collect()]
}

/// Weight type usable by the triangle search.
pub trait TriangleWeight: Copy + PartialOrd + Add<Output = Self> {}

impl TriangleWeight for Weight {}
impl TriangleWeight for f64 {}

/// Tripartite auxiliary graph for one choice of `(k1, k2, k3)`.
///
/// Group `i` holds every `k_i`-subset of part `i` in lexicographic order.
/// The edge between `A` (group `i`) and `B` (group `j`) carries
/// `2 * (w(V_i - A -> B) + w(V_j - B -> A)) + delta(A) + delta(B)`, where
/// `delta(A) = w(V_i - A -> A)`. Weights are doubled so they stay integral.
#[derive(Debug, Clone)]
pub struct AuxGraph<W = Weight> {
    nodes: [Vec<VertexSet>; 3],
    delta: [Vec<Weight>; 3],
    // row-major, indexed [a * len(j) + b] for the pair (i, j), i < j
    edges: [Vec<W>; 3],
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl AuxGraph<Weight> {
    pub fn build(g: &Digraph, parts: &[Vec<usize>; 3], sizes: [usize; 3]) -> Self {
        let adj = Adjacency::new(g);
        let part_sets: [VertexSet; 3] =
            std::array::from_fn(|i| parts[i].iter().copied().collect());
        let nodes: [Vec<VertexSet>; 3] = std::array::from_fn(|i| {
            parts[i]
                .iter()
                .copied()
                .combinations(sizes[i])
                .map(|c| c.into_iter().collect())
                .collect()
        });
        let into = |from: VertexSet, to: VertexSet| -> Weight {
            to.iter().map(|v| adj.in_from(v, from)).sum()
        };
        let rest = |i: usize, s: VertexSet| VertexSet(part_sets[i].bits() & !s.bits());
        let delta: [Vec<Weight>; 3] = std::array::from_fn(|i| {
            nodes[i].iter().map(|&s| into(rest(i, s), s)).collect()
        });
        let edges: [Vec<Weight>; 3] = std::array::from_fn(|p| {
            let (i, j) = PAIRS[p];
            let mut w = Vec::with_capacity(nodes[i].len() * nodes[j].len());
            for (a, &sa) in nodes[i].iter().enumerate() {
                for (b, &sb) in nodes[j].iter().enumerate() {
                    let cross = into(rest(i, sa), sb) + into(rest(j, sb), sa);
                    w.push(2 * cross + delta[i][a] + delta[j][b]);
                }
            }
            w
        });
        AuxGraph {
            nodes,
            delta,
            edges,
        }
    }
}

impl<W: Copy> AuxGraph<W> {
    pub fn group_len(&self, group: usize) -> usize {
        self.nodes[group].len()
    }

    pub fn node_set(&self, group: usize, node: usize) -> VertexSet {
        self.nodes[group][node]
    }

    /// Internal cut weight `w(V_i - A -> A)` of a node (not doubled).
    pub fn node_delta(&self, group: usize, node: usize) -> Weight {
        self.delta[group][node]
    }

    /// Stored weight of the edge between `a` in group `i` and `b` in group
    /// `j`, `i != j`.
    pub fn edge_weight(&self, i: usize, a: usize, j: usize, b: usize) -> W {
        let (i, a, j, b) = if i < j { (i, a, j, b) } else { (j, b, i, a) };
        let p = PAIRS.iter().position(|&pr| pr == (i, j)).expect("distinct groups");
        self.edges[p][a * self.nodes[j].len() + b]
    }

    pub fn union(&self, t: [usize; 3]) -> VertexSet {
        self.nodes[0][t[0]]
            .union(self.nodes[1][t[1]])
            .union(self.nodes[2][t[2]])
    }

    pub fn map_weights<U: Copy>(&self, mut f: impl FnMut(W) -> U) -> AuxGraph<U> {
        AuxGraph {
            nodes: self.nodes.clone(),
            delta: self.delta.clone(),
            edges: std::array::from_fn(|p| self.edges[p].iter().map(|&w| f(w)).collect()),
        }
    }
}

impl<W: TriangleWeight> AuxGraph<W> {
    pub fn triangle_weight(&self, t: [usize; 3]) -> W {
        self.edge_weight(0, t[0], 1, t[1])
            + self.edge_weight(0, t[0], 2, t[2])
            + self.edge_weight(1, t[1], 2, t[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<W> {
    pub nodes: [usize; 3],
    pub weight: W,
    /// Triangles whose weight was fully evaluated.
    pub examined: u64,
}

/// Minimum-weight triangle, lexicographically least node triple among ties.
/// Relies on non-negative weights to skip pairs that cannot improve.
pub fn min_weight_triangle<W: TriangleWeight>(h: &AuxGraph<W>) -> Result<Triangle<W>> {
    let [s0, s1, s2] = [h.group_len(0), h.group_len(1), h.group_len(2)];
    if s0 == 0 || s1 == 0 || s2 == 0 {
        return Err(Error::InvalidGraph("auxiliary graph has an empty group".into()));
    }
    let (e01, e02, e12) = (&h.edges[0], &h.edges[1], &h.edges[2]);
    let mut best: Option<([usize; 3], W)> = None;
    let mut examined = 0u64;
    for a in 0..s0 {
        let row02 = &e02[a * s2..(a + 1) * s2];
        for b in 0..s1 {
            let wab = e01[a * s1 + b];
            if let Some((_, bw)) = best {
                if wab >= bw {
                    continue;
                }
            }
            let row12 = &e12[b * s2..(b + 1) * s2];
            for c in 0..s2 {
                examined += 1;
                let t = wab + row02[c] + row12[c];
                if best.is_none_or(|(_, bw)| t < bw) {
                    best = Some(([a, b, c], t));
                }
            }
        }
    }
    let (nodes, weight) = best.expect("non-empty groups");
    Ok(Triangle {
        nodes,
        weight,
        examined,
    })
}

fn check_k(g: &Digraph, k: usize) -> Result<()> {
    if g.n() > MAX_SUBSET_VERTICES {
        return Err(Error::TooLarge {
            what: "directed (k, n-k)-cut",
            n: g.n(),
            limit: MAX_SUBSET_VERTICES,
        });
    }
    if k > g.n() {
        return Err(Error::KOutOfRange { k, n: g.n() });
    }
    Ok(())
}

/// Feasible `(k1, k2, k3)` splits in lexicographic order.
fn cells(parts: &[Vec<usize>; 3], k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for k1 in 0..=k.min(parts[0].len()) {
        for k2 in 0..=(k - k1).min(parts[1].len()) {
            let k3 = k - k1 - k2;
            if k3 <= parts[2].len() {
                out.push([k1, k2, k3]);
            }
        }
    }
    out
}

/// Reduces per-cell winners in cell order: smaller value first, then the
/// lexicographically smaller set.
fn reduce_cells(results: Vec<(CutSolution, Stats)>) -> (CutSolution, Stats) {
    let mut stats = Stats::default();
    let mut best: Option<CutSolution> = None;
    for (sol, s) in results {
        stats += s;
        if best.is_none_or(|b| sol.better_than(&b)) {
            best = Some(sol);
        }
    }
    (best.expect("at least one feasible cell"), stats)
}

/// Exact minimum directed `(k, n-k)`-cut through the triangle reduction.
pub fn dkmc_exact(g: &Digraph, k: usize) -> Result<(CutSolution, Stats)> {
    check_k(g, k)?;
    let parts = tripartition(g.n());
    let results: Vec<(CutSolution, Stats)> = cells(&parts, k)
        .into_par_iter()
        .map(|sizes| {
            let h = AuxGraph::build(g, &parts, sizes);
            let tri = min_weight_triangle(&h).expect("groups are never empty");
            debug_assert_eq!(tri.weight % 2, 0);
            let sol = CutSolution {
                set: h.union(tri.nodes),
                k,
                value: tri.weight / 2,
            };
            let stats = Stats {
                triangles: tri.examined,
                cut_cells: 1,
                ..Stats::default()
            };
            (sol, stats)
        })
        .collect();
    Ok(reduce_cells(results))
}

/// Smallest power of `1 + eps/3` that is at least `w` (and 0 for 0).
pub(crate) fn round_up_to_power(w: Weight, ln_base: f64) -> f64 {
    if w == 0 {
        return 0.0;
    }
    let target = w as f64;
    let mut j = (target.ln() / ln_base).ceil().max(0.0);
    while (j * ln_base).exp() < target {
        j += 1.0;
    }
    while j > 0.0 && ((j - 1.0) * ln_base).exp() >= target {
        j -= 1.0;
    }
    (j * ln_base).exp()
}

/// `(1 + eps)`-approximate cut for large weights: every auxiliary edge weight
/// is rounded up to a power of `1 + eps/3` before the triangle search, and
/// the selected set is reported with its true cut value.
pub fn dkmc_weighted_approx(g: &Digraph, k: usize, eps: f64) -> Result<(CutSolution, Stats)> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: eps,
            reason: "must be a positive finite number",
        });
    }
    check_k(g, k)?;
    let ln_base = (eps / 3.0).ln_1p();
    let parts = tripartition(g.n());
    let results: Vec<(CutSolution, Stats)> = cells(&parts, k)
        .into_par_iter()
        .map(|sizes| {
            let h = AuxGraph::build(g, &parts, sizes);
            let rounded = h.map_weights(|w| round_up_to_power(w, ln_base));
            let tri = min_weight_triangle(&rounded).expect("groups are never empty");
            let set = h.union(tri.nodes);
            let sol = CutSolution {
                set,
                k,
                value: cut_value(g, set),
            };
            let stats = Stats {
                triangles: tri.examined,
                cut_cells: 1,
                ..Stats::default()
            };
            (sol, stats)
        })
        .collect();
    Ok(reduce_cells(results))
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Tries every `k`-subset; returns the lexicographically least optimum.
pub fn dkmc_oracle(g: &Digraph, k: usize) -> Result<CutSolution> {
    check_k(g, k)?;
    let count = binomial(g.n(), k);
    if count > ORACLE_MAX_SUBSETS {
        return Err(Error::TooManySubsets {
            what: "cut oracle",
            count,
            limit: ORACLE_MAX_SUBSETS,
        });
    }
    let mut best: Option<CutSolution> = None;
    for combo in (0..g.n()).combinations(k) {
        let set: VertexSet = combo.into_iter().collect();
        let value = cut_value(g, set);
        if best.is_none_or(|b| value < b.value) {
            best = Some(CutSolution { set, k, value });
        }
    }
    Ok(best.expect("at least one subset"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_random;

    fn cycle3() -> Digraph {
        Digraph::unweighted(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn detour_graph() -> Digraph {
        Digraph::unweighted(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 2)]).unwrap()
    }

    #[test]
    fn tripartition_sizes() {
        let sizes = |n| tripartition(n).map(|p| p.len());
        assert_eq!(sizes(0), [0, 0, 0]);
        assert_eq!(sizes(1), [1, 0, 0]);
        assert_eq!(sizes(2), [1, 1, 0]);
        assert_eq!(sizes(7), [3, 2, 2]);
        assert_eq!(sizes(8), [3, 3, 2]);
        assert_eq!(sizes(15), [5, 5, 5]);
    }

    #[test]
    fn exact_examples() {
        let path = Digraph::unweighted(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (sol, _) = dkmc_exact(&path, 2).unwrap();
        assert_eq!((sol.set.to_vec(), sol.value), (vec![0, 1], 0));
        assert_eq!(dkmc_exact(&cycle3(), 1).unwrap().0.value, 1);
        assert_eq!(dkmc_exact(&detour_graph(), 3).unwrap().0.value, 1);
        assert!(matches!(dkmc_exact(&cycle3(), 4), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn extreme_k_are_free() {
        let g = gen_random(7, 0.6, 1..=9, 5);
        let (lo, _) = dkmc_exact(&g, 0).unwrap();
        assert_eq!((lo.set, lo.value), (VertexSet::EMPTY, 0));
        let (hi, _) = dkmc_exact(&g, 7).unwrap();
        assert_eq!((hi.set, hi.value), (VertexSet::full(7), 0));
    }

    #[test]
    fn triangle_on_singleton_groups() {
        let g = cycle3();
        let parts = tripartition(3);
        let h = AuxGraph::build(&g, &parts, [1, 0, 0]);
        assert_eq!([h.group_len(0), h.group_len(1), h.group_len(2)], [1, 1, 1]);
        let tri = min_weight_triangle(&h).unwrap();
        assert_eq!(tri.nodes, [0, 0, 0]);
        // L = {vertex 1}: the arc 3 -> 1 enters it; stored weight is doubled
        assert_eq!(tri.weight, 2);
    }

    #[test]
    fn zero_weights_pick_least_triple() {
        let g = Digraph::unweighted(6, []).unwrap();
        let h = AuxGraph::build(&g, &tripartition(6), [1, 1, 1]);
        let tri = min_weight_triangle(&h).unwrap();
        assert_eq!((tri.nodes, tri.weight), ([0, 0, 0], 0));
    }

    #[test]
    fn every_triangle_is_twice_its_cut() {
        for seed in 0..6 {
            let g = gen_random(7, 0.5, 1..=20, seed);
            let parts = tripartition(7);
            for k in 0..=7 {
                for sizes in cells(&parts, k) {
                    let h = AuxGraph::build(&g, &parts, sizes);
                    for a in 0..h.group_len(0) {
                        for b in 0..h.group_len(1) {
                            for c in 0..h.group_len(2) {
                                let t = [a, b, c];
                                assert_eq!(h.triangle_weight(t), 2 * cut_value(&g, h.union(t)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exact_matches_oracle_including_witness() {
        for seed in 0..40 {
            let n = 5 + (seed as usize % 6);
            let g = gen_random(n, 0.45, 1..=1000, seed);
            for k in 0..=n {
                let (sol, _) = dkmc_exact(&g, k).unwrap();
                let oracle = dkmc_oracle(&g, k).unwrap();
                assert_eq!(sol, oracle, "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn rounding_stays_within_factor() {
        for (i, &w) in [1u64, 2, 3, 7, 1000, 123_456_789, 1 << 40].iter().enumerate() {
            for eps in [1e-9, 0.1, 1.0, 3.0] {
                let ln_base = (eps / 3.0f64).ln_1p();
                let r = round_up_to_power(w, ln_base);
                assert!(r >= w as f64, "case {i}");
                assert!(r < w as f64 * (1.0 + eps / 3.0) * (1.0 + 1e-12), "case {i}");
            }
        }
        assert_eq!(round_up_to_power(0, 0.1), 0.0);
    }

    #[test]
    fn weighted_approx_examples() {
        let path = Digraph::directed(5, [(0, 1, 7), (1, 2, 9), (2, 3, 1), (3, 4, 4)]).unwrap();
        for eps in [0.1, 1.0, 5.0] {
            assert_eq!(dkmc_weighted_approx(&path, 2, eps).unwrap().0.value, 0);
        }
        assert!(dkmc_weighted_approx(&path, 2, 0.0).is_err());
        assert!(dkmc_weighted_approx(&path, 2, f64::NAN).is_err());

        let g = gen_random(8, 0.5, 1..=1, 11);
        for k in 0..=8 {
            let exact = dkmc_oracle(&g, k).unwrap().value;
            assert_eq!(dkmc_weighted_approx(&g, k, 0.5).unwrap().0.value, exact);
        }
    }

    #[test]
    fn oracle_guard() {
        let g = Digraph::unweighted(32, []).unwrap();
        assert!(matches!(dkmc_oracle(&g, 16), Err(Error::TooManySubsets { .. })));
    }
}
