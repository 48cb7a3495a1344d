use std::fmt;

use crate::error::{Error, Result};

/// Arc weights are non-negative integers; unweighted graphs use weight 1.
pub type Weight = u64;

/// Largest universe for anything indexed by vertex subsets.
pub const MAX_SUBSET_VERTICES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub weight: Weight,
}

/// A simple directed graph on vertices `0..n` with integer arc weights.
///
/// Undirected graphs are stored as symmetric digraphs (each edge becomes
/// the two opposite arcs with the same weight) and carry a marker. With
/// that representation every evaluator counts an undirected edge exactly
/// once, because exactly one of its two arcs points backwards.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<(usize, Weight)>>,
    in_adj: Vec<Vec<(usize, Weight)>>,
    undirected: bool,
    weighted: bool,
    total_weight: Weight,
}

impl Digraph {
    /// Builds a directed graph. Antiparallel arcs are allowed, self-loops
    /// and duplicates are not.
    pub fn directed<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Weight)>,
    {
        let arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|(tail, head, weight)| Arc { tail, head, weight })
            .collect();
        let weighted = arcs.iter().any(|a| a.weight != 1);
        Self::build(n, arcs, false, weighted)
    }

    /// Unit-weight directed graph.
    pub fn unweighted<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::directed(n, arcs.into_iter().map(|(u, v)| (u, v, 1)))
    }

    /// Builds an undirected graph from an edge list; `{u, v}` and `{v, u}`
    /// name the same edge.
    pub fn undirected<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Weight)>,
    {
        let mut arcs = Vec::new();
        for (u, v, w) in edges {
            arcs.push(Arc {
                tail: u,
                head: v,
                weight: w,
            });
            arcs.push(Arc {
                tail: v,
                head: u,
                weight: w,
            });
        }
        let weighted = arcs.iter().any(|a| a.weight != 1);
        Self::build(n, arcs, true, weighted)
    }

    /// Overrides the weighted marker (used to keep an explicit `w` header
    /// on instances whose weights happen to all be 1).
    pub fn with_weighted_flag(mut self, weighted: bool) -> Self {
        self.weighted = weighted || self.arcs.iter().any(|a| a.weight != 1);
        self
    }

    fn build(n: usize, mut arcs: Vec<Arc>, undirected: bool, weighted: bool) -> Result<Self> {
        for a in &arcs {
            if a.tail >= n || a.head >= n {
                return Err(Error::InvalidGraph(format!(
                    "arc ({}, {}) has an endpoint outside 0..{n}",
                    a.tail, a.head
                )));
            }
            if a.tail == a.head {
                return Err(Error::InvalidGraph(format!("self-loop on {}", a.tail)));
            }
        }
        arcs.sort_unstable();
        for pair in arcs.windows(2) {
            if pair[0].tail == pair[1].tail && pair[0].head == pair[1].head {
                return Err(Error::InvalidGraph(format!(
                    "duplicate arc ({}, {})",
                    pair[0].tail, pair[0].head
                )));
            }
        }
        let mut total: Weight = 0;
        for a in &arcs {
            total = total.checked_add(a.weight).ok_or(Error::WeightOverflow)?;
        }
        // OLA values are bounded by total * (n - 1); the cut reduction doubles
        // weights. Reject anything where either could overflow.
        total
            .checked_mul(n.max(2) as Weight)
            .ok_or(Error::WeightOverflow)?;

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for a in &arcs {
            out_adj[a.tail].push((a.head, a.weight));
            in_adj[a.head].push((a.tail, a.weight));
        }
        Ok(Digraph {
            n,
            arcs,
            out_adj,
            in_adj,
            undirected,
            weighted,
            total_weight: total,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Stored arcs sorted by `(tail, head)`; undirected graphs list both
    /// orientations of every edge.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Number of arcs, or of edges for undirected graphs.
    pub fn m(&self) -> usize {
        if self.undirected {
            self.arcs.len() / 2
        } else {
            self.arcs.len()
        }
    }

    pub fn out_arcs(&self, v: usize) -> &[(usize, Weight)] {
        &self.out_adj[v]
    }

    pub fn in_arcs(&self, v: usize) -> &[(usize, Weight)] {
        &self.in_adj[v]
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Sum of all stored arc weights.
    pub fn total_weight(&self) -> Weight {
        self.total_weight
    }

    pub fn w_max(&self) -> Weight {
        self.arcs.iter().map(|a| a.weight).max().unwrap_or(0)
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<Weight> {
        self.out_adj
            .get(u)?
            .iter()
            .find(|&&(h, _)| h == v)
            .map(|&(_, w)| w)
    }

    /// Edges of an undirected graph as `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Weight)> + '_ {
        self.arcs
            .iter()
            .filter(|a| a.tail < a.head)
            .map(|a| (a.tail, a.head, a.weight))
    }

    /// Subgraph induced by `vertices`. New labels follow increasing old
    /// index, so the returned map is monotone.
    pub fn induced(&self, vertices: &[usize]) -> (Digraph, VertexMap) {
        let map = VertexMap::new(self.n, vertices);
        let arcs: Vec<Arc> = self
            .arcs
            .iter()
            .filter_map(|a| {
                let tail = map.to_new(a.tail)?;
                let head = map.to_new(a.head)?;
                Some(Arc {
                    tail,
                    head,
                    weight: a.weight,
                })
            })
            .collect();
        let g = Digraph::build(map.len(), arcs, self.undirected, self.weighted)
            .expect("induced subgraph of a valid graph is valid");
        (g, map)
    }

    pub fn induced_set(&self, set: VertexSet) -> (Digraph, VertexMap) {
        let vertices: Vec<usize> = set.iter().collect();
        self.induced(&vertices)
    }

    /// Same graph with the vertices renamed by `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        Ordering::from_sequence(perm.to_vec())?;
        let arcs = self.arcs.iter().map(|a| Arc {
            tail: perm[a.tail],
            head: perm[a.head],
            weight: a.weight,
        });
        Digraph::build(self.n, arcs.collect(), self.undirected, self.weighted)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("undirected", &self.undirected)
            .field("weighted", &self.weighted)
            .field(
                "arcs",
                &self
                    .arcs
                    .iter()
                    .map(|a| (a.tail, a.head, a.weight))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Relabeling between a graph and one of its induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl VertexMap {
    fn new(n: usize, vertices: &[usize]) -> Self {
        let mut new_to_old = vertices.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![None; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        VertexMap {
            new_to_old,
            old_to_new,
        }
    }

    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Translates a vertex sequence of the subgraph back to original labels.
    pub fn lift(&self, seq: &[usize]) -> Vec<usize> {
        seq.iter().map(|&v| self.new_to_old[v]).collect()
    }
}

/// A vertex ordering, stored as `position[v]` with positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    position: Vec<usize>,
}

impl Ordering {
    pub fn identity(n: usize) -> Self {
        Ordering {
            position: (1..=n).collect(),
        }
    }

    /// From a list of vertices in placement order (first vertex gets
    /// position 1).
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut position = vec![0; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if position[v] != 0 {
                return Err(Error::InvalidOrdering(format!("vertex {v} placed twice")));
            }
            position[v] = i + 1;
        }
        Ok(Ordering { position })
    }

    /// From `position[v]` values, which must be a permutation of `1..=n`.
    pub fn from_positions(position: Vec<usize>) -> Result<Self> {
        let n = position.len();
        let mut seen = vec![false; n + 1];
        for &p in &position {
            if p == 0 || p > n || seen[p] {
                return Err(Error::InvalidOrdering(format!(
                    "positions are not a permutation of 1..={n}"
                )));
            }
            seen[p] = true;
        }
        Ok(Ordering { position })
    }

    pub fn len(&self) -> usize {
        self.position.len()
    }

    pub fn is_empty(&self) -> bool {
        self.position.is_empty()
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Vertices in placement order.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.position.len()];
        for (v, &p) in self.position.iter().enumerate() {
            seq[p - 1] = v;
        }
        seq
    }

    pub fn reverse(&self) -> Self {
        let n = self.position.len();
        Ordering {
            position: self.position.iter().map(|&p| n + 1 - p).collect(),
        }
    }
}

/// A set of at most 32 vertices as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_SUBSET_VERTICES, "vertex set universe too large");
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::insert)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All `k`-subsets of `{0..n}` in increasing bitmask order (Gosper's hack).
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u64 = 1 << n;
    let mut next: Option<u64> = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit && !(k == 0 && cur == 0) {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            if succ < limit {
                Some(succ)
            } else {
                None
            }
        };
        Some(VertexSet(cur as u32))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn gosper_enumerates_every_subset_once() {
        for n in 0..=8 {
            for k in 0..=n {
                let sets: Vec<_> = subsets_of_size(n, k).collect();
                assert_eq!(sets.len(), binom(n, k), "n={n} k={k}");
                assert!(sets.iter().all(|s| s.len() == k));
                assert!(sets.windows(2).all(|w| w[0].0 < w[1].0));
            }
            assert_eq!(subsets_of_size(n, n + 1).count(), 0);
        }
        assert_eq!(subsets_of_size(32, 32).count(), 1);
        assert_eq!(subsets_of_size(32, 1).count(), 32);
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(Digraph::unweighted(2, [(0, 0)]).is_err());
        assert!(Digraph::unweighted(2, [(0, 1), (0, 1)]).is_err());
        assert!(Digraph::unweighted(2, [(0, 2)]).is_err());
        assert!(Digraph::unweighted(2, [(0, 1), (1, 0)]).is_ok());
        assert!(Digraph::undirected(2, [(0, 1, 1), (1, 0, 1)]).is_err());
    }

    #[test]
    fn weight_overflow_is_detected() {
        let err = Digraph::directed(3, [(0, 1, u64::MAX / 2), (1, 2, u64::MAX / 2)]);
        assert!(matches!(err, Err(Error::WeightOverflow)));
    }

    #[test]
    fn induced_three_cycle_pair_is_single_arc() {
        let g = Digraph::unweighted(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let (h, map) = g.induced(&[0, 1]);
        assert_eq!(h.n(), 2);
        assert_eq!(h.arcs().len(), 1);
        assert_eq!((h.arcs()[0].tail, h.arcs()[0].head), (0, 1));
        assert_eq!(map.to_old(1), 1);
        assert_eq!(map.to_new(2), None);
    }

    #[test]
    fn induced_on_all_vertices_is_identity() {
        let g = Digraph::unweighted(4, [(0, 1), (3, 2), (2, 0)]).unwrap();
        let (h, _) = g.induced(&[3, 2, 1, 0]);
        assert_eq!(h, g);
    }

    #[test]
    fn ordering_round_trips() {
        let o = Ordering::from_sequence(vec![2, 0, 1]).unwrap();
        assert_eq!(o.positions(), &[2, 3, 1]);
        assert_eq!(o.sequence(), vec![2, 0, 1]);
        assert_eq!(o.reverse().sequence(), vec![1, 0, 2]);
        assert!(Ordering::from_sequence(vec![0, 0]).is_err());
        assert!(Ordering::from_positions(vec![1, 3]).is_err());
    }

    #[test]
    fn vertex_set_lex_order() {
        let a: VertexSet = [0, 3].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert!(a.0 > b.0);
        assert_eq!(a.complement(4).to_vec(), vec![1, 2]);
    }
}
