//! Held-Karp style dynamic programs over vertex subsets.
//!
//! Every objective is solved by the same skeleton: `f(S)` is the best value
//! of an ordering of `S` placed as a prefix, obtained by choosing the vertex
//! `v` of `S` that is placed last:
//!
//! * feedback arc set: `f(S) = min_v f(S - v) + w(v -> S - v)`
//! * linear arrangement: `f(S) = min_v f(S - v) + crossing(S)`
//! * cutwidth: `f(S) = min_v max(f(S - v), crossing(S))`
//! * pathwidth: `f(S) = min_v max(f(S - v), boundary(S))`
//!
//! where `crossing(S)` is the weight of arcs entering `S` from outside and
//! `boundary(S)` counts vertices of `S` with an in-neighbour outside `S`.
//! Ties go to the smallest `v`, which makes reconstruction deterministic.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, Digraph, Ordering, VertexSet, Weight, MAX_SUBSET_VERTICES};
use crate::report::{Objective, SolveReport, Stats};

/// Largest universe for which a table indexed directly by bitmask is
/// allocated.
pub const DENSE_MAX_N: usize = 28;

/// Partial tables above this universe size use a hash map instead.
const SPARSE_ABOVE_N: usize = 22;

const NO_VERTEX: u8 = u8::MAX;

#[derive(Debug, Clone)]
enum Store {
    Dense { value: Vec<Weight>, last: Vec<u8> },
    Sparse(HashMap<u32, (Weight, u8)>),
}

/// Values and last-placed vertices for all subsets up to a cardinality cap.
#[derive(Debug, Clone)]
pub struct SubsetTable {
    objective: Objective,
    n: usize,
    size_cap: usize,
    store: Store,
    entries: u64,
}

impl SubsetTable {
    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size_cap(&self) -> usize {
        self.size_cap
    }

    /// Number of populated subsets, the empty set included.
    pub fn entries(&self) -> u64 {
        self.entries
    }

    fn get(&self, set: VertexSet) -> Option<(Weight, u8)> {
        if set.len() > self.size_cap {
            return None;
        }
        match &self.store {
            Store::Dense { value, last } => {
                let i = set.bits() as usize;
                (value[i] != Weight::MAX).then(|| (value[i], last[i]))
            }
            Store::Sparse(map) => map.get(&set.bits()).copied(),
        }
    }

    fn put(&mut self, set: VertexSet, value: Weight, last: u8) {
        match &mut self.store {
            Store::Dense { value: vs, last: ls } => {
                vs[set.bits() as usize] = value;
                ls[set.bits() as usize] = last;
            }
            Store::Sparse(map) => {
                map.insert(set.bits(), (value, last));
            }
        }
        self.entries += 1;
    }

    pub fn value(&self, set: VertexSet) -> Option<Weight> {
        self.get(set).map(|(v, _)| v)
    }

    pub fn last_vertex(&self, set: VertexSet) -> Option<usize> {
        self.get(set)
            .and_then(|(_, l)| (l != NO_VERTEX).then_some(l as usize))
    }

    /// An optimal placement of `set`, reconstructed from `last_vertex`.
    pub fn sequence(&self, set: VertexSet) -> Option<Vec<usize>> {
        let mut seq = Vec::with_capacity(set.len());
        let mut rest = set;
        while !rest.is_empty() {
            let v = self.last_vertex(rest)?;
            seq.push(v);
            rest = rest.remove(v);
        }
        seq.reverse();
        Some(seq)
    }
}

/// Bitmask adjacency for graphs with at most 32 vertices.
pub(crate) struct Adjacency<'g> {
    g: &'g Digraph,
    out_mask: Vec<u32>,
    in_mask: Vec<u32>,
    unit: bool,
}

impl<'g> Adjacency<'g> {
    pub(crate) fn new(g: &'g Digraph) -> Self {
        let mut out_mask = vec![0u32; g.n()];
        let mut in_mask = vec![0u32; g.n()];
        for a in g.arcs() {
            out_mask[a.tail] |= 1 << a.head;
            in_mask[a.head] |= 1 << a.tail;
        }
        Adjacency {
            g,
            out_mask,
            in_mask,
            unit: g.arcs().iter().all(|a| a.weight == 1),
        }
    }

    /// Weight of arcs from `v` into `set`.
    pub(crate) fn out_into(&self, v: usize, set: VertexSet) -> Weight {
        if self.unit {
            (self.out_mask[v] & set.bits()).count_ones() as Weight
        } else {
            self.g
                .out_arcs(v)
                .iter()
                .filter(|&&(h, _)| set.contains(h))
                .map(|&(_, w)| w)
                .sum()
        }
    }

    /// Weight of arcs from `set` into `v`.
    pub(crate) fn in_from(&self, v: usize, set: VertexSet) -> Weight {
        if self.unit {
            (self.in_mask[v] & set.bits()).count_ones() as Weight
        } else {
            self.g
                .in_arcs(v)
                .iter()
                .filter(|&&(t, _)| set.contains(t))
                .map(|&(_, w)| w)
                .sum()
        }
    }

    /// Weight of arcs entering `set` from the rest of the graph.
    pub(crate) fn crossing(&self, set: VertexSet) -> Weight {
        let outside = set.complement(self.g.n());
        set.iter().map(|v| self.in_from(v, outside)).sum()
    }

    /// Vertices of `set` with an in-neighbour outside `set`.
    pub(crate) fn boundary(&self, set: VertexSet) -> Weight {
        let outside = !set.bits();
        set.iter()
            .filter(|&v| self.in_mask[v] & outside != 0)
            .count() as Weight
    }
}

fn check_universe(n: usize, size_cap: usize) -> Result<()> {
    if n > MAX_SUBSET_VERTICES {
        return Err(Error::TooLarge {
            what: "subset table",
            n,
            limit: MAX_SUBSET_VERTICES,
        });
    }
    if size_cap > n {
        return Err(Error::InvalidParameter {
            name: "size_cap",
            value: size_cap as f64,
            reason: "exceeds the number of vertices",
        });
    }
    if size_cap == n && n > DENSE_MAX_N {
        return Err(Error::TooLarge {
            what: "full subset table",
            n,
            limit: DENSE_MAX_N,
        });
    }
    Ok(())
}

/// Runs the shared recurrence. `set_cost` is called exactly once per subset,
/// in order of increasing size; `step` combines `f(S - v)` with the last
/// vertex `v` and that cost.
fn fill<C, K>(n: usize, size_cap: usize, objective: Objective, mut set_cost: C, step: K) -> SubsetTable
where
    C: FnMut(VertexSet) -> Weight,
    K: Fn(Weight, usize, VertexSet, Weight) -> Weight,
{
    let store = if size_cap < n && n > SPARSE_ABOVE_N {
        Store::Sparse(HashMap::new())
    } else {
        Store::Dense {
            value: vec![Weight::MAX; 1usize << n],
            last: vec![NO_VERTEX; 1usize << n],
        }
    };
    let mut table = SubsetTable {
        objective,
        n,
        size_cap,
        store,
        entries: 0,
    };
    table.put(VertexSet::EMPTY, 0, NO_VERTEX);
    for size in 1..=size_cap {
        for set in subsets_of_size(n, size) {
            let cost = set_cost(set);
            let mut best = Weight::MAX;
            let mut best_v = NO_VERTEX;
            for v in set.iter() {
                let prev = table
                    .value(set.remove(v))
                    .expect("smaller subsets are filled first");
                let cand = step(prev, v, set, cost);
                if cand < best {
                    best = cand;
                    best_v = v as u8;
                }
            }
            table.put(set, best, best_v);
        }
    }
    table
}

/// `crossing(S)` for every subset, built from `S` minus its lowest vertex.
fn crossing_all(adj: &Adjacency<'_>, n: usize) -> Vec<Weight> {
    let mut crossing = vec![0 as Weight; 1usize << n];
    for bits in 1u64..(1u64 << n) {
        let set = VertexSet(bits as u32);
        let v = bits.trailing_zeros() as usize;
        let rest = set.remove(v);
        let outside = set.complement(n);
        crossing[bits as usize] =
            crossing[rest.bits() as usize] + adj.in_from(v, outside) - adj.out_into(v, rest);
    }
    crossing
}

/// Minimum feedback arc set weight of `G[S]` for every `|S| <= size_cap`.
///
/// The backward arcs of an ordering of `S` depend only on `S`, so one pass
/// answers all induced subgraphs at once.
pub fn fas_table(g: &Digraph, size_cap: usize) -> Result<SubsetTable> {
    check_universe(g.n(), size_cap)?;
    let adj = Adjacency::new(g);
    Ok(fill(
        g.n(),
        size_cap,
        Objective::Fas,
        |_| 0,
        |prev, v, set, _| prev + adj.out_into(v, set.remove(v)),
    ))
}

fn ola_table(g: &Digraph) -> Result<SubsetTable> {
    check_universe(g.n(), g.n())?;
    let adj = Adjacency::new(g);
    let crossing = crossing_all(&adj, g.n());
    Ok(fill(
        g.n(),
        g.n(),
        Objective::Ola,
        |set| crossing[set.bits() as usize],
        |prev, _, _, cost| prev + cost,
    ))
}

fn cutwidth_table(g: &Digraph) -> Result<SubsetTable> {
    check_universe(g.n(), g.n())?;
    let adj = Adjacency::new(g);
    let crossing = crossing_all(&adj, g.n());
    Ok(fill(
        g.n(),
        g.n(),
        Objective::Cutwidth,
        |set| crossing[set.bits() as usize],
        |prev, _, _, cost| prev.max(cost),
    ))
}

/// Best max-prefix-boundary for every `|S| <= size_cap`, where the boundary
/// is measured against the whole of `g`: `value(S)` is what an ordering of
/// `S` achieves when placed as a prefix of a global ordering, whatever
/// follows it.
pub fn dpw_prefix_table(g: &Digraph, size_cap: usize) -> Result<SubsetTable> {
    check_universe(g.n(), size_cap)?;
    let adj = Adjacency::new(g);
    Ok(fill(
        g.n(),
        size_cap,
        Objective::Dpw,
        |set| adj.boundary(set),
        |prev, _, _, cost| prev.max(cost),
    ))
}

fn report_from_table(g: &Digraph, table: &SubsetTable) -> SolveReport {
    let all = g.all_vertices();
    let value = table.value(all).expect("full table");
    let seq = table.sequence(all).expect("full table");
    let ordering = Ordering::from_sequence(seq).expect("reconstruction is a permutation");
    debug_assert_eq!(table.objective().evaluate(g, &ordering), value);
    SolveReport {
        objective: table.objective(),
        value,
        ordering,
        lower_bound: Some(value),
        stats: Stats {
            table_entries: table.entries(),
            ..Stats::default()
        },
    }
}

pub fn fas_exact(g: &Digraph) -> Result<SolveReport> {
    Ok(report_from_table(g, &fas_table(g, g.n())?))
}

pub fn ola_exact(g: &Digraph) -> Result<SolveReport> {
    Ok(report_from_table(g, &ola_table(g)?))
}

pub fn cutwidth_exact(g: &Digraph) -> Result<SolveReport> {
    Ok(report_from_table(g, &cutwidth_table(g)?))
}

/// Exact directed pathwidth (weights ignored) in `O*(2^n)`.
pub fn dpw_exact(g: &Digraph) -> Result<SolveReport> {
    Ok(report_from_table(g, &dpw_prefix_table(g, g.n())?))
}

pub fn exact(g: &Digraph, objective: Objective) -> Result<SolveReport> {
    match objective {
        Objective::Fas => fas_exact(g),
        Objective::Cutwidth => cutwidth_exact(g),
        Objective::Ola => ola_exact(g),
        Objective::Dpw => dpw_exact(g),
    }
}
