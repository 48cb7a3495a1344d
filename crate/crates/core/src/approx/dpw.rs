use itertools::Itertools;

use super::params::{round_half_up, solve_pw_alpha};
use super::{ApproxReport, TraceStep};
use crate::error::Result;
use crate::graph::{Digraph, VertexSet};
use crate::report::{Factor, Objective};
use crate::subset_dp;

/// Directed pathwidth within a factor 2.
///
/// A prefix `V'` of `round(alpha n)` vertices is chosen, together with its
/// internal order, to minimise the largest number of prefix vertices that
/// still wait for an in-neighbour anywhere later. That value never exceeds
/// the optimum, and neither does the pathwidth of `G[V - V']`, which is
/// solved exactly and placed after the prefix. Weights are ignored.
pub fn dpw_2approx(g: &Digraph) -> Result<ApproxReport> {
    let n = g.n();
    let alpha = solve_pw_alpha();
    let m = round_half_up(alpha * n as f64);
    if n <= 2 || m == 0 || m >= n {
        return ApproxReport::exact(g, Objective::Dpw);
    }
    let table = subset_dp::dpw_prefix_table(g, m)?;
    let (prefix, prefix_value) = (0..n)
        .combinations(m)
        .map(|c| {
            let set: VertexSet = c.into_iter().collect();
            (set, table.value(set).expect("table covers size m"))
        })
        .reduce(|b, c| if c.1 < b.1 { c } else { b })
        .expect("0 < m < n");

    let (h, map) = g.induced_set(prefix.complement(n));
    let rest = subset_dp::dpw_exact(&h)?;
    let mut seq = table.sequence(prefix).expect("table covers size m");
    seq.extend(map.lift(&rest.ordering.sequence()));

    let mut stats = rest.stats;
    stats.table_entries += table.entries();
    let mut out = ApproxReport::new(
        g,
        Objective::Dpw,
        seq,
        prefix_value.max(rest.value),
        Factor::from_integer(2),
        stats,
    );
    out.trace.push(TraceStep {
        level: 1,
        n,
        part_sizes: vec![m, n - m],
        exact_rest: true,
    });
    Ok(out)
}
