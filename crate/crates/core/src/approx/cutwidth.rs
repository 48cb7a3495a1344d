use super::{solve_sides, ApproxReport, CutMode, TraceStep};
use crate::error::Result;
use crate::graph::Digraph;
use crate::report::{Factor, Objective};

/// Directed cutwidth via one balanced cut at `k = floor(n/2)`.
///
/// Placing `L` first leaves every arc from `L` to the rest forward, and the
/// arcs from the rest into `L` raise each cut by at most their total weight,
/// which itself is at most the optimum (times `1 + eps` for rounded cuts).
pub fn cutwidth_balanced_approx(g: &Digraph, mode: CutMode) -> Result<ApproxReport> {
    let n = g.n();
    if n <= 2 {
        return ApproxReport::exact(g, Objective::Cutwidth);
    }
    let (cut, cut_stats) = mode.solve(g, n / 2)?;
    let split = solve_sides(g, cut.set, Objective::Cutwidth)?;
    let lower_bound = mode
        .cut_lower_bound(cut.value)
        .max(split.left_opt)
        .max(split.right_opt);
    let factor = Factor::from_integer(1) + mode.slack();
    let mut out = ApproxReport::new(
        g,
        Objective::Cutwidth,
        split.seq,
        lower_bound,
        factor,
        cut_stats + split.stats,
    );
    out.cuts.push(cut);
    out.trace.push(TraceStep {
        level: 1,
        n,
        part_sizes: vec![cut.k, n - cut.k],
        exact_rest: true,
    });
    Ok(out)
}
