use serde::Serialize;

use super::params::ceil_tol;
use super::{solve_sides, ApproxReport, CutMode, TraceStep};
use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexSet, Weight};
use crate::kcut::CutSolution;
use crate::report::{Factor, Objective, Stats};

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "must lie in (0, 1)",
        })
    }
}

/// Cheapest cut over `k in lo..=hi`; ties keep the smaller `k`.
fn best_cut(g: &Digraph, lo: usize, hi: usize, mode: CutMode) -> Result<(CutSolution, Stats)> {
    let mut stats = Stats::default();
    let mut best: Option<CutSolution> = None;
    for k in lo..=hi {
        let (cut, s) = mode.solve(g, k)?;
        stats += s;
        if best.is_none_or(|b| cut.value < b.value) {
            best = Some(cut);
        }
    }
    Ok((best.expect("non-empty range"), stats))
}

/// Cut mode and smallest `k` for the arrangement algorithms. Weighted inputs
/// use a `(1 + alpha/2)`-approximate cut and a range widened to
/// `alpha n / 4`, unweighted ones an exact cut from `alpha n / 2`.
fn cut_setup(n: usize, alpha: f64, weighted: bool) -> (CutMode, usize) {
    if weighted {
        (
            CutMode::Rounded { eps: alpha / 2.0 },
            ceil_tol(alpha * n as f64 / 4.0),
        )
    } else {
        (CutMode::Exact, ceil_tol(alpha * n as f64 / 2.0))
    }
}

/// `opt >= positions * cut / slack`: the optimum sums the cuts at every
/// position of the range, and each is at least the minimum `(k, n-k)`-cut.
fn pigeonhole_bound(mode: CutMode, positions: usize, cut: Weight) -> Weight {
    mode.cut_lower_bound(cut * positions as Weight)
}

/// Directed linear arrangement within `1 + (n-1) * slack / c`, where `c` is
/// the number of split positions tried; for exact cuts this is at most
/// about `1 + 1/(1 - alpha)`.
///
/// The cut arcs are the only backward arcs between the two sides, each has
/// stretch at most `n - 1`, and the cheapest of the `c` cuts weighs at most
/// `opt / c`.
pub fn ola_directed_approx(g: &Digraph, alpha: f64, weighted: bool) -> Result<ApproxReport> {
    check_alpha(alpha)?;
    let n = g.n();
    let (mode, lo) = cut_setup(n, alpha, weighted);
    let hi = n.saturating_sub(lo);
    if n <= 2 || lo == 0 || lo > hi {
        return ApproxReport::exact(g, Objective::Ola);
    }
    let positions = hi - lo + 1;
    let (cut, cut_stats) = best_cut(g, lo, hi, mode)?;
    let split = solve_sides(g, cut.set, Objective::Ola)?;
    let lower_bound = pigeonhole_bound(mode, positions, cut.value).max(split.left_opt + split.right_opt);
    let factor = Factor::from_integer(1)
        + Factor::new((n - 1) as i64, positions as i64) * mode.slack();
    let mut out = ApproxReport::new(
        g,
        Objective::Ola,
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

/// Which side orderings are reversed before concatenation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Orientation {
    pub reverse_left: bool,
    pub reverse_right: bool,
}

/// Total length of the edges between the two sides when `left` is placed
/// before `right`.
pub fn crossing_length(g: &Digraph, left: &[usize], right: &[usize]) -> Weight {
    let (in_left, in_right) = side_lengths(g, left, right);
    in_left + in_right
}

// Each crossing edge is split at the boundary: the part inside `left` runs
// from its endpoint to position |left|, the part inside `right` from
// |left| + 1 onward.
fn side_lengths(g: &Digraph, left: &[usize], right: &[usize]) -> (Weight, Weight) {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in left.iter().enumerate() {
        pos[v] = i + 1;
    }
    for (i, &v) in right.iter().enumerate() {
        pos[v] = i + 1;
    }
    let left_set: VertexSet = left.iter().copied().collect();
    let (mut in_left, mut in_right) = (0, 0);
    for a in g.arcs() {
        if left_set.contains(a.tail) && !left_set.contains(a.head) {
            in_left += a.weight * (left.len() - pos[a.tail]) as Weight;
            in_right += a.weight * pos[a.head] as Weight;
        }
    }
    (in_left, in_right)
}

/// Picks, independently per side, the orientation giving the shorter total
/// crossing-edge length. Since the two sides contribute separately this
/// minimises over all four combinations. Ties keep the forward order.
pub fn choose_orientation(g: &Digraph, left: &[usize], right: &[usize]) -> Orientation {
    let rev = |s: &[usize]| s.iter().rev().copied().collect::<Vec<_>>();
    let (fwd_left, fwd_right) = side_lengths(g, left, right);
    let (rev_left, rev_right) = side_lengths(g, &rev(left), &rev(right));
    Orientation {
        reverse_left: rev_left < fwd_left,
        reverse_right: rev_right < fwd_right,
    }
}

/// Undirected linear arrangement within `1 + n * slack / (2c)`, at most
/// about `1 + 1/(2(1 - alpha))` for exact cuts.
///
/// As in the directed case, plus the reversal trick: reversing a side keeps
/// its own arrangement cost and lets each side choose the orientation in
/// which the crossing edges are shorter, so they average at most `n/2`.
pub fn ola_undirected_approx(g: &Digraph, alpha: f64, weighted: bool) -> Result<ApproxReport> {
    check_alpha(alpha)?;
    if !g.is_undirected() {
        return Err(Error::Unsupported("undirected arrangement needs an undirected graph"));
    }
    let n = g.n();
    let (mode, lo) = cut_setup(n, alpha, weighted);
    let hi = n / 2;
    if n <= 2 || lo == 0 || lo > hi {
        return ApproxReport::exact(g, Objective::Ola);
    }
    // a k-cut and an (n-k)-cut of an undirected graph are the same cuts, so
    // the range below n/2 stands for the symmetric range lo..=n-lo
    let positions = n + 1 - 2 * lo;
    let (cut, cut_stats) = best_cut(g, lo, hi, mode)?;
    let split = solve_sides(g, cut.set, Objective::Ola)?;
    let orientation = choose_orientation(g, &split.left_seq, &split.right_seq);
    let mut seq = split.left_seq.clone();
    if orientation.reverse_left {
        seq.reverse();
    }
    let mut right = split.right_seq.clone();
    if orientation.reverse_right {
        right.reverse();
    }
    seq.extend(right);

    let lower_bound = pigeonhole_bound(mode, positions, cut.value).max(split.left_opt + split.right_opt);
    let factor = Factor::from_integer(1)
        + Factor::new(n as i64, 2 * positions as i64) * mode.slack();
    let mut out = ApproxReport::new(
        g,
        Objective::Ola,
        seq,
        lower_bound,
        factor,
        cut_stats + split.stats,
    );
    out.cuts.push(cut);
    out.orientation = Some(orientation);
    out.trace.push(TraceStep {
        level: 1,
        n,
        part_sizes: vec![cut.k, n - cut.k],
        exact_rest: true,
    });
    Ok(out)
}
