use itertools::Itertools;
use rayon::prelude::*;

use super::params::{boost_ladder, ceil_tol, round_half_up, BoostParams};
use super::{solve_sides, ApproxReport, CutMode, TraceStep};
use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexSet, Weight};
use crate::report::{Factor, Objective, Stats};
use crate::subset_dp::{self, Adjacency};

/// Feedback arc set via one balanced cut at `k = floor(n/2)`.
///
/// With an exact cut the cut weight and the two side optima are each a
/// lower bound, so the result is within 2 of optimal; with a
/// `(1 + eps)`-approximate cut the bound becomes `2 + eps`.
pub fn fas_balanced_approx(g: &Digraph, mode: CutMode) -> Result<ApproxReport> {
    let n = g.n();
    if n <= 2 {
        return ApproxReport::exact(g, Objective::Fas);
    }
    let (cut, cut_stats) = mode.solve(g, n / 2)?;
    let split = solve_sides(g, cut.set, Objective::Fas)?;
    let lower_bound = mode
        .cut_lower_bound(cut.value)
        .max(split.left_opt + split.right_opt);
    let factor = Factor::from_integer(1) + mode.slack();
    let mut out = ApproxReport::new(
        g,
        Objective::Fas,
        split.seq,
        lower_bound,
        factor,
        cut_stats + split.stats,
    );
    debug_assert_eq!(out.value(), cut.value + split.left_opt + split.right_opt);
    out.cuts.push(cut);
    out.trace.push(TraceStep {
        level: 1,
        n,
        part_sizes: vec![cut.k, n - cut.k],
        exact_rest: true,
    });
    Ok(out)
}

/// Tuning of [`fas_scheme`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    /// Running-time margin assumed for level 1.
    pub delta_1: f64,
    /// Forces the prefix fraction at every level instead of deriving it
    /// from the ladder. The approximation guarantee holds for any value in
    /// `(0, 1)`; only the running time depends on it.
    pub alpha_override: Option<f64>,
    /// Requests with `level * n` above this are rejected.
    pub budget: usize,
}

impl Default for SchemeConfig {
    fn default() -> Self {
        SchemeConfig {
            delta_1: 0.25,
            alpha_override: None,
            budget: 48,
        }
    }
}

/// Level needed for a `(1 + eps)` guarantee: `ceil(1/eps)` unweighted,
/// `ceil(2/eps)` weighted.
pub fn scheme_level(eps: f64, weighted: bool) -> Result<usize> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: eps,
            reason: "must be a positive finite number",
        });
    }
    let num = if weighted { 2.0 } else { 1.0 };
    Ok(ceil_tol(num / eps).max(1))
}

fn level_factor(level: usize, weighted: bool) -> Factor {
    let num = if weighted { 2 } else { 1 };
    Factor::from_integer(1) + Factor::new(num, level as i64)
}

/// `(1 + eps)`-approximation for (weighted) feedback arc set by repeated
/// boosting of the balanced-cut algorithm.
///
/// Level `k + 1` enumerates every vertex set `V'` of size `round(alpha n)`,
/// takes the exact optimum of `G[V']` from one subset table, pays the arcs
/// entering `V'`, and finishes `G[V - V']` with level `k` (exactly for the
/// `V'` with the cheapest entering arcs). The best of these candidates is
/// returned.
pub fn fas_scheme(g: &Digraph, eps: f64, weighted: bool, config: &SchemeConfig) -> Result<ApproxReport> {
    let level = scheme_level(eps, weighted)?;
    if let Some(a) = config.alpha_override {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: a,
                reason: "must lie in (0, 1)",
            });
        }
    }
    if level.saturating_mul(g.n()) > config.budget {
        return Err(Error::TooLarge {
            what: "approximation scheme (level * n budget)",
            n: g.n(),
            limit: config.budget / level,
        });
    }
    let ladder = boost_ladder(config.delta_1, level.saturating_sub(1))?;
    let ctx = Scheme {
        ladder: &ladder,
        alpha_override: config.alpha_override,
        weighted,
    };
    let mut out = ctx.run(g, level)?;
    out.ladder = ladder;
    Ok(out)
}

struct Scheme<'a> {
    ladder: &'a [BoostParams],
    alpha_override: Option<f64>,
    weighted: bool,
}

struct Candidate {
    set: VertexSet,
    value: Weight,
    // optimum of the prefix plus the value found for the rest
    split_value: Weight,
    seq: Vec<usize>,
    trace: Vec<TraceStep>,
    stats: Stats,
}

impl Scheme<'_> {
    fn run(&self, g: &Digraph, level: usize) -> Result<ApproxReport> {
        if level == 1 {
            let mode = if self.weighted {
                CutMode::Rounded { eps: 1.0 }
            } else {
                CutMode::Exact
            };
            return fas_balanced_approx(g, mode);
        }
        let n = g.n();
        let alpha = self
            .alpha_override
            .unwrap_or(self.ladder[level - 2].alpha);
        let m = round_half_up(alpha * n as f64);
        if n <= 2 || m == 0 || m >= n {
            let mut out = ApproxReport::exact(g, Objective::Fas)?;
            out.trace[0].level = level;
            return Ok(out);
        }

        let table = subset_dp::fas_table(g, m)?;
        let adj = Adjacency::new(g);
        let prefixes: Vec<(VertexSet, Weight)> = (0..n)
            .combinations(m)
            .map(|c| {
                let set: VertexSet = c.into_iter().collect();
                (set, adj.crossing(set))
            })
            .collect();
        // first minimum in lexicographic order
        let (best_prefix, best_entering) = prefixes
            .iter()
            .copied()
            .reduce(|b, c| if c.1 < b.1 { c } else { b })
            .expect("0 < m < n");

        let candidates: Vec<Candidate> = prefixes
            .par_iter()
            .map(|&(set, entering)| -> Result<Candidate> {
                let rest = set.complement(n);
                let (h, map) = g.induced_set(rest);
                let exact_rest = set == best_prefix;
                let (sub_value, sub_seq, mut sub_trace, stats) = if exact_rest {
                    let r = subset_dp::fas_exact(&h)?;
                    (r.value, r.ordering.sequence(), Vec::new(), r.stats)
                } else {
                    let r = self.run(&h, level - 1)?;
                    let mut stats = r.report.stats;
                    stats.recursive_calls += 1;
                    (r.value(), r.report.ordering.sequence(), r.trace, stats)
                };
                let prefix_opt = table.value(set).expect("table covers size m");
                let mut seq = table.sequence(set).expect("table covers size m");
                seq.extend(map.lift(&sub_seq));
                let mut trace = vec![TraceStep {
                    level,
                    n,
                    part_sizes: vec![m, n - m],
                    exact_rest,
                }];
                trace.append(&mut sub_trace);
                Ok(Candidate {
                    set,
                    value: prefix_opt + entering + sub_value,
                    split_value: prefix_opt + sub_value,
                    seq,
                    trace,
                    stats,
                })
            })
            .collect::<Result<_>>()?;

        let mut stats = Stats {
            table_entries: table.entries(),
            ..Stats::default()
        };
        let mut best: Option<Candidate> = None;
        let mut exact_split = 0;
        for c in candidates {
            stats += c.stats;
            if c.set == best_prefix {
                exact_split = c.split_value;
            }
            let better = match &best {
                None => true,
                Some(b) => c.value < b.value || (c.value == b.value && c.set.lex_cmp(b.set).is_lt()),
            };
            if better {
                best = Some(c);
            }
        }
        let best = best.expect("at least one prefix");

        // the exact split at the cheapest prefix certifies a lower bound, and
        // so does the cheapest entering weight (the first m vertices of an
        // optimal ordering form a candidate prefix)
        let lower_bound = exact_split.max(best_entering);

        let mut out = ApproxReport::new(
            g,
            Objective::Fas,
            best.seq,
            lower_bound,
            level_factor(level, self.weighted),
            stats,
        );
        debug_assert_eq!(out.value(), best.value);
        out.trace = best.trace;
        Ok(out)
    }
}

