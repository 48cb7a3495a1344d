//! Balanced-cut approximations.
//!
//! The common pattern: find a (near-)minimum directed `(k, n-k)`-cut `L`,
//! solve `G[L]` and `G[V - L]` exactly, and place `L` first. Arcs from `L`
//! to the rest become forward arcs; only the cut arcs are paid extra, and
//! the cut weight itself is a lower bound on the optimum.

mod cutwidth;
mod dpw;
mod fas;
mod ola;
pub mod params;

pub use cutwidth::cutwidth_balanced_approx;
pub use dpw::dpw_2approx;
pub use fas::{fas_balanced_approx, fas_scheme, scheme_level, SchemeConfig};
pub use ola::{choose_orientation, crossing_length, ola_directed_approx, ola_undirected_approx, Orientation};
pub use params::{boost_ladder, solve_gamma, solve_pw_alpha, BoostParams};

use crate::error::Result;
use crate::graph::{Digraph, Ordering, VertexSet, Weight};
use crate::kcut::{self, CutSolution};
use crate::report::{Factor, Objective, SolveReport, Stats};
use crate::subset_dp;

/// How the balancing cut is computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CutMode {
    /// Exact minimum cut via the triangle reduction.
    Exact,
    /// `(1 + eps)`-approximate cut via weight rounding.
    Rounded { eps: f64 },
}

impl CutMode {
    fn solve(self, g: &Digraph, k: usize) -> Result<(CutSolution, Stats)> {
        match self {
            CutMode::Exact => kcut::dkmc_exact(g, k),
            CutMode::Rounded { eps } => kcut::dkmc_weighted_approx(g, k, eps),
        }
    }

    /// Largest integer certainly not above the optimal cut, given the
    /// weight of the cut that was found.
    fn cut_lower_bound(self, found: Weight) -> Weight {
        match self {
            CutMode::Exact => found,
            CutMode::Rounded { eps } => ((found as f64) / (1.0 + eps) * (1.0 - 1e-12)).floor() as Weight,
        }
    }

    /// Multiplicative slack of the cut, `1` or `1 + eps`.
    fn slack(self) -> Factor {
        match self {
            CutMode::Exact => Factor::from_integer(1),
            CutMode::Rounded { eps } => Factor::from_integer(1) + crate::report::rational(eps),
        }
    }
}

/// One step of the recursion that produced an answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub level: usize,
    /// Vertex count of the graph handled at this step.
    pub n: usize,
    /// Sizes of the parts the vertices were split into.
    pub part_sizes: Vec<usize>,
    /// The rest of the graph was solved exactly rather than recursively.
    pub exact_rest: bool,
}

/// Solution of an approximation algorithm together with its certificate.
#[derive(Debug, Clone)]
pub struct ApproxReport {
    pub report: SolveReport,
    /// Guaranteed ratio `value / opt`, derived from the sizes actually used.
    pub factor: Factor,
    /// Certified lower bound on the optimum.
    pub lower_bound: Weight,
    pub cuts: Vec<CutSolution>,
    pub trace: Vec<TraceStep>,
    /// Boosting ladder, for the feedback arc set scheme.
    pub ladder: Vec<BoostParams>,
    /// Per-side reversal chosen by the undirected arrangement algorithm.
    pub orientation: Option<Orientation>,
}

impl ApproxReport {
    fn new(
        g: &Digraph,
        objective: Objective,
        seq: Vec<usize>,
        lower_bound: Weight,
        factor: Factor,
        stats: Stats,
    ) -> Self {
        let ordering = Ordering::from_sequence(seq).expect("solver produced a permutation");
        let value = objective.evaluate(g, &ordering);
        debug_assert!(lower_bound <= value, "lower bound {lower_bound} above value {value}");
        ApproxReport {
            report: SolveReport {
                objective,
                value,
                ordering,
                lower_bound: Some(lower_bound),
                stats,
            },
            factor,
            lower_bound,
            cuts: Vec::new(),
            trace: Vec::new(),
            ladder: Vec::new(),
            orientation: None,
        }
    }

    /// Exact solve, used when the instance is too small to split.
    fn exact(g: &Digraph, objective: Objective) -> Result<Self> {
        let r = subset_dp::exact(g, objective)?;
        let mut out = ApproxReport::new(
            g,
            objective,
            r.ordering.sequence(),
            r.value,
            Factor::from_integer(1),
            r.stats,
        );
        out.trace.push(TraceStep {
            level: 0,
            n: g.n(),
            part_sizes: vec![g.n()],
            exact_rest: true,
        });
        Ok(out)
    }

    pub fn value(&self) -> Weight {
        self.report.value
    }
}

/// Exact solutions of both sides of a split, concatenated `left` first.
struct Split {
    seq: Vec<usize>,
    left_seq: Vec<usize>,
    right_seq: Vec<usize>,
    left_opt: Weight,
    right_opt: Weight,
    stats: Stats,
}

fn solve_sides(g: &Digraph, left: VertexSet, objective: Objective) -> Result<Split> {
    let right = left.complement(g.n());
    let (gl, ml) = g.induced_set(left);
    let (gr, mr) = g.induced_set(right);
    let rl = subset_dp::exact(&gl, objective)?;
    let rr = subset_dp::exact(&gr, objective)?;
    let left_seq = ml.lift(&rl.ordering.sequence());
    let right_seq = mr.lift(&rr.ordering.sequence());
    let seq = left_seq.iter().chain(&right_seq).copied().collect();
    Ok(Split {
        seq,
        left_seq,
        right_seq,
        left_opt: rl.value,
        right_opt: rr.value,
        stats: rl.stats + rr.stats,
    })
}

#[cfg(test)]
mod tests;
