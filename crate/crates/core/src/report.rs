use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::eval;
use crate::graph::{Digraph, Ordering, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Fas,
    Cutwidth,
    Ola,
    Dpw,
}

impl Objective {
    pub const ALL: [Objective; 4] = [
        Objective::Fas,
        Objective::Cutwidth,
        Objective::Ola,
        Objective::Dpw,
    ];

    pub fn evaluate(self, g: &Digraph, pi: &Ordering) -> Weight {
        match self {
            Objective::Fas => eval::backward_weight(g, pi),
            Objective::Cutwidth => eval::cutwidth_of(g, pi),
            Objective::Ola => eval::ola_of(g, pi),
            Objective::Dpw => eval::dpw_of(g, pi),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Objective::Fas => "fas",
            Objective::Cutwidth => "cutwidth",
            Objective::Ola => "ola",
            Objective::Dpw => "dpw",
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fas" => Ok(Objective::Fas),
            "cutwidth" => Ok(Objective::Cutwidth),
            "ola" => Ok(Objective::Ola),
            "dpw" => Ok(Objective::Dpw),
            other => Err(format!("unknown objective '{other}'")),
        }
    }
}

/// Work counters. Deterministic for a fixed input, so they can be compared
/// across runs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Subset-table entries filled.
    pub table_entries: u64,
    /// Triangles examined by the min-weight triangle search.
    pub triangles: u64,
    /// `(k1, k2)` cells of the cut reduction that were built.
    pub cut_cells: u64,
    /// Calls into a recursive approximation level.
    pub recursive_calls: u64,
}

impl Add for Stats {
    type Output = Stats;

    fn add(self, o: Stats) -> Stats {
        Stats {
            table_entries: self.table_entries + o.table_entries,
            triangles: self.triangles + o.triangles,
            cut_cells: self.cut_cells + o.cut_cells,
            recursive_calls: self.recursive_calls + o.recursive_calls,
        }
    }
}

impl AddAssign for Stats {
    fn add_assign(&mut self, o: Stats) {
        *self = *self + o;
    }
}

/// Result of a solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub objective: Objective,
    pub value: Weight,
    pub ordering: Ordering,
    /// Certified lower bound on the optimum, when the solver has one.
    pub lower_bound: Option<Weight>,
    pub stats: Stats,
}

impl SolveReport {
    /// Re-evaluates the ordering; every solver must satisfy this.
    pub fn is_consistent(&self, g: &Digraph) -> bool {
        self.objective.evaluate(g, &self.ordering) == self.value
            && self.lower_bound.is_none_or(|lb| lb <= self.value)
    }
}

/// Guaranteed approximation factor as an exact rational.
pub type Factor = Ratio<i64>;

/// Rational approximation of a float parameter such as `eps` or `alpha`.
pub fn rational(x: f64) -> Factor {
    Ratio::approximate_float(x).unwrap_or_else(|| Ratio::from_integer(x.round() as i64))
}

pub fn factor_to_f64(f: Factor) -> f64 {
    *f.numer() as f64 / *f.denom() as f64
}

/// `value <= factor * opt`, evaluated exactly.
pub fn within_factor(value: Weight, opt: Weight, factor: Factor) -> bool {
    (value as i128) * (*factor.denom() as i128) <= (opt as i128) * (*factor.numer() as i128)
}
