//! Maps `--obj`/`--mode` and their parameters onto a concrete algorithm.

use clap::ValueEnum;
use vorder::approx::{self, CutMode, SchemeConfig};
use vorder::report::{Factor, Objective, Stats};
use vorder::{subset_dp, Digraph, Ordering, Weight};

use crate::fail::{CliResult, Fail};
use crate::guards::Guards;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    #[value(name = "2approx")]
    TwoApprox,
    #[value(name = "3approx")]
    ThreeApprox,
    Scheme,
    /// The approximation of the objective; `--scheme` selects the
    /// feedback arc set scheme.
    Approx,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::TwoApprox => "2approx",
            Mode::ThreeApprox => "3approx",
            Mode::Scheme => "scheme",
            Mode::Approx => "approx",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub eps: Option<f64>,
    pub alpha: Option<f64>,
    pub weighted: bool,
    pub scheme: bool,
}

pub const DEFAULT_ALPHA: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Plan {
    Exact(Objective),
    FasBalanced(CutMode),
    /// `alpha` forces the prefix fraction of every level.
    FasScheme {
        eps: f64,
        weighted: bool,
        alpha: Option<f64>,
    },
    Cutwidth(CutMode),
    OlaDirected { alpha: f64, weighted: bool },
    OlaUndirected { alpha: f64, weighted: bool },
    Dpw,
}

/// Outcome of a run, before any oracle comparison.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub value: Weight,
    pub lower_bound: Weight,
    pub ordering: Ordering,
    pub stats: Stats,
    pub factor: Factor,
}

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Fail::Usage(msg.into()))
}

impl Plan {
    /// Checks flag consistency and picks the algorithm. `undirected` is the
    /// kind of the instance.
    pub fn resolve(obj: Objective, mode: Mode, p: Params, undirected: bool) -> CliResult<Plan> {
        let scheme = obj == Objective::Fas && (mode == Mode::Scheme || (mode == Mode::Approx && p.scheme));
        if p.alpha.is_some() && !(obj == Objective::Ola && mode != Mode::Exact) && !scheme {
            return usage("--alpha applies only to approximate ola and to the fas scheme");
        }
        if p.scheme && !(obj == Objective::Fas && matches!(mode, Mode::Approx | Mode::Scheme)) {
            return usage("--scheme applies only to fas with --mode approx");
        }
        if p.weighted && obj == Objective::Dpw {
            return usage("dpw has no weighted variant");
        }
        if mode == Mode::Exact {
            if p.eps.is_some() || p.weighted {
                return usage("--eps and --weighted apply only to approximate modes");
            }
            return Ok(Plan::Exact(obj));
        }
        let plan = match (obj, mode) {
            _ if scheme => {
                let Some(eps) = p.eps else {
                    return usage("the scheme needs --eps");
                };
                Plan::FasScheme {
                    eps,
                    weighted: p.weighted,
                    alpha: p.alpha,
                }
            }
            (Objective::Fas, Mode::TwoApprox) => {
                if p.weighted {
                    return usage("fas 2approx uses an exact cut; use 3approx for the weighted variant");
                }
                no_eps(p)?;
                Plan::FasBalanced(CutMode::Exact)
            }
            (Objective::Fas, Mode::ThreeApprox) => {
                no_eps(p)?;
                Plan::FasBalanced(CutMode::Rounded { eps: 1.0 })
            }
            (Objective::Fas, Mode::Approx) => {
                no_eps(p)?;
                if p.weighted {
                    Plan::FasBalanced(CutMode::Rounded { eps: 1.0 })
                } else {
                    Plan::FasBalanced(CutMode::Exact)
                }
            }
            (Objective::Cutwidth, Mode::TwoApprox | Mode::Approx) => match (p.weighted, p.eps) {
                (false, None) => Plan::Cutwidth(CutMode::Exact),
                (true, Some(eps)) => Plan::Cutwidth(CutMode::Rounded { eps }),
                (true, None) => return usage("weighted cutwidth needs --eps"),
                (false, Some(_)) => return usage("--eps for cutwidth needs --weighted"),
            },
            (Objective::Ola, Mode::Approx) => {
                no_eps(p)?;
                let alpha = p.alpha.unwrap_or(DEFAULT_ALPHA);
                if undirected {
                    Plan::OlaUndirected {
                        alpha,
                        weighted: p.weighted,
                    }
                } else {
                    Plan::OlaDirected {
                        alpha,
                        weighted: p.weighted,
                    }
                }
            }
            (Objective::Dpw, Mode::TwoApprox | Mode::Approx) => {
                no_eps(p)?;
                Plan::Dpw
            }
            (obj, mode) => return usage(format!("mode {} is not available for {obj}", mode.name())),
        };
        Ok(plan)
    }

    pub fn objective(self) -> Objective {
        match self {
            Plan::Exact(obj) => obj,
            Plan::FasBalanced(_) | Plan::FasScheme { .. } => Objective::Fas,
            Plan::Cutwidth(_) => Objective::Cutwidth,
            Plan::OlaDirected { .. } | Plan::OlaUndirected { .. } => Objective::Ola,
            Plan::Dpw => Objective::Dpw,
        }
    }

    /// Mode string for reports, with the parameters that shape the result.
    pub fn label(self) -> String {
        let w = |weighted: bool| if weighted { ",weighted" } else { "" };
        match self {
            Plan::Exact(_) => "exact".into(),
            Plan::FasBalanced(CutMode::Exact) => "2approx".into(),
            Plan::FasBalanced(CutMode::Rounded { eps }) => format!("3approx(eps={eps})"),
            Plan::FasScheme {
                eps,
                weighted,
                alpha,
            } => {
                let a = alpha.map(|a| format!(",alpha={a}")).unwrap_or_default();
                format!("scheme(eps={eps}{a}{})", w(weighted))
            }
            Plan::Cutwidth(CutMode::Exact) => "2approx".into(),
            Plan::Cutwidth(CutMode::Rounded { eps }) => format!("2approx(eps={eps},weighted)"),
            Plan::OlaDirected { alpha, weighted } => format!("approx(alpha={alpha}{})", w(weighted)),
            Plan::OlaUndirected { alpha, weighted } => {
                format!("approx(alpha={alpha},undirected{})", w(weighted))
            }
            Plan::Dpw => "2approx".into(),
        }
    }

    pub fn run(self, g: &Digraph, guards: &Guards) -> CliResult<Outcome> {
        if let Plan::Exact(obj) = self {
            guards.check_exact(g.n())?;
            let r = subset_dp::exact(g, obj)?;
            return Ok(Outcome {
                value: r.value,
                lower_bound: r.lower_bound.unwrap_or(r.value),
                ordering: r.ordering,
                stats: r.stats,
                factor: Factor::from_integer(1),
            });
        }
        let r = match self {
            Plan::Exact(_) => unreachable!(),
            Plan::FasBalanced(mode) => approx::fas_balanced_approx(g, mode)?,
            Plan::FasScheme {
                eps,
                weighted,
                alpha,
            } => {
                let config = SchemeConfig {
                    budget: guards.scheme_budget,
                    alpha_override: alpha,
                    ..SchemeConfig::default()
                };
                approx::fas_scheme(g, eps, weighted, &config)?
            }
            Plan::Cutwidth(mode) => approx::cutwidth_balanced_approx(g, mode)?,
            Plan::OlaDirected { alpha, weighted } => approx::ola_directed_approx(g, alpha, weighted)?,
            Plan::OlaUndirected { alpha, weighted } => {
                approx::ola_undirected_approx(g, alpha, weighted)?
            }
            Plan::Dpw => approx::dpw_2approx(g)?,
        };
        Ok(Outcome {
            value: r.value(),
            lower_bound: r.lower_bound,
            ordering: r.report.ordering,
            stats: r.report.stats,
            factor: r.factor,
        })
    }
}

fn no_eps(p: Params) -> CliResult<()> {
    if p.eps.is_some() {
        return usage("--eps does not apply to this mode");
    }
    Ok(())
}
