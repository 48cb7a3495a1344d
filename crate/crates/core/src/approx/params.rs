//! Numeric parameters of the boosting ladder and of the pathwidth split.

use serde::Serialize;

use crate::error::{Error, Result};

/// `(g log g - (g - 1) log(g - 1)) / (g - 1)` with base-2 logarithms,
/// written in the cancellation-free form `log(g / (g - 1)) + log(g) / (g - 1)`.
pub fn gamma_lhs(gamma: f64) -> f64 {
    (gamma / (gamma - 1.0)).log2() + gamma.log2() / (gamma - 1.0)
}

const GAMMA_MAX: f64 = 18_446_744_073_709_551_616.0; // 2^64

/// Root of `gamma_lhs(g) = rhs` on `[2, 2^64]` for `rhs` in `(0, 2]`.
///
/// The left side equals 2 at `g = 2` and decreases towards 0, so the root
/// is bracketed; bisection runs on `log g` because the bracket spans many
/// orders of magnitude. Right-hand sides below `gamma_lhs(2^64)` clamp to
/// the upper end.
pub fn solve_gamma_rhs(rhs: f64) -> Result<f64> {
    if !(rhs > 0.0 && rhs <= 2.0) {
        return Err(Error::InvalidParameter {
            name: "rhs",
            value: rhs,
            reason: "must lie in (0, 2]",
        });
    }
    let (mut lo, mut hi) = (2f64.ln(), GAMMA_MAX.ln());
    if gamma_lhs(2.0) <= rhs {
        return Ok(2.0);
    }
    if gamma_lhs(GAMMA_MAX) >= rhs {
        return Ok(GAMMA_MAX);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let value = gamma_lhs(mid.exp());
        // invariant: lhs(e^lo) > rhs >= lhs(e^hi)
        if value > rhs {
            lo = mid;
        } else {
            hi = mid;
        }
        if (value - rhs).abs() <= 1e-13 || hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    Ok((0.5 * (lo + hi)).exp())
}

/// Solves `gamma_lhs(g) = 1 - log2(2 - delta)` for `delta` in `(0, 1)`.
pub fn solve_gamma(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: delta,
            reason: "must lie in (0, 1)",
        });
    }
    // 1 - log2(2 - delta), accurate for small delta
    let rhs = -(-0.5 * delta).ln_1p() / std::f64::consts::LN_2;
    solve_gamma_rhs(rhs)
}

/// One rung of the feedback arc set boosting ladder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoostParams {
    pub level: usize,
    /// Running-time margin assumed for this level.
    pub delta: f64,
    pub gamma: f64,
    /// Prefix fraction used when building level `level + 1`.
    pub alpha: f64,
}

/// Parameters for levels `1..=levels`. Each next margin is the midpoint of
/// the admissible interval `(0, 2 - 2^(1 - alpha))`.
pub fn boost_ladder(delta_1: f64, levels: usize) -> Result<Vec<BoostParams>> {
    let mut out = Vec::with_capacity(levels);
    let mut delta = delta_1;
    for level in 1..=levels {
        let gamma = solve_gamma(delta)?;
        let alpha = 1.0 / gamma;
        out.push(BoostParams {
            level,
            delta,
            gamma,
            alpha,
        });
        // midpoint of (0, 2 - 2^(1 - alpha)), i.e. 1 - 2^(-alpha)
        delta = -(-alpha * std::f64::consts::LN_2).exp_m1();
    }
    Ok(out)
}

fn binary_entropy_nats(a: f64) -> f64 {
    -a * a.ln() - (1.0 - a) * (1.0 - a).ln()
}

/// Prefix fraction for the pathwidth 2-approximation: the root of
/// `1.89^(1 - a) = (1/a)^a (1/(1 - a))^(1 - a)` in `(0, 1/2)`.
pub fn solve_pw_alpha() -> f64 {
    let base = 1.89f64.ln();
    let f = |a: f64| binary_entropy_nats(a) - (1.0 - a) * base;
    // f < 0 near 0 and f(1/2) > 0; f is increasing in between.
    let (mut lo, mut hi) = (1e-12, 0.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let value = f(mid);
        if value < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if value.abs() <= 1e-15 || hi - lo <= f64::EPSILON {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// `round(x)` with halves rounded up; tolerant to representation error.
pub(crate) fn round_half_up(x: f64) -> usize {
    (x + 0.5 + 1e-9).floor().max(0.0) as usize
}

/// `ceil(x)` tolerant to representation error.
pub(crate) fn ceil_tol(x: f64) -> usize {
    (x - 1e-9).ceil().max(0.0) as usize
}
