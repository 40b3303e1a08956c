//! Smooth upper bound from a `c`-smooth distance estimate.
//!
//! With `h(x) = e^{−(β/c)x}(2x + c + 1)`, the bound is
//! `S(d̂) = RS · max_{d ∈ ℤ, d ≥ d̂} e^{(β/c)d̂} h(d)`. `h` is unimodal with its
//! peak at `x₀ = c/β − (c + 1)/2`, so a handful of integer candidates decide
//! the maximum.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothBoundParams {
    pub beta: f64,
    pub c: f64,
    pub rs: f64,
    pub d_hat: f64,
}

impl SmoothBoundParams {
    fn validate(&self) -> Result<()> {
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(Error::InvalidParameter(format!("beta must be positive, got {}", self.beta)));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidParameter(format!("c must be positive, got {}", self.c)));
        }
        if !(self.rs >= 0.0 && self.rs.is_finite()) {
            return Err(Error::InvalidParameter(format!("rs must be non-negative, got {}", self.rs)));
        }
        if !(self.d_hat >= 0.0 && self.d_hat.is_finite()) {
            return Err(Error::InvalidParameter(format!("d_hat must be non-negative, got {}", self.d_hat)));
        }
        Ok(())
    }
}

// d̂ within this of an integer from above is snapped down to it, so LP noise
// never skips a candidate.
const CEIL_SLACK: f64 = 1e-9;

pub fn smooth_upper_bound(p: &SmoothBoundParams) -> Result<f64> {
    p.validate()?;
    if p.rs == 0.0 {
        return Ok(0.0);
    }
    let rate = p.beta / p.c;
    let term = |d: f64| (-rate * (d - p.d_hat)).exp() * (2.0 * d + p.c + 1.0);
    let start = (p.d_hat - CEIL_SLACK).ceil().max(0.0);
    let peak = p.c / p.beta - (p.c + 1.0) / 2.0;
    let mut best = term(start);
    if peak > start {
        for d in [peak.floor() - 1.0, peak.floor(), peak.ceil(), peak.ceil() + 1.0] {
            if d >= start {
                best = best.max(term(d));
            }
        }
    }
    Ok(p.rs * best)
}

/// `g(x) = (2/x) e^{−1 + (c+1)x/2}` for `x ≤ 2/(c+1)` and `c + 1` beyond,
/// evaluated at `x = β/c`; the supremum of `e^{−xd}(2d + c + 1)` over real
/// `d ≥ 0`.
pub fn g_envelope(beta: f64, c: f64) -> Result<f64> {
    if !(beta > 0.0 && c > 0.0 && beta.is_finite() && c.is_finite()) {
        return Err(Error::InvalidParameter(format!("g needs positive beta and c, got beta = {beta}, c = {c}")));
    }
    let x = beta / c;
    Ok(if x <= 2.0 / (c + 1.0) { (2.0 / x) * (-1.0 + (c + 1.0) * x / 2.0).exp() } else { c + 1.0 })
}
