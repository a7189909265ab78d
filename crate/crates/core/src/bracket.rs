//! The four weighted-sieve coefficients and the bracket S − S₁ − S₂ − S₃, with the common
//! factor 𝔖·x^γ/log²x removed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_nested, QuadResult};
use crate::sievefn::{double_log_integral, inner_log_integral};

/// z = x^{1/10.92} for the sifting range.
pub const Z_LOWER: f64 = 10.92;
/// z₁ = x^{1/3.29}.
pub const Z_UPPER: f64 = 3.29;

/// The bracket value stated as a lower bound at ξ = 0.47284.
pub const STATED_BRACKET: f64 = 0.000109508;
pub const STATED_XI: f64 = 0.47284;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BracketBreakdown {
    pub xi: f64,
    #[serde(rename = "term_S")]
    pub term_s: f64,
    #[serde(rename = "term_S1")]
    pub term_s1: f64,
    #[serde(rename = "term_S2")]
    pub term_s2: f64,
    #[serde(rename = "term_S3")]
    pub term_s3: f64,
    pub total: f64,
    pub quad_error: f64,
}

fn check(xi: f64, tol: f64) -> Result<()> {
    if !(tol > 0.0) {
        return Err(Error::pre(format!("tolerance must be positive, got {tol}")));
    }
    if !(xi > 0.0) {
        return Err(Error::domain(format!("xi must be positive, got {xi}")));
    }
    Ok(())
}

fn scaled(r: QuadResult, k: f64, extra: f64) -> QuadResult {
    QuadResult { value: k * (r.value + extra), error: k.abs() * r.error, ..r }
}

/// (4/ξ)(log(s−1) + ∫₃^{s−1} dt₁/t₁ ∫₂^{t₁−1} log(t₂−1)/t₂ dt₂) with s = 10.92ξ ∈ [4, 6].
pub fn coeff_s(xi: f64, tol: f64) -> Result<QuadResult> {
    check(xi, tol)?;
    let s = Z_LOWER * xi;
    if !(4.0..=6.0).contains(&s) {
        return Err(Error::domain(format!("need 10.92*xi in [4, 6], got {s}")));
    }
    let k = 4.0 / xi;
    let j = double_log_integral(s, tol / k)?;
    Ok(scaled(j, k, (s - 1.0).ln()))
}

/// 2(∫_{ξ−3/10.92}^{1/3.29} dα/(α(ξ−α)) + ∫_{1/10.92}^{ξ−3/10.92} (1 + I(10.92(ξ−α)−1))/(α(ξ−α)) dα).
pub fn coeff_s1(xi: f64, tol: f64) -> Result<QuadResult> {
    check(xi, tol)?;
    let (lo, hi) = (1.0 / Z_LOWER, 1.0 / Z_UPPER);
    let split = xi - 3.0 / Z_LOWER;
    // ξ = 4/10.92 lands a rounding step below 1/10.92
    if !(split >= lo - 4.0 * f64::EPSILON && split <= hi) {
        return Err(Error::domain(format!(
            "need 4/10.92 <= xi <= 3/10.92 + 1/3.29, got {xi}"
        )));
    }
    let split = split.max(lo);
    let first = integrate(|a: f64| 1.0 / (a * (xi - a)), split, hi, tol / 8.0)?;
    let inner_tol = tol / 80.0;
    let worst = std::cell::Cell::new(0.0f64);
    let failed = std::cell::Cell::new(None);
    let second = integrate(
        |a: f64| {
            // clamp: at a = split the inner range is empty up to rounding
            let u = (Z_LOWER * (xi - a) - 1.0).max(2.0);
            let i = match inner_log_integral(u, inner_tol) {
                Ok(r) => {
                    worst.set(worst.get().max(r.error));
                    r.value
                }
                Err(e) => {
                    failed.set(Some(e.to_string()));
                    f64::NAN
                }
            };
            (1.0 + i) / (a * (xi - a))
        },
        lo,
        split,
        tol / 8.0,
    )?;
    if let Some(msg) = failed.take() {
        return Err(Error::pre(format!("inner integral failed: {msg}")));
    }
    // inner errors enter through the weight 1/(α(ξ−α)), bounded by its value at α = 1/10.92
    let weight = (split - lo) / (lo * (xi - split));
    let error = 2.0 * (first.error + second.error + weight * worst.get());
    Ok(QuadResult {
        value: 2.0 * (first.value + second.value),
        error,
        panels: first.panels + second.panels,
        evaluations: first.evaluations + second.evaluations,
    })
}

fn pair_integrand(a1: f64, a2: f64) -> f64 {
    1.0 / (a1 * a2 * (1.0 - a1 - a2))
}

/// (2/ξ) ∫_{1/10.92}^{1/3.29} dα₁/α₁ ∫_{1/3.29}^{(1−α₁)/2} dα₂/(α₂(1−α₁−α₂)).
pub fn coeff_s2(xi: f64, tol: f64) -> Result<QuadResult> {
    check(xi, tol)?;
    let k = 2.0 / xi;
    let r = integrate_nested(
        1.0 / Z_LOWER,
        1.0 / Z_UPPER,
        |a1| (1.0 / Z_UPPER, (1.0 - a1) / 2.0),
        pair_integrand,
        tol / k,
    )?;
    Ok(scaled(r, k, 0.0))
}

/// (4/ξ) ∫_{1/3.29}^{1/3} dα₁/α₁ ∫_{α₁}^{(1−α₁)/2} dα₂/(α₂(1−α₁−α₂)).
pub fn coeff_s3(xi: f64, tol: f64) -> Result<QuadResult> {
    check(xi, tol)?;
    let k = 4.0 / xi;
    let r = integrate_nested(1.0 / Z_UPPER, 1.0 / 3.0, |a1| (a1, (1.0 - a1) / 2.0), pair_integrand, tol / k)?;
    Ok(scaled(r, k, 0.0))
}

pub fn chen_bracket(xi: f64, tol: f64) -> Result<BracketBreakdown> {
    let part = tol / 4.0;
    let s = coeff_s(xi, part)?;
    let s1 = coeff_s1(xi, part)?;
    let s2 = coeff_s2(xi, part)?;
    let s3 = coeff_s3(xi, part)?;
    Ok(BracketBreakdown {
        xi,
        term_s: s.value,
        term_s1: s1.value,
        term_s2: s2.value,
        term_s3: s3.value,
        total: s.value - s1.value - s2.value - s3.value,
        quad_error: s.error + s1.error + s2.error + s3.error,
    })
}
