//! Direct evaluation of Σ_{X<m≤X₁, m≡l (d)} e(h m^γ) next to the exponent-pair bound
//! min(X/d, d⁻¹|h|⁻¹X^{1−γ} + d^{κ−ℓ}|h|^κ X^{κγ−κ+ℓ}).

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::ExponentPair;

pub const DEFAULT_TERM_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpSumQuery {
    pub x: u64,
    pub x1: u64,
    pub d: u64,
    pub l: i64,
    pub h: i64,
    pub gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpSumReport {
    pub query: ExpSumQuery,
    pub terms: u64,
    pub re: f64,
    pub im: f64,
    pub magnitude: f64,
    pub pair_kappa: f64,
    pub pair_ell: f64,
    pub lemma_bound: f64,
    /// magnitude / lemma_bound; the implied constant is not known, so this is not checked
    pub ratio: f64,
}

/// The bound's right-hand side for an exponent pair `(κ, ℓ)`.
pub fn lemma_bound(x: f64, d: f64, h: f64, gamma: f64, kappa: f64, ell: f64) -> f64 {
    let h = h.abs();
    let first = x / d;
    let second = x.powf(1.0 - gamma) / (d * h) + d.powf(kappa - ell) * h.powf(kappa) * x.powf(kappa * gamma - kappa + ell);
    first.min(second)
}

pub fn exp_sum_progression(q: ExpSumQuery, pair: &ExponentPair, term_cap: u64) -> Result<ExpSumReport> {
    if q.d == 0 || q.d > q.x || q.x >= q.x1 || q.x1 > 2 * q.x {
        return Err(Error::pre(format!(
            "need 1 <= d <= X < X1 <= 2X, got d={} X={} X1={}",
            q.d, q.x, q.x1
        )));
    }
    if q.h == 0 {
        return Err(Error::pre("frequency h must be nonzero"));
    }
    if !(q.gamma > 0.5 && q.gamma < 1.0) {
        return Err(Error::domain(format!("gamma must lie in (1/2, 1), got {}", q.gamma)));
    }
    let r = q.l.rem_euclid(q.d as i64) as u64;
    // first m > X with m ≡ r (mod d)
    let start = q.x + 1 + (r + q.d - (q.x + 1) % q.d) % q.d;
    let terms = if start > q.x1 { 0 } else { (q.x1 - start) / q.d + 1 };
    if terms > term_cap {
        return Err(Error::Cost { requested: terms as u128, cap: term_cap as u128 });
    }
    let (mut re, mut im) = (0.0f64, 0.0f64);
    let hf = q.h as f64;
    let mut m = start;
    for _ in 0..terms {
        let phase = hf * (m as f64).powf(q.gamma);
        let (s, c) = (TAU * (phase - phase.floor())).sin_cos();
        re += c;
        im += s;
        m += q.d;
    }
    let magnitude = re.hypot(im);
    let (kappa, ell) = pair.to_f64();
    let bound = lemma_bound(q.x as f64, q.d as f64, hf, q.gamma, kappa, ell);
    Ok(ExpSumReport {
        query: q,
        terms,
        re,
        im,
        magnitude,
        pair_kappa: kappa,
        pair_ell: ell,
        lemma_bound: bound,
        ratio: magnitude / bound,
    })
}
