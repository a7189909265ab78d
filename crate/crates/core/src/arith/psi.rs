use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// Sawtooth ψ(t) = t − ⌊t⌋ − 1/2; equals −1/2 at integers.
pub fn psi(t: f64) -> f64 {
    t - t.floor() - 0.5
}

/// Distance from `t` to the nearest integer.
pub fn dist_to_int(t: f64) -> f64 {
    let f = t - t.floor();
    f.min(1.0 - f)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsiGap {
    pub t: f64,
    pub h: u64,
    /// |ψ(t) + Σ_{0<|h|≤H} e(th)/(2πih)|
    pub gap: f64,
    /// min(1, 1/(H‖t‖))
    pub envelope: f64,
}

pub fn psi_truncation_gap(t: f64, h: u64) -> PsiGap {
    assert!(h >= 1, "truncation H must be positive");
    // pairs ±h combine to sin(2πht)/(πh)
    let series: f64 = (1..=h)
        .map(|k| (2.0 * PI * k as f64 * t).sin() / (PI * k as f64))
        .sum();
    let d = dist_to_int(t);
    let envelope = if d == 0.0 { 1.0 } else { (1.0 / (h as f64 * d)).min(1.0) };
    PsiGap { t, h, gap: (psi(t) + series).abs(), envelope }
}
