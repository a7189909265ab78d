//! 𝒩(Δ): ordered quadruples (h₁,n₁,h₂,n₂) with h ∈ (J,2J], n ∈ (N,2N] and
//! |h₁n₁^α − h₂n₂^α| ≤ Δ.
//!
//! Counted by sorting the J·N values h·n^α and, for each value, locating the
//! window of partners by binary search. The window predicate is exactly the
//! floating-point test a direct four-fold loop would apply, because
//! `fl(a − b)` is monotone in each argument.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;

pub const DEFAULT_PAIR_CAP: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NearDiagonal {
    pub j: u64,
    pub n: u64,
    pub alpha: f64,
    pub delta: f64,
    pub count: u64,
    /// ΔJN^{2−α} + JN log(JN), the shape of the upper bound (constant omitted)
    pub envelope: f64,
}

/// The J·N values h·n^α in the order (h, n) lexicographic.
pub fn diagonal_values(j: u64, n: u64, alpha: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity((j * n) as usize);
    for h in j + 1..=2 * j {
        for m in n + 1..=2 * n {
            v.push(h as f64 * (m as f64).powf(alpha));
        }
    }
    v
}

pub fn count_near_diagonal(j: u64, n: u64, alpha: f64, delta: f64, pair_cap: u64) -> Result<NearDiagonal> {
    count_near_diagonal_with(j, n, alpha, delta, pair_cap, Exec::default())
}

pub fn count_near_diagonal_with(
    j: u64,
    n: u64,
    alpha: f64,
    delta: f64,
    pair_cap: u64,
    exec: Exec,
) -> Result<NearDiagonal> {
    if j == 0 || n == 0 {
        return Err(Error::pre("J and N must be >= 1"));
    }
    if !(alpha > 0.5 && alpha < 1.0) {
        return Err(Error::domain(format!("alpha must lie in (1/2, 1), got {alpha}")));
    }
    if !(delta >= 0.0) {
        return Err(Error::pre("delta must be >= 0"));
    }
    let size = j.checked_mul(n).filter(|&s| s <= pair_cap).ok_or(Error::Cost {
        requested: j as u128 * n as u128,
        cap: pair_cap as u128,
    })?;
    let mut v = diagonal_values(j, n, alpha);
    v.sort_by(f64::total_cmp);
    let sorted = &v;
    let count = exec.sum_range(size as usize, |i| {
        let x = sorted[i];
        let lo = sorted.partition_point(|&y| x - y > delta);
        let hi = sorted.partition_point(|&y| y <= x || y - x <= delta);
        (hi - lo) as u64
    });
    let (jf, nf) = (j as f64, n as f64);
    Ok(NearDiagonal {
        j,
        n,
        alpha,
        delta,
        count,
        envelope: delta * jf * nf.powf(2.0 - alpha) + jf * nf * (jf * nf).ln(),
    })
}
