use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ps::primes::sieve_primes_with;

/// Truncated twin-prime product ∏_{2<p≤P} (1 − 1/(p−1)²).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularSeriesResult {
    pub value: f64,
    pub prime_bound: u64,
    /// Upper bound on Σ_{n>P} 1/(n−1)², which dominates the omitted factors:
    /// `value·(1 − tail_bound) ≤ limit ≤ value`.
    pub tail_bound: f64,
}

impl SingularSeriesResult {
    pub fn lower(&self) -> f64 {
        self.value * (1.0 - self.tail_bound)
    }
}

pub fn twin_singular_series(prime_bound: u64) -> Result<SingularSeriesResult> {
    twin_singular_series_with(prime_bound, Exec::default())
}

pub fn twin_singular_series_with(prime_bound: u64, exec: Exec) -> Result<SingularSeriesResult> {
    if prime_bound < 3 {
        return Err(Error::pre(format!("prime_bound must be >= 3, got {prime_bound}")));
    }
    let table = sieve_primes_with(3, prime_bound, exec)?;
    // log-sum keeps the ~10^7 factors from drifting
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for p in table.iter() {
        let q = (p - 1) as f64;
        let y = (-1.0 / (q * q)).ln_1p() - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    Ok(SingularSeriesResult {
        value: sum.exp(),
        prime_bound,
        tail_bound: 1.0 / (prime_bound - 1) as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds() {
        assert_eq!(twin_singular_series(3).unwrap().value, 0.75);
        assert!((twin_singular_series(4).unwrap().value - 0.75).abs() < 1e-15);
        assert!((twin_singular_series(5).unwrap().value - 0.703125).abs() < 1e-15);
        assert!(twin_singular_series(2).is_err());
    }

    #[test]
    fn monotone_and_bracketed() {
        let bounds = [10u64, 100, 1000, 10_000, 100_000];
        let vals: Vec<_> = bounds.iter().map(|&b| twin_singular_series(b).unwrap()).collect();
        for w in vals.windows(2) {
            assert!(w[1].value <= w[0].value);
            assert!(w[1].tail_bound < w[0].tail_bound);
            // later partial products stay inside the earlier bracket
            assert!(w[1].value >= w[0].lower());
        }
    }
}
