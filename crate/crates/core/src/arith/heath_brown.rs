//! Heath-Brown identity with three μ-factors, verified term by term.
//!
//! For `n ≤ cap³`:
//!
//! Λ(n) = Σ_{j=1}^{3} C(3,j)(−1)^{j−1} Σ_{k₁⋯k_{2j}=n, k₁..k_j ≤ cap} μ(k₁)⋯μ(k_j) log k_{2j}.
//!
//! The μ-part (k₁..k_j) is enumerated by divisor recursion. For the smooth
//! part, the number of ordered ways to write `m/d` as k_{j+1}⋯k_{2j−1} is
//! τ_{j−1}(m/d), so only the last factor `d = k_{2j}` needs an explicit loop.
//! Contributions are accumulated as integer coefficients on `log d` before
//! any floating-point work.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::functions::{mobius, tau_r, von_mangoldt};
use super::spf::SpfTable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeathBrownCheck {
    pub n: u64,
    pub cap: u64,
    pub lambda: f64,
    pub identity: f64,
    pub residual: f64,
}

impl HeathBrownCheck {
    /// Residual allowance `1e-9 · max(1, log n)`.
    pub fn tolerance(&self) -> f64 {
        1e-9 * (self.n as f64).ln().max(1.0)
    }

    pub fn passes(&self) -> bool {
        self.residual <= self.tolerance()
    }
}

/// Smallest `c` with `c³ ≥ n`.
pub fn cube_root_ceil(n: u64) -> u64 {
    let mut c = (n as f64).cbrt().round() as u64;
    while c.saturating_mul(c).saturating_mul(c) < n {
        c += 1;
    }
    while c > 1 && (c - 1) * (c - 1) * (c - 1) >= n {
        c -= 1;
    }
    c
}

pub fn heath_brown_check(n: u64, cap: u64, t: &SpfTable) -> Result<HeathBrownCheck> {
    if n < 2 {
        return Err(Error::pre(format!("heath-brown check needs n >= 2, got {n}")));
    }
    let need = cube_root_ceil(n);
    if cap < need {
        return Err(Error::pre(format!("cap {cap} below ceil(n^(1/3)) = {need}")));
    }
    let divisors = t.divisors(n)?;
    let mut coeff: BTreeMap<u64, i128> = BTreeMap::new();

    for j in 1..=3u32 {
        let sign: i128 = if j % 2 == 1 { 1 } else { -1 };
        let weight = sign * [0, 3, 3, 1][j as usize];
        // mu_part[m] = Σ over ordered (k₁..k_j), k_i ≤ cap, Π k_i = n/m, of Π μ(k_i)
        let mut mu_part: BTreeMap<u64, i128> = BTreeMap::new();
        mu_chains(n, j, cap, &divisors, 1, t, &mut mu_part)?;
        for (&m, &mu_w) in &mu_part {
            if mu_w == 0 {
                continue;
            }
            for &d in divisors.iter().filter(|&&d| m % d == 0 && d > 1) {
                let ways = tau_r(m / d, j - 1, t)? as i128;
                if ways != 0 {
                    *coeff.entry(d).or_insert(0) += weight * mu_w * ways;
                }
            }
        }
    }

    let identity: f64 = coeff
        .iter()
        .filter(|(_, &c)| c != 0)
        .map(|(&d, &c)| c as f64 * (d as f64).ln())
        .sum();
    let lambda = von_mangoldt(n, t)?;
    Ok(HeathBrownCheck { n, cap, lambda, identity, residual: (lambda - identity).abs() })
}

fn mu_chains(
    rem: u64,
    depth: u32,
    cap: u64,
    divisors: &[u64],
    acc: i128,
    t: &SpfTable,
    out: &mut BTreeMap<u64, i128>,
) -> Result<()> {
    if depth == 0 {
        *out.entry(rem).or_insert(0) += acc;
        return Ok(());
    }
    for &k in divisors.iter().take_while(|&&k| k <= cap.min(rem)) {
        if rem % k != 0 {
            continue;
        }
        let mu = mobius(k, t)?;
        if mu != 0 {
            mu_chains(rem / k, depth - 1, cap, divisors, acc * mu as i128, t, out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every ordered factorization into 2j parts, enumerated directly.
    fn brute(n: u64, cap: u64, t: &SpfTable) -> f64 {
        fn walk(rem: u64, parts: &mut Vec<u64>, len: usize, out: &mut Vec<Vec<u64>>) {
            if parts.len() == len - 1 {
                parts.push(rem);
                out.push(parts.clone());
                parts.pop();
                return;
            }
            for k in 1..=rem {
                if rem % k == 0 {
                    parts.push(k);
                    walk(rem / k, parts, len, out);
                    parts.pop();
                }
            }
        }
        let mut total = 0.0;
        for j in 1..=3usize {
            let binom = [0.0, 3.0, 3.0, 1.0][j];
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            let mut all = Vec::new();
            walk(n, &mut Vec::new(), 2 * j, &mut all);
            for f in all {
                if f[..j].iter().any(|&k| k > cap) {
                    continue;
                }
                let mu: i64 = f[..j].iter().map(|&k| mobius(k, t).unwrap() as i64).product();
                total += sign * binom * mu as f64 * (f[2 * j - 1] as f64).ln();
            }
        }
        total
    }

    #[test]
    fn prime_power_and_squarefree_examples() {
        let t = SpfTable::new(100).unwrap();
        let r = heath_brown_check(8, 2, &t).unwrap();
        assert!(r.residual < 1e-12);
        assert!((r.identity - 2f64.ln()).abs() < 1e-12);
        let r = heath_brown_check(6, 2, &t).unwrap();
        assert!(r.residual < 1e-12);
        assert!(r.identity.abs() < 1e-12);
        assert!(brute(6, 2, &t).abs() < 1e-12);
    }

    #[test]
    fn matches_direct_enumeration() {
        let t = SpfTable::new(200).unwrap();
        for n in 2..=120 {
            let cap = cube_root_ceil(n);
            let r = heath_brown_check(n, cap, &t).unwrap();
            assert!((r.identity - brute(n, cap, &t)).abs() < 1e-9, "n={n}");
            assert!(r.passes(), "n={n}");
        }
    }

    #[test]
    fn cap_below_cube_root_rejected() {
        let t = SpfTable::new(100).unwrap();
        assert!(matches!(heath_brown_check(28, 3, &t), Err(Error::Precondition(_))));
        assert!(heath_brown_check(27, 3, &t).is_ok());
    }

    #[test]
    fn cube_root_ceil_values() {
        assert_eq!(cube_root_ceil(8), 2);
        assert_eq!(cube_root_ceil(9), 3);
        assert_eq!(cube_root_ceil(27), 3);
        assert_eq!(cube_root_ceil(28), 4);
        assert_eq!(cube_root_ceil(2), 2);
    }
}
