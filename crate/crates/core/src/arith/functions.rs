use serde::{Deserialize, Serialize};

use super::spf::SpfTable;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArithFn {
    Mu,
    Lambda,
    Phi,
    OmegaBig,
    /// r-fold divisor function τ_r.
    TauR(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ArithValue {
    Int(i128),
    Real(f64),
}

impl ArithValue {
    pub fn as_f64(self) -> f64 {
        match self {
            ArithValue::Int(v) => v as f64,
            ArithValue::Real(v) => v,
        }
    }
}

pub fn arith_fn(n: u64, kind: ArithFn, t: &SpfTable) -> Result<ArithValue> {
    Ok(match kind {
        ArithFn::Mu => ArithValue::Int(mobius(n, t)? as i128),
        ArithFn::Lambda => ArithValue::Real(von_mangoldt(n, t)?),
        ArithFn::Phi => ArithValue::Int(euler_phi(n, t)? as i128),
        ArithFn::OmegaBig => ArithValue::Int(big_omega(n, t)? as i128),
        ArithFn::TauR(r) => ArithValue::Int(tau_r(n, r, t)? as i128),
    })
}

pub fn mobius(n: u64, t: &SpfTable) -> Result<i8> {
    let f = t.factor(n)?;
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

/// Λ(n) with the natural logarithm.
pub fn von_mangoldt(n: u64, t: &SpfTable) -> Result<f64> {
    let f = t.factor(n)?;
    Ok(match f.as_slice() {
        [(p, _)] => (*p as f64).ln(),
        _ => 0.0,
    })
}

pub fn euler_phi(n: u64, t: &SpfTable) -> Result<u64> {
    let mut phi = n;
    for (p, _) in t.factor(n)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Ω(n): number of prime factors counted with multiplicity.
pub fn big_omega(n: u64, t: &SpfTable) -> Result<u32> {
    Ok(t.factor(n)?.iter().map(|&(_, e)| e).sum())
}

/// τ_r(n) = Π binom(e + r − 1, r − 1); τ_0 is the identity at 1 and 0 elsewhere.
pub fn tau_r(n: u64, r: u32, t: &SpfTable) -> Result<u128> {
    let f = t.factor(n)?;
    if r == 0 {
        return Ok(u128::from(f.is_empty()));
    }
    Ok(f.iter()
        .map(|&(_, e)| binomial(u128::from(e + r - 1), u128::from(r - 1)))
        .product())
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    let k = if k > n - k { n - k } else { k };
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let t = SpfTable::new(100).unwrap();
        assert_eq!(arith_fn(6, ArithFn::Mu, &t).unwrap(), ArithValue::Int(1));
        assert_eq!(arith_fn(8, ArithFn::Lambda, &t).unwrap(), ArithValue::Real(2f64.ln()));
        assert_eq!(arith_fn(10, ArithFn::Phi, &t).unwrap(), ArithValue::Int(4));
        assert_eq!(arith_fn(12, ArithFn::OmegaBig, &t).unwrap(), ArithValue::Int(3));
        assert_eq!(arith_fn(12, ArithFn::TauR(2), &t).unwrap(), ArithValue::Int(6));
        assert_eq!(arith_fn(1, ArithFn::Lambda, &t).unwrap(), ArithValue::Real(0.0));
        assert_eq!(arith_fn(12, ArithFn::Lambda, &t).unwrap(), ArithValue::Real(0.0));
    }

    #[test]
    fn tau_r_matches_ordered_factorization_count() {
        let t = SpfTable::new(400).unwrap();
        fn count(n: u64, r: u32) -> u128 {
            if r == 0 {
                return u128::from(n == 1);
            }
            (1..=n).filter(|d| n % d == 0).map(|d| count(n / d, r - 1)).sum()
        }
        for n in 1..=400 {
            for r in 0..=4 {
                assert_eq!(tau_r(n, r, &t).unwrap(), count(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn mobius_and_mangoldt_divisor_sums() {
        let limit = 100_000;
        let t = SpfTable::new(limit).unwrap();
        let mu: Vec<i64> = (0..=limit)
            .map(|n| if n == 0 { 0 } else { mobius(n, &t).unwrap() as i64 })
            .collect();
        let lam: Vec<f64> = (0..=limit)
            .map(|n| if n == 0 { 0.0 } else { von_mangoldt(n, &t).unwrap() })
            .collect();
        let mut mu_sum = vec![0i64; limit as usize + 1];
        let mut lam_sum = vec![0f64; limit as usize + 1];
        for d in 1..=limit as usize {
            for m in (d..=limit as usize).step_by(d) {
                mu_sum[m] += mu[d];
                lam_sum[m] += lam[d];
            }
        }
        for n in 1..=limit as usize {
            assert_eq!(mu_sum[n], i64::from(n == 1), "n={n}");
            assert!((lam_sum[n] - (n as f64).ln()).abs() <= 1e-9, "n={n}");
        }
    }
}
