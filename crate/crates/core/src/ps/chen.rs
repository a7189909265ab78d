//! Empirical counts behind the weighted sieve for p + 2 = 𝒫₂.
//!
//! 𝒜 = {a ≤ x : a = p + 2, a a PS number}. For odd a ∈ 𝒜 free of primes
//! below z₁ = x^{1/10.92}:
//!
//! * ϱ₁(a) = #{p | a : z₁ ≤ p < z₂}, with z₂ = x^{1/3.29};
//! * ϱ₂(a) = 1 iff a = p₁p₂p₃ with z₁ ≤ p₁ < z₂ ≤ p₂ < p₃;
//! * ϱ₃(a) = 1 iff a = p₁p₂p₃ with z₂ ≤ p₁ < p₂ < p₃.
//!
//! S counts such a; S_i sums ϱ_i over them.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::primes::sieve_primes_with;
use super::sequence::{ps_flags, PSContext};
use crate::arith::SpfTable;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Exponent `num/den` of a sieving level x^{num/den}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelExponent {
    pub num: u64,
    pub den: u64,
}

impl LevelExponent {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::pre("level exponent must be a positive fraction"));
        }
        let g = num.gcd(&den);
        Ok(LevelExponent { num: num / g, den: den / g })
    }

    /// `1/v` for a decimal literal `v` such as "10.92", kept exact.
    pub fn reciprocal_of_decimal(v: &str) -> Result<Self> {
        let (int, frac) = v.split_once('.').unwrap_or((v, ""));
        let digits = format!("{int}{frac}");
        let scaled: u64 = digits
            .parse()
            .map_err(|_| Error::pre(format!("not a decimal literal: {v}")))?;
        let scale = 10u64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| Error::pre(format!("too many decimals: {v}")))?;
        Self::new(scale, scaled)
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Least integer `t ≥ 1` with `t ≥ x^{num/den}`, decided exactly as `t^den ≥ x^num`.
    pub fn ceil_threshold(self, x: u64) -> u64 {
        let target = BigUint::from(x).pow(self.num as u32);
        let reaches = |t: u64| BigUint::from(t).pow(self.den as u32) >= target;
        let mut t = ((x as f64).powf(self.as_f64()).ceil() as u64).max(1);
        while t > 1 && reaches(t - 1) {
            t -= 1;
        }
        while !reaches(t) {
            t += 1;
        }
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChenParams {
    pub lower: LevelExponent,
    pub upper: LevelExponent,
}

impl Default for ChenParams {
    fn default() -> Self {
        ChenParams {
            lower: LevelExponent::new(25, 273).unwrap(),  // 1/10.92
            upper: LevelExponent::new(100, 329).unwrap(), // 1/3.29
        }
    }
}

/// Integer sieving levels: `p ≥ z1` ⇔ p ≥ x^{lower}, `p < z2` ⇔ p < x^{upper}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChenThresholds {
    pub z1: u64,
    pub z2: u64,
}

impl ChenParams {
    pub fn thresholds(&self, x: u64) -> ChenThresholds {
        ChenThresholds { z1: self.lower.ceil_threshold(x), z2: self.upper.ceil_threshold(x) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RhoWeights {
    pub rho1: u32,
    pub rho2: u32,
    pub rho3: u32,
}

impl ChenThresholds {
    /// Weights of `a` from its factorization; `None` if `a` is even or has a prime below z1.
    pub fn weights(&self, factors: &[(u64, u32)]) -> Option<RhoWeights> {
        let (p1, _) = *factors.first()?;
        if p1 == 2 || p1 < self.z1 {
            return None;
        }
        let rho1 = factors.iter().filter(|&&(p, _)| p >= self.z1 && p < self.z2).count() as u32;
        let three_distinct = factors.len() == 3 && factors.iter().all(|&(_, e)| e == 1);
        let (rho2, rho3) = if three_distinct {
            let (p2, _) = factors[1];
            (u32::from(p1 < self.z2 && p2 >= self.z2), u32::from(p1 >= self.z2))
        } else {
            (0, 0)
        };
        Some(RhoWeights { rho1, rho2, rho3 })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChenCounts {
    pub x: u64,
    pub gamma: f64,
    pub thresholds: ChenThresholds,
    /// |𝒜|
    pub candidates: u64,
    #[serde(rename = "S")]
    pub s: u64,
    #[serde(rename = "S1")]
    pub s1: u64,
    #[serde(rename = "S2")]
    pub s2: u64,
    #[serde(rename = "S3")]
    pub s3: u64,
    /// S − S1/2 − S2/2 − S3
    pub weighted: f64,
}

impl ChenCounts {
    pub fn weighted_of(s: u64, s1: u64, s2: u64, s3: u64) -> f64 {
        s as f64 - s1 as f64 / 2.0 - s2 as f64 / 2.0 - s3 as f64
    }
}

pub fn chen_counts(x: u64, ctx: &PSContext, params: &ChenParams, spf: &SpfTable) -> Result<ChenCounts> {
    chen_counts_with(x, ctx, params, spf, Exec::default())
}

pub fn chen_counts_with(
    x: u64,
    ctx: &PSContext,
    params: &ChenParams,
    spf: &SpfTable,
    exec: Exec,
) -> Result<ChenCounts> {
    if x < 1000 {
        return Err(Error::pre(format!("chen_counts needs x >= 1000, got {x}")));
    }
    if spf.limit() < x {
        return Err(Error::Range { n: x, limit: spf.limit() });
    }
    let th = params.thresholds(x);
    let flags = ps_flags(x, ctx, exec)?;
    let shifted: Vec<u64> = sieve_primes_with(2, x - 2, exec)?
        .iter()
        .map(|p| p + 2)
        .filter(|&a| flags[a as usize])
        .collect();
    let candidates = shifted.len() as u64;
    let parts = exec.map(shifted.chunks(4096).collect::<Vec<_>>(), |chunk| {
        let mut acc = [0u64; 4];
        for &a in chunk {
            let f = spf.factor(a)?;
            if let Some(w) = th.weights(&f) {
                acc[0] += 1;
                acc[1] += u64::from(w.rho1);
                acc[2] += u64::from(w.rho2);
                acc[3] += u64::from(w.rho3);
            }
        }
        Ok::<_, Error>(acc)
    });
    let mut tot = [0u64; 4];
    for p in parts {
        for (t, v) in tot.iter_mut().zip(p?) {
            *t += v;
        }
    }
    let [s, s1, s2, s3] = tot;
    Ok(ChenCounts {
        x,
        gamma: ctx.gamma,
        thresholds: th,
        candidates,
        s,
        s1,
        s2,
        s3,
        weighted: ChenCounts::weighted_of(s, s1, s2, s3),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightWitness {
    pub a: u64,
    pub big_omega: u32,
    pub weights: RhoWeights,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCheck {
    pub x: u64,
    pub checked: u64,
    pub holds: bool,
    pub witnesses: Vec<WeightWitness>,
}

/// Check 𝟙_{𝒫₂}(a) ≥ 1 − ϱ₁/2 − ϱ₂/2 − ϱ₃ for every odd squarefree `a ≤ x`
/// with no prime factor below z₁. Evaluated in integers after doubling.
pub fn verify_weight_inequality(x: u64, params: &ChenParams, spf: &SpfTable) -> Result<WeightCheck> {
    if x < 1000 {
        return Err(Error::pre(format!("weight check needs x >= 1000, got {x}")));
    }
    if spf.limit() < x {
        return Err(Error::Range { n: x, limit: spf.limit() });
    }
    let th = params.thresholds(x);
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for a in (3..=x).step_by(2) {
        let f = spf.factor(a)?;
        if f.iter().any(|&(_, e)| e > 1) {
            continue;
        }
        let Some(w) = th.weights(&f) else { continue };
        checked += 1;
        let omega = f.len() as u32;
        let lhs = 2 * i64::from(omega <= 2);
        let rhs = 2 - i64::from(w.rho1) - i64::from(w.rho2) - 2 * i64::from(w.rho3);
        if lhs < rhs {
            witnesses.push(WeightWitness { a, big_omega: omega, weights: w });
        }
    }
    Ok(WeightCheck { x, checked, holds: witnesses.is_empty(), witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_reciprocals_are_exact() {
        assert_eq!(LevelExponent::reciprocal_of_decimal("10.92").unwrap(), LevelExponent { num: 25, den: 273 });
        assert_eq!(LevelExponent::reciprocal_of_decimal("3.29").unwrap(), LevelExponent { num: 100, den: 329 });
        assert_eq!(LevelExponent::reciprocal_of_decimal("3").unwrap(), LevelExponent { num: 1, den: 3 });
        assert!(LevelExponent::reciprocal_of_decimal("x").is_err());
    }

    #[test]
    fn thresholds_are_exact_ceilings() {
        let p = ChenParams::default();
        for x in [1000u64, 10_000, 100_000, 1_000_000, 123_457] {
            let th = p.thresholds(x);
            let z1 = (x as f64).powf(1.0 / 10.92);
            let z2 = (x as f64).powf(1.0 / 3.29);
            assert!((th.z1 as f64) >= z1 && (th.z1 as f64) - 1.0 < z1, "x={x}");
            assert!((th.z2 as f64) >= z2 && (th.z2 as f64) - 1.0 < z2, "x={x}");
        }
        // 8^{1/3} = 2 exactly: ceiling is 2 itself
        assert_eq!(LevelExponent::new(1, 3).unwrap().ceil_threshold(8), 2);
        assert_eq!(LevelExponent::new(1, 3).unwrap().ceil_threshold(9), 3);
    }

    #[test]
    fn vacuous_sieving_range_keeps_all_odd() {
        // x^{1/10.92} ≤ 3 for x ≤ 3^{10.92} ≈ 162_000
        let th = ChenParams::default().thresholds(10_000);
        assert!(th.z1 <= 3);
        assert!(th.weights(&[(3, 1)]).is_some());
        assert!(th.weights(&[(2, 1), (3, 1)]).is_none());
    }

    #[test]
    fn weight_cases() {
        let th = ChenThresholds { z1: 3, z2: 30 };
        // prime
        assert_eq!(th.weights(&[(101, 1)]).unwrap(), RhoWeights { rho1: 0, rho2: 0, rho3: 0 });
        // p1 p2 p3 above z2
        assert_eq!(th.weights(&[(31, 1), (37, 1), (41, 1)]).unwrap(), RhoWeights { rho1: 0, rho2: 0, rho3: 1 });
        // straddling
        assert_eq!(th.weights(&[(5, 1), (31, 1), (37, 1)]).unwrap(), RhoWeights { rho1: 1, rho2: 1, rho3: 0 });
        // square factor blocks ϱ₂/ϱ₃
        assert_eq!(th.weights(&[(5, 2), (31, 1)]).unwrap(), RhoWeights { rho1: 1, rho2: 0, rho3: 0 });
    }

    #[test]
    fn weight_inequality_small() {
        for x in [1_000u64, 10_000] {
            let spf = SpfTable::new(x).unwrap();
            let r = verify_weight_inequality(x, &ChenParams::default(), &spf).unwrap();
            assert!(r.holds, "{:?}", r.witnesses);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn counts_subset_relations() {
        let x = 200_000;
        let spf = SpfTable::new(x).unwrap();
        let ctx = PSContext::new(0.95).unwrap();
        let c = chen_counts(x, &ctx, &ChenParams::default(), &spf).unwrap();
        assert!(c.s >= c.s2.max(c.s3));
        assert!(c.candidates >= c.s);
        assert_eq!(c.weighted, ChenCounts::weighted_of(c.s, c.s1, c.s2, c.s3));
        let seq = chen_counts_with(x, &ctx, &ChenParams::default(), &spf, Exec::Sequential).unwrap();
        assert_eq!(c, seq);
    }

    #[test]
    fn table_too_small() {
        let spf = SpfTable::new(5_000).unwrap();
        let ctx = PSContext::new(0.9).unwrap();
        assert!(matches!(
            chen_counts(10_000, &ctx, &ChenParams::default(), &spf),
            Err(Error::Range { .. })
        ));
    }
}
