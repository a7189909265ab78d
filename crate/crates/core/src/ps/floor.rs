//! Certified comparison of `base^exponent` against an integer.
//!
//! The exponent is taken to be exactly the given `f64`. A comparison is
//! settled in tiers:
//!
//! 1. (optional) `f64::powf` with a guard band of 2⁻⁴⁰ relative: only
//!    results that clear the band by a wide margin are accepted;
//! 2. MPFR `pow` rounded toward −∞ at `base_precision` bits. The true value
//!    lies in `[r, next_up(r))`, or equals `r` when MPFR reports an exact
//!    result; the comparison is decided if the target is outside that cell;
//! 3. otherwise the precision is multiplied by `escalation_factor` and the
//!    evaluation repeated, up to `max_precision`, after which
//!    [`Error::PrecisionExhausted`] is returned.
//!
//! With targets below 2⁶⁴ a 64-bit cell is at most one unit wide and has
//! integer endpoints, so tier 2 always settles at `base_precision ≥ 64`;
//! escalation only matters for narrower policies.

use std::cmp::Ordering;

use rug::float::Round;
use rug::ops::PowAssignRound;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const EXACT_F64: u64 = 1 << 53;
const GUARD: f64 = 1.0 / (1u64 << 40) as f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub base_precision: u32,
    pub max_precision: u32,
    pub escalation_factor: u32,
    /// Accept `f64` results that clear the guard band.
    pub fast_filter: bool,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { base_precision: 64, max_precision: 4096, escalation_factor: 2, fast_filter: true }
    }
}

impl PrecisionPolicy {
    pub fn validate(&self) -> Result<()> {
        if self.base_precision < 64 {
            return Err(Error::pre("base_precision must be at least 64 bits"));
        }
        if self.max_precision < self.base_precision {
            return Err(Error::pre("max_precision must be >= base_precision"));
        }
        if self.escalation_factor < 2 {
            return Err(Error::pre("escalation_factor must be >= 2"));
        }
        Ok(())
    }
}

/// Exact ordering of `base^exponent` relative to `target`.
pub fn cmp_pow(base: u64, exponent: f64, target: u64, policy: &PrecisionPolicy) -> Result<Ordering> {
    if policy.fast_filter && base < EXACT_F64 && target < EXACT_F64 {
        let v = (base as f64).powf(exponent);
        let band = v * GUARD + f64::MIN_POSITIVE;
        let t = target as f64;
        if v - band > t {
            return Ok(Ordering::Greater);
        }
        if v + band < t {
            return Ok(Ordering::Less);
        }
    }
    let mut prec = policy.base_precision;
    loop {
        if let Some(o) = cmp_pow_mpfr(base, exponent, target, prec) {
            return Ok(o);
        }
        let next = prec.saturating_mul(policy.escalation_factor);
        if prec >= policy.max_precision {
            return Err(Error::PrecisionExhausted { base, exponent, bits: prec });
        }
        prec = next.min(policy.max_precision);
    }
}

fn cmp_pow_mpfr(base: u64, exponent: f64, target: u64, prec: u32) -> Option<Ordering> {
    let mut r = Float::with_val(prec, base);
    let e = Float::with_val(prec.max(53), exponent);
    let dir = r.pow_assign_round(&e, Round::Down);
    if dir == Ordering::Equal {
        return r.partial_cmp(&target);
    }
    // r < true value < next_up(r)
    if r >= target {
        return Some(Ordering::Greater);
    }
    r.next_up();
    if r <= target {
        return Some(Ordering::Less);
    }
    None
}

/// `⌊base^exponent⌋` together with whether the power is an exact integer.
pub fn floor_pow(base: u64, exponent: f64, policy: &PrecisionPolicy) -> Result<(u64, bool)> {
    let mut c = (base as f64).powf(exponent).floor().max(0.0) as u64;
    let mut o = cmp_pow(base, exponent, c, policy)?;
    while o == Ordering::Less {
        c -= 1;
        o = cmp_pow(base, exponent, c, policy)?;
    }
    loop {
        match cmp_pow(base, exponent, c + 1, policy)? {
            Ordering::Less => return Ok((c, o == Ordering::Equal)),
            next => {
                c += 1;
                o = next;
            }
        }
    }
}

/// `⌈base^exponent⌉`.
pub fn ceil_pow(base: u64, exponent: f64, policy: &PrecisionPolicy) -> Result<u64> {
    let (f, exact) = floor_pow(base, exponent, policy)?;
    Ok(if exact { f } else { f + 1 })
}

/// `⌊k^{1/γ}⌋`, i.e. the largest `n` with `n^γ ≤ k`. Only powers with the
/// exact exponent γ are evaluated.
pub fn floor_root(k: u64, gamma: f64, policy: &PrecisionPolicy) -> Result<u64> {
    let mut n = (k as f64).powf(1.0 / gamma).floor().max(1.0) as u64;
    while n > 1 && cmp_pow(n, gamma, k, policy)? == Ordering::Greater {
        n -= 1;
    }
    while cmp_pow(n + 1, gamma, k, policy)? != Ordering::Greater {
        n += 1;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strict() -> PrecisionPolicy {
        PrecisionPolicy { fast_filter: false, ..Default::default() }
    }

    #[test]
    fn exact_powers_are_detected() {
        for p in [PrecisionPolicy::default(), strict()] {
            // 16^0.75 = 8 exactly
            assert_eq!(cmp_pow(16, 0.75, 8, &p).unwrap(), Ordering::Equal);
            assert_eq!(floor_pow(16, 0.75, &p).unwrap(), (8, true));
            assert_eq!(ceil_pow(16, 0.75, &p).unwrap(), 8);
            assert_eq!(floor_root(8, 0.75, &p).unwrap(), 16);
            assert_eq!(floor_pow(1, 0.9, &p).unwrap(), (1, true));
            assert_eq!(floor_root(1, 0.9, &p).unwrap(), 1);
        }
    }

    #[test]
    fn near_integer_values() {
        // 12^0.9 ≈ 9.358, 13^0.9 ≈ 10.054
        let p = strict();
        assert_eq!(floor_pow(12, 0.9, &p).unwrap(), (9, false));
        assert_eq!(ceil_pow(13, 0.9, &p).unwrap(), 11);
        assert_eq!(floor_root(10, 0.9, &p).unwrap(), 12);
    }

    #[test]
    fn tiers_agree() {
        let fast = PrecisionPolicy::default();
        let slow = strict();
        for b in (1..50_000u64).step_by(37) {
            for g in [0.51, 0.75, 0.9, 0.95, 0.99] {
                assert_eq!(floor_pow(b, g, &fast).unwrap(), floor_pow(b, g, &slow).unwrap());
                assert_eq!(floor_root(b, g, &fast).unwrap(), floor_root(b, g, &slow).unwrap());
            }
        }
    }

    #[test]
    fn exhaustion_is_reported_not_guessed() {
        // 2^e ≈ 1001.5; 8-bit floats near 1000 are spaced by 4, so the cell [1000, 1004) contains 1001
        let e = 1001.5f64.log2();
        let tight = PrecisionPolicy { base_precision: 8, max_precision: 8, escalation_factor: 2, fast_filter: false };
        assert!(matches!(cmp_pow(2, e, 1001, &tight), Err(Error::PrecisionExhausted { bits: 8, .. })));
        let escalating = PrecisionPolicy { max_precision: 64, ..tight };
        assert_eq!(cmp_pow(2, e, 1001, &escalating).unwrap(), Ordering::Greater);
    }

    #[test]
    fn policy_validation() {
        assert!(PrecisionPolicy::default().validate().is_ok());
        assert!(PrecisionPolicy { base_precision: 32, ..Default::default() }.validate().is_err());
        assert!(PrecisionPolicy { max_precision: 32, ..Default::default() }.validate().is_err());
        assert!(PrecisionPolicy { escalation_factor: 1, ..Default::default() }.validate().is_err());
    }
}
