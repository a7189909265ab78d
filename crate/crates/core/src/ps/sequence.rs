//! Piatetski-Shapiro numbers ⌊k^{1/γ}⌋.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::floor::{ceil_pow, cmp_pow, floor_root, PrecisionPolicy};
use crate::error::{Error, Result};
use crate::exec::Exec;

const ENUM_CHUNK: u64 = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PSContext {
    pub gamma: f64,
    pub precision: PrecisionPolicy,
}

impl PSContext {
    pub fn new(gamma: f64) -> Result<Self> {
        Self::with_policy(gamma, PrecisionPolicy::default())
    }

    pub fn with_policy(gamma: f64, precision: PrecisionPolicy) -> Result<Self> {
        if !(gamma > 0.5 && gamma < 1.0) {
            return Err(Error::domain(format!("gamma must lie in (1/2, 1), got {gamma}")));
        }
        precision.validate()?;
        Ok(PSContext { gamma, precision })
    }
}

/// Whether `m = ⌊k^{1/γ}⌋` for some integer `k`, decided as
/// `⌊−m^γ⌋ − ⌊−(m+1)^γ⌋ = 1`.
pub fn is_ps(m: u64, ctx: &PSContext) -> Result<bool> {
    if m == 0 {
        return Err(Error::pre("is_ps needs m >= 1"));
    }
    let g = ctx.gamma;
    // ⌊−y⌋ = −⌈y⌉
    let lo = ceil_pow(m, g, &ctx.precision)?;
    // ⌈(m+1)^γ⌉ = lo + 1  ⇔  (m+1)^γ > lo
    Ok(cmp_pow(m + 1, g, lo, &ctx.precision)? == Ordering::Greater)
}

/// Largest `k` with `⌊k^{1/γ}⌋ ≤ x`, i.e. `⌈(x+1)^γ⌉ − 1`.
pub fn index_bound(x: u64, ctx: &PSContext) -> Result<u64> {
    Ok(ceil_pow(x + 1, ctx.gamma, &ctx.precision)? - 1)
}

/// Distinct PS numbers `≤ x`, increasing.
pub fn enumerate_ps(x: u64, ctx: &PSContext) -> Result<Vec<u64>> {
    enumerate_ps_with(x, ctx, Exec::default())
}

pub fn enumerate_ps_with(x: u64, ctx: &PSContext, exec: Exec) -> Result<Vec<u64>> {
    if x == 0 {
        return Err(Error::pre("enumerate_ps needs x >= 1"));
    }
    let kmax = index_bound(x, ctx)?;
    let chunks = exec.map_chunks(kmax, ENUM_CHUNK, |lo, hi| {
        (lo + 1..=hi)
            .map(|k| floor_root(k, ctx.gamma, &ctx.precision))
            .collect::<Result<Vec<u64>>>()
    });
    let mut out = Vec::with_capacity(kmax as usize);
    for c in chunks {
        out.extend(c?);
    }
    out.dedup();
    debug_assert!(out.last().map_or(true, |&v| v <= x));
    Ok(out)
}

/// Membership bitmap `flags[m] = is_ps(m)` for `0 ≤ m ≤ x` (index 0 unused).
pub fn ps_flags(x: u64, ctx: &PSContext, exec: Exec) -> Result<Vec<bool>> {
    let mut flags = vec![false; x as usize + 1];
    for m in enumerate_ps_with(x, ctx, exec)? {
        flags[m as usize] = true;
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_range_enforced() {
        assert!(PSContext::new(0.5).is_err());
        assert!(PSContext::new(1.0).is_err());
        assert!(PSContext::new(0.75).is_ok());
    }

    #[test]
    fn named_membership_examples() {
        for g in [0.6, 0.9, 0.95, 0.99] {
            assert!(is_ps(1, &PSContext::new(g).unwrap()).unwrap());
        }
        let ctx = PSContext::new(0.9).unwrap();
        assert!(is_ps(12, &ctx).unwrap());
        assert!(is_ps(5, &ctx).unwrap());
        assert!(!is_ps(6, &ctx).unwrap());
        assert!(!is_ps(9, &ctx).unwrap());
        assert!(!is_ps(13, &ctx).unwrap());
    }

    #[test]
    fn small_enumeration() {
        let ctx = PSContext::new(0.9).unwrap();
        assert_eq!(enumerate_ps(13, &ctx).unwrap(), vec![1, 2, 3, 4, 5, 7, 8, 10, 11, 12]);
        assert_eq!(enumerate_ps(1, &ctx).unwrap(), vec![1]);
    }

    #[test]
    fn count_bounded_by_x_to_gamma() {
        for g in [0.55, 0.8, 0.97] {
            let ctx = PSContext::new(g).unwrap();
            for x in [1u64, 2, 10, 1000, 54_321] {
                let n = enumerate_ps(x, &ctx).unwrap().len() as f64;
                assert!(n <= (x as f64).powf(g) + 1.0, "g={g} x={x}");
            }
        }
    }

    #[test]
    fn membership_matches_enumeration() {
        for g in [0.6, 0.75, 0.9] {
            let ctx = PSContext::new(g).unwrap();
            let flags = ps_flags(20_000, &ctx, Exec::Sequential).unwrap();
            for m in 1..=20_000u64 {
                assert_eq!(is_ps(m, &ctx).unwrap(), flags[m as usize], "g={g} m={m}");
            }
        }
    }

    #[test]
    fn exact_integer_powers_do_not_stall() {
        // γ = 3/4: 8 = 16^{3/4}, so ⌊8^{4/3}⌋ = 16 lands exactly on an integer
        let ctx = PSContext::new(0.75).unwrap();
        let v = enumerate_ps(100, &ctx).unwrap();
        assert!(v.contains(&16));
        assert!(is_ps(16, &ctx).unwrap());
    }
}
