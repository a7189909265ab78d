//! π_γ(x) and the Bombieri-Vinogradov discrepancy table over PS primes.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::primes::sieve_primes_with;
use super::sequence::{enumerate_ps_with, PSContext};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiGamma {
    pub x: u64,
    pub gamma: f64,
    pub count: u64,
    /// x^γ / log x
    pub asymptotic: f64,
}

impl PiGamma {
    pub fn ratio(&self) -> f64 {
        self.count as f64 / self.asymptotic
    }
}

/// Primes `p ≤ x` that are PS numbers, increasing.
pub fn ps_primes(x: u64, ctx: &PSContext, exec: Exec) -> Result<Vec<u64>> {
    if x < 2 {
        return Ok(Vec::new());
    }
    let primes = sieve_primes_with(2, x, exec)?;
    Ok(enumerate_ps_with(x, ctx, exec)?
        .into_iter()
        .filter(|&m| primes.is_prime(m) == Some(true))
        .collect())
}

pub fn pi_gamma(x: u64, ctx: &PSContext) -> Result<PiGamma> {
    pi_gamma_with(x, ctx, Exec::default())
}

pub fn pi_gamma_with(x: u64, ctx: &PSContext, exec: Exec) -> Result<PiGamma> {
    if x < 3 {
        return Err(Error::pre(format!("pi_gamma needs x >= 3, got {x}")));
    }
    let count = ps_primes(x, ctx, exec)?.len() as u64;
    let xf = x as f64;
    Ok(PiGamma { x, gamma: ctx.gamma, count, asymptotic: xf.powf(ctx.gamma) / xf.ln() })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub d: u64,
    pub count_in_progression: u64,
    pub expected: f64,
    pub abs_dev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub x: u64,
    pub gamma: f64,
    #[serde(rename = "D")]
    pub max_modulus: u64,
    pub l: i64,
    #[serde(rename = "A")]
    pub log_power: f64,
    pub ps_prime_count: u64,
    pub rows: Vec<DiscrepancyRow>,
    pub total_abs_dev: f64,
    /// total_abs_dev · (log x)^A / x^γ
    pub normalized: f64,
}

/// Euler φ by trial division; moduli here are small.
pub fn phi_small(n: u64) -> u64 {
    let (mut m, mut phi, mut p) = (n, n, 2u64);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

pub fn bv_discrepancy(x: u64, max_modulus: u64, l: i64, log_power: f64, ctx: &PSContext) -> Result<DiscrepancyReport> {
    bv_discrepancy_with(x, max_modulus, l, log_power, ctx, Exec::default())
}

pub fn bv_discrepancy_with(
    x: u64,
    max_modulus: u64,
    l: i64,
    log_power: f64,
    ctx: &PSContext,
    exec: Exec,
) -> Result<DiscrepancyReport> {
    if l == 0 {
        return Err(Error::pre("residue l must be nonzero"));
    }
    if max_modulus == 0 {
        return Err(Error::pre("D must be >= 1"));
    }
    if x < 100 {
        return Err(Error::pre(format!("bv_discrepancy needs x >= 100, got {x}")));
    }
    let primes = ps_primes(x, ctx, exec)?;
    let total = primes.len() as u64;
    let moduli: Vec<u64> = (1..=max_modulus).filter(|d| d.gcd(&l.unsigned_abs()) == 1).collect();
    let rows = exec.map(moduli, |d| {
        let r = l.rem_euclid(d as i64) as u64;
        let count = primes.iter().filter(|&&p| p % d == r).count() as u64;
        let expected = total as f64 / phi_small(d) as f64;
        DiscrepancyRow { d, count_in_progression: count, expected, abs_dev: (count as f64 - expected).abs() }
    });
    let total_abs_dev: f64 = rows.iter().map(|r| r.abs_dev).sum();
    let xf = x as f64;
    Ok(DiscrepancyReport {
        x,
        gamma: ctx.gamma,
        max_modulus,
        l,
        log_power,
        ps_prime_count: total,
        rows,
        total_abs_dev,
        normalized: total_abs_dev * xf.ln().powf(log_power) / xf.powf(ctx.gamma),
    })
}
