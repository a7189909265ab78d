//! Slow reference implementations used to cross-check the fast paths. Each takes a different
//! route from the production code: trial division instead of sieves, ⌊k^{1/γ}⌋ in MPFR
//! instead of comparisons of m^γ, integer powers of the decimal constants instead of reduced
//! fractions, and plain nested loops instead of sorting.

use rug::float::Round;
use rug::ops::{Pow, PowAssignRound};
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::ps::{ChenThresholds, RhoWeights};

pub fn is_prime_td(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, increasing primes.
pub fn factor_td(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn phi_td(n: u64) -> u64 {
    factor_td(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// ⌊k^{1/γ}⌋ from an MPFR power with a rounding-error margin, escalating to 1024 bits.
pub fn floor_root_mpfr(k: u64, gamma: f64) -> Result<u64> {
    if k <= 1 {
        return Ok(k);
    }
    let mut prec = 128u32;
    loop {
        let inv = Float::with_val(prec, 1) / Float::with_val(prec, gamma);
        let mut v = Float::with_val(prec, k);
        v.pow_assign_round(&inv, Round::Nearest);
        let fl = v.clone().floor();
        let frac = Float::with_val(prec, &v - &fl);
        let margin = Float::with_val(prec, &v >> (prec as i32 - 16));
        let ok = frac > margin && Float::with_val(prec, 1u32 - frac.clone()) > margin;
        if ok {
            return Ok(fl.to_integer().and_then(|i| i.to_u64()).expect("fits in u64"));
        }
        if prec >= 1024 {
            return Err(Error::PrecisionExhausted { base: k, exponent: 1.0 / gamma, bits: prec });
        }
        prec *= 2;
    }
}

/// Membership flags for PS numbers ≤ x by walking k = 1, 2, … .
pub fn ps_flags_forward(x: u64, gamma: f64) -> Result<Vec<bool>> {
    let mut flags = vec![false; x as usize + 1];
    let mut k = 1;
    loop {
        let m = floor_root_mpfr(k, gamma)?;
        if m > x {
            break;
        }
        flags[m as usize] = true;
        k += 1;
    }
    Ok(flags)
}

/// Smallest integer t ≥ 1 with t^{100·c} ≥ x^{100} for a two-decimal constant c, i.e. t ≥ x^{1/c}.
pub fn decimal_root_threshold(x: u64, hundredths: u32) -> u64 {
    let target = Integer::from(x).pow(100);
    let mut t = 1u64;
    while Integer::from(t).pow(hundredths) < target {
        t += 1;
    }
    t
}

pub fn chen_thresholds_decimal(x: u64) -> ChenThresholds {
    ChenThresholds { z1: decimal_root_threshold(x, 1092), z2: decimal_root_threshold(x, 329) }
}

/// ϱ weights written out from their definitions.
pub fn rho_weights_direct(a: u64, th: &ChenThresholds) -> Option<RhoWeights> {
    if a % 2 == 0 {
        return None;
    }
    let f = factor_td(a);
    if f.iter().any(|&(p, _)| p < th.z1) {
        return None;
    }
    let rho1 = f.iter().filter(|&&(p, _)| th.z1 <= p && p < th.z2).count() as u32;
    let primes: Vec<u64> = f.iter().flat_map(|&(p, e)| std::iter::repeat(p).take(e as usize)).collect();
    let (mut rho2, mut rho3) = (0, 0);
    if primes.len() == 3 && primes[0] < primes[1] && primes[1] < primes[2] {
        let (p1, p2) = (primes[0], primes[1]);
        if th.z1 <= p1 && p1 < th.z2 && th.z2 <= p2 {
            rho2 = 1;
        }
        if th.z2 <= p1 {
            rho3 = 1;
        }
    }
    Some(RhoWeights { rho1, rho2, rho3 })
}

/// (S, S₁, S₂, S₃) over a = p + 2 for every prime p ≤ x − 2 with a a PS number.
pub fn chen_counts_brute(x: u64, gamma: f64) -> Result<[u64; 4]> {
    let ps = ps_flags_forward(x, gamma)?;
    let th = chen_thresholds_decimal(x);
    let mut out = [0u64; 4];
    for p in 2..=x.saturating_sub(2) {
        if !ps[(p + 2) as usize] || !is_prime_td(p) {
            continue;
        }
        if let Some(w) = rho_weights_direct(p + 2, &th) {
            out[0] += 1;
            out[1] += u64::from(w.rho1);
            out[2] += u64::from(w.rho2);
            out[3] += u64::from(w.rho3);
        }
    }
    Ok(out)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// (d, count, |count − total/φ(d)|) for d ≤ D with gcd(d, l) = 1, by looping over every n ≤ x.
pub fn bv_brute(x: u64, max_modulus: u64, l: i64, gamma: f64) -> Result<Vec<(u64, u64, f64)>> {
    let ps = ps_flags_forward(x, gamma)?;
    let members: Vec<u64> = (2..=x).filter(|&n| ps[n as usize] && is_prime_td(n)).collect();
    let total = members.len() as f64;
    let mut rows = Vec::new();
    for d in 1..=max_modulus {
        if gcd(d, l.unsigned_abs()) != 1 {
            continue;
        }
        let mut count = 0u64;
        for &n in &members {
            if (n as i64 - l).rem_euclid(d as i64) == 0 {
                count += 1;
            }
        }
        let expected = total / phi_td(d) as f64;
        rows.push((d, count, (count as f64 - expected).abs()));
    }
    Ok(rows)
}

/// 𝒩(Δ) by the four-fold loop.
pub fn near_diagonal_brute(j: u64, n: u64, alpha: f64, delta: f64) -> u64 {
    let mut count = 0;
    for h1 in j + 1..=2 * j {
        for n1 in n + 1..=2 * n {
            let a = h1 as f64 * (n1 as f64).powf(alpha);
            for h2 in j + 1..=2 * j {
                for n2 in n + 1..=2 * n {
                    let b = h2 as f64 * (n2 as f64).powf(alpha);
                    if (a - b).abs() <= delta {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}
