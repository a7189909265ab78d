//! The acceptance suite: each criterion runs a production path against frozen constants or
//! an independent oracle and reports pass/fail with a one-line detail.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{cube_root_ceil, heath_brown_check, twin_singular_series_with, SpfTable};
use crate::bracket::chen_bracket;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::levels::{gamma0_complement, ladder, solve_level, theorem1_level, Gamma, LevelQuery, BIG_K};
use crate::oracle;
use crate::pairs::{iterate_a, iterate_a_closed_form, ExponentPair};
use crate::ps::{
    bv_discrepancy_with, chen_counts_with, count_near_diagonal_with, enumerate_ps_with, is_ps, sieve_primes_with,
    verify_weight_inequality, ChenParams, PSContext,
};
use crate::ps::primes::simple_primes;
use crate::sievefn::{big_f_on, ddeq_residual, small_f, small_f_on, Branch};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Constants the suite compares against. Tests substitute wrong values here as a negative control.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expectations {
    /// A³(1/2, 1/2) as (κ num, κ den, ℓ num, ℓ den)
    pub a3: (i64, i64, i64, i64),
    pub pi_1e6: u64,
    pub bracket_lower: f64,
    pub bracket_xi: f64,
    /// γ = 1 − offset/(2³⁸+17) is stated to give ξ ≈ bracket_xi
    pub gamma_offset: f64,
    pub twin_constant: f64,
    /// γ → 1 limits of the level ladder as (num, den)
    pub ladder_limits: [(i64, i64); 5],
}

impl Default for Expectations {
    fn default() -> Self {
        Expectations {
            a3: (1, 30, 13, 15),
            pi_1e6: 78_498,
            bracket_lower: 0.000109508,
            bracket_xi: 0.47284,
            gamma_offset: 0.03208,
            twin_constant: 0.6601618,
            ladder_limits: [(1, 6), (1, 4), (3, 8), (9, 19), (1, 2)],
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Smaller instances for a fast smoke run; results are labelled as quick.
    pub quick: bool,
    pub exec: Exec,
    pub expectations: Expectations,
    /// Restrict to these criterion ids.
    pub only: Option<Vec<String>>,
    /// Enforce the per-criterion time budgets.
    pub enforce_budgets: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            quick: false,
            exec: Exec::default(),
            expectations: Expectations::default(),
            only: None,
            enforce_budgets: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget_seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub artifact_version: String,
    pub quick: bool,
    pub outcomes: Vec<CriterionOutcome>,
    pub all_passed: bool,
}

impl VerifySummary {
    pub fn get(&self, id: &str) -> Option<&CriterionOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }
}

type Check = fn(&VerifyConfig) -> Result<(bool, String)>;

/// (id, time budget in seconds, check)
pub const CRITERIA: [(&str, Option<f64>, Check); 12] = [
    ("exponent_pairs", Some(1.0), check_pairs),
    ("level_solver", Some(5.0), check_levels),
    ("sieve_functions", Some(10.0), check_sieve_functions),
    ("chen_bracket", Some(60.0), check_bracket),
    ("ps_oracle_equivalence", Some(30.0), check_ps_equivalence),
    ("prime_count", None, check_prime_count),
    ("heath_brown_identity", Some(60.0), check_heath_brown),
    ("weight_inequality", None, check_weight_inequality),
    ("chen_counts", Some(300.0), check_chen_counts),
    ("bv_discrepancy", None, check_bv),
    ("near_diagonal", None, check_near_diagonal),
    ("twin_constant", None, check_twin_constant),
];

pub fn criterion_ids() -> Vec<&'static str> {
    CRITERIA.iter().map(|c| c.0).collect()
}

pub fn run_criterion(id: &str, cfg: &VerifyConfig) -> Result<CriterionOutcome> {
    let &(name, budget, check) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::pre(format!("unknown criterion {id}")))?;
    let start = Instant::now();
    let res = check(cfg);
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, mut detail) = match res {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let (Some(b), true) = (budget, cfg.enforce_budgets) {
        if seconds > b {
            passed = false;
            detail = format!("{detail}; took {seconds:.2}s, budget {b}s");
        }
    }
    Ok(CriterionOutcome { id: name.to_string(), passed, detail, seconds, budget_seconds: budget })
}

pub fn verify_all(cfg: &VerifyConfig) -> VerifySummary {
    let outcomes: Vec<CriterionOutcome> = CRITERIA
        .iter()
        .filter(|c| cfg.only.as_ref().map_or(true, |o| o.iter().any(|s| s == c.0)))
        .map(|c| run_criterion(c.0, cfg).expect("id comes from the table"))
        .collect();
    let all_passed = outcomes.iter().all(|o| o.passed);
    VerifySummary { artifact_version: ARTIFACT_VERSION.to_string(), quick: cfg.quick, outcomes, all_passed }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn check_pairs(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let (a, b, c, d) = cfg.expectations.a3;
    let want3 = ExponentPair::new(rat(a, b), rat(c, d))?;
    let ok3 = iterate_a(3) == want3;
    let denom: BigInt = (BigInt::one() << 38) - 2;
    let want36 = ExponentPair::new(
        BigRational::new(BigInt::one(), denom.clone()),
        BigRational::one() - BigRational::new(37.into(), denom),
    )?;
    let ok36 = iterate_a(36) == want36;
    let mut p = ExponentPair::trivial();
    let mut closed = true;
    for n in 0..=40 {
        closed &= p == iterate_a_closed_form(n);
        p = p.a_process();
    }
    Ok((ok3 && ok36 && closed, format!("A^3 = {}, A^36 ok = {ok36}, closed form 0..=40 ok = {closed}", iterate_a(3))))
}

fn check_levels(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let c0 = gamma0_complement();
    let mut worst_t1 = 0.0f64;
    for i in 0..100 {
        let g = Gamma::from_complement(c0 * (i as f64 + 0.5) / 100.0)?;
        let r = solve_level(&LevelQuery::a36_a3_pairs(g))?;
        worst_t1 = worst_t1.max((r.xi - theorem1_level(g, 0.0)?).abs());
    }
    let mut worst_eph = 0.0f64;
    for i in 0..100 {
        let g = 0.9 + 0.0999 * i as f64 / 99.0;
        let r = solve_level(&LevelQuery::eph_pairs(Gamma::new(g)?))?;
        worst_eph = worst_eph.max((r.xi - (2.5 * g - 2.0)).abs());
    }
    let at_root = theorem1_level(Gamma::from_complement(c0)?, 0.0)?.abs();
    let mut ladder_ok = true;
    for (rung, &(n, d)) in ladder().iter().zip(cfg.expectations.ladder_limits.iter()) {
        ladder_ok &= rung.limit() == rat(n, d);
    }
    let ok = worst_t1 <= 1e-10 && worst_eph <= 1e-12 && at_root <= 1e-12 && ladder_ok;
    Ok((
        ok,
        format!(
            "solver vs closed form max |diff| {worst_t1:.1e}; EPH max |diff| {worst_eph:.1e}; level at gamma0 {at_root:.1e}; ladder exact {ladder_ok}"
        ),
    ))
}

fn check_sieve_functions(_cfg: &VerifyConfig) -> Result<(bool, String)> {
    let tol = 1e-10;
    let c3 = (big_f_on(Branch::UpperLe3, 3.0, tol)?.value - big_f_on(Branch::Upper3To5, 3.0, tol)?.value).abs();
    let c4 = (small_f_on(Branch::Lower2To4, 4.0, tol)?.value - small_f_on(Branch::Lower4To6, 4.0, tol)?.value).abs();
    let mut worst_f = 0.0f64;
    let mut worst_lower = 0.0f64;
    for i in 0..50 {
        let s = 2.01 + (4.98 - 2.01) * i as f64 / 49.0;
        worst_f = worst_f.max(ddeq_residual(s, 1e-3, tol)?.r_upper.unwrap_or(f64::INFINITY));
        let s = 2.01 + (5.98 - 2.01) * i as f64 / 49.0;
        worst_lower = worst_lower.max(ddeq_residual(s, 1e-3, tol)?.r_lower.unwrap_or(f64::INFINITY));
    }
    let f2 = small_f(2.0, tol)?.value;
    let ok = c3 <= 2.0 * tol && c4 <= 2.0 * tol && worst_f <= 1e-3 && worst_lower <= 1e-3 && f2 == 0.0;
    Ok((
        ok,
        format!("jump at 3: {c3:.1e}, at 4: {c4:.1e}; max residual F {worst_f:.1e}, f {worst_lower:.1e}; f(2) = {f2}"),
    ))
}

fn check_bracket(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let e = &cfg.expectations;
    let b = chen_bracket(e.bracket_xi, 1e-9)?;
    let g = Gamma::from_complement(e.gamma_offset / BIG_K as f64)?;
    let xi = theorem1_level(g, 0.0)?;
    let ok = b.total >= e.bracket_lower - 1e-7 && (xi - e.bracket_xi).abs() <= 5e-6;
    Ok((ok, format!("bracket total {:.12} (error {:.1e}); level at stated gamma {xi:.7}", b.total, b.quad_error)))
}

fn check_ps_equivalence(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let x: u64 = if cfg.quick { 10_000 } else { 100_000 };
    let mut mismatches = 0u64;
    let mut exhausted = 0u64;
    for gamma in [0.9, 0.95, 0.99] {
        let ctx = PSContext::new(gamma)?;
        let forward = enumerate_ps_with(x, &ctx, cfg.exec)?;
        let mut flags = vec![false; x as usize + 1];
        for &m in &forward {
            flags[m as usize] = true;
        }
        let reference = oracle::ps_flags_forward(x, gamma)?;
        for m in 1..=x {
            match is_ps(m, &ctx) {
                Ok(v) => {
                    if v != flags[m as usize] || v != reference[m as usize] {
                        mismatches += 1;
                    }
                }
                Err(Error::PrecisionExhausted { .. }) => exhausted += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok((
        mismatches == 0 && exhausted == 0,
        format!("m <= {x}, gamma in {{0.9, 0.95, 0.99}}: {mismatches} mismatches, {exhausted} precision exhaustions"),
    ))
}

fn check_prime_count(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let x = 1_000_000;
    let whole = sieve_primes_with(2, x, cfg.exec)?;
    let left = sieve_primes_with(2, 500_000, cfg.exec)?;
    let right = sieve_primes_with(500_001, x, cfg.exec)?;
    let joined: Vec<u64> = left.iter().chain(right.iter()).collect();
    let partition = joined == whole.to_vec();
    let simple = simple_primes(x).len() as u64;
    let ok = whole.count() == cfg.expectations.pi_1e6 && simple == whole.count() && partition;
    Ok((ok, format!("pi(10^6) = {} (simple sieve {simple}); partition consistent {partition}", whole.count())))
}

fn check_heath_brown(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let top: u64 = if cfg.quick { 1_000 } else { 10_000 };
    let spf = SpfTable::new(top)?;
    let results = cfg.exec.map((2..=top).collect(), |n| heath_brown_check(n, cube_root_ceil(n), &spf));
    let mut worst = 0.0f64;
    let mut failures = 0;
    for r in results {
        let r = r?;
        worst = worst.max(r.residual / r.tolerance());
        failures += u64::from(!r.passes());
    }
    Ok((failures == 0, format!("2 <= n <= {top}: {failures} failures, worst residual/tolerance {worst:.1e}")))
}

fn check_weight_inequality(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let x: u64 = if cfg.quick { 10_000 } else { 100_000 };
    let spf = SpfTable::new(x)?;
    let w = verify_weight_inequality(x, &ChenParams::default(), &spf)?;
    Ok((w.holds && w.witnesses.is_empty(), format!("x = {x}: {} checked, {} witnesses", w.checked, w.witnesses.len())))
}

fn check_chen_counts(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let x: u64 = if cfg.quick { 100_000 } else { 1_000_000 };
    let gamma = 0.95;
    let spf = SpfTable::new(x)?;
    let c = chen_counts_with(x, &PSContext::new(gamma)?, &ChenParams::default(), &spf, cfg.exec)?;
    let got = [c.s, c.s1, c.s2, c.s3];
    let want = oracle::chen_counts_brute(x, gamma)?;
    Ok((got == want, format!("x = {x}, gamma = {gamma}: (S, S1, S2, S3) = {got:?}, oracle {want:?}")))
}

fn check_bv(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let (x, d, l, gamma) = (10_000, 10, 2, 0.95);
    let r = bv_discrepancy_with(x, d, l, 1.0, &PSContext::new(gamma)?, cfg.exec)?;
    let brute = oracle::bv_brute(x, d, l, gamma)?;
    let rows: Vec<(u64, u64, f64)> = r.rows.iter().map(|w| (w.d, w.count_in_progression, w.abs_dev)).collect();
    let brute_total: f64 = brute.iter().map(|b| b.2).sum();
    let d1 = r.rows.first().map(|w| (w.d, w.abs_dev));
    let ok = rows == brute && r.total_abs_dev == brute_total && d1 == Some((1, 0.0));
    Ok((ok, format!("total |dev| {} (oracle {brute_total}); d=1 row {d1:?}", r.total_abs_dev)))
}

fn check_near_diagonal(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let mut cases = 0;
    let mut mismatches = 0;
    for j in [4u64, 8, 16] {
        for n in [4u64, 8, 16] {
            for alpha in [0.6, 0.8, 0.9] {
                for delta in [0.0, 0.1, 0.5, 2.0, 10.0] {
                    let got = count_near_diagonal_with(j, n, alpha, delta, u64::MAX, cfg.exec)?.count;
                    cases += 1;
                    mismatches += u32::from(got != oracle::near_diagonal_brute(j, n, alpha, delta));
                }
            }
        }
    }
    Ok((mismatches == 0, format!("{cases} cases, {mismatches} mismatches")))
}

fn check_twin_constant(cfg: &VerifyConfig) -> Result<(bool, String)> {
    let bound: u64 = if cfg.quick { 10_000_000 } else { 100_000_000 };
    let r = twin_singular_series_with(bound, cfg.exec)?;
    let diff = (r.value - cfg.expectations.twin_constant).abs();
    let ok = diff <= r.tail_bound + 1e-7;
    Ok((ok, format!("P = {bound}: value {:.10}, |diff| {diff:.1e} vs allowance {:.1e}", r.value, r.tail_bound + 1e-7)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids = criterion_ids();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), CRITERIA.len());
    }

    #[test]
    fn unknown_id() {
        assert!(run_criterion("nope", &VerifyConfig::default()).is_err());
    }

    #[test]
    fn cheap_criteria_pass() {
        let cfg = VerifyConfig { quick: true, ..Default::default() };
        for id in ["exponent_pairs", "level_solver", "near_diagonal"] {
            let o = run_criterion(id, &cfg).unwrap();
            assert!(o.passed, "{id}: {}", o.detail);
        }
    }
}
