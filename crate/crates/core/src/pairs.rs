//! Exponent pairs as exact rationals and the van der Corput A-process.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    kappa: BigRational,
    ell: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExponentPair {
    /// Validates 0 ≤ κ ≤ 1/2 ≤ ℓ ≤ 1 and κ ≤ ℓ.
    pub fn new(kappa: BigRational, ell: BigRational) -> Result<Self> {
        let half = ratio(1, 2);
        let ok = kappa >= BigRational::zero() && kappa <= half && ell >= half && ell <= BigRational::one() && kappa <= ell;
        if !ok {
            return Err(Error::domain(format!("({kappa}, {ell}) is not an admissible exponent pair")));
        }
        Ok(ExponentPair { kappa, ell })
    }

    pub fn from_ratios(kn: i64, kd: i64, ln: i64, ld: i64) -> Result<Self> {
        Self::new(ratio(kn, kd), ratio(ln, ld))
    }

    pub fn trivial() -> Self {
        ExponentPair { kappa: ratio(1, 2), ell: ratio(1, 2) }
    }

    pub fn kappa(&self) -> &BigRational {
        &self.kappa
    }

    pub fn ell(&self) -> &BigRational {
        &self.ell
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.kappa), to_f64(&self.ell))
    }

    /// A(κ, ℓ) = (κ/(2κ+2), (κ+ℓ+1)/(2κ+2)).
    pub fn a_process(&self) -> ExponentPair {
        let one = BigRational::one();
        let denom = (&self.kappa + &one) * BigRational::from_integer(2.into());
        ExponentPair {
            kappa: &self.kappa / &denom,
            ell: (&self.kappa + &self.ell + &one) / &denom,
        }
    }
}

pub(crate) fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational converts to f64")
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kappa, self.ell)
    }
}

pub fn a_process(p: &ExponentPair) -> ExponentPair {
    p.a_process()
}

/// Aⁿ(1/2, 1/2).
pub fn iterate_a(n: u32) -> ExponentPair {
    (0..n).fold(ExponentPair::trivial(), |p, _| p.a_process())
}

/// Aⁿ(1/2, 1/2) = (1/(2^{n+2}−2), 1 − (n+1)/(2^{n+2}−2)) for n ≥ 1.
pub fn iterate_a_closed_form(n: u32) -> ExponentPair {
    if n == 0 {
        return ExponentPair::trivial();
    }
    let denom: BigInt = (BigInt::one() << (n + 2)) - 2;
    ExponentPair {
        kappa: BigRational::new(BigInt::one(), denom.clone()),
        ell: BigRational::one() - BigRational::new(BigInt::from(n + 1), denom),
    }
}

/// (ε, 1/2 + ε), the pair postulated by the exponent pair hypothesis.
pub fn eph_pair(epsilon: BigRational) -> Result<ExponentPair> {
    if epsilon < BigRational::zero() || epsilon >= ratio(1, 2) {
        return Err(Error::domain(format!("epsilon must lie in [0, 1/2), got {epsilon}")));
    }
    let ell = &epsilon + ratio(1, 2);
    ExponentPair::new(epsilon, ell)
}

/// Parse "p/q", an integer, or a decimal literal into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::pre(format!("not a rational: {s}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let r = BigRational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_steps() {
        assert_eq!(iterate_a(0), ExponentPair::trivial());
        assert_eq!(iterate_a(1), ExponentPair::from_ratios(1, 6, 2, 3).unwrap());
        assert_eq!(iterate_a(2), ExponentPair::from_ratios(1, 14, 11, 14).unwrap());
        assert_eq!(iterate_a(3), ExponentPair::from_ratios(1, 30, 13, 15).unwrap());
        assert_eq!(iterate_a(3).to_string(), "1/30 13/15");
    }

    #[test]
    fn thirty_six_steps() {
        let p = iterate_a(36);
        let denom = BigInt::from(274_877_906_942i64);
        assert_eq!(*p.kappa(), BigRational::new(BigInt::one(), denom.clone()));
        assert_eq!(*p.ell(), BigRational::one() - BigRational::new(BigInt::from(37), denom));
    }

    #[test]
    fn closed_form_through_forty() {
        let mut p = ExponentPair::trivial();
        for n in 0..=40u32 {
            assert_eq!(p, iterate_a_closed_form(n), "n={n}");
            if n >= 1 {
                let denom: BigInt = (BigInt::one() << (n + 2)) - 2;
                assert_eq!(p.kappa() * BigRational::from_integer(denom), BigRational::one());
            }
            p = p.a_process();
        }
    }

    #[test]
    fn eph_examples() {
        assert_eq!(eph_pair(ratio(0, 1)).unwrap(), ExponentPair::from_ratios(0, 1, 1, 2).unwrap());
        assert_eq!(eph_pair(ratio(1, 100)).unwrap(), ExponentPair::from_ratios(1, 100, 51, 100).unwrap());
        assert_eq!(eph_pair(ratio(1, 4)).unwrap(), ExponentPair::from_ratios(1, 4, 3, 4).unwrap());
        assert!(eph_pair(ratio(1, 2)).is_err());
        assert!(eph_pair(ratio(-1, 10)).is_err());
    }

    #[test]
    fn rejects_inadmissible() {
        assert!(ExponentPair::from_ratios(3, 5, 4, 5).is_err());
        assert!(ExponentPair::from_ratios(1, 4, 2, 5).is_err());
        assert!(ExponentPair::from_ratios(1, 4, 6, 5).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("13/15").unwrap(), ratio(13, 15));
        assert_eq!(parse_rational("0.01").unwrap(), ratio(1, 100));
        assert_eq!(parse_rational("-2").unwrap(), ratio(-2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    proptest! {
        #[test]
        fn a_process_preserves_admissibility(kn in 0i64..=500, ln_off in 0i64..=500, den in 1000i64..2000) {
            // κ ∈ [0, 1/2], ℓ ∈ [max(κ, 1/2), 1]
            let kappa = ratio(kn.min(den / 2), den);
            let lo = std::cmp::max(kn.min(den / 2), (den + 1) / 2);
            let ell = ratio((lo + ln_off).min(den), den);
            let p = ExponentPair::new(kappa, ell).unwrap();
            let q = p.a_process();
            prop_assert!(ExponentPair::new(q.kappa().clone(), q.ell().clone()).is_ok());
        }
    }
}
