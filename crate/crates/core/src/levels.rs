//! Level of distribution ξ(γ): the closed form for the (A³⁶, A³) choice and a solver that
//! re-derives levels from the Type I, Type II and decomposition conditions for any pair of pairs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::{parse_rational, to_f64, ExponentPair};

/// 2³⁸ + 17
pub const BIG_K: u64 = (1u64 << 38) + 17;

/// 1 − γ₀ = 18/(2³⁸+17), the complement of the threshold below which the closed form is negative.
pub fn gamma0_complement() -> f64 {
    to_f64(&BigRational::new(BigInt::from(18), BigInt::from(BIG_K)))
}

/// An exponent γ carried together with its complement 1 − γ.
///
/// Near γ₀ the level depends on 1 − γ at the scale 10⁻¹¹, which an `f64` holding γ itself
/// resolves only to about 10⁻⁵ relative. Constructing from the complement, or from an exact
/// decimal string, keeps full precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gamma {
    value: f64,
    complement: f64,
}

impl Gamma {
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0 && value <= 1.0) {
            return Err(Error::domain(format!("gamma must lie in (0, 1], got {value}")));
        }
        // exact for value in [1/2, 1]
        Ok(Gamma { value, complement: 1.0 - value })
    }

    pub fn from_complement(complement: f64) -> Result<Self> {
        if !(complement >= 0.0 && complement < 1.0) {
            return Err(Error::domain(format!("1 - gamma must lie in [0, 1), got {complement}")));
        }
        Ok(Gamma { value: 1.0 - complement, complement })
    }

    /// Exact decimal or `p/q` input; the complement is formed before rounding.
    pub fn parse(s: &str) -> Result<Self> {
        let r = parse_rational(s)?;
        Self::from_rational(&r)
    }

    pub fn from_rational(r: &BigRational) -> Result<Self> {
        if *r <= BigRational::zero() || *r > BigRational::one() {
            return Err(Error::domain(format!("gamma must lie in (0, 1], got {r}")));
        }
        Ok(Gamma { value: to_f64(r), complement: to_f64(&(BigRational::one() - r)) })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn complement(self) -> f64 {
        self.complement
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complement < 1e-6 {
            write!(f, "1-{:e}", self.complement)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// ξ(γ) = ((2³⁸+17)γ − (2³⁸−1))/38 − ε, evaluated as (18 − (2³⁸+17)(1−γ))/38 − ε.
pub fn theorem1_level(gamma: Gamma, epsilon: f64) -> Result<f64> {
    let c = gamma.complement();
    if !(c > 0.0 && c <= gamma0_complement()) {
        return Err(Error::domain(format!(
            "closed form needs 1 - 18/(2^38+17) <= gamma < 1, got 1 - gamma = {c:e}"
        )));
    }
    Ok((18.0 - BIG_K as f64 * c) / 38.0 - epsilon)
}

/// The γ → 1⁻ limit of the closed form, 9/19.
pub fn theorem1_limit() -> BigRational {
    BigRational::new(9.into(), 19.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelQuery {
    pub gamma: Gamma,
    pub eta: f64,
    pub epsilon: f64,
    pub pair_type_i: ExponentPairSer,
    pub pair_type_ii: ExponentPairSer,
}

/// Serde-friendly pair as strings `"p/q"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentPairSer {
    pub kappa: String,
    pub ell: String,
}

impl From<&ExponentPair> for ExponentPairSer {
    fn from(p: &ExponentPair) -> Self {
        ExponentPairSer { kappa: p.kappa().to_string(), ell: p.ell().to_string() }
    }
}

impl ExponentPairSer {
    pub fn to_pair(&self) -> Result<ExponentPair> {
        ExponentPair::new(parse_rational(&self.kappa)?, parse_rational(&self.ell)?)
    }
}

/// Pair-dependent rational coefficients, formed exactly and rounded once.
#[derive(Debug, Clone, Copy)]
struct Coeffs {
    // Type I: 𝔞 = (i_num − c)·i_scale − ξ − η
    i_num: f64,
    i_scale: f64,
    // Type II condition 1: margin = ii1 − c − ξ − η
    ii1: f64,
    // condition 2: margin = ii2 − c − ii2_slope·ξ − η
    ii2: f64,
    ii2_slope: f64,
    // window low: 𝔟 = low_c·c + low_xi·ξ + η
    low_c: f64,
    low_xi: f64,
}

fn coeffs(type_i: &ExponentPair, type_ii: &ExponentPair) -> Result<Coeffs> {
    let one = BigRational::one();
    let d1 = type_i.kappa() - type_i.ell() + &one;
    if d1 <= BigRational::zero() {
        return Err(Error::domain("Type I pair needs kappa - ell + 1 > 0"));
    }
    let (k, l) = (type_ii.kappa(), type_ii.ell());
    if *l == one {
        return Err(Error::domain("Type II pair with ell = 1 makes the window singular"));
    }
    let one_minus_l = &one - l;
    let d_ii1 = k - l + &one;
    let d_ii2 = k - l + BigRational::from_integer(3.into());
    Ok(Coeffs {
        i_num: to_f64(&(&one - type_i.ell())),
        i_scale: to_f64(&(&one / &d1)),
        ii1: to_f64(&(&one_minus_l / &d_ii1)),
        ii2: to_f64(&(&one_minus_l / &d_ii2)),
        ii2_slope: to_f64(&(&d_ii1 / &d_ii2)),
        low_c: to_f64(&((k + BigRational::from_integer(2.into())) / &one_minus_l)),
        low_xi: to_f64(&(&d_ii1 / &one_minus_l)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BindingConstraint {
    /// γ > 1/2 + ξ + η
    PsiReduction,
    #[serde(rename = "typeII_cond1")]
    TypeIICond1,
    #[serde(rename = "typeII_cond2")]
    TypeIICond2,
    /// 𝔟 < 2/3 and 1 − 𝔠 < 𝔠 − 𝔟
    DecompositionB,
    /// 1 − 𝔞 < 𝔠/2
    DecompositionC,
    /// 𝔟 < 𝔠
    #[serde(rename = "typeII_window_vs_typeI")]
    TypeIIWindowVsTypeI,
}

impl BindingConstraint {
    pub const ALL: [BindingConstraint; 6] = [
        BindingConstraint::PsiReduction,
        BindingConstraint::TypeIICond1,
        BindingConstraint::TypeIICond2,
        BindingConstraint::DecompositionB,
        BindingConstraint::DecompositionC,
        BindingConstraint::TypeIIWindowVsTypeI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BindingConstraint::PsiReduction => "psi_reduction",
            BindingConstraint::TypeIICond1 => "typeII_cond1",
            BindingConstraint::TypeIICond2 => "typeII_cond2",
            BindingConstraint::DecompositionB => "decomposition_b",
            BindingConstraint::DecompositionC => "decomposition_c",
            BindingConstraint::TypeIIWindowVsTypeI => "typeII_window_vs_typeI",
        }
    }
}

impl fmt::Display for BindingConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelResult {
    pub xi: f64,
    pub binding_constraint: BindingConstraint,
    pub feasible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TypeIIWindow {
    pub feasible: bool,
    pub cond1: bool,
    pub cond2: bool,
    pub exponent_low: f64,
    pub exponent_high: f64,
}

/// A query with its pairs decoded and coefficients precomputed.
#[derive(Debug, Clone)]
pub struct LevelProblem {
    gamma: Gamma,
    eta: f64,
    epsilon: f64,
    k: Coeffs,
}

impl LevelQuery {
    pub fn new(gamma: Gamma, eta: f64, epsilon: f64, type_i: &ExponentPair, type_ii: &ExponentPair) -> Self {
        LevelQuery { gamma, eta, epsilon, pair_type_i: type_i.into(), pair_type_ii: type_ii.into() }
    }

    /// (A³⁶, A³) with η = ε = 0.
    pub fn a36_a3_pairs(gamma: Gamma) -> Self {
        Self::new(gamma, 0.0, 0.0, &crate::pairs::iterate_a(36), &crate::pairs::iterate_a(3))
    }

    /// ((0, 1/2), (0, 1/2)) with η = ε = 0.
    pub fn eph_pairs(gamma: Gamma) -> Self {
        let p = crate::pairs::eph_pair(BigRational::zero()).expect("zero is admissible");
        Self::new(gamma, 0.0, 0.0, &p, &p)
    }

    pub fn problem(&self) -> Result<LevelProblem> {
        let g = self.gamma.value();
        if !(g > 0.5 && g < 1.0) {
            return Err(Error::domain(format!("gamma must lie in (1/2, 1), got {g}")));
        }
        if !(self.eta >= 0.0) || !(self.epsilon >= 0.0 && self.epsilon < 0.1) {
            return Err(Error::domain("need eta >= 0 and 0 <= epsilon < 1/10"));
        }
        if self.gamma.complement() <= self.eta {
            return Err(Error::domain("need gamma + eta < 1"));
        }
        let k = coeffs(&self.pair_type_i.to_pair()?, &self.pair_type_ii.to_pair()?)?;
        Ok(LevelProblem { gamma: self.gamma, eta: self.eta, epsilon: self.epsilon, k })
    }
}

impl LevelProblem {
    /// 𝔞 = (γ − ℓ)/(κ − ℓ + 1) − ξ − η for the Type I pair.
    pub fn a(&self, xi: f64) -> f64 {
        (self.k.i_num - self.gamma.complement()) * self.k.i_scale - xi - self.eta
    }

    /// 𝔟 = ((κ+2)(1−γ) + (κ−ℓ+1)ξ)/(1−ℓ) + η for the Type II pair.
    pub fn b(&self, xi: f64) -> f64 {
        self.k.low_c * self.gamma.complement() + self.k.low_xi * xi + self.eta
    }

    /// 𝔠 = γ − η.
    pub fn c(&self) -> f64 {
        1.0 - self.gamma.complement() - self.eta
    }

    pub fn type_ii(&self, xi: f64) -> TypeIIWindow {
        let cg = self.gamma.complement();
        let cond1 = self.k.ii1 - cg - xi - self.eta > 0.0;
        let cond2 = self.k.ii2 - cg - self.k.ii2_slope * xi - self.eta > 0.0;
        TypeIIWindow { feasible: cond1 && cond2, cond1, cond2, exponent_low: self.b(xi), exponent_high: self.c() }
    }

    /// Signed slack of each constraint at ξ; all must be positive.
    pub fn margins(&self, xi: f64) -> [(BindingConstraint, f64); 6] {
        let cg = self.gamma.complement();
        let (a, b, c) = (self.a(xi), self.b(xi), self.c());
        [
            (BindingConstraint::PsiReduction, 0.5 - cg - xi - self.eta),
            (BindingConstraint::TypeIICond1, self.k.ii1 - cg - xi - self.eta),
            (BindingConstraint::TypeIICond2, self.k.ii2 - cg - self.k.ii2_slope * xi - self.eta),
            (BindingConstraint::DecompositionB, (2.0 / 3.0 - b).min(2.0 * c - 1.0 - b)),
            (BindingConstraint::DecompositionC, c / 2.0 - (1.0 - a)),
            (BindingConstraint::TypeIIWindowVsTypeI, c - b),
        ]
    }

    pub fn feasible_at(&self, xi: f64) -> bool {
        self.margins(xi).iter().all(|&(_, m)| m > 0.0)
    }

    /// Largest ξ at which each margin vanishes; every margin is affine and decreasing in ξ.
    fn roots(&self) -> [(BindingConstraint, f64); 6] {
        let m0 = self.margins(0.0);
        let m1 = self.margins(1.0);
        let mut out = m0;
        for i in 0..6 {
            let slope = m0[i].1 - m1[i].1;
            out[i].1 = if m0[i].0 == BindingConstraint::DecompositionB {
                // min of two affine pieces; each root separately
                let cg = self.gamma.complement();
                let b0 = self.k.low_c * cg + self.eta;
                let r1 = (2.0 / 3.0 - b0) / self.k.low_xi;
                let r2 = (2.0 * self.c() - 1.0 - b0) / self.k.low_xi;
                r1.min(r2)
            } else {
                m0[i].1 / slope
            };
        }
        out
    }

    pub fn cap(&self) -> f64 {
        (1.0 - self.eta) / 2.0
    }

    pub fn solve(&self) -> LevelResult {
        let roots = self.roots();
        let binding = roots
            .iter()
            .fold(roots[0], |best, &r| if r.1 < best.1 { r } else { best })
            .0;
        if !self.feasible_at(f64::MIN_POSITIVE) {
            return LevelResult { xi: 0.0, binding_constraint: binding, feasible: false };
        }
        let (mut lo, mut hi) = (0.0f64, self.cap());
        if self.feasible_at(hi) {
            lo = hi;
        } else {
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.feasible_at(mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        }
        let xi = lo - self.epsilon;
        LevelResult { xi: xi.max(0.0), binding_constraint: binding, feasible: xi > 0.0 }
    }
}

pub fn type_ii_feasible(q: &LevelQuery, xi: f64) -> Result<TypeIIWindow> {
    Ok(q.problem()?.type_ii(xi))
}

pub fn type_i_max_exponent(q: &LevelQuery, xi: f64) -> Result<f64> {
    Ok(q.problem()?.a(xi))
}

/// 𝔟 < 2/3, 1 − 𝔠 < 𝔠 − 𝔟 and 1 − 𝔞 < 𝔠/2.
pub fn decomposition_ok(a: f64, b: f64, c: f64) -> bool {
    b < 2.0 / 3.0 && 1.0 - c < c - b && 1.0 - a < c / 2.0
}

/// Sup of admissible ξ; ε is subtracted from it afterwards.
pub fn solve_level(q: &LevelQuery) -> Result<LevelResult> {
    Ok(q.problem()?.solve())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubproductWindow {
    pub low_exponent: f64,
    pub bound: f64,
    pub gamma0: f64,
    /// (61(1−γ)+5ξ)/4 ≤ 45/76
    pub low_below_bound: bool,
    /// 45/76 + η < γ₀ − η
    pub bound_below_gamma0: bool,
    /// γ₀ ≤ γ
    pub gamma0_below_gamma: bool,
    pub holds: bool,
}

/// The chain (61(1−γ)+5ξ)/4 + η ≤ 45/76 + η < γ₀ − η ≤ γ − η.
pub fn subproduct_window_check(gamma: Gamma, xi: f64, eta: f64) -> SubproductWindow {
    let low = (61.0 * gamma.complement() + 5.0 * xi) / 4.0;
    let bound = 45.0 / 76.0;
    let g0c = gamma0_complement();
    let low_below_bound = low <= bound;
    let bound_below_gamma0 = bound + eta < 1.0 - g0c - eta;
    let gamma0_below_gamma = gamma.complement() <= g0c;
    SubproductWindow {
        low_exponent: low,
        bound,
        gamma0: 1.0 - g0c,
        low_below_bound,
        bound_below_gamma0,
        gamma0_below_gamma,
        holds: low_below_bound && bound_below_gamma0 && gamma0_below_gamma,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LadderRung {
    pub name: &'static str,
    /// coefficients (p, q) of ξ = pγ − q
    pub slope: BigRational,
    pub offset: BigRational,
    pub stated_limit: BigRational,
}

impl LadderRung {
    pub fn at(&self, gamma: &BigRational) -> BigRational {
        &self.slope * gamma - &self.offset
    }

    pub fn limit(&self) -> BigRational {
        self.at(&BigRational::one())
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Known level functions, weakest first, with their γ → 1 limits.
pub fn ladder() -> Vec<LadderRung> {
    let k = BigInt::from(BIG_K);
    vec![
        LadderRung { name: "5g/4-13/12", slope: q(5, 4), offset: q(13, 12), stated_limit: q(1, 6) },
        LadderRung { name: "(13g-12)/4", slope: q(13, 4), offset: q(3, 1), stated_limit: q(1, 4) },
        LadderRung { name: "129g/4-255/8", slope: q(129, 4), offset: q(255, 8), stated_limit: q(3, 8) },
        LadderRung {
            name: "theorem1",
            slope: BigRational::new(k.clone(), 38.into()),
            offset: BigRational::new(k - 18, 38.into()),
            stated_limit: q(9, 19),
        },
        LadderRung { name: "eph", slope: q(5, 2), offset: q(2, 1), stated_limit: q(1, 2) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::iterate_a;
    use proptest::prelude::*;

    #[test]
    fn closed_form_examples() {
        let near_one = Gamma::from_complement(1e-300).unwrap();
        assert!((theorem1_level(near_one, 0.0).unwrap() - 9.0 / 19.0).abs() < 1e-15);
        let at_g0 = Gamma::from_complement(gamma0_complement()).unwrap();
        assert!(theorem1_level(at_g0, 0.0).unwrap().abs() < 1e-12);
        let stated = Gamma::from_complement(0.03208 / BIG_K as f64).unwrap();
        assert!((theorem1_level(stated, 0.0).unwrap() - 0.47284).abs() < 5e-6);
        assert!(theorem1_level(Gamma::new(0.9999999).unwrap(), 0.0).is_err());
        assert!(theorem1_level(Gamma::new(1.0).unwrap(), 0.0).is_err());
    }

    #[test]
    fn parse_keeps_complement() {
        let g = Gamma::parse("0.99999999999").unwrap();
        assert!((g.complement() - 1e-11).abs() < 1e-26);
        assert!(Gamma::parse("1.5").is_err());
    }

    #[test]
    fn closed_form_is_affine() {
        let c0 = gamma0_complement();
        let vals: Vec<f64> = (1..=10)
            .map(|i| theorem1_level(Gamma::from_complement(c0 * i as f64 / 11.0).unwrap(), 0.0).unwrap())
            .collect();
        let d0 = vals[1] - vals[0];
        assert!(d0 < 0.0); // increasing in γ means decreasing in the complement
        for w in vals.windows(2) {
            assert!(((w[1] - w[0]) - d0).abs() < 1e-12);
        }
    }

    #[test]
    fn type_ii_reduces_for_a3() {
        let pr = LevelQuery::a36_a3_pairs(Gamma::new(0.99).unwrap()).problem().unwrap();
        assert!((pr.k.ii1 - 4.0 / 5.0).abs() < 1e-15);
        assert!((pr.k.ii2 - 4.0 / 65.0).abs() < 1e-15);
        assert!((pr.k.ii2_slope - 1.0 / 13.0).abs() < 1e-15);
        assert!((pr.b(0.3) - (61.0 * 0.01 + 1.5) / 4.0).abs() < 1e-14);
    }

    #[test]
    fn type_ii_trivial_pair() {
        let t = ExponentPair::trivial();
        let qy = LevelQuery::new(Gamma::new(0.99).unwrap(), 0.0, 0.0, &t, &t);
        let w = type_ii_feasible(&qy, 0.2).unwrap();
        assert!(w.cond1 && w.cond2 && w.feasible);
        let w = type_ii_feasible(&qy, 0.49).unwrap();
        assert!(!w.cond1);
        let one = ExponentPair::from_ratios(0, 1, 1, 1).unwrap();
        assert!(type_ii_feasible(&LevelQuery::new(Gamma::new(0.99).unwrap(), 0.0, 0.0, &t, &one), 0.1).is_err());
    }

    #[test]
    fn type_i_examples() {
        let e = ExponentPair::from_ratios(0, 1, 1, 2).unwrap();
        let qy = LevelQuery::new(Gamma::new(0.9).unwrap(), 0.0, 0.0, &e, &e);
        assert!((type_i_max_exponent(&qy, 0.1).unwrap() - 0.7).abs() < 1e-15);
        let qy = LevelQuery::new(Gamma::new(0.75).unwrap(), 0.0, 0.0, &ExponentPair::from_ratios(1, 4, 3, 4).unwrap(), &e);
        assert!(type_i_max_exponent(&qy, 0.0).unwrap().abs() < 1e-15);
        // A³⁶: (2³⁷−1)γ/19 − (2³⁸−39)/38 − ξ
        let c = 3e-12;
        let qy = LevelQuery::a36_a3_pairs(Gamma::from_complement(c).unwrap());
        let want = (((1u64 << 37) - 1) as f64 * (1.0 - c)) / 19.0 - ((1u64 << 38) - 39) as f64 / 38.0 - 0.1;
        assert!((type_i_max_exponent(&qy, 0.1).unwrap() - want).abs() < 1e-5);
    }

    #[test]
    fn decomposition_examples() {
        assert!(decomposition_ok(0.9, 0.6, 0.99));
        assert!(!decomposition_ok(0.4, 0.6, 0.99));
        let c: f64 = 0.75;
        assert!(!decomposition_ok(1.0 - c / 2.0, 2.0 * c - 1.0, c));
    }

    #[test]
    fn solver_matches_closed_form() {
        let c0 = gamma0_complement();
        for i in 1..100 {
            let g = Gamma::from_complement(c0 * i as f64 / 100.0).unwrap();
            let r = solve_level(&LevelQuery::a36_a3_pairs(g)).unwrap();
            assert!(r.feasible);
            assert_eq!(r.binding_constraint, BindingConstraint::DecompositionC);
            assert!((r.xi - theorem1_level(g, 0.0).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn solver_at_threshold_and_below() {
        let g0 = Gamma::from_complement(gamma0_complement()).unwrap();
        let r = solve_level(&LevelQuery::a36_a3_pairs(g0)).unwrap();
        assert!(r.xi < 1e-12);
        let below = solve_level(&LevelQuery::a36_a3_pairs(Gamma::new(0.9999999).unwrap())).unwrap();
        assert!(!below.feasible);
        assert_eq!(below.xi, 0.0);
    }

    #[test]
    fn eph_level() {
        let r = solve_level(&LevelQuery::eph_pairs(Gamma::new(0.9).unwrap())).unwrap();
        assert!((r.xi - 0.25).abs() < 1e-12);
        for i in 0..50 {
            let g = 0.9 + 0.0999 * i as f64 / 49.0;
            let r = solve_level(&LevelQuery::eph_pairs(Gamma::new(g).unwrap())).unwrap();
            assert!((r.xi - (2.5 * g - 2.0)).abs() < 1e-12, "gamma={g}");
        }
        // below 8/9 the window condition 𝔟 < 2/3 takes over
        let r = solve_level(&LevelQuery::eph_pairs(Gamma::new(0.85).unwrap())).unwrap();
        assert_eq!(r.binding_constraint, BindingConstraint::DecompositionB);
        assert!((r.xi - (4.0 * 0.85 - 10.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn epsilon_is_subtracted() {
        let g = Gamma::from_complement(1e-12).unwrap();
        let mut qy = LevelQuery::a36_a3_pairs(g);
        let base = solve_level(&qy).unwrap().xi;
        qy.epsilon = 0.01;
        assert!((solve_level(&qy).unwrap().xi - (base - 0.01)).abs() < 1e-14);
    }

    #[test]
    fn subproduct_chain() {
        let w = subproduct_window_check(Gamma::from_complement(1e-11).unwrap(), 0.47284, 0.0);
        assert!(w.holds);
        let w = subproduct_window_check(Gamma::new(0.9999999).unwrap(), 0.47284, 0.0);
        assert!(w.low_below_bound && w.bound_below_gamma0 && !w.gamma0_below_gamma);
        let w = subproduct_window_check(Gamma::new(0.95).unwrap(), 0.47284, 0.0);
        assert!(!w.low_below_bound && !w.holds);
        assert!((w.low_exponent - 1.35355).abs() < 1e-4);
        assert!(subproduct_window_check(Gamma::new(1.0).unwrap(), 0.0, 0.0).holds);
    }

    #[test]
    fn ladder_limits_exact() {
        for rung in ladder() {
            assert_eq!(rung.limit(), rung.stated_limit, "{}", rung.name);
        }
        assert_eq!(ladder()[3].limit(), theorem1_limit());
    }

    #[test]
    fn pairs_are_the_paper_choice() {
        let qy = LevelQuery::a36_a3_pairs(Gamma::new(0.99).unwrap());
        assert_eq!(qy.pair_type_i.to_pair().unwrap(), iterate_a(36));
        assert_eq!(qy.pair_type_ii.kappa, "1/30");
    }

    proptest! {
        #[test]
        fn sup_characterization(t in 0.001f64..0.999, eph in any::<bool>()) {
            let qy = if eph {
                LevelQuery::eph_pairs(Gamma::new(0.85 + 0.149 * t).unwrap())
            } else {
                LevelQuery::a36_a3_pairs(Gamma::from_complement(t * gamma0_complement()).unwrap())
            };
            let pr = qy.problem().unwrap();
            let r = pr.solve();
            prop_assert!(r.feasible);
            prop_assert!(r.xi <= pr.cap());
            prop_assert!(pr.feasible_at(r.xi - 1e-9));
            prop_assert!(!pr.feasible_at(r.xi + 1e-9));
        }
    }
}
