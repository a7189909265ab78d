//! Linear sieve functions F(s), f(s) from their explicit piecewise forms, the
//! differential–difference check, and the main term of V(z) for the twin density.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_nested, QuadResult};

/// Euler's constant C₀.
pub const EULER_GAMMA_LITERAL: &str = "0.577215664901532860606512090082";
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;
/// e^{C₀}
pub const EXP_EULER_GAMMA: f64 = 1.781072417990197985236504103107;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SieveFnKind {
    #[serde(rename = "F")]
    Upper,
    #[serde(rename = "f")]
    Lower,
}

impl fmt::Display for SieveFnKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SieveFnKind::Upper => "F",
            SieveFnKind::Lower => "f",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "F_le3")]
    UpperLe3,
    #[serde(rename = "F_3to5")]
    Upper3To5,
    #[serde(rename = "f_le2")]
    LowerLe2,
    #[serde(rename = "f_2to4")]
    Lower2To4,
    #[serde(rename = "f_4to6")]
    Lower4To6,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::UpperLe3 => "F_le3",
            Branch::Upper3To5 => "F_3to5",
            Branch::LowerLe2 => "f_le2",
            Branch::Lower2To4 => "f_2to4",
            Branch::Lower4To6 => "f_4to6",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SieveFnValue {
    pub s: f64,
    pub kind: SieveFnKind,
    pub value: f64,
    pub branch: Branch,
    pub quad_error: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(Error::pre(format!("tolerance must be positive, got {tol}")))
    }
}

/// I(u) = ∫₂^u log(t−1)/t dt for u ≥ 2.
pub fn inner_log_integral(u: f64, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    if !(u >= 2.0) {
        return Err(Error::domain(format!("inner integral needs u >= 2, got {u}")));
    }
    integrate(|t: f64| (t - 1.0).ln() / t, 2.0, u, tol)
}

/// J(s) = ∫₃^{s−1} dt₁/t₁ ∫₂^{t₁−1} log(t₂−1)/t₂ dt₂ for s ≥ 4.
pub fn double_log_integral(s: f64, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    if !(s >= 4.0) {
        return Err(Error::domain(format!("double integral needs s >= 4, got {s}")));
    }
    integrate_nested(
        3.0,
        s - 1.0,
        |t1| (2.0, t1 - 1.0),
        |t1, t2| (t2 - 1.0).ln() / (t2 * t1),
        tol,
    )
}

/// F on an explicitly chosen branch, so both sides of s = 3 can be compared.
pub fn big_f_on(branch: Branch, s: f64, tol: f64) -> Result<SieveFnValue> {
    check_tol(tol)?;
    let lead = 2.0 * EXP_EULER_GAMMA / s;
    let (value, quad_error) = match branch {
        Branch::UpperLe3 => (lead, 0.0),
        Branch::Upper3To5 => {
            let i = inner_log_integral(s - 1.0, tol / lead)?;
            (lead * (1.0 + i.value), lead * i.error)
        }
        other => return Err(Error::pre(format!("{} is not a branch of F", other.name()))),
    };
    Ok(SieveFnValue { s, kind: SieveFnKind::Upper, value, branch, quad_error })
}

pub fn big_f(s: f64, tol: f64) -> Result<SieveFnValue> {
    if !(s > 0.0 && s <= 5.0) {
        return Err(Error::domain(format!("F is only available on (0, 5], got s={s}")));
    }
    big_f_on(if s <= 3.0 { Branch::UpperLe3 } else { Branch::Upper3To5 }, s, tol)
}

pub fn small_f_on(branch: Branch, s: f64, tol: f64) -> Result<SieveFnValue> {
    check_tol(tol)?;
    let lead = 2.0 * EXP_EULER_GAMMA / s;
    let (value, quad_error) = match branch {
        Branch::LowerLe2 => (0.0, 0.0),
        Branch::Lower2To4 => (lead * (s - 1.0).ln(), 0.0),
        Branch::Lower4To6 => {
            let j = double_log_integral(s, tol / lead)?;
            (lead * ((s - 1.0).ln() + j.value), lead * j.error)
        }
        other => return Err(Error::pre(format!("{} is not a branch of f", other.name()))),
    };
    Ok(SieveFnValue { s, kind: SieveFnKind::Lower, value, branch, quad_error })
}

pub fn small_f(s: f64, tol: f64) -> Result<SieveFnValue> {
    if !(s > 0.0 && s <= 6.0) {
        return Err(Error::domain(format!("f is only available on (0, 6], got s={s}")));
    }
    let branch = if s <= 2.0 {
        Branch::LowerLe2
    } else if s <= 4.0 {
        Branch::Lower2To4
    } else {
        Branch::Lower4To6
    };
    small_f_on(branch, s, tol)
}

pub fn sieve_fn(kind: SieveFnKind, s: f64, tol: f64) -> Result<SieveFnValue> {
    match kind {
        SieveFnKind::Upper => big_f(s, tol),
        SieveFnKind::Lower => small_f(s, tol),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DdeqResidual {
    pub s: f64,
    pub h: f64,
    /// |d/ds(sF(s)) − f(s−1)| by central difference, when s is in range for F
    pub r_upper: Option<f64>,
    /// |d/ds(sf(s)) − F(s−1)|
    pub r_lower: Option<f64>,
}

pub fn ddeq_residual(s: f64, h: f64, tol: f64) -> Result<DdeqResidual> {
    if !(1e-6..=1e-2).contains(&h) {
        return Err(Error::pre(format!("step h must lie in [1e-6, 1e-2], got {h}")));
    }
    let in_upper = s > 2.0 + h && s < 5.0 - h;
    let in_lower = s > 2.0 + h && s < 6.0 - h;
    if !in_lower {
        return Err(Error::domain(format!("need 2+h < s < 6-h, got s={s}")));
    }
    let r_upper = if in_upper {
        let d = ((s + h) * big_f(s + h, tol)?.value - (s - h) * big_f(s - h, tol)?.value) / (2.0 * h);
        Some((d - small_f(s - 1.0, tol)?.value).abs())
    } else {
        None
    };
    let d = ((s + h) * small_f(s + h, tol)?.value - (s - h) * small_f(s - h, tol)?.value) / (2.0 * h);
    let r_lower = Some((d - big_f(s - 1.0, tol)?.value).abs());
    Ok(DdeqResidual { s, h, r_upper, r_lower })
}

/// Sieve dimension function ω for V(z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum OmegaKind {
    /// ω(d) = d/φ(d) on odd squarefree d, for which 𝒞(ω) = 2𝔖.
    ChenTwin { singular_series: f64 },
}

/// Main term 𝒞(ω)e^{−C₀}/log z of V(z) with log z = z_exponent·log x.
pub fn v_coefficient(kind: OmegaKind, z_exponent: f64, log_x: f64) -> Result<f64> {
    let log_z = z_exponent * log_x;
    if !(log_z > 1.0) {
        return Err(Error::domain(format!("need z_exponent * log_x > 1, got {log_z}")));
    }
    let OmegaKind::ChenTwin { singular_series } = kind;
    Ok(2.0 * singular_series / (EXP_EULER_GAMMA * log_z))
}
