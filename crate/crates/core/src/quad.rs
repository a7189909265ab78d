//! Global adaptive Gauss–Kronrod 10/21 quadrature and iterated two-dimensional integrals.

use std::cell::Cell;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// Kronrod abscissae on [0, 1]; odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525478478,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Panel cap for a single adaptive integration.
pub const DEFAULT_MAX_PANELS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    /// estimated absolute error
    pub error: f64,
    pub panels: usize,
    pub evaluations: usize,
}

impl QuadResult {
    pub fn zero() -> Self {
        QuadResult { value: 0.0, error: 0.0, panels: 0, evaluations: 0 }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = WGK[10] * fc;
    let mut resg = 0.0;
    let mut resabs = resk.abs();
    let mut fv = [(0.0f64, 0.0f64); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv[j] = (f1, f2);
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
    }
    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut error = ((resk - resg) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Panel { a, b, value, error }
}

/// ∫_a^b f with absolute error target `tol`. An empty or reversed range integrates to zero
/// (reversed ranges are not negated; callers only pass ordered limits).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    integrate_capped(f, a, b, tol, DEFAULT_MAX_PANELS)
}

pub fn integrate_capped<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_panels: usize) -> Result<QuadResult> {
    if !(tol > 0.0) {
        return Err(Error::pre(format!("tolerance must be positive, got {tol}")));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::pre("integration limits must be finite"));
    }
    if b <= a {
        return Ok(QuadResult::zero());
    }
    let first = gk21(&f, a, b);
    let (mut value, mut error) = (first.value, first.error);
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut evaluations = 21;
    while error > tol {
        if heap.len() >= max_panels {
            return Err(Error::Convergence { value, error, panels: heap.len() });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // cannot split further; accept what we have
            heap.push(worst);
            return Err(Error::Convergence { value, error, panels: heap.len() });
        }
        let left = gk21(&f, worst.a, mid);
        let right = gk21(&f, mid, worst.b);
        evaluations += 42;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if heap.len() % 64 == 0 {
            // refresh sums to keep cancellation from drifting
            value = heap.iter().map(|p| p.value).sum();
            error = heap.iter().map(|p| p.error).sum();
        }
    }
    let panels = heap.len();
    let value = heap.iter().map(|p| p.value).sum();
    let error = heap.iter().map(|p| p.error).sum();
    Ok(QuadResult { value, error, panels, evaluations })
}

/// ∫_a^b ∫_{lo(x)}^{hi(x)} f(x, y) dy dx by iterated adaptive quadrature.
///
/// Inner integrals run at `tol/(10(b−a))`; the reported error is the outer estimate plus
/// (b − a) times the largest inner estimate.
pub fn integrate_nested<B, F>(a: f64, b: f64, bounds: B, f: F, tol: f64) -> Result<QuadResult>
where
    B: Fn(f64) -> (f64, f64),
    F: Fn(f64, f64) -> f64,
{
    if b <= a {
        return Ok(QuadResult::zero());
    }
    let inner_tol = tol / (10.0 * (b - a).max(1.0));
    let worst_inner = Cell::new(0.0f64);
    let inner_evals = Cell::new(0usize);
    let failure: Cell<Option<(f64, f64, usize)>> = Cell::new(None);
    let outer = integrate(
        |x| {
            let (lo, hi) = bounds(x);
            match integrate(|y| f(x, y), lo, hi, inner_tol) {
                Ok(r) => {
                    worst_inner.set(worst_inner.get().max(r.error));
                    inner_evals.set(inner_evals.get() + r.evaluations);
                    r.value
                }
                Err(Error::Convergence { value, error, panels }) => {
                    failure.set(Some((value, error, panels)));
                    value
                }
                Err(_) => f64::NAN,
            }
        },
        a,
        b,
        tol / 2.0,
    );
    let outer = match outer {
        Ok(r) => r,
        Err(Error::Convergence { value, error, panels }) => {
            return Err(Error::Convergence { value, error: error + (b - a) * worst_inner.get(), panels })
        }
        Err(e) => return Err(e),
    };
    if let Some((_, error, panels)) = failure.get() {
        return Err(Error::Convergence { value: outer.value, error: outer.error + (b - a) * error, panels });
    }
    Ok(QuadResult {
        value: outer.value,
        error: outer.error + (b - a) * worst_inner.get(),
        panels: outer.panels,
        evaluations: outer.evaluations + inner_evals.get(),
    })
}
