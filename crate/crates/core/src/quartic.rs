//! Floating-point cross-check of the quartic integral
//!
//! ```text
//! ∫_0^∞ dx / (x^4 + 2a x^2 + 1)^{m+1} = π P_m(a) / (2^{m+3/2} (a+1)^{m+1/2}),   a > -1.
//! ```
//!
//! The infinite range is folded onto `[0, 1]` with `x -> 1/x`, which maps the
//! integrand on `[1, ∞)` to `x^{4m+2} / (x^4 + 2a x^2 + 1)^{m+1}` on `(0, 1]`.

#![allow(clippy::excessive_precision)]

use crate::coeff::eval_p;
use crate::scalar::Real;
use crate::{Error, Rational, Result};
use num_traits::{One, ToPrimitive};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Default relative tolerance for the cross-check.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Default cap on the number of subintervals in the adaptive partition.
pub const DEFAULT_MAX_INTERVALS: usize = 1_000_000;

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1]. Index 7 is the centre;
// odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// `1 / (x^4 + 2a x^2 + 1)^{m+1}`.
pub fn integrand<F: Real>(x: F, a: F, m: u32) -> F {
    let x2 = x * x;
    let base = x2 * x2 + F::lit(2.0) * a * x2 + F::one();
    base.powi(-(m as i32 + 1))
}

/// The integrand after folding `[1, ∞)` onto `(0, 1]`.
pub fn folded_integrand<F: Real>(x: F, a: F, m: u32) -> F {
    (F::one() + x.powi(4 * m as i32 + 2)) * integrand(x, a, m)
}

#[derive(Debug, Clone, Copy)]
struct Segment<F> {
    lo: F,
    hi: F,
    value: F,
    error: F,
}

impl<F: Real> PartialEq for Segment<F> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<F: Real> Eq for Segment<F> {}

impl<F: Real> PartialOrd for Segment<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Real> Ord for Segment<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

fn gauss_kronrod<F: Real, G: Fn(F) -> F>(f: &G, lo: F, hi: F) -> Segment<F> {
    let half = F::lit(0.5);
    let center = half * (lo + hi);
    let radius = half * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * F::lit(WGK[7]);
    let mut gauss = fc * F::lit(WG[3]);
    for j in 0..7 {
        let dx = radius * F::lit(XGK[j]);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + F::lit(WGK[j]) * pair;
        if j % 2 == 1 {
            gauss = gauss + F::lit(WG[j / 2]) * pair;
        }
    }
    Segment {
        lo,
        hi,
        value: kronrod * radius,
        error: ((kronrod - gauss) * radius).abs(),
    }
}

/// Globally adaptive Gauss-Kronrod quadrature: the subinterval with the
/// largest error estimate is bisected until the summed estimate drops to
/// `tol · |integral|`.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature<F> {
    pub tol: F,
    pub max_intervals: usize,
}

impl<F: Real> Default for Quadrature<F> {
    fn default() -> Self {
        Quadrature {
            tol: F::lit(DEFAULT_TOL),
            max_intervals: DEFAULT_MAX_INTERVALS,
        }
    }
}

impl<F: Real> Quadrature<F> {
    pub fn with_tol(tol: F) -> Self {
        Quadrature {
            tol,
            ..Default::default()
        }
    }

    pub fn integrate<G: Fn(F) -> F>(&self, f: G, lo: F, hi: F) -> Result<F> {
        if self.tol <= F::zero() || !self.tol.is_finite() {
            return Err(Error::domain(
                "quadrature tolerance must be positive and finite",
            ));
        }
        let first = gauss_kronrod(&f, lo, hi);
        let (mut value, mut error) = (first.value, first.error);
        let mut heap = BinaryHeap::from([first]);
        let half = F::lit(0.5);
        while error > self.tol * value.abs() {
            if heap.len() >= self.max_intervals {
                return Err(Error::Convergence {
                    budget: self.max_intervals,
                    estimate: value.to_f64().unwrap_or(f64::NAN),
                    error: error.to_f64().unwrap_or(f64::NAN),
                });
            }
            let worst = heap.pop().expect("partition is never empty");
            let mid = half * (worst.lo + worst.hi);
            let left = gauss_kronrod(&f, worst.lo, mid);
            let right = gauss_kronrod(&f, mid, worst.hi);
            value = value - worst.value + left.value + right.value;
            error = error - worst.error + left.error + right.error;
            heap.push(left);
            heap.push(right);
            if heap.len() % 64 == 0 {
                // resum to shed drift from the running updates
                value = heap.iter().fold(F::zero(), |s, seg| s + seg.value);
                error = heap.iter().fold(F::zero(), |s, seg| s + seg.error);
            }
        }
        Ok(heap.iter().fold(F::zero(), |s, seg| s + seg.value))
    }
}

fn check_a(a: &Rational) -> Result<()> {
    if *a <= -Rational::one() {
        return Err(Error::domain(format!("need a > -1, got a = {a}")));
    }
    Ok(())
}

fn to_real<F: Real>(x: &Rational) -> F {
    F::lit(x.to_f64().unwrap_or(f64::NAN))
}

/// Numeric value of the quartic integral over `[0, ∞)` to relative accuracy `tol`.
pub fn quartic_integral_numeric<F: Real>(m: u32, a: &Rational, tol: F) -> Result<F> {
    quartic_integral_with(m, a, &Quadrature::with_tol(tol))
}

pub fn quartic_integral_with<F: Real>(m: u32, a: &Rational, quad: &Quadrature<F>) -> Result<F> {
    check_a(a)?;
    let af: F = to_real(a);
    quad.integrate(|x| folded_integrand(x, af, m), F::zero(), F::one())
}

/// `π P_m(a) / (2^{m+3/2} (a+1)^{m+1/2})`, with `P_m(a)` evaluated exactly and
/// rounded once.
pub fn closed_form<F: Real>(m: u32, a: &Rational) -> Result<F> {
    check_a(a)?;
    let p: F = to_real(&eval_p(m, a));
    let shift: F = to_real(&(a + Rational::one()));
    let exponent = F::lit(m as f64 + 0.5);
    let two = F::lit(2.0);
    Ok(F::PI() * p / (two.powf(exponent + F::one()) * shift.powf(exponent)))
}

/// Numeric integral against the closed form for one `(m, a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralCheckResult<F> {
    pub m: u32,
    pub a: Rational,
    pub numeric_integral: F,
    pub closed_form: F,
    pub abs_error: F,
    pub rel_error: F,
    pub tol: F,
    pub pass: bool,
}

pub fn check_integral_identity<F: Real>(
    m: u32,
    a: &Rational,
    tol: F,
) -> Result<IntegralCheckResult<F>> {
    check_a(a)?;
    let numeric_integral = quartic_integral_numeric(m, a, tol)?;
    let closed_form = closed_form::<F>(m, a)?;
    let abs_error = (numeric_integral - closed_form).abs();
    let rel_error = abs_error / closed_form.abs();
    Ok(IntegralCheckResult {
        m,
        a: a.clone(),
        numeric_integral,
        closed_form,
        abs_error,
        rel_error,
        tol,
        pass: rel_error <= tol,
    })
}
