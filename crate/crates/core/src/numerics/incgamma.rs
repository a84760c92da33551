//! Regularized lower incomplete gamma function P(a, x).
//!
//! Series expansion below the crossover x = a + 1, Lentz continued fraction
//! above it. A log-domain variant is provided for deep-left-tail evaluations
//! (large shape, moderate argument) where P itself underflows.

use crate::error::{Error, Result};
use crate::numerics::gamma::ln_gamma_pos;

const MAX_ITER: usize = 600;
const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;

/// P(a, x) = γ_low(a, x) / Γ(a), monotone nondecreasing in x, in [0, 1].
pub fn reg_lower_inc_gamma(a: f64, x: f64) -> Result<f64> {
    check_args(a, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x < a + 1.0 {
        let (ln_sum, ln_pref) = lower_series(a, x);
        Ok((ln_sum + ln_pref).exp())
    } else {
        Ok(1.0 - upper_cf(a, x))
    }
}

/// ln P(a, x); finite for any x > 0 even when P underflows in f64.
pub(crate) fn ln_reg_lower_inc_gamma(a: f64, x: f64) -> f64 {
    debug_assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        return f64::NEG_INFINITY;
    }
    if x < a + 1.0 {
        let (ln_sum, ln_pref) = lower_series(a, x);
        ln_sum + ln_pref
    } else {
        let q = upper_cf(a, x);
        (-q).ln_1p()
    }
}

fn check_args(a: f64, x: f64) -> Result<()> {
    if !(a > 0.0) {
        return Err(Error::Domain("incomplete gamma requires a > 0"));
    }
    if !(x >= 0.0) {
        return Err(Error::Domain("incomplete gamma requires x >= 0"));
    }
    Ok(())
}

/// Returns (ln Σ, ln prefactor) with
/// P = exp(ln Σ) · exp(a ln x - x - ln Γ(a+1)) and
/// Σ = Σ_{n>=0} x^n / ((a+1)(a+2)...(a+n)), all terms positive.
fn lower_series(a: f64, x: f64) -> (f64, f64) {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut ap = a;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term < sum * EPS {
            break;
        }
    }
    let ln_pref = a * x.ln() - x - ln_gamma_pos(a + 1.0);
    (sum.ln(), ln_pref)
}

/// Q(a, x) by the Lentz continued fraction, valid for x >= a + 1.
fn upper_cf(a: f64, x: f64) -> f64 {
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / FPMIN;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b + an / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    (a * x.ln() - x - ln_gamma_pos(a)).exp() * h
}
