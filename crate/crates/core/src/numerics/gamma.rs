//! Log-gamma kernels, real and complex.
//!
//! Everything downstream (incomplete gamma, residue series, Mellin-Barnes
//! contours) works in the log domain with explicit sign tracking, because
//! raw gamma values overflow almost immediately inside series terms.
//!
//! The evaluation is the de Moivre (Stirling) series with an upward
//! recurrence shift to Re(x) >= 10, where nine Bernoulli terms leave a
//! truncation error below 1e-15.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// B_{2n} / (2n (2n-1)) for n = 1..=9, the Stirling series coefficients.
const STIRLING: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Natural log of the gamma function for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("ln_gamma requires x > 0"));
    }
    Ok(ln_gamma_pos(x))
}

/// ln Γ(x) for x > 0 without the domain check.
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x >= 10.0 {
        return stirling_real(x);
    }
    // Shift into the asymptotic region and divide the factors back out:
    // ln Γ(x) = ln Γ(x + k) - ln(x (x+1) ... (x+k-1)).
    let mut prod = 1.0;
    let mut y = x;
    while y < 10.0 {
        prod *= y;
        y += 1.0;
    }
    stirling_real(y) - prod.ln()
}

fn stirling_real(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for a in STIRLING {
        series += a * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series
}

/// (ln |Γ(x)|, sign of Γ(x)) for any real x. The sign is 0.0 at the poles
/// x = 0, -1, -2, ... where |Γ| is reported as +inf.
pub(crate) fn ln_abs_gamma(x: f64) -> (f64, f64) {
    if x > 0.0 {
        return (ln_gamma_pos(x), 1.0);
    }
    if x == x.floor() {
        return (f64::INFINITY, 0.0);
    }
    // Reflection: Γ(x) Γ(1-x) = π / sin(πx).
    let s = sin_pi(x);
    let ln_abs = std::f64::consts::PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x);
    (ln_abs, s.signum())
}

/// 1 / Γ(x), exactly 0.0 at the poles.
pub(crate) fn recip_gamma(x: f64) -> f64 {
    let (l, s) = ln_abs_gamma(x);
    if s == 0.0 {
        0.0
    } else {
        s * (-l).exp()
    }
}

/// sin(πx) with the argument reduced before multiplication, so the result
/// stays accurate for moderately large |x|.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0); // in [0, 2)
    let (r, sign) = if r > 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let v = if r <= 0.5 {
        (std::f64::consts::PI * r).sin()
    } else {
        (std::f64::consts::PI * (1.0 - r)).sin()
    };
    sign * v
}

/// ln Γ(z) for complex z with Re(z) > 0 or |Im(z)| > 0.
///
/// The branch may differ from the principal one by multiples of 2πi; callers
/// exponentiate combined log-gamma expressions, so windings cancel.
pub(crate) fn ln_gamma_complex(z: Complex64) -> Complex64 {
    let mut logs = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < 10.0 {
        logs += w.ln();
        w += 1.0;
    }
    stirling_complex(w) - logs
}

fn stirling_complex(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for a in STIRLING {
        series += p * a;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + series
}
