//! Adaptive Gauss-Kronrod quadrature.
//!
//! A 15-point Kronrod rule (embedded 7-point Gauss) drives worst-interval
//! bisection. Semi-infinite integrals are mapped onto (0, 1) with
//! x = t / (1 - t); the Kronrod nodes are interior, so integrable endpoint
//! singularities at 0 are never sampled directly.

use crate::error::{Error, Result};

/// Tolerances and subdivision budget for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Parameter {
                name: "rel_tol",
                value: self.rel_tol,
                constraint: "must be strictly positive",
            });
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::Parameter {
                name: "abs_tol",
                value: self.abs_tol,
                constraint: "must be strictly positive",
            });
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Parameter {
                name: "max_subdivisions",
                value: self.max_subdivisions as f64,
                constraint: "must be >= 1",
            });
        }
        Ok(())
    }

    /// Tight tolerances used internally where a result feeds a dual-path
    /// comparison; effectively relative-error driven.
    pub(crate) fn tight() -> Self {
        Self {
            rel_tol: 1e-11,
            abs_tol: 1e-280,
            max_subdivisions: 400,
        }
    }
}

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// One 15-point Kronrod pass over [a, b]. Errors out on a non-finite
/// integrand sample.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut fv = [0.0f64; 15];
    for (i, &x) in XGK.iter().enumerate().take(7) {
        fv[i] = f(center - half * x);
        fv[14 - i] = f(center + half * x);
    }
    fv[7] = f(center);
    if fv.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("integrand returned a non-finite value"));
    }

    let mut kronrod = 0.0;
    let mut resabs = 0.0;
    for i in 0..7 {
        let pair = fv[i] + fv[14 - i];
        kronrod += WGK[i] * pair;
        resabs += WGK[i] * (fv[i].abs() + fv[14 - i].abs());
    }
    kronrod += WGK[7] * fv[7];
    resabs += WGK[7] * fv[7].abs();

    // Gauss points are the odd-indexed Kronrod nodes.
    let mut gauss = WG[3] * fv[7];
    for i in 0..3 {
        gauss += WG[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    }

    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (fv[7] - mean).abs();
    for i in 0..7 {
        resasc += WGK[i] * ((fv[i] - mean).abs() + (fv[14 - i] - mean).abs());
    }
    resasc *= half.abs();
    resabs *= half.abs();

    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).abs();
    let mut error = raw;
    if resasc != 0.0 && raw != 0.0 {
        let scale = (200.0 * raw / resasc).powf(1.5);
        error = if scale < 1.0 { resasc * scale } else { resasc };
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if floor > error {
        error = floor;
    }

    Ok(Panel {
        a,
        b,
        value,
        error,
    })
}

/// Adaptive integral of `f` over the finite interval [a, b].
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integration bounds must be finite"));
    }
    if a == b {
        return Ok((0.0, 0.0));
    }

    let mut panels = vec![gk15(&f, a, b)?];
    for _ in 0..cfg.max_subdivisions {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.error).sum();
        if err <= cfg.abs_tol.max(cfg.rel_tol * total.abs()) {
            return Ok((total, err));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("panel list is never empty");
        let Panel { a: pa, b: pb, .. } = panels[worst];
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            break; // interval no longer splittable in f64
        }
        panels[worst] = gk15(&f, pa, mid)?;
        panels.push(gk15(&f, mid, pb)?);
    }

    let total: f64 = panels.iter().map(|p| p.value).sum();
    let err: f64 = panels.iter().map(|p| p.error).sum();
    if err <= cfg.abs_tol.max(cfg.rel_tol * total.abs()) {
        Ok((total, err))
    } else {
        Err(Error::Accuracy {
            what: "adaptive quadrature",
            best: total,
            err_estimate: err,
        })
    }
}

/// Adaptive integral of `f` over (0, ∞) via the map x = t / (1 - t).
///
/// The integrand may carry an integrable singularity at 0; it is never
/// evaluated at the endpoints themselves.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    let transformed = |t: f64| {
        let u = 1.0 - t;
        f(t / u) / (u * u)
    };
    integrate_finite(transformed, 0.0, 1.0, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_tail() {
        let cfg = QuadratureConfig::default();
        let (v, e) = integrate_semi_infinite(|x| (-x).exp(), &cfg).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "{v} +- {e}");
        let (v, _) = integrate_semi_infinite(|x| x * (-x).exp(), &cfg).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "{v}");
        let (v, _) = integrate_semi_infinite(|x| (-x * x).exp(), &cfg).unwrap();
        let half_sqrt_pi = 0.886_226_925_452_758;
        assert!((v - half_sqrt_pi).abs() < 1e-12, "{v}");
    }

    #[test]
    fn integrable_endpoint_singularity() {
        // ∫0^∞ x^{-1/4} e^{-x} dx = Γ(3/4)
        let cfg = QuadratureConfig::default();
        let (v, _) = integrate_semi_infinite(|x| x.powf(-0.25) * (-x).exp(), &cfg).unwrap();
        let gamma34 = 1.225_416_702_465_177_6;
        assert!((v - gamma34).abs() < 1e-9 * gamma34, "{v}");
    }

    #[test]
    fn finite_interval_cross_check() {
        // ∫0^1 t² e^{-t} dt = γ_low(3, 1), an independent route to the
        // incomplete-gamma series value.
        let cfg = QuadratureConfig::default();
        let (v, _) = integrate_finite(|t| t * t * (-t).exp(), 0.0, 1.0, &cfg).unwrap();
        let p = crate::numerics::incgamma::reg_lower_inc_gamma(3.0, 1.0).unwrap();
        let gamma_low = p * 2.0; // Γ(3) = 2
        assert!((v - gamma_low).abs() < 1e-12, "{v} vs {gamma_low}");
    }

    #[test]
    fn budget_exhaustion_reports_best_estimate() {
        let cfg = QuadratureConfig {
            rel_tol: 1e-14,
            abs_tol: 1e-300,
            max_subdivisions: 2,
        };
        let r = integrate_finite(|x: f64| (40.0 * x).sin().abs(), 0.0, 1.0, &cfg);
        match r {
            Err(Error::Accuracy { best, .. }) => assert!(best.is_finite()),
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_integrand_is_rejected() {
        let cfg = QuadratureConfig::default();
        let r = integrate_finite(|_| f64::NAN, 0.0, 1.0, &cfg);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn config_validation() {
        let bad = QuadratureConfig {
            rel_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = QuadratureConfig {
            max_subdivisions: 0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
