//! Laurent-coefficient extraction by Cauchy integrals on circles.
//!
//! c_k = (1/2πi) ∮ g(x)(x−center)^{−k−1} dx, sampled uniformly on a circle.
//! For g analytic on an annulus containing the circle the trapezoid rule is
//! exponentially accurate; the reported error per coefficient comes from
//! doubling the sample count.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::QuadratureConfig;

/// Laurent coefficients c_k, k = min_order … max_order, about `center`.
#[derive(Debug, Clone)]
pub struct LaurentCoefficients {
    pub center: Complex64,
    pub min_order: i32,
    pub coefficients: Vec<Complex64>,
    pub radius_used: f64,
    /// Per-coefficient error estimate (sample-doubling difference).
    pub errors: Vec<f64>,
}

impl LaurentCoefficients {
    pub fn max_order(&self) -> i32 {
        self.min_order + self.coefficients.len() as i32 - 1
    }

    /// c_k, or zero outside the stored range.
    pub fn coefficient(&self, k: i32) -> Complex64 {
        if k < self.min_order || k > self.max_order() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coefficients[(k - self.min_order) as usize]
        }
    }

    pub fn error(&self, k: i32) -> f64 {
        if k < self.min_order || k > self.max_order() {
            0.0
        } else {
            self.errors[(k - self.min_order) as usize]
        }
    }
}

fn coefficients_at_n<G>(
    g: &G,
    center: Complex64,
    radius: f64,
    min_order: i32,
    max_order: i32,
    n: usize,
) -> Result<Vec<Complex64>>
where
    G: Fn(Complex64) -> Complex64,
{
    let mut samples = Vec::with_capacity(n);
    for j in 0..n {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let z = center + Complex64::from_polar(radius, theta);
        let v = g(z);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::RadiusError { radius });
        }
        samples.push(v);
    }
    let count = (max_order - min_order + 1) as usize;
    let mut out = Vec::with_capacity(count);
    for k in min_order..=max_order {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, v) in samples.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            acc += v * Complex64::from_polar(1.0, -(k as f64) * theta);
        }
        out.push(acc / n as f64 / radius.powi(k));
    }
    Ok(out)
}

/// Laurent coefficients of `g` about `center` for orders
/// min_order ..= max_order, sampled on the circle of the given radius.
pub fn circle_coefficients<G>(
    g: G,
    center: Complex64,
    min_order: i32,
    max_order: i32,
    radius: f64,
    cfg: &QuadratureConfig,
) -> Result<LaurentCoefficients>
where
    G: Fn(Complex64) -> Complex64,
{
    cfg.validate()?;
    if min_order > max_order {
        return Err(Error::InvalidConfig("min_order > max_order".into()));
    }
    if !(radius > 0.0) {
        return Err(Error::InvalidConfig("radius must be > 0".into()));
    }
    let n = cfg.circle_points;
    let coarse = coefficients_at_n(&g, center, radius, min_order, max_order, n)?;
    let fine = coefficients_at_n(&g, center, radius, min_order, max_order, 2 * n)?;
    let errors = coarse
        .iter()
        .zip(fine.iter())
        .map(|(a, b)| {
            let d = (a - b).norm();
            d.max(f64::EPSILON * b.norm() * 8.0)
        })
        .collect();
    Ok(LaurentCoefficients {
        center,
        min_order,
        coefficients: fine,
        radius_used: radius,
        errors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn taylor_of_exp() {
        let cfg = QuadratureConfig::default();
        let lc =
            circle_coefficients(|z| z.exp(), c(0.0, 0.0), 0, 5, 0.5, &cfg).unwrap();
        assert!((lc.coefficient(3) - c(1.0 / 6.0, 0.0)).norm() < 1e-13);
        assert!((lc.coefficient(5) - c(1.0 / 120.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn simple_pole() {
        let cfg = QuadratureConfig::default();
        let lc = circle_coefficients(|z| 1.0 / z, c(0.0, 0.0), -1, 1, 0.5, &cfg).unwrap();
        assert!((lc.coefficient(-1) - c(1.0, 0.0)).norm() < 1e-13);
        assert!(lc.coefficient(0).norm() < 1e-13);
    }

    #[test]
    fn bernoulli_generating_function() {
        // 1/(e^x − 1): c₋₁ = 1, c₀ = −1/2, c₁ = 1/12
        let cfg = QuadratureConfig::default();
        let lc = circle_coefficients(
            |z| 1.0 / (z.exp() - 1.0),
            c(0.0, 0.0),
            -1,
            3,
            0.5,
            &cfg,
        )
        .unwrap();
        assert!((lc.coefficient(-1) - c(1.0, 0.0)).norm() < 1e-12);
        assert!((lc.coefficient(0) - c(-0.5, 0.0)).norm() < 1e-12);
        assert!((lc.coefficient(1) - c(1.0 / 12.0, 0.0)).norm() < 1e-12);
        assert!(lc.coefficient(2).norm() < 1e-12);
    }

    #[test]
    fn radius_independence_within_reported_error() {
        let cfg = QuadratureConfig::default();
        let g = |z: Complex64| 1.0 / (z.exp() - 1.0);
        let a = circle_coefficients(g, c(0.0, 0.0), -1, 3, 0.5, &cfg).unwrap();
        let b = circle_coefficients(g, c(0.0, 0.0), -1, 3, 0.25, &cfg).unwrap();
        for k in -1..=3 {
            let d = (a.coefficient(k) - b.coefficient(k)).norm();
            let budget = (a.error(k) + b.error(k)).max(1e-13);
            assert!(d <= budget, "k = {k}: {d:e} > {budget:e}");
        }
    }

    #[test]
    fn non_finite_on_circle_is_rejected() {
        let cfg = QuadratureConfig::default();
        // pole exactly on the sampling circle at angle 0
        let r = circle_coefficients(
            |z| 1.0 / (z - 0.5),
            c(0.0, 0.0),
            0,
            1,
            0.5,
            &cfg,
        );
        assert!(matches!(r, Err(Error::RadiusError { .. })));
    }
}
