//! Double-exponential (tanh-sinh) quadrature.
//!
//! The change of variable x = tanh((π/2)·sinh t) clusters nodes at the
//! endpoints and tames algebraic-logarithmic endpoint singularities.
//! Nodes are generated level by level (step h = 2^{-level}), reusing all
//! previous evaluations; the error estimate is the difference between the
//! last two levels.
//!
//! Integrands receive a [`QuadPoint`] carrying the abscissa together with
//! its distances to both endpoints, computed without cancellation, so that
//! kernels like x^{s-1} or log(1-x) can be evaluated accurately arbitrarily
//! close to an endpoint.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Shared tolerances and sampling parameters for the quadrature engines.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Target relative error.
    pub rel_tol: f64,
    /// Maximum refinement level (node count roughly doubles per level).
    pub max_level: u32,
    /// Truncation abscissa for half-line integrals.
    pub tail_cutoff: f64,
    /// Default radius for Cauchy-coefficient circles.
    pub circle_radius: f64,
    /// Sample count for circle quadrature; a power of two ≥ 16.
    pub circle_points: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            max_level: 12,
            tail_cutoff: 50.0,
            circle_radius: 0.5,
            circle_points: 256,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidConfig("rel_tol must be > 0".into()));
        }
        if self.max_level < 1 {
            return Err(Error::InvalidConfig("max_level must be >= 1".into()));
        }
        if !(self.tail_cutoff > 1.0) {
            return Err(Error::InvalidConfig("tail_cutoff must be > 1".into()));
        }
        if !(self.circle_radius > 0.0) {
            return Err(Error::InvalidConfig("circle_radius must be > 0".into()));
        }
        if self.circle_points < 16 || !self.circle_points.is_power_of_two() {
            return Err(Error::InvalidConfig(
                "circle_points must be a power of two >= 16".into(),
            ));
        }
        Ok(())
    }

    /// Same configuration with a loosened relative tolerance (used by
    /// nested quadratures).
    pub fn relaxed(&self, factor: f64) -> Self {
        let mut c = self.clone();
        c.rel_tol = (self.rel_tol * factor).min(1e-6);
        c
    }
}

/// A quadrature node: the abscissa and its stable distances to the two
/// interval endpoints (`dist_a` + `dist_b` = b − a up to rounding).
#[derive(Debug, Clone, Copy)]
pub struct QuadPoint {
    pub x: f64,
    pub dist_a: f64,
    pub dist_b: f64,
}

/// A quadrature value with its level-differencing error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadValue {
    pub value: Complex64,
    pub error: f64,
}

impl QuadValue {
    pub fn new(value: Complex64, error: f64) -> Self {
        Self { value, error }
    }
}

// Abort the outward node sweep once both one-sided terms have been this far
// below the running sum several times in a row.
const TERM_EPS: f64 = 1e-18;
const T_HARD_MAX: f64 = 6.9;

struct LevelSums {
    weighted: Complex64,
    abs: f64,
}

fn eval_at<F>(f: &F, t: f64, a: f64, b: f64) -> Option<(Complex64, f64)>
where
    F: Fn(QuadPoint) -> Complex64,
{
    let half = 0.5 * (b - a);
    let u = FRAC_PI_2 * t.sinh();
    // one-sided distances via the logistic form of tanh, cancellation-free
    let q = (-2.0 * u.abs()).exp();
    if q == 0.0 {
        return None; // node indistinguishable from the endpoint
    }
    let near = 2.0 * half * q / (1.0 + q); // distance to the nearer endpoint
    let far = 2.0 * half / (1.0 + q);
    let (x, dist_a, dist_b) = if t >= 0.0 {
        (b - near, far, near)
    } else {
        (a + near, near, far)
    };
    if x <= a || x >= b {
        return None;
    }
    // dx/dt = half · (π/2)·cosh t / cosh²(u); cosh²(u) = (1+q)² / (4q·e^{... })
    // computed as half·(π/2)·cosh t · sech²(u) with sech²(u) = 4q/(1+q)²·(stable)
    let sech2 = 4.0 * q / ((1.0 + q) * (1.0 + q));
    let w = half * FRAC_PI_2 * t.cosh() * sech2;
    if w == 0.0 || !w.is_finite() {
        return None;
    }
    let v = f(QuadPoint { x, dist_a, dist_b });
    if !v.re.is_finite() || !v.im.is_finite() {
        // deep-tail nodes with negligible weight may probe a singular value
        if w < 1e-280 {
            return None;
        }
        return Some((Complex64::new(f64::NAN, f64::NAN), w));
    }
    Some((w * v, w * v.norm()))
}

fn sweep_level<F>(f: &F, a: f64, b: f64, h: f64, first_level: bool, scale: f64) -> Result<LevelSums>
where
    F: Fn(QuadPoint) -> Complex64,
{
    let mut weighted = Complex64::new(0.0, 0.0);
    let mut abs = 0.0f64;

    let push = |t: f64, sums: &mut (Complex64, f64)| -> Result<f64> {
        match eval_at(f, t, a, b) {
            None => Ok(0.0),
            Some((wv, wa)) => {
                if !wv.re.is_finite() || !wv.im.is_finite() {
                    return Err(Error::NonFinite(format!("integrand at t = {t}")));
                }
                sums.0 += wv;
                sums.1 += wa;
                Ok(wa)
            }
        }
    };

    let mut sums = (Complex64::new(0.0, 0.0), 0.0f64);
    if first_level {
        push(0.0, &mut sums)?;
        let mut j = 1u64;
        let mut small_streak = 0u32;
        while (j as f64) * h <= T_HARD_MAX {
            let t = j as f64 * h;
            let m1 = push(t, &mut sums)?;
            let m2 = push(-t, &mut sums)?;
            let mag = m1.max(m2);
            if t > 3.0 && mag < TERM_EPS * (sums.1 + scale) {
                small_streak += 1;
                if small_streak >= 2 {
                    break;
                }
            } else {
                small_streak = 0;
            }
            j += 1;
        }
    } else {
        // only the new nodes: odd multiples of h
        let mut j = 1u64;
        let mut small_streak = 0u32;
        while (j as f64) * h <= T_HARD_MAX {
            let t = j as f64 * h;
            let m1 = push(t, &mut sums)?;
            let m2 = push(-t, &mut sums)?;
            let mag = m1.max(m2);
            if t > 3.0 && mag < TERM_EPS * (sums.1 + scale) {
                small_streak += 1;
                if small_streak >= 2 {
                    break;
                }
            } else {
                small_streak = 0;
            }
            j += 2;
        }
    }
    weighted += sums.0;
    abs += sums.1;
    Ok(LevelSums { weighted, abs })
}

/// Tanh-sinh quadrature of `f` over the finite interval (a, b).
///
/// The integrand is evaluated strictly inside the interval and may be
/// singular at either endpoint as long as the singularity is integrable and
/// at most algebraic-logarithmic.
pub fn quad_finite_sided<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadValue>
where
    F: Fn(QuadPoint) -> Complex64,
{
    cfg.validate()?;
    if !(b > a) {
        if b == a {
            return Ok(QuadValue::new(Complex64::new(0.0, 0.0), 0.0));
        }
        let flipped = quad_finite_sided(f, b, a, cfg)?;
        return Ok(QuadValue::new(-flipped.value, flipped.error));
    }

    let mut h = 1.0f64;
    let first = sweep_level(&f, a, b, h, true, 0.0)?;
    let mut weighted = first.weighted;
    let mut abs = first.abs;
    let mut estimate = h * weighted;
    let mut prev = estimate;
    let mut delta = f64::INFINITY;

    for level in 1..=cfg.max_level {
        h *= 0.5;
        let lv = sweep_level(&f, a, b, h, false, abs)?;
        weighted += lv.weighted;
        abs += lv.abs;
        estimate = h * weighted;
        delta = (estimate - prev).norm();
        let scale = estimate.norm().max(1e-6 * h * abs);
        if level >= 2 && delta <= cfg.rel_tol * scale {
            return Ok(QuadValue::new(estimate, delta));
        }
        // fully converged: successive levels agree to machine precision
        if level >= 3 && delta <= 4.0 * f64::EPSILON * h * abs {
            return Ok(QuadValue::new(estimate, delta.max(f64::EPSILON * h * abs)));
        }
        prev = estimate;
    }
    Err(Error::NoConvergence {
        tol: cfg.rel_tol,
        level: cfg.max_level,
        delta,
    })
}

/// Tanh-sinh quadrature with a plain `f(x)` integrand.
pub fn quad_finite<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadValue>
where
    F: Fn(f64) -> Complex64,
{
    quad_finite_sided(|p| f(p.x), a, b, cfg)
}

/// ∫₀^∞ f, for integrands with algebraic behavior at 0 and exponential
/// decay at infinity.
///
/// Split at x = 1: tanh-sinh on [0,1] plus truncated tanh-sinh on
/// [1, tail_cutoff], with a decay check at the truncation abscissa.
pub fn quad_halfline_sided<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadValue>
where
    F: Fn(QuadPoint) -> Complex64,
{
    cfg.validate()?;
    let x_max = cfg.tail_cutoff;
    let head = quad_finite_sided(&f, 0.0, 1.0, cfg)?;
    // on the tail piece the distance to the half-line origin is x itself
    let tail = quad_finite_sided(
        |p: QuadPoint| {
            f(QuadPoint {
                x: p.x,
                dist_a: p.x,
                dist_b: p.dist_b,
            })
        },
        1.0,
        x_max,
        cfg,
    )?;
    let value = head.value + tail.value;

    // decay check at the truncation abscissa
    let probe = f(QuadPoint {
        x: x_max,
        dist_a: x_max,
        dist_b: 0.0,
    })
    .norm();
    let scale = value.norm() + 1e-12;
    if !(probe * x_max.max(1.0) <= cfg.rel_tol * scale) {
        return Err(Error::TailTooFat { cutoff: x_max });
    }
    // the omitted tail of an exponentially decaying integrand is ~ |f(X)|
    let error = head.error + tail.error + probe;
    Ok(QuadValue::new(value, error))
}

/// Half-line quadrature with a plain `f(x)` integrand.
pub fn quad_halfline<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadValue>
where
    F: Fn(f64) -> Complex64,
{
    quad_halfline_sided(|p| f(p.x), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn inverse_sqrt_singularity() {
        let cfg = QuadratureConfig::default();
        let v = quad_finite(|x| c(1.0 / x.sqrt()), 0.0, 1.0, &cfg).unwrap();
        assert!((v.value - c(2.0)).norm() < 1e-12, "err {:?}", v);
    }

    #[test]
    fn log_singularity() {
        let cfg = QuadratureConfig::default();
        let v = quad_finite(|x| c(-x.ln()), 0.0, 1.0, &cfg).unwrap();
        assert!((v.value - c(1.0)).norm() < 1e-12);
    }

    #[test]
    fn smooth_sine() {
        let cfg = QuadratureConfig::default();
        let v = quad_finite(|x| c(x.sin()), 0.0, std::f64::consts::PI, &cfg).unwrap();
        assert!((v.value - c(2.0)).norm() < 1e-12);
    }

    #[test]
    fn reversed_interval_negates() {
        let cfg = QuadratureConfig::default();
        let v = quad_finite(|x| c(x * x), 1.0, 0.0, &cfg).unwrap();
        assert!((v.value + c(1.0 / 3.0)).norm() < 1e-12);
    }

    #[test]
    fn halfline_exponential() {
        let cfg = QuadratureConfig::default();
        let v = quad_halfline(|x| c((-x).exp()), &cfg).unwrap();
        assert!((v.value - c(1.0)).norm() < 1e-11);
        let v2 = quad_halfline(|x| c(x * (-x).exp()), &cfg).unwrap();
        assert!((v2.value - c(1.0)).norm() < 1e-11);
    }

    #[test]
    fn halfline_gamma_oracle() {
        // ∫₀^∞ x^{3/2} e^{-x} dx = Γ(5/2)
        let cfg = QuadratureConfig::default();
        let v = quad_halfline(|x| c(x.powf(1.5) * (-x).exp()), &cfg).unwrap();
        let g = crate::gamma::gamma(Complex64::new(2.5, 0.0)).unwrap();
        assert!((v.value - g).norm() < 1e-11);
    }

    #[test]
    fn fat_tail_is_rejected() {
        let cfg = QuadratureConfig::default();
        let r = quad_halfline(|x| c(1.0 / (1.0 + x * x)), &cfg);
        assert!(matches!(r, Err(Error::TailTooFat { .. })));
    }

    #[test]
    fn sided_distances_are_stable() {
        // ∫₀¹ -log(1-x) dx = 1, needs the right-endpoint distance
        let cfg = QuadratureConfig::default();
        let v = quad_finite_sided(|p| c(-p.dist_b.ln()), 0.0, 1.0, &cfg).unwrap();
        assert!((v.value - c(1.0)).norm() < 1e-12);
    }
}
