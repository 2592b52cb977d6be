//! Analytic continuation of the transform L(F)(s) = ∫_{[0,1]} F (dz/z)^s.
//!
//! Writing G(x) = F(e^{−x}), the contour integral
//! H(F)(s) = ∫_C (−x)^s G(x) dx/x over the loop from +∞ around 0 and back
//! satisfies H = 2i·sin(πs)·Γ(s)·L(F)(s), so
//! L(F)(s) = Γ(1−s)/(2πi) · H(F)(s) continues L left of its abscissa.
//!
//! At s = −k the two ray pieces cancel exactly and only the loop survives:
//! L(F)(−k) = (−1)^k k! c_k, the k-th Laurent coefficient of G at 0. The
//! cancelled (loop-only) form is what this module evaluates at negative
//! integers, avoiding the numerical cancellation of the full contour.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{gamma, is_gamma_pole, reciprocal_gamma};
use crate::laurent::circle_coefficients;
use crate::power::pw;
use crate::quad::{quad_finite_sided, QuadPoint, QuadValue, QuadratureConfig};
use crate::report::CheckResult;
use crate::series::SeriesModel;

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Geometry of the truncated contour.
#[derive(Debug, Clone)]
pub struct ContourSpec {
    /// Loop radius about 0; must stay inside the annulus of analyticity of
    /// G (poles of F at z = 1 map to x ∈ 2πiZ, so delta < 2π there).
    pub delta: f64,
    /// Truncation abscissa of the two rays.
    pub x_max: f64,
    /// Minimum sampling density per unit length (refinement floor).
    pub samples_per_unit: u32,
}

impl Default for ContourSpec {
    fn default() -> Self {
        Self {
            delta: 0.5,
            x_max: 50.0,
            samples_per_unit: 16,
        }
    }
}

impl ContourSpec {
    fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0) {
            return Err(Error::InvalidConfig("delta must be positive".into()));
        }
        if !(self.x_max > self.delta) {
            return Err(Error::InvalidConfig("x_max must exceed delta".into()));
        }
        Ok(())
    }
}

/// Which route produced a continuation value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuationRoute {
    Contour,
    Laurent,
    Derivative,
}

impl std::fmt::Display for ContinuationRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContinuationRoute::Contour => write!(f, "contour"),
            ContinuationRoute::Laurent => write!(f, "laurent"),
            ContinuationRoute::Derivative => write!(f, "derivative"),
        }
    }
}

/// A continuation value, the route that produced it, and its error estimate.
#[derive(Debug, Clone)]
pub struct ContinuationResult {
    pub value: Complex64,
    pub route: ContinuationRoute,
    pub error_estimate: f64,
}

/// H(F)(s) = ∫_C (−x)^s G(x) dx/x over the truncated contour: the two ray
/// pieces combine into 2i sin(πs) ∫_δ^X x^{s−1} G dx, and on the loop
/// (−x)^s = δ^s e^{is(θ−π)} with θ running 0 → 2π.
pub fn contour_h(f: &SeriesModel, s: Complex64, spec: &ContourSpec, cfg: &QuadratureConfig) -> Result<QuadValue> {
    spec.validate()?;
    if f.closed_form.is_none() {
        return Err(Error::NoClosedForm);
    }
    // runtime decay check at the truncation abscissa
    let g_at_end = f.exp_eval(spec.x_max)?;
    let ray_weight = spec.x_max.powf(s.re - 1.0).max(1.0);
    if !(g_at_end.norm() * ray_weight <= cfg.rel_tol) {
        return Err(Error::TailTooFat { cutoff: spec.x_max });
    }

    let min_level = ((spec.samples_per_unit as f64).log2().ceil() as u32).min(6);
    let mut ray_cfg = cfg.clone();
    ray_cfg.max_level = cfg.max_level.max(min_level);

    let sm1 = s - 1.0;
    let ray = quad_finite_sided(
        |p: QuadPoint| {
            let g = match f.exp_eval(p.x) {
                Ok(v) => v,
                Err(_) => return Complex64::new(f64::NAN, f64::NAN),
            };
            pw(c64(p.x), sm1) * g
        },
        spec.delta,
        spec.x_max,
        &ray_cfg,
    )?;
    let two_i_sin = Complex64::new(0.0, 2.0) * (std::f64::consts::PI * s).sin();
    let ray_part = two_i_sin * ray.value;

    let delta_pow = pw(c64(spec.delta), s);
    let circle = quad_finite_sided(
        |p: QuadPoint| {
            let theta = p.x;
            let x = Complex64::from_polar(spec.delta, theta);
            let g = match f.exp_eval_complex(x) {
                Ok(v) => v,
                Err(_) => return Complex64::new(f64::NAN, f64::NAN),
            };
            let phase = (Complex64::new(0.0, 1.0) * s * (theta - std::f64::consts::PI)).exp();
            Complex64::new(0.0, 1.0) * delta_pow * phase * g
        },
        0.0,
        2.0 * std::f64::consts::PI,
        &ray_cfg,
    )?;
    Ok(QuadValue::new(
        ray_part + circle.value,
        ray.error * two_i_sin.norm() + circle.error,
    ))
}

/// L(F)(s) = Γ(1−s)/(2πi) · H(F)(s) on the continued domain.
///
/// Non-positive integers delegate to the cancelled Laurent form; positive
/// integers are poles of Γ(1−s) and are rejected unless H vanishes there,
/// in which case the limit is taken by Richardson extrapolation off the
/// pole.
pub fn continue_l(
    f: &SeriesModel,
    s: Complex64,
    spec: &ContourSpec,
    cfg: &QuadratureConfig,
) -> Result<ContinuationResult> {
    if is_gamma_pole(1.0 - s) {
        // s is a positive integer
        let m = s.re as u32;
        return continue_l_at_positive_integer(f, m, spec, cfg);
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        let k = (-s.re) as u32;
        return value_at_negative_integer(f, k, spec, cfg);
    }
    let h = contour_h(f, s, spec, cfg)?;
    let factor = gamma(1.0 - s)? / Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    Ok(ContinuationResult {
        value: h.value * factor,
        route: ContinuationRoute::Contour,
        error_estimate: h.error * factor.norm(),
    })
}

fn continue_l_at_positive_integer(
    f: &SeriesModel,
    m: u32,
    spec: &ContourSpec,
    cfg: &QuadratureConfig,
) -> Result<ContinuationResult> {
    // the Γ(1−s) pole survives unless the loop contribution vanishes,
    // i.e. unless G is regular at 0 (F regular at 1)
    if f.singular_at_1() || f.closed_form.is_none() {
        return Err(Error::PositiveIntegerPole(m));
    }
    // symmetric Richardson limit along the real axis
    let eval = |eps: f64| -> Result<Complex64> {
        let a = continue_l(f, c64(m as f64 + eps), spec, cfg)?.value;
        let b = continue_l(f, c64(m as f64 - eps), spec, cfg)?.value;
        Ok((a + b) / 2.0)
    };
    let h1 = 1e-3;
    let v1 = eval(h1)?;
    let v2 = eval(h1 / 2.0)?;
    // symmetric average has O(eps²) error: eliminate it
    let value = (4.0 * v2 - v1) / 3.0;
    Ok(ContinuationResult {
        value,
        route: ContinuationRoute::Contour,
        error_estimate: (v2 - v1).norm() / 3.0 + cfg.rel_tol * value.norm(),
    })
}

/// L(F)(−k) = (−1)^k k! c_k from the Laurent coefficient of G(x) = F(e^{−x})
/// at 0 (the ray pieces cancel exactly at negative integers).
pub fn value_at_negative_integer(
    f: &SeriesModel,
    k: u32,
    spec: &ContourSpec,
    cfg: &QuadratureConfig,
) -> Result<ContinuationResult> {
    spec.validate()?;
    if f.closed_form.is_none() {
        return Err(Error::NoClosedForm);
    }
    let lc = circle_coefficients(
        |x| match f.exp_eval_complex(x) {
            Ok(v) => v,
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        },
        Complex64::new(0.0, 0.0),
        k as i32,
        k as i32,
        spec.delta,
        cfg,
    )?;
    let factorial: f64 = (1..=k as u64).map(|j| j as f64).product::<f64>().max(1.0);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(ContinuationResult {
        value: sign * factorial * lc.coefficient(k as i32),
        route: ContinuationRoute::Laurent,
        error_estimate: factorial * lc.error(k as i32),
    })
}

/// The same value through the exact symbolic route (z·d/dz)^k F at z = 1,
/// available when F is regular at 1.
pub fn value_via_derivative(f: &SeriesModel, k: u32) -> Result<ContinuationResult> {
    let value = f.iterated_derivative_at_1(k)?;
    Ok(ContinuationResult {
        value,
        route: ContinuationRoute::Derivative,
        error_estimate: 1e-14 * value.norm().max(1.0),
    })
}

/// Residue of L(F)(s) at s = 1: Res_{x=0} F(e^{−x}).
///
/// Closed-form models read it off the circle; ideal-count models use the
/// theta representation's x → 0 limit of x·G(x).
pub fn residue_at_1(f: &SeriesModel, spec: &ContourSpec, cfg: &QuadratureConfig) -> Result<Complex64> {
    if let Some(theta) = &f.theta {
        return Ok(c64(theta.residue_limit()));
    }
    if f.closed_form.is_none() {
        return Err(Error::NoClosedForm);
    }
    let lc = circle_coefficients(
        |x| match f.exp_eval_complex(x) {
            Ok(v) => v,
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        },
        Complex64::new(0.0, 0.0),
        -1,
        -1,
        spec.delta,
        cfg,
    )?;
    Ok(lc.coefficient(-1))
}

/// The printed coefficient-sum formula Σ_{n=−m}^{−1} (−1)^{1−n} aₙ over the
/// Laurent data of F at z = 1, kept verbatim for cross-examination against
/// `residue_at_1` (the two disagree in sign on z/(1−z); see the
/// verification suite note).
pub fn laurent_residue_sum(f: &SeriesModel) -> Result<Complex64> {
    let lc = f.laurent_at_1.as_ref().ok_or(Error::NoLaurentData)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in lc.min_order..0 {
        let sign = if (1 - n) % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * lc.coefficient(n);
    }
    Ok(acc)
}

/// Continuation of the w-truncated transform ∫_{[w,1]} F (dt/t)^s at
/// s = −k.
///
/// On the truncated contour (rays from −log w, loop about 0) the ray
/// pieces cancel exactly at negative integers, so the loop-only value
/// coincides with `value_at_negative_integer` for every w — the
/// w-independence of the continuation.
pub fn w_truncated_continuation(
    f: &SeriesModel,
    w: f64,
    k: u32,
    spec: &ContourSpec,
    cfg: &QuadratureConfig,
) -> Result<ContinuationResult> {
    if !(w > 0.0 && w < 1.0) {
        return Err(Error::InvalidConfig("w must lie in (0,1)".into()));
    }
    let x_end = -w.ln();
    let mut spec = spec.clone();
    // the loop must fit inside the truncated rays
    spec.delta = spec.delta.min(0.9 * x_end);
    spec.x_max = x_end.max(spec.delta * 1.5);
    value_at_negative_integer(f, k, &spec, cfg)
}

/// Numeric boundedness probe for L(F) on a small circle about s = 1:
/// max |L(F)(1 + r·e^{iφ})| over eight sample points.
pub fn boundedness_probe_at_1(
    f: &SeriesModel,
    radius: f64,
    spec: &ContourSpec,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let mut max = 0.0f64;
    for j in 0..8 {
        let phi = std::f64::consts::PI * (2.0 * j as f64 + 1.0) / 8.0;
        let s = Complex64::new(1.0, 0.0) + Complex64::from_polar(radius, phi);
        let v = continue_l(f, s, spec, cfg)?;
        max = max.max(v.value.norm());
    }
    Ok(max)
}

/// Two-route agreement check at a negative integer (Laurent vs symbolic
/// derivative), for models regular at 1.
pub fn route_agreement_check(
    f: &SeriesModel,
    k: u32,
    tolerance: f64,
    spec: &ContourSpec,
    cfg: &QuadratureConfig,
) -> Result<CheckResult> {
    let a = value_at_negative_integer(f, k, spec, cfg)?;
    let b = value_via_derivative(f, k)?;
    Ok(CheckResult::compare(
        format!("continuation routes at -{k} for {}", f.label),
        a.value,
        b.value,
        tolerance,
        "loop-coefficient route equals the iterated-derivative route",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::CharacterTable;
    use crate::engine::power_iterated_integral;
    use crate::series::{f_q, from_character, katz_psi};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn spec() -> ContourSpec {
        ContourSpec::default()
    }

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_at_negative_integers() {
        // ζ(−k) = −B_{k+1}/(k+1): (−1/2, −1/12, 0, 1/120, 0, −1/252)
        let expect = [-0.5, -1.0 / 12.0, 0.0, 1.0 / 120.0, 0.0, -1.0 / 252.0];
        let fq = f_q();
        for (k, &e) in expect.iter().enumerate() {
            let v = value_at_negative_integer(&fq, k as u32, &spec(), &cfg()).unwrap();
            assert!((v.value - cx(e, 0.0)).norm() < 1e-11, "k={k}: {:?}", v);
            assert_eq!(v.route, ContinuationRoute::Laurent);
        }
    }

    #[test]
    fn contour_overlap_with_direct_integral() {
        let fq = f_q();
        for s in [cx(2.5, 0.0), cx(3.5, 1.0)] {
            let direct = power_iterated_integral(&fq, s, 0.0, &cfg()).unwrap().value;
            let cont = continue_l(&fq, s, &spec(), &cfg()).unwrap();
            assert!(
                (direct - cont.value).norm() < 1e-8,
                "s={s}: {direct} vs {:?}",
                cont
            );
        }
    }

    #[test]
    fn continue_l_below_one() {
        let fq = f_q();
        // ζ(1/2) = −1.4603545088095868
        let v = continue_l(&fq, cx(0.5, 0.0), &spec(), &cfg()).unwrap();
        assert!((v.value - cx(-1.4603545088095868, 0.0)).norm() < 1e-9, "{v:?}");
        // ζ(−1) through the same entry point delegates to the loop route
        let vm1 = continue_l(&fq, cx(-1.0, 0.0), &spec(), &cfg()).unwrap();
        assert!((vm1.value - cx(-1.0 / 12.0, 0.0)).norm() < 1e-11);
        assert_eq!(vm1.route, ContinuationRoute::Laurent);
    }

    #[test]
    fn katz_and_character_negative_values() {
        // (t d/dt)Ψ₂ at 1 = 1/4 = (1 − 2²)ζ(−1)
        let k2 = katz_psi(2).unwrap();
        let v = value_at_negative_integer(&k2, 1, &spec(), &cfg()).unwrap();
        assert!((v.value - cx(0.25, 0.0)).norm() < 1e-11, "{v:?}");
        let d = value_via_derivative(&k2, 1).unwrap();
        assert!((d.value - cx(0.25, 0.0)).norm() < 1e-13);

        // L(−1, χ₄) = 0 and L(−2, χ₄) = −1/2 (generalized Bernoulli)
        let fchi = from_character(&CharacterTable::mod_four()).unwrap();
        let l1 = value_at_negative_integer(&fchi, 1, &spec(), &cfg()).unwrap();
        assert!(l1.value.norm() < 1e-11, "{l1:?}");
        let l2 = value_at_negative_integer(&fchi, 2, &spec(), &cfg()).unwrap();
        assert!((l2.value - cx(-0.5, 0.0)).norm() < 1e-11, "{l2:?}");
    }

    #[test]
    fn residues_at_one() {
        let fq = f_q();
        let r = residue_at_1(&fq, &spec(), &cfg()).unwrap();
        assert!((r - cx(1.0, 0.0)).norm() < 1e-11);
        let fchi = from_character(&CharacterTable::mod_four()).unwrap();
        let rchi = residue_at_1(&fchi, &spec(), &cfg()).unwrap();
        assert!(rchi.norm() < 1e-11);
        let ideal = crate::series::ideal_count_series(-4).unwrap();
        let rk = residue_at_1(&ideal, &spec(), &cfg()).unwrap();
        assert!((rk - cx(std::f64::consts::PI / 4.0, 0.0)).norm() < 1e-10, "{rk}");
    }

    #[test]
    fn printed_coefficient_sum_disagrees_on_f_q() {
        // the verbatim coefficient-sum formula gives −1 where the residue
        // route gives +1; both are reported, neither silently corrected
        let fq = f_q();
        let printed = laurent_residue_sum(&fq).unwrap();
        assert!((printed - cx(-1.0, 0.0)).norm() < 1e-12);
        let residue = residue_at_1(&fq, &spec(), &cfg()).unwrap();
        assert!((residue - cx(1.0, 0.0)).norm() < 1e-11);
    }

    #[test]
    fn w_truncation_is_independent_of_w() {
        let fq = f_q();
        for w in [0.3, 0.6] {
            let v = w_truncated_continuation(&fq, w, 1, &spec(), &cfg()).unwrap();
            assert!((v.value - cx(-1.0 / 12.0, 0.0)).norm() < 1e-9, "w={w}: {v:?}");
        }
        // while the convergent-strip values do depend on w
        let a = power_iterated_integral(&fq, cx(2.0, 0.0), 0.3, &cfg()).unwrap().value;
        let b = power_iterated_integral(&fq, cx(2.0, 0.0), 0.6, &cfg()).unwrap().value;
        assert!((a - b).norm() > 1e-3);
    }

    #[test]
    fn dirichlet_l_at_one_via_limit() {
        // L(1, χ₄) = π/4
        let fchi = from_character(&CharacterTable::mod_four()).unwrap();
        let v = continue_l(&fchi, cx(1.0, 0.0), &spec(), &cfg()).unwrap();
        assert!(
            (v.value - cx(std::f64::consts::PI / 4.0, 0.0)).norm() < 1e-6,
            "{v:?}"
        );
        // but ζ has a genuine pole there
        assert!(matches!(
            continue_l(&f_q(), cx(1.0, 0.0), &spec(), &cfg()),
            Err(Error::PositiveIntegerPole(1))
        ));
    }

    #[test]
    fn boundedness_probe_separates_pole_from_regular() {
        let fq = f_q();
        let fchi = from_character(&CharacterTable::mod_four()).unwrap();
        let probe_pole = boundedness_probe_at_1(&fq, 0.1, &spec(), &cfg()).unwrap();
        let probe_regular = boundedness_probe_at_1(&fchi, 0.1, &spec(), &cfg()).unwrap();
        assert!(probe_pole > 3.0, "{probe_pole}");
        assert!(probe_regular < 3.0, "{probe_regular}");
    }

    #[test]
    fn no_closed_form_is_rejected() {
        let mu = crate::series::moebius_series(Some(1000));
        assert!(matches!(
            continue_l(&mu, cx(0.5, 0.0), &spec(), &cfg()),
            Err(Error::NoClosedForm)
        ));
    }
}
