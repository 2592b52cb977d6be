//! The named verification suites behind `citer verify`.
//!
//! Suite mapping: `core` covers the scalar kernels, quadrature engines and
//! path algebra; `zeta` covers the series catalogue and the named special
//! functions; `comult` covers the iterated-integral engine (iterativity,
//! comultiplication, scaling and gap-series properties, depth-2 words);
//! `continuation` covers the contour machinery; `monodromy` the loop
//! defects. Randomized checks draw from a fixed-seed generator, so reports
//! are deterministic for a fixed configuration.

use citer_core::character::CharacterTable;
use citer_core::continuation::{
    boundedness_probe_at_1, continue_l, laurent_residue_sum, residue_at_1, route_agreement_check,
    value_at_negative_integer, ContourSpec,
};
use citer_core::engine::{
    comultiplication_eval, homotopy_invariance_check, haar_check, iterativity_check,
    multiple_iterated_integral_depth2, multiplicative_iterativity_eval, path_power_integral,
    polylog_integral, power_iterated_integral, riemann_liouville, SlotWeight,
};
use citer_core::gamma::{gamma, reciprocal_gamma};
use citer_core::laurent::circle_coefficients;
use citer_core::monodromy::{
    direct_polylog, looped_polylog, looped_polylog_with_turns, monodromy_defect,
    MonodromyScenario,
};
use citer_core::path::{concat, integrate_form, FormSpec, Path, PathSegment};
use citer_core::power::{principal_power, pw};
use citer_core::quad::{quad_halfline, QuadratureConfig};
use citer_core::report::{CheckResult, CheckStatus};
use citer_core::series::{f_q, from_character, from_rational, ideal_count_series, katz_psi, monomial};
use citer_core::zeta::{
    completed_z, completed_z_product_route, dedekind_zeta_transform, dirichlet_l,
    dirichlet_l_gap_route, hurwitz_mzv, mzv, polylog, zeta, zeta_dual,
};
use citer_core::{Complex64, Error};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracles;

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const PI: f64 = std::f64::consts::PI;

/// Aggregate a family of (name, error) items into one check carrying the
/// worst error.
fn aggregate(
    name: &str,
    items: &[(String, f64)],
    tolerance: f64,
    provenance: &str,
) -> CheckResult {
    let (worst_name, worst) = items
        .iter()
        .map(|(n, e)| (n.clone(), *e))
        .fold((String::new(), 0.0f64), |acc, it| {
            if it.1 > acc.1 {
                it
            } else {
                acc
            }
        });
    let mut c = CheckResult::compare(
        name.to_string(),
        cx(worst, 0.0),
        cx(0.0, 0.0),
        tolerance,
        format!("{provenance} (worst case: {worst_name})"),
    );
    c.abs_error = worst;
    c
}

fn error_check(name: &str, err: Error, tolerance: f64, provenance: &str) -> CheckResult {
    CheckResult::failed_with(name, tolerance, format!("{provenance} [error: {err}]"))
}

// ---------------------------------------------------------------------------

pub fn core_suite(cfg: &QuadratureConfig, tol: Option<f64>) -> Vec<CheckResult> {
    let t = |d: f64| tol.unwrap_or(d);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ce1_90ad);

    // gamma functional equation at random points
    {
        let mut items = Vec::new();
        let mut drawn = 0;
        while drawn < 100 {
            let s = cx(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
            if s.norm() > 20.0 {
                continue;
            }
            // stay away from the poles
            if s.im.abs() < 0.05 && (s.re - s.re.round()).abs() < 0.05 && s.re < 0.5 {
                continue;
            }
            drawn += 1;
            let lhs = gamma(s + 1.0).unwrap();
            let rhs = s * gamma(s).unwrap();
            items.push((format!("s = {s}"), (lhs - rhs).norm() / lhs.norm()));
        }
        out.push(aggregate(
            "gamma functional equation (100 random points, relative)",
            &items,
            t(1e-12),
            "Gamma(s+1) = s Gamma(s)",
        ));
    }

    // Legendre duplication
    {
        let mut items = Vec::new();
        let mut drawn = 0;
        while drawn < 50 {
            let z = cx(rng.gen_range(0.1..12.0), rng.gen_range(-12.0..12.0));
            drawn += 1;
            let lhs = gamma(2.0 * z).unwrap();
            let rhs = pw(cx(2.0, 0.0), 2.0 * z - 1.0) / PI.sqrt()
                * gamma(z).unwrap()
                * gamma(z + 0.5).unwrap();
            items.push((format!("z = {z}"), (lhs - rhs).norm() / lhs.norm()));
        }
        out.push(aggregate(
            "Legendre duplication (50 random points, relative)",
            &items,
            t(1e-11),
            "Gamma(2z) = 2^(2z-1) pi^(-1/2) Gamma(z) Gamma(z+1/2)",
        ));
    }

    // principal powers vs repeated multiplication
    {
        let mut items = Vec::new();
        for _ in 0..20 {
            let z = cx(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            if z.norm() < 0.2 {
                continue;
            }
            for m in -5i32..=5 {
                let p = principal_power(z, cx(m as f64, 0.0), 0).unwrap();
                let direct = z.powi(m);
                items.push((
                    format!("z = {z}, m = {m}"),
                    (p - direct).norm() / direct.norm().max(1e-30),
                ));
            }
        }
        out.push(aggregate(
            "integer powers agree with repeated multiplication",
            &items,
            t(1e-12),
            "exp(m log z) equals z^m for integer m",
        ));
    }

    // quadrature reproduces Gamma
    for s in [cx(1.5, 0.0), cx(2.5, 0.0), cx(3.0, 1.0)] {
        let q = quad_halfline(
            move |x| pw(cx(x, 0.0), s - 1.0) * (-x).exp(),
            cfg,
        );
        let g = gamma(s).unwrap();
        out.push(match q {
            Ok(v) => CheckResult::compare(
                format!("half-line quadrature reproduces Gamma({s})"),
                v.value,
                g,
                t(1e-9 * g.norm()),
                "integral definition of Gamma",
            ),
            Err(e) => error_check(
                &format!("half-line quadrature reproduces Gamma({s})"),
                e,
                t(1e-9),
                "integral definition of Gamma",
            ),
        });
    }

    // circle-coefficient radius independence
    {
        let g = |z: Complex64| 1.0 / (z.exp() - 1.0);
        let a = circle_coefficients(g, cx(0.0, 0.0), -1, 4, 0.5, cfg).unwrap();
        let b = circle_coefficients(g, cx(0.0, 0.0), -1, 4, 0.25, cfg).unwrap();
        let mut items = Vec::new();
        for k in -1..=4 {
            let d = (a.coefficient(k) - b.coefficient(k)).norm();
            let budget = (a.error(k) + b.error(k)).max(1e-13);
            items.push((format!("order {k}"), d / budget));
        }
        out.push(aggregate(
            "circle coefficients are radius-independent (error-normalized)",
            &items,
            1.0,
            "Cauchy coefficients do not depend on the sampling radius",
        ));
    }

    // path additivity across a split point
    {
        let a = Path::line(cx(0.2, 0.0), cx(0.45, 0.15)).unwrap();
        let b = Path::line(cx(0.45, 0.15), cx(0.8, -0.1)).unwrap();
        let ab = concat(&a, &b).unwrap();
        let mut items = Vec::new();
        for form in [FormSpec::DzOverZ, FormSpec::DzOver1MinusZ] {
            let whole = integrate_form(&ab, &form, cfg).unwrap().value;
            let parts = integrate_form(&a, &form, cfg).unwrap().value
                + integrate_form(&b, &form, cfg).unwrap().value;
            items.push((format!("{form:?}"), (whole - parts).norm()));
        }
        out.push(aggregate(
            "integral over a concatenation equals the sum of the parts",
            &items,
            t(1e-12),
            "additivity of line integrals",
        ));
    }

    // antipode exactness: reversal flips the sign bit-exactly
    {
        let pts = [cx(0.3, 0.0), cx(0.5, 0.2), cx(0.8, -0.1), cx(0.9, 0.3)];
        let segs: Vec<_> = pts
            .windows(2)
            .map(|w| PathSegment::line(w[0], w[1]))
            .collect();
        let p = Path::new(segs).unwrap();
        let mut worst = 0.0f64;
        for form in [FormSpec::DzOverZ, FormSpec::DzOver1MinusZ, FormSpec::Dz] {
            let v = integrate_form(&p, &form, cfg).unwrap().value;
            let r = integrate_form(&p.reversed(), &form, cfg).unwrap().value;
            if v != -r {
                worst = worst.max((v + r).norm().max(f64::MIN_POSITIVE));
            }
        }
        let mut c = CheckResult::compare(
            "orientation reversal negates integrals exactly",
            cx(worst, 0.0),
            cx(0.0, 0.0),
            0.0,
            "sign from orientation, bit-exact",
        );
        c.abs_error = worst;
        c.status = if worst == 0.0 {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        out.push(c);
    }

    // loop winding values
    {
        let mut items = Vec::new();
        let arc0 = Path::loop_about(cx(0.0, 0.0), 0.5).unwrap();
        let v0 = integrate_form(&arc0, &FormSpec::DzOverZ, cfg).unwrap().value;
        items.push(("arc about 0".into(), (v0 - cx(0.0, 2.0 * PI)).norm()));
        let arc1 = Path::loop_about(cx(1.0, 0.0), 0.25).unwrap();
        let v1 = integrate_form(&arc1, &FormSpec::DzOver1MinusZ, cfg).unwrap().value;
        items.push(("arc about 1".into(), (v1 + cx(0.0, 2.0 * PI)).norm()));
        let pts = [cx(2.0, 2.0), cx(-2.0, 2.0), cx(-2.0, -2.0), cx(2.0, -2.0), cx(2.0, 2.0)];
        let segs: Vec<_> = pts
            .windows(2)
            .map(|w| PathSegment::line(w[0], w[1]))
            .collect();
        let square = Path::new(segs).unwrap();
        let vs = integrate_form(&square, &FormSpec::DzOverZ, cfg).unwrap().value;
        items.push(("polygonal loop about 0".into(), (vs - cx(0.0, 2.0 * PI)).norm()));
        out.push(aggregate(
            "loop integrals equal 2 pi i times the winding number",
            &items,
            t(1e-10),
            "residues of dz/z and dz/(1-z)",
        ));
    }

    out
}

// ---------------------------------------------------------------------------

pub fn zeta_suite(cfg: &QuadratureConfig, tol: Option<f64>) -> Vec<CheckResult> {
    let t = |d: f64| tol.unwrap_or(d);
    let mut out = Vec::new();
    let chi4 = CharacterTable::mod_four();
    let chi4_model = from_character(&chi4).unwrap();
    let chi3 = CharacterTable::from_prime_modulus(3, 1).unwrap();

    // coefficient rule vs closed form at z = 0.3
    {
        let mut items = Vec::new();
        for model in [f_q(), chi4_model.clone(), katz_psi(2).unwrap(), katz_psi(3).unwrap()] {
            let z = cx(0.3, 0.0);
            let closed = model.eval(z).unwrap();
            let mut partial = cx(0.0, 0.0);
            let mut zn = cx(1.0, 0.0);
            for n in 1..=400usize {
                zn *= z;
                partial += model.coefficient(n).unwrap() * zn;
            }
            items.push((model.label.clone(), (closed - partial).norm()));
        }
        out.push(aggregate(
            "partial sums match closed forms at z = 0.3",
            &items,
            t(1e-11),
            "coefficient rule agrees with the closed form",
        ));
    }

    // character periodicity
    {
        let mut worst = 0.0f64;
        for n in 1..=1000usize {
            let d = (chi4_model.coefficient(n).unwrap() - chi4_model.coefficient(n + 4).unwrap())
                .norm();
            worst = worst.max(d);
        }
        out.push(CheckResult::compare(
            "character coefficients are periodic",
            cx(worst, 0.0),
            cx(0.0, 0.0),
            t(1e-14),
            "a_n = a_(n+f) for character series",
        ));
    }

    // ideal counts vs lattice enumeration
    {
        let ideal = ideal_count_series(-4).unwrap();
        let counts = oracles::gaussian_ideal_counts(200);
        let mut worst = 0.0f64;
        for n in 1..=200usize {
            let a = ideal.coefficient(n).unwrap().re;
            worst = worst.max((a - counts[n] as f64).abs());
        }
        out.push(CheckResult::compare(
            "ideal counts match lattice enumeration up to norm 200",
            cx(worst, 0.0),
            cx(0.0, 0.0),
            0.0,
            "divisor-sum coefficients equal unit-quotient lattice counts",
        ));
    }

    // multiplicativity of the divisor-sum coefficients
    {
        let ideal = ideal_count_series(-4).unwrap();
        let mut worst = 0.0f64;
        for a in 1..=100u64 {
            for b in 1..=100u64 {
                if citer_core::arith::gcd(a, b) == 1 && a * b <= 10_000 {
                    let va = ideal.coefficient(a as usize).unwrap();
                    let vb = ideal.coefficient(b as usize).unwrap();
                    let vab = ideal.coefficient((a * b) as usize).unwrap();
                    worst = worst.max((vab - va * vb).norm());
                }
            }
        }
        out.push(CheckResult::compare(
            "ideal counts are multiplicative on coprime arguments",
            cx(worst, 0.0),
            cx(0.0, 0.0),
            0.0,
            "nu(mn) = nu(m) nu(n) for gcd(m,n) = 1",
        ));
    }

    // symbolic derivative vs Richardson finite differences
    {
        let mut items = Vec::new();
        for model in [katz_psi(2).unwrap(), chi4_model.clone()] {
            for m in 0..=3u32 {
                let sym = model.iterated_derivative_at_1(m).unwrap();
                let fd = finite_difference_euler(&model, m);
                items.push((format!("{} m={m}", model.label), (sym - fd).norm()));
            }
        }
        out.push(aggregate(
            "symbolic z d/dz powers match finite differences",
            &items,
            t(1e-6),
            "Richardson-extrapolated central differences at z = 1",
        ));
    }

    // zeta values
    out.push(value_check(
        "zeta(2)",
        zeta(cx(2.0, 0.0), cfg).map(|q| q.value),
        cx(PI * PI / 6.0, 0.0),
        t(1e-8),
        "Basel value",
    ));
    out.push(value_check(
        "zeta(4)",
        zeta(cx(4.0, 0.0), cfg).map(|q| q.value),
        cx(PI.powi(4) / 90.0, 0.0),
        t(1e-8),
        "even zeta value",
    ));
    out.push(value_check(
        "zeta(2+3i)",
        zeta(cx(2.0, 3.0), cfg).map(|q| q.value),
        oracles::zeta_em(cx(2.0, 3.0)),
        t(1e-7),
        "Euler-Maclaurin series oracle",
    ));

    // dual-word route
    {
        let mut items = Vec::new();
        for s in [cx(2.0, 0.0), cx(3.0, 0.0), cx(2.5, 0.0)] {
            let a = zeta(s, cfg).unwrap().value;
            let b = zeta_dual(s, cfg).unwrap().value;
            items.push((format!("s = {s}"), (a - b).norm()));
        }
        out.push(aggregate(
            "zeta through the dual word matches the direct word",
            &items,
            t(1e-7),
            "iteration over dt/(1-t) against iteration over dt/t",
        ));
    }

    // completed zeta
    out.push(value_check(
        "completed Z(2)",
        completed_z(cx(2.0, 0.0), cfg).map(|q| q.value),
        cx(PI / 6.0, 0.0),
        t(1e-6),
        "pi^(-1) Gamma(1) zeta(2)",
    ));
    {
        let mut items = Vec::new();
        for s in [cx(2.0, 0.0), cx(2.5, 0.0), cx(4.0, 0.0)] {
            let a = completed_z(s, cfg).unwrap().value;
            let b = completed_z_product_route(s, cfg).unwrap().value;
            items.push((format!("s = {s}"), (a - b).norm()));
        }
        out.push(aggregate(
            "completed Z: word route equals product route",
            &items,
            t(1e-6),
            "Legendre-duplication word against pi^(-s/2) Gamma(s/2) zeta(s)",
        ));
    }

    // Dirichlet L
    out.push(value_check(
        "L(2, chi mod 4)",
        dirichlet_l(cx(2.0, 0.0), &chi4, cfg).map(|q| q.value),
        cx(oracles::CATALAN, 0.0),
        t(1e-8),
        "Catalan constant",
    ));
    out.push(value_check(
        "L(3, chi mod 4)",
        dirichlet_l(cx(3.0, 0.0), &chi4, cfg).map(|q| q.value),
        oracles::dirichlet_l_em(cx(3.0, 0.0), 4, &chi4.values),
        t(1e-8),
        "alternating series oracle",
    ));
    out.push(value_check(
        "L(2, chi mod 3)",
        dirichlet_l(cx(2.0, 0.0), &chi3, cfg).map(|q| q.value),
        oracles::dirichlet_l_em(cx(2.0, 0.0), 3, &chi3.values),
        t(1e-8),
        "character series oracle",
    ));
    // the k-indexed multiplicativity route
    {
        let r = dirichlet_l_gap_route(cx(4.0, 0.0), &chi4, 2, t(1e-5), cfg);
        out.push(match r {
            Ok(mut c) => {
                c.name = "L(4, chi mod 4) through the k = 2 gap route".into();
                c
            }
            Err(e) => error_check(
                "L(4, chi mod 4) through the k = 2 gap route",
                e,
                t(1e-5),
                "gap-series reindexing of the character series",
            ),
        });
    }

    // multiple zeta values
    let relaxed = cfg.relaxed(100.0);
    out.push(value_check(
        "zeta(2,1)",
        mzv(&[cx(2.0, 0.0), cx(1.0, 0.0)], &relaxed).map(|q| q.value),
        cx(oracles::mzv_double_sum(2.0, 1.0, 200_000), 0.0),
        t(1e-4),
        "Euler identity, double-sum oracle",
    ));
    out.push(value_check(
        "zeta(2,2)",
        mzv(&[cx(2.0, 0.0), cx(2.0, 0.0)], &relaxed).map(|q| q.value),
        cx(PI.powi(4) / 120.0, 0.0),
        t(1e-4),
        "symmetric-sum value",
    ));
    // the convergence wall is enforced
    {
        let rejected = matches!(
            mzv(&[cx(1.0, 0.0), cx(2.0, 0.0)], cfg),
            Err(Error::ConvergenceConstraint(_))
        ) && matches!(
            mzv(&[cx(1.5, 0.0), cx(0.4, 0.0)], cfg),
            Err(Error::ConvergenceConstraint(_))
        );
        let mut c = CheckResult::compare(
            "multiple zeta rejects exponents outside the convergence region",
            cx(if rejected { 0.0 } else { 1.0 }, 0.0),
            cx(0.0, 0.0),
            0.0,
            "requests beyond the wall error out rather than evaluating",
        );
        c.status = if rejected { CheckStatus::Pass } else { CheckStatus::Fail };
        out.push(c);
    }

    // Hurwitz values
    out.push(value_check(
        "hurwitz zeta(2; 1) = zeta(2)",
        hurwitz_mzv(&[cx(2.0, 0.0)], cx(1.0, 0.0), cfg).map(|q| q.value),
        cx(PI * PI / 6.0, 0.0),
        t(1e-8),
        "shift one recovers the plain value",
    ));
    out.push(value_check(
        "hurwitz zeta(2; 1/2)",
        hurwitz_mzv(&[cx(2.0, 0.0)], cx(0.5, 0.0), cfg).map(|q| q.value),
        cx(PI * PI / 2.0, 0.0),
        t(1e-6),
        "half-shift series value",
    ));

    // polylogarithms
    out.push(value_check(
        "Li_2(1/2)",
        polylog(cx(2.0, 0.0), cx(0.5, 0.0), cfg).map(|q| q.value),
        cx(PI * PI / 12.0 - 0.5 * (2.0f64).ln().powi(2), 0.0),
        t(1e-8),
        "dilogarithm closed value",
    ));
    out.push(value_check(
        "Li_2.5(0.3+0.4i)",
        polylog(cx(2.5, 0.0), cx(0.3, 0.4), cfg).map(|q| q.value),
        oracles::polylog_series(cx(2.5, 0.0), cx(0.3, 0.4)),
        t(1e-8),
        "series oracle",
    ));

    // Dedekind transforms
    {
        let z2 = oracles::zeta_em(cx(2.0, 0.0)).re;
        out.push(value_check(
            "dedekind zeta of Q(i) at 2",
            dedekind_zeta_transform(-4, cx(2.0, 0.0), cfg).map(|q| q.value),
            cx(z2 * oracles::CATALAN, 0.0),
            t(1e-6),
            "factorization zeta(2) L(2, chi mod 4)",
        ));
        let chi3_l2 = oracles::dirichlet_l_em(cx(2.0, 0.0), 3, &chi3.values).re;
        out.push(value_check(
            "dedekind zeta of Q(sqrt(-3)) at 2",
            dedekind_zeta_transform(-3, cx(2.0, 0.0), cfg).map(|q| q.value),
            cx(z2 * chi3_l2, 0.0),
            t(1e-6),
            "factorization zeta(2) L(2, chi mod 3)",
        ));
    }

    // gap transform value
    out.push(value_check(
        "gap transform of z/(1-z) at s = 2, z = 1/2",
        f_q().s_gap_eval(cx(2.0, 0.0), 0.5),
        cx(0.5644684136030246, 0.0),
        t(1e-9),
        "lacunary partial sum",
    ));

    // growth-order estimates
    {
        let mut items = Vec::new();
        items.push((
            "z/(1-z)".into(),
            f_q().estimate_bieberbach_order(2000).unwrap(),
        ));
        let linear = from_rational(&[0, 1], &[1, -2, 1]).unwrap();
        items.push((
            "linear coefficients".into(),
            (linear.estimate_bieberbach_order(2000).unwrap() - 1.0).abs(),
        ));
        let ideal = ideal_count_series(-4).unwrap();
        let est = ideal.estimate_bieberbach_order(2000).unwrap();
        items.push(("ideal counts (<= 1)".into(), (est - 1.0).max(0.0)));
        out.push(aggregate(
            "growth-order estimates land near the declared orders",
            &items,
            0.1,
            "least-squares slope of log|a_n| against log n",
        ));
    }

    out
}

fn finite_difference_euler(model: &citer_core::series::SeriesModel, m: u32) -> Complex64 {
    // (z d/dz)^m via central differences in u = log z, Richardson-extrapolated
    fn nth_diff(model: &citer_core::series::SeriesModel, m: u32, h: f64) -> Complex64 {
        // m-th central difference of g(u) = F(e^u) at u = 0
        let mut acc = cx(0.0, 0.0);
        for j in 0..=m {
            let sign = if (m - j) % 2 == 0 { 1.0 } else { -1.0 };
            let binom = (0..m).fold(1.0, |b, k| b * (m as f64 - k as f64) / (k as f64 + 1.0));
            let _ = binom;
            let c = (0..j).fold(1.0, |b, k| b * (m as f64 - k as f64) / (k as f64 + 1.0));
            let u = (j as f64 - m as f64 / 2.0) * h;
            acc += sign * c * model.closed_form.as_ref().unwrap().eval(cx(u.exp(), 0.0));
        }
        acc / h.powi(m as i32)
    }
    if m == 0 {
        return model.closed_form.as_ref().unwrap().eval(cx(1.0, 0.0));
    }
    let h = 1e-4f64.powf(1.0 / m as f64).min(0.05);
    let d1 = nth_diff(model, m, h);
    let d2 = nth_diff(model, m, h / 2.0);
    (4.0 * d2 - d1) / 3.0
}

fn value_check(
    name: &str,
    computed: citer_core::Result<Complex64>,
    expected: Complex64,
    tolerance: f64,
    provenance: &str,
) -> CheckResult {
    match computed {
        Ok(v) => CheckResult::compare(name, v, expected, tolerance, provenance),
        Err(e) => error_check(name, e, tolerance, provenance),
    }
}

// ---------------------------------------------------------------------------

pub fn comult_suite(cfg: &QuadratureConfig, tol: Option<f64>) -> Vec<CheckResult> {
    let t = |d: f64| tol.unwrap_or(d);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_0111);

    // normalization ∫ z (dz/z)^s = 1
    {
        let mut items = Vec::new();
        for s in [cx(2.0, 0.0), cx(2.5, 0.0), cx(3.0, 2.0)] {
            let v = power_iterated_integral(&monomial(1), s, 0.0, cfg).unwrap();
            items.push((format!("s = {s}"), (v.value - cx(1.0, 0.0)).norm()));
        }
        out.push(aggregate(
            "normalization: the transform of z is 1",
            &items,
            t(1e-9),
            "Gamma-integral normalization",
        ));
    }

    // the k^{-s} grid
    {
        let mut items = Vec::new();
        for k in 1..=8u32 {
            for s in [cx(2.0, 0.0), cx(2.5, 0.0), cx(3.0, 0.0), cx(2.0, 3.0)] {
                let v = power_iterated_integral(&monomial(k), s, 0.0, cfg).unwrap();
                let expect = pw(cx(k as f64, 0.0), -s);
                items.push((format!("k = {k}, s = {s}"), (v.value - expect).norm()));
            }
        }
        out.push(aggregate(
            "transform of z^k equals k^(-s) on the 8 x 4 grid",
            &items,
            t(1e-9),
            "monomial transforms",
        ));
    }

    // iterativity at random exponent pairs
    {
        let mut items = Vec::new();
        let mut drawn = 0;
        while drawn < 20 {
            let v = cx(rng.gen_range(0.3..3.0), rng.gen_range(-1.0..1.0));
            let u = cx(rng.gen_range(0.3..3.0), rng.gen_range(-1.0..1.0));
            if (v + u).re >= 6.0 {
                continue;
            }
            drawn += 1;
            let r = iterativity_check(v, u, 0.2, &FormSpec::DzOverZ, t(1e-7), cfg).unwrap();
            items.push((format!("v = {v}, u = {u}"), r.abs_error));
        }
        out.push(aggregate(
            "splitting identity at 20 random exponent pairs",
            &items,
            t(1e-7),
            "beta-function identity under the integral",
        ));
    }
    {
        let r = iterativity_check(cx(2.0, 0.0), cx(3.0, 0.0), 0.25, &FormSpec::DzOverZ, t(1e-9), cfg)
            .unwrap();
        out.push(CheckResult::compare(
            "splitting identity at integer exponents (2, 3)",
            r.computed,
            r.expected,
            t(1e-9),
            "classical factorial collapse",
        ));
    }

    // comultiplication on a bounded split (series converges geometrically)
    {
        let gamma_path = Path::line(cx(0.2, 0.0), cx(0.28, 0.0)).unwrap();
        let delta_path = Path::line(cx(0.28, 0.0), cx(0.5, 0.0)).unwrap();
        let alpha = FormSpec::SeriesWeighted(f_q());
        match comultiplication_eval(&gamma_path, &delta_path, &alpha, cx(1.5, 0.0), 40, cfg) {
            Ok(o) => {
                out.push(CheckResult::compare(
                    "comultiplication across [0.2 -> 0.28 -> 0.5] at exponent 1.5",
                    o.rhs,
                    o.lhs,
                    t(1e-6),
                    "path-composition series against the direct integral",
                ));
                // empirical geometric decay of the terms
                let mut decay_ok = true;
                for n in 6..o.terms.len().min(20) {
                    let a = o.terms[n].norm();
                    let b = o.terms[n - 1].norm();
                    if b > 1e-18 && a > b * (o.ratio + 0.15) {
                        decay_ok = false;
                    }
                }
                let mut c = CheckResult::compare(
                    "comultiplication terms decay at the sampled geometric ratio",
                    cx(if decay_ok { 0.0 } else { 1.0 }, 0.0),
                    cx(0.0, 0.0),
                    0.0,
                    format!("observed ratio bound {:.3}", o.ratio),
                );
                c.status = if decay_ok { CheckStatus::Pass } else { CheckStatus::Fail };
                out.push(c);
            }
            Err(e) => out.push(error_check(
                "comultiplication across [0.2 -> 0.28 -> 0.5] at exponent 1.5",
                e,
                t(1e-6),
                "path-composition series against the direct integral",
            )),
        }
    }

    // degenerate composition: a loop with vanishing dz/z total
    {
        let gamma_path = Path::line(cx(0.3, 0.0), cx(0.8, 0.0)).unwrap();
        let delta_path = Path::loop_about(cx(1.0, 0.0), 0.2).unwrap();
        let alpha = FormSpec::SeriesWeighted(f_q());
        match comultiplication_eval(&gamma_path, &delta_path, &alpha, cx(1.5, 0.0), 8, cfg) {
            Ok(o) => out.push(CheckResult::compare(
                "degenerate composition collapses to the two-term sum",
                o.rhs,
                o.lhs,
                t(1e-9),
                "vanishing loop total makes the series additive",
            )),
            Err(e) => out.push(error_check(
                "degenerate composition collapses to the two-term sum",
                e,
                t(1e-9),
                "vanishing loop total makes the series additive",
            )),
        }
    }

    // the catalogued split-path scenario: the split point sits inside the
    // tangential stretch, the sampled cumulative is unbounded and the
    // series diverges factorially — reported as the failing check it is
    {
        let name = "comultiplication at the catalogued split (0 -> 0.2 -> 0.5, exponent 1.5)";
        let prov = "catalogued parameters violate the domination hypothesis: \
                    sup_z |cumulative on the reversed tangential stretch| is unbounded, \
                    the series terms grow like Gamma(n - s) |log(w/eta)|^{-n}, and no \
                    truncation reaches the target accuracy; kept as a faithful record";
        let gamma_path = Path::segment_to(cx(0.2, 0.0)).unwrap();
        let delta_path = Path::line(cx(0.2, 0.0), cx(0.5, 0.0)).unwrap();
        let alpha = FormSpec::SeriesWeighted(f_q());
        match comultiplication_eval(&gamma_path, &delta_path, &alpha, cx(1.5, 0.0), 40, cfg) {
            Ok(o) => out.push(CheckResult::compare(name, o.rhs, o.lhs, t(1e-6), prov)),
            Err(e) => out.push(error_check(name, e, t(1e-6), prov)),
        }
    }

    // homotopy invariance
    {
        let straight = Path::segment_to(cx(0.5, 0.0)).unwrap();
        let detour = Path::new(vec![
            PathSegment::line(cx(0.0, 0.0), cx(0.3, 0.1)),
            PathSegment::line(cx(0.3, 0.1), cx(0.5, 0.0)),
        ])
        .unwrap();
        let r = homotopy_invariance_check(&f_q(), cx(2.5, 0.0), &straight, &detour, t(1e-7), cfg)
            .unwrap();
        out.push(CheckResult::compare(
            "homotopy invariance: straight path against a detour (s = 2.5)",
            r.computed,
            r.expected,
            t(1e-7),
            "the word is a homotopy functional",
        ));
        let r3 = homotopy_invariance_check(&f_q(), cx(3.0, 0.0), &straight, &detour, t(1e-9), cfg)
            .unwrap();
        out.push(CheckResult::compare(
            "homotopy invariance at integer exponent (s = 3)",
            r3.computed,
            r3.expected,
            t(1e-9),
            "classical iterated-integral case",
        ));
    }

    // fractional-integral composition
    {
        let s = cx(0.75, 0.0);
        let inner_cfg = cfg.relaxed(10.0);
        let composed = riemann_liouville(
            |y| {
                riemann_liouville(|u| cx(u, 0.0), s, y, &inner_cfg)
                    .map(|q| q.value)
                    .unwrap_or(cx(f64::NAN, 0.0))
            },
            s,
            1.0,
            cfg,
        )
        .unwrap();
        let expect = reciprocal_gamma(cx(3.5, 0.0));
        out.push(CheckResult::compare(
            "fractional integrals compose additively (0.75 twice = 1.5)",
            composed.value,
            expect,
            t(1e-7),
            "Riemann-Liouville semigroup property",
        ));
    }

    // scaling invariance
    for (label, model, alpha, s, d) in [
        ("f = z, alpha = 3, s = 2.5", monomial(1), 3.0, cx(2.5, 0.0), 1e-8),
        ("f = z^2, alpha = 2, s = 3", monomial(2), 2.0, cx(3.0, 0.0), 1e-9),
    ] {
        let r = haar_check(&model, alpha, s, t(d), cfg).unwrap();
        out.push(CheckResult::compare(
            format!("scaling invariance: {label}"),
            r.computed,
            r.expected,
            t(d),
            "substitution z -> z^alpha with the rescaled form",
        ));
    }

    // multiplicative iterativity
    for (k, s, d) in [(2u32, cx(4.0, 0.0), 1e-6), (3, cx(6.0, 0.0), 1e-5)] {
        let r = multiplicative_iterativity_eval(&f_q(), k, s, t(d), cfg).unwrap();
        out.push(CheckResult::compare(
            format!("gap-series route k = {k} reproduces zeta({})", s.re),
            r.computed,
            r.expected,
            t(d),
            "lacunary reindexing with exponent s/k",
        ));
    }

    // depth-2 words against double-sum oracles
    {
        let relaxed = cfg.relaxed(100.0);
        let mut items = Vec::new();
        for (a, b) in [(2.0, 1.0), (2.0, 2.0), (3.0, 2.0), (3.0, 1.0), (2.5, 1.5)] {
            let v = mzv(&[cx(a, 0.0), cx(b, 0.0)], &relaxed).unwrap().value;
            let oracle = oracles::mzv_double_sum(a, b, 200_000);
            items.push((format!("({a},{b})"), (v - cx(oracle, 0.0)).norm()));
        }
        out.push(aggregate(
            "depth-2 words match double-sum oracles (5 instances)",
            &items,
            t(1e-4),
            "nested quadrature against nested Dirichlet sums",
        ));
    }

    // stuffle identity (oracle identity for the double-sum convention)
    {
        let relaxed = cfg.relaxed(100.0);
        let ab = mzv(&[cx(2.0, 0.0), cx(3.0, 0.0)], &relaxed).unwrap().value;
        let ba = mzv(&[cx(3.0, 0.0), cx(2.0, 0.0)], &relaxed).unwrap().value;
        let apb = zeta(cx(5.0, 0.0), cfg).unwrap().value;
        let product = zeta(cx(2.0, 0.0), cfg).unwrap().value * zeta(cx(3.0, 0.0), cfg).unwrap().value;
        out.push(CheckResult::compare(
            "stuffle: zeta(2) zeta(3) = zeta(2,3) + zeta(3,2) + zeta(5)",
            ab + ba + apb,
            product,
            t(1e-3),
            "double-sum shuffle of the product",
        ));
    }

    out
}

// ---------------------------------------------------------------------------

pub fn continuation_suite(cfg: &QuadratureConfig, tol: Option<f64>) -> Vec<CheckResult> {
    let t = |d: f64| tol.unwrap_or(d);
    let spec = ContourSpec::default();
    let mut out = Vec::new();
    let fq = f_q();
    let chi4 = CharacterTable::mod_four();
    let chi4_model = from_character(&chi4).unwrap();

    // negative integers against the Bernoulli values
    {
        let mut items = Vec::new();
        for k in 0..=5u32 {
            let v = value_at_negative_integer(&fq, k, &spec, cfg).unwrap();
            let e = oracles::zeta_negative_integer(k);
            items.push((format!("k = {k}"), (v.value - cx(e, 0.0)).norm()));
        }
        out.push(aggregate(
            "zeta at non-positive integers (k = 0..5)",
            &items,
            t(1e-10),
            "loop-coefficient route against Bernoulli values",
        ));
    }

    // the Katz identity
    {
        let mut items = Vec::new();
        for a in [2u32, 3] {
            let psi = katz_psi(a).unwrap();
            for m in 1..=3u32 {
                let lhs = psi.iterated_derivative_at_1(m).unwrap();
                let rhs =
                    (1.0 - (a as f64).powi(m as i32 + 1)) * oracles::zeta_negative_integer(m);
                items.push((format!("a = {a}, m = {m}"), (lhs - cx(rhs, 0.0)).norm()));
            }
        }
        out.push(aggregate(
            "Katz identity: derivative values are (1 - a^(m+1)) zeta(-m)",
            &items,
            t(1e-9),
            "exact symbolic derivatives against Bernoulli values",
        ));
    }

    // generalized Bernoulli values for the character series
    {
        let mut items = Vec::new();
        for n in 1..=2u32 {
            let v = value_at_negative_integer(&chi4_model, n, &spec, cfg).unwrap();
            let b = oracles::generalized_bernoulli(n + 1, 4, &chi4.values);
            let expect = -b / (n as f64 + 1.0);
            items.push((format!("n = {n}"), (v.value - expect).norm()));
        }
        out.push(aggregate(
            "character series values at negative integers",
            &items,
            t(1e-9),
            "generalized Bernoulli generating-function oracle",
        ));
    }

    // two-route agreement
    {
        let mut items = Vec::new();
        for model in [katz_psi(2).unwrap(), chi4_model.clone()] {
            for m in 0..=4u32 {
                let r = route_agreement_check(&model, m, t(1e-9), &spec, cfg).unwrap();
                items.push((format!("{} m = {m}", model.label), r.abs_error));
            }
        }
        out.push(aggregate(
            "loop-coefficient route equals the derivative route (m <= 4)",
            &items,
            t(1e-9),
            "two sides of the continuation identity",
        ));
    }

    // overlap consistency on the convergent strip
    {
        let mut items = Vec::new();
        for model in [
            fq.clone(),
            chi4_model.clone(),
            katz_psi(2).unwrap(),
            katz_psi(3).unwrap(),
        ] {
            let k = model.bieberbach_order;
            for s in [cx(k + 1.5, 0.0), cx(k + 2.0, 0.0), cx(k + 2.5, 1.0)] {
                let direct = power_iterated_integral(&model, s, 0.0, cfg).unwrap().value;
                let cont = continue_l(&model, s, &spec, cfg).unwrap().value;
                items.push((format!("{} s = {s}", model.label), (direct - cont).norm()));
            }
        }
        out.push(aggregate(
            "contour continuation overlaps the direct integral",
            &items,
            t(1e-7),
            "agreement on the convergent strip (handles positive integers by limit)",
        ));
    }

    // loop-radius independence
    {
        let mut items = Vec::new();
        let mut values = Vec::new();
        for delta in [0.3, 0.5, 1.0] {
            let s = ContourSpec {
                delta,
                ..ContourSpec::default()
            };
            let v = value_at_negative_integer(&fq, 1, &s, cfg).unwrap();
            values.push(v);
        }
        for w in values.windows(2) {
            let d = (w[0].value - w[1].value).norm();
            let budget = (w[0].error_estimate + w[1].error_estimate).max(1e-12);
            items.push(("adjacent radii".into(), d / budget));
        }
        out.push(aggregate(
            "negative-integer values are loop-radius independent (error-normalized)",
            &items,
            1.0,
            "delta in {0.3, 0.5, 1.0}",
        ));
    }

    // residues at 1
    out.push(value_check(
        "residue of the zeta transform at s = 1",
        residue_at_1(&fq, &spec, cfg),
        cx(1.0, 0.0),
        t(1e-10),
        "simple pole of zeta",
    ));
    out.push(value_check(
        "residue of the L(chi mod 4) transform at s = 1",
        residue_at_1(&chi4_model, &spec, cfg),
        cx(0.0, 0.0),
        t(1e-10),
        "regularity of Dirichlet L at 1",
    ));
    out.push(value_check(
        "residue of the Q(i) ideal-count transform at s = 1",
        residue_at_1(&ideal_count_series(-4).unwrap(), &spec, cfg),
        cx(PI / 4.0, 0.0),
        t(1e-8),
        "class-number formula 2^r1 (2 pi)^r2 h R / (w sqrt|d|)",
    ));

    // pole/boundedness correspondence
    {
        let probe_pole = boundedness_probe_at_1(&fq, 0.1, &spec, cfg).unwrap();
        let probe_reg = boundedness_probe_at_1(&chi4_model, 0.1, &spec, cfg).unwrap();
        let consistent = probe_pole > 3.0 && probe_reg < 3.0;
        let mut c = CheckResult::compare(
            "pole at s = 1 if and only if the residue at z = 1 is non-zero",
            cx(if consistent { 0.0 } else { 1.0 }, 0.0),
            cx(0.0, 0.0),
            0.0,
            format!(
                "probe max |L| on |s-1| = 0.1: pole case {probe_pole:.2}, regular case {probe_reg:.2}"
            ),
        );
        c.status = if consistent { CheckStatus::Pass } else { CheckStatus::Fail };
        out.push(c);
    }

    // the printed coefficient-sum formula, kept as an exhibit
    {
        let printed = laurent_residue_sum(&fq).unwrap();
        let residue = residue_at_1(&fq, &spec, cfg).unwrap();
        out.push(CheckResult::skipped(
            "printed coefficient-sum formula against the residue route",
            printed,
            residue,
            0.0,
            "the printed alternating-sum formula gives -1 on z/(1-z) where the \
             residue route gives +1; both values are reported verbatim and no \
             silent sign correction is applied",
        ));
    }

    // w-truncated continuation
    {
        let mut items = Vec::new();
        for w in [0.3, 0.6] {
            let v = citer_core::continuation::w_truncated_continuation(&fq, w, 1, &spec, cfg)
                .unwrap();
            items.push((
                format!("w = {w}"),
                (v.value - cx(-1.0 / 12.0, 0.0)).norm(),
            ));
        }
        out.push(aggregate(
            "truncated continuation at s = -1 is independent of w",
            &items,
            t(1e-8),
            "ray cancellation leaves only the loop",
        ));
        let a = power_iterated_integral(&fq, cx(2.0, 0.0), 0.3, cfg).unwrap().value;
        let b = power_iterated_integral(&fq, cx(2.0, 0.0), 0.6, cfg).unwrap().value;
        let mut c = CheckResult::compare(
            "convergent-strip values do depend on w (non-constancy)",
            a,
            b,
            f64::INFINITY,
            format!("difference {:.4} exceeds 1e-3", (a - b).norm()),
        );
        c.status = if (a - b).norm() > 1e-3 { CheckStatus::Pass } else { CheckStatus::Fail };
        c.tolerance = 1e-3;
        out.push(c);
    }

    // L(1, chi mod 4) through the continuation limit
    out.push(value_check(
        "L(1, chi mod 4) through the continuation",
        continue_l(&chi4_model, cx(1.0, 0.0), &spec, cfg).map(|r| r.value),
        cx(PI / 4.0, 0.0),
        t(1e-6),
        "Leibniz value pi/4",
    ));

    out
}

// ---------------------------------------------------------------------------

pub fn monodromy_suite(cfg: &QuadratureConfig, tol: Option<f64>) -> Vec<CheckResult> {
    let t = |d: f64| tol.unwrap_or(d);
    let mut out = Vec::new();

    let scenarios = [
        (cx(2.0, 0.0), cx(0.5, 0.0), 0.8),
        (cx(3.0, 0.0), cx(0.5, 0.0), 0.8),
        (cx(2.5, 0.0), cx(0.4, 0.2), 0.75),
    ];

    // defect against the predicted branch, one consistent branch index
    {
        let mut items = Vec::new();
        let mut branches = Vec::new();
        for (s, w, eta) in scenarios {
            let sc = MonodromyScenario::new(s, w, eta, 1e-3, 30).unwrap();
            match monodromy_defect(&sc, cfg) {
                Ok(d) => {
                    items.push((
                        format!("s = {s}, w = {w}"),
                        (d.defect - d.predicted).norm(),
                    ));
                    branches.push(d.matched_branch);
                }
                Err(e) => {
                    out.push(error_check(
                        &format!("loop defect at s = {s}, w = {w}"),
                        e,
                        t(1e-4),
                        "loop continuation against -(2 pi i / Gamma(s)) log^(s-1) w",
                    ));
                }
            }
        }
        out.push(aggregate(
            "loop defect matches -(2 pi i / Gamma(s)) log^(s-1) w",
            &items,
            t(1e-4),
            "comultiplication assembly of the looped value",
        ));
        let consistent = !branches.is_empty() && branches.iter().all(|&b| b == branches[0]);
        let mut c = CheckResult::compare(
            "matched branch index is suite-consistent",
            cx(branches.first().copied().unwrap_or(9) as f64, 0.0),
            cx(branches.first().copied().unwrap_or(9) as f64, 0.0),
            0.0,
            format!("branches: {branches:?}"),
        );
        c.status = if consistent { CheckStatus::Pass } else { CheckStatus::Fail };
        out.push(c);
    }

    // the n = 1 loop term decays by at least 1.9x when epsilon halves
    {
        let sc = MonodromyScenario::new(cx(2.5, 0.0), cx(0.4, 0.2), 0.75, 1e-3, 24).unwrap();
        let l1 = looped_polylog(&sc, cfg).unwrap();
        let mut half = sc.clone();
        half.epsilon /= 2.0;
        let l2 = looped_polylog(&half, cfg).unwrap();
        let ratio = l1.loop_terms[1].norm() / l2.loop_terms[1].norm();
        let mut c = CheckResult::compare(
            "n = 1 loop term decays by >= 1.9 when epsilon halves",
            cx(ratio, 0.0),
            cx(2.0, 0.0),
            f64::INFINITY,
            format!("observed decay factor {ratio:.3}"),
        );
        c.status = if ratio >= 1.9 { CheckStatus::Pass } else { CheckStatus::Fail };
        c.tolerance = 1.9;
        out.push(c);
    }

    // epsilon-independence of the extrapolated defect
    {
        let mk = |eps: f64| MonodromyScenario::new(cx(2.0, 0.0), cx(0.5, 0.0), 0.8, eps, 24).unwrap();
        let d1 = monodromy_defect(&mk(1e-3), cfg).unwrap();
        let d2 = monodromy_defect(&mk(5e-4), cfg).unwrap();
        out.push(CheckResult::compare(
            "defect is stable under halving epsilon",
            d1.defect,
            d2.defect,
            t(1e-6).max(d1.error_budget + d2.error_budget),
            "Richardson limit is epsilon-independent",
        ));
    }

    // eta-independence
    {
        let mk = |eta: f64| MonodromyScenario::new(cx(2.5, 0.0), cx(0.4, 0.2), eta, 1e-3, 24).unwrap();
        let d1 = monodromy_defect(&mk(0.75), cfg).unwrap();
        let d2 = monodromy_defect(&mk(0.55), cfg).unwrap();
        out.push(CheckResult::compare(
            "defect is independent of the admissible split point",
            d1.defect,
            d2.defect,
            t(1e-6).max(d1.error_budget + d2.error_budget),
            "homotopy invariance of the assembly",
        ));
    }

    // winding twice doubles the leading loop term
    {
        let sc = MonodromyScenario::new(cx(2.0, 0.0), cx(0.5, 0.0), 0.8, 5e-4, 24).unwrap();
        let once = looped_polylog_with_turns(&sc, 1, cfg).unwrap();
        let twice = looped_polylog_with_turns(&sc, 2, cfg).unwrap();
        out.push(CheckResult::compare(
            "double winding doubles the n = 0 loop term",
            twice.loop_terms[0],
            2.0 * once.loop_terms[0],
            t(1e-6),
            "winding-number linearity of the leading term",
        ));
    }

    // degenerate loop: stripping the loop terms recovers the direct value
    {
        let sc = MonodromyScenario::new(cx(2.0, 0.0), cx(0.5, 0.0), 0.8, 1e-3, 24).unwrap();
        let direct = direct_polylog(&sc, cfg).unwrap();
        let looped = looped_polylog(&sc, cfg).unwrap();
        let stripped: Complex64 = looped.value - looped.loop_terms.iter().sum::<Complex64>();
        out.push(CheckResult::compare(
            "null loop recovers the direct polylog",
            stripped,
            direct,
            t(1e-7),
            "assembly without the loop terms",
        ));
    }

    out
}

// ---------------------------------------------------------------------------

/// Named suite contents.
pub fn run_suite(
    name: &str,
    cfg: &QuadratureConfig,
    tol: Option<f64>,
) -> Option<Vec<(String, Vec<CheckResult>)>> {
    let single = |n: &str, v: Vec<CheckResult>| Some(vec![(n.to_string(), v)]);
    match name {
        "core" => single("core", core_suite(cfg, tol)),
        "zeta" => single("zeta", zeta_suite(cfg, tol)),
        "comult" => single("comult", comult_suite(cfg, tol)),
        "continuation" => single("continuation", continuation_suite(cfg, tol)),
        "monodromy" => single("monodromy", monodromy_suite(cfg, tol)),
        "all" => Some(vec![
            ("core".to_string(), core_suite(cfg, tol)),
            ("zeta".to_string(), zeta_suite(cfg, tol)),
            ("comult".to_string(), comult_suite(cfg, tol)),
            ("continuation".to_string(), continuation_suite(cfg, tol)),
            ("monodromy".to_string(), monodromy_suite(cfg, tol)),
        ]),
        _ => None,
    }
}

// keep the polylog symbol exercised from this module (CLI uses it too)
#[allow(dead_code)]
fn _polylog_hook(cfg: &QuadratureConfig) {
    let _ = polylog_integral(
        cx(2.0, 0.0),
        cx(0.5, 0.0),
        &Path::segment_to(cx(0.5, 0.0)).unwrap(),
        cfg,
    );
    let _ = multiple_iterated_integral_depth2(
        &SlotWeight::plain(f_q()),
        cx(1.0, 0.0),
        &SlotWeight::plain(f_q()),
        cx(2.0, 0.0),
        cfg,
    );
}
