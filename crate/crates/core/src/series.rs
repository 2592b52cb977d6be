//! The catalogue of power series F(z) = Σ aₙ zⁿ that the integral
//! transforms act on: rational functions, Dirichlet-character series,
//! ideal-count series, the Katz series, Möbius and prime-indicator series,
//! and explicit coefficient lists.
//!
//! Every model enforces a₀ = 0, carries a coefficient-growth order k with
//! constants (C, N) so that |aₙ| ≤ C·nᵏ for n ≥ N, and knows how to
//! evaluate itself on the unit disc and at e^{−x} on the half-line.

use std::sync::Arc;

use num_complex::Complex64;

use crate::arith::{ideal_count, kronecker, moebius_sieve, prime_sieve};
use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::laurent::LaurentCoefficients;
use crate::poly::{Poly, RationalFn};
use crate::theta::ThetaRep;

const DEFAULT_SIEVE_CAP: usize = 1_000_000;

/// How coefficients aₙ are produced.
#[derive(Debug, Clone)]
pub enum CoefficientRule {
    /// Linear recurrence induced by a rational closed form.
    Rational { num: Vec<Complex64>, den: Vec<Complex64> },
    /// aₙ = χ(n).
    Character(CharacterTable),
    /// aₙ = Σ_{d|n} (D|d).
    IdealCount { discriminant: i64 },
    /// aₙ = 1 off multiples of a, 1−a on them.
    Katz { a: u32 },
    /// aₙ = μ(n) from a sieve with a hard cap.
    Moebius(Arc<Vec<i8>>),
    /// aₙ = 1 iff n prime, from a sieve with a hard cap.
    PrimeIndicator(Arc<Vec<bool>>),
    /// Explicit finite list: values[i] = a_{i+1}; zero beyond.
    Explicit(Arc<Vec<Complex64>>),
}

/// A power series with growth metadata and optional closed-form data.
#[derive(Debug, Clone)]
pub struct SeriesModel {
    pub label: String,
    pub rule: CoefficientRule,
    /// Growth order k: |aₙ| = O(nᵏ), k minimal among the declared data.
    pub bieberbach_order: f64,
    /// Constants (C, N) with |aₙ| ≤ C·nᵏ for n ≥ N.
    pub bieberbach_constants: (f64, u32),
    /// Rational closed form valid on the open unit disc, when one exists.
    pub closed_form: Option<RationalFn>,
    /// Lattice-theta representation (ideal-count models).
    pub theta: Option<Arc<ThetaRep>>,
    /// Symbolic Laurent data about z = 1, when the closed form is rational.
    pub laurent_at_1: Option<LaurentCoefficients>,
}

impl SeriesModel {
    fn with_rational(
        label: &str,
        rule: CoefficientRule,
        closed: RationalFn,
        order: f64,
        constants: (f64, u32),
    ) -> Result<Self> {
        let laurent = closed.laurent_at_1(6).ok();
        let model = Self {
            label: label.to_string(),
            rule,
            bieberbach_order: order,
            bieberbach_constants: constants,
            closed_form: Some(closed),
            theta: None,
            laurent_at_1: laurent,
        };
        model.check_vanishes_at_zero()?;
        Ok(model)
    }

    fn check_vanishes_at_zero(&self) -> Result<()> {
        if let Some(cf) = &self.closed_form {
            if cf.eval(Complex64::new(0.0, 0.0)).norm() > 1e-12 {
                return Err(Error::InvalidRational(
                    "series must vanish at 0 (a₀ = 0)".into(),
                ));
            }
        }
        if self.coefficient(0)?.norm() != 0.0 {
            return Err(Error::InvalidRational(
                "series must vanish at 0 (a₀ = 0)".into(),
            ));
        }
        Ok(())
    }

    /// aₙ for n ≥ 0 (a₀ is always 0).
    pub fn coefficient(&self, n: usize) -> Result<Complex64> {
        if n == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(match &self.rule {
            CoefficientRule::Rational { .. } => {
                *self.coefficients(n)?.last().expect("n >= 1")
            }
            CoefficientRule::Character(chi) => chi.value(n as u64),
            CoefficientRule::IdealCount { discriminant } => {
                Complex64::new(ideal_count(*discriminant, n as u64) as f64, 0.0)
            }
            CoefficientRule::Katz { a } => {
                if n % (*a as usize) == 0 {
                    Complex64::new(1.0 - *a as f64, 0.0)
                } else {
                    Complex64::new(1.0, 0.0)
                }
            }
            CoefficientRule::Moebius(mu) => {
                let v = *mu.get(n).ok_or(Error::CapExceeded {
                    requested: n,
                    cap: mu.len() - 1,
                })?;
                Complex64::new(v as f64, 0.0)
            }
            CoefficientRule::PrimeIndicator(sieve) => {
                let v = *sieve.get(n).ok_or(Error::CapExceeded {
                    requested: n,
                    cap: sieve.len() - 1,
                })?;
                Complex64::new(if v { 1.0 } else { 0.0 }, 0.0)
            }
            CoefficientRule::Explicit(values) => values
                .get(n - 1)
                .copied()
                .unwrap_or(Complex64::new(0.0, 0.0)),
        })
    }

    /// a₁ … aₙ as a batch (the rational recurrence is O(n·deg) this way).
    pub fn coefficients(&self, up_to: usize) -> Result<Vec<Complex64>> {
        match &self.rule {
            CoefficientRule::Rational { num, den } => {
                let q0 = den[0];
                let mut a = Vec::with_capacity(up_to + 1);
                a.push(Complex64::new(0.0, 0.0)); // a₀
                for n in 1..=up_to {
                    let mut acc = num.get(n).copied().unwrap_or(Complex64::new(0.0, 0.0));
                    for (j, qj) in den.iter().enumerate().skip(1) {
                        if j > n {
                            break;
                        }
                        acc -= qj * a[n - j];
                    }
                    a.push(acc / q0);
                }
                a.remove(0);
                Ok(a)
            }
            _ => (1..=up_to).map(|n| self.coefficient(n)).collect(),
        }
    }

    /// F(z) on the unit disc: closed form when present, otherwise partial
    /// sums with the declared growth bound controlling the tail.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.eval_tol(z, 1e-13)
    }

    pub fn eval_tol(&self, z: Complex64, tol: f64) -> Result<Complex64> {
        if let Some(cf) = &self.closed_form {
            return Ok(cf.eval(z));
        }
        let r = z.norm();
        if r == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if r > 0.999 {
            return Err(Error::SlowConvergence);
        }
        let (c, n0) = self.bieberbach_constants;
        let k = self.bieberbach_order;
        let log_inv_r = -r.ln();
        // beyond n₁ the bound C·nᵏ·rⁿ is decreasing
        let n1 = ((k / log_inv_r).ceil() as usize).max(n0 as usize).max(8);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zn = Complex64::new(1.0, 0.0);
        let mut n = 0usize;
        loop {
            n += 1;
            zn *= z;
            acc += self.coefficient(n)? * zn;
            if n >= n1 {
                let bound = 2.0 * c * (n as f64).powf(k) * r.powi(n as i32 + 1) / (1.0 - r);
                if bound < tol * (acc.norm() + 1.0) {
                    return Ok(acc);
                }
            }
            if n > 20_000_000 {
                return Err(Error::SlowConvergence);
            }
        }
    }

    /// F(e^{−x}) for real x > 0, used by the half-line integrals.
    ///
    /// Closed forms and theta representations evaluate exactly; near x = 0
    /// the closed form is read off its z = 1 + w representation with
    /// w = expm1(−x), so poles at z = 1 keep full relative accuracy.
    /// Purely sieve-backed models fall back to capped partial sums and
    /// report the truncation through `exp_eval_capped`.
    pub fn exp_eval(&self, x: f64) -> Result<Complex64> {
        if let Some(theta) = &self.theta {
            return Ok(Complex64::new(theta.exp_sum(x), 0.0));
        }
        if let Some(cf) = &self.closed_form {
            return Ok(if x.abs() < 0.5 {
                cf.eval_near_1(Complex64::new((-x).exp_m1(), 0.0))
            } else {
                cf.eval(Complex64::new((-x).exp(), 0.0))
            });
        }
        Ok(self.exp_eval_capped(x)?.0)
    }

    /// F(e^{−x}) for complex x (contour evaluation); needs a closed form.
    pub fn exp_eval_complex(&self, x: Complex64) -> Result<Complex64> {
        let cf = self.closed_form.as_ref().ok_or(Error::NoClosedForm)?;
        Ok(if x.norm() < 0.5 {
            cf.eval_near_1(expm1_neg(x))
        } else {
            cf.eval((-x).exp())
        })
    }

    /// Capped partial-sum value of F(e^{−x}) plus a truncation bound.
    pub fn exp_eval_capped(&self, x: f64) -> Result<(Complex64, f64)> {
        let cap = self.rule_cap().unwrap_or(DEFAULT_SIEVE_CAP);
        let needed = (45.0 / x).ceil() as usize;
        let n_max = needed.min(cap);
        let mut acc = Complex64::new(0.0, 0.0);
        let q = (-x).exp();
        let mut qn = 1.0f64;
        for (i, a) in self.coefficients(n_max)?.iter().enumerate() {
            qn *= q;
            if qn == 0.0 {
                break;
            }
            acc += a * qn;
            let _ = i;
        }
        let bound = if needed > cap {
            // |Σ_{n>cap} aₙ e^{−nx}| ≤ C capᵏ e^{−cap·x}/(1−e^{−x}) is tiny
            // only when cap·x is large; report the crude remainder scale
            let (c, _) = self.bieberbach_constants;
            let k = self.bieberbach_order;
            c * (cap as f64).powf(k) * (-(cap as f64) * x).exp() / (1.0 - q)
        } else {
            0.0
        };
        Ok((acc, bound))
    }

    fn rule_cap(&self) -> Option<usize> {
        match &self.rule {
            CoefficientRule::Moebius(v) => Some(v.len() - 1),
            CoefficientRule::PrimeIndicator(v) => Some(v.len() - 1),
            CoefficientRule::Explicit(v) => Some(v.len()),
            _ => None,
        }
    }

    /// Abscissa wall for ∫_{[0,1]} F (dz/z)^s: the transform converges for
    /// Re(s) strictly above this.
    ///
    /// Generically this is the growth order plus one. Ideal-count models
    /// converge on Re(s) > 1 (their coefficient partial sums grow linearly,
    /// ρ·m + O(√m), even though individual coefficients are only O(n)).
    pub fn convergence_wall(&self) -> f64 {
        if self.theta.is_some() {
            1.0
        } else {
            self.bieberbach_order + 1.0
        }
    }

    /// Does the closed form have a pole at z = 1?
    pub fn singular_at_1(&self) -> bool {
        self.closed_form
            .as_ref()
            .map(|cf| cf.pole_order_at_1() > 0)
            .unwrap_or(false)
    }

    /// Σ aₙ z^{nˢ} for real z ∈ (0,1): the gap transform evaluated by
    /// truncated sums with an explicit tail criterion.
    pub fn s_gap_eval(&self, s: Complex64, z: f64) -> Result<Complex64> {
        if !(s.re > 0.0) {
            return Err(Error::ConvergenceConstraint(
                "gap transform needs Re(s) > 0".into(),
            ));
        }
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::ConvergenceConstraint(
                "gap transform is evaluated on real z in (0,1)".into(),
            ));
        }
        let log_z = z.ln(); // negative
        let (c, _) = self.bieberbach_constants;
        let k = self.bieberbach_order;
        let mut acc = Complex64::new(0.0, 0.0);
        let mut n = 0usize;
        let mut grow_streak = 0u32;
        let mut last_mag = f64::INFINITY;
        loop {
            n += 1;
            let ns = Complex64::new(n as f64, 0.0).powc(s);
            let term = self.coefficient(n)? * (ns * log_z).exp();
            let mag = term.norm();
            acc += term;
            // monotone tail bound for the dominating real part
            let bound = 2.0 * c * (n as f64).powf(k) * (ns.re * log_z).exp();
            if n > 4 && bound < 1e-14 * (acc.norm() + 1.0) {
                return Ok(acc);
            }
            if mag > last_mag {
                grow_streak += 1;
                if grow_streak > 64 {
                    return Err(Error::SlowConvergence);
                }
            } else {
                grow_streak = 0;
            }
            last_mag = mag;
            if n > 5_000_000 {
                return Err(Error::SlowConvergence);
            }
        }
    }

    /// Exact symbolic (z·d/dz)^m of the closed form, evaluated at z = 1.
    pub fn iterated_derivative_at_1(&self, m: u32) -> Result<Complex64> {
        let cf = self.closed_form.as_ref().ok_or(Error::NoClosedForm)?;
        let mut f = cf.reduced_at_1();
        if f.pole_order_at_1() > 0 {
            return Err(Error::SingularAt1);
        }
        for _ in 0..m {
            f = f.euler_derivative();
        }
        Ok(f.eval(Complex64::new(1.0, 0.0)))
    }

    /// Least-squares slope of log|aₙ| against log n over the sampled range;
    /// a diagnostic for the growth order, clamped to ≥ 0.
    pub fn estimate_bieberbach_order(&self, sample_max: usize) -> Result<f64> {
        let lo = (sample_max / 10).max(2);
        let coeffs = self.coefficients(sample_max)?;
        let mut sx = 0.0;
        let mut sy = 0.0;
        let mut sxx = 0.0;
        let mut sxy = 0.0;
        let mut count = 0.0;
        for n in lo..=sample_max {
            let mag = coeffs[n - 1].norm();
            if mag == 0.0 {
                continue;
            }
            let x = (n as f64).ln();
            let y = mag.ln();
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            count += 1.0;
        }
        if count < 2.0 {
            return Ok(0.0);
        }
        let slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        Ok(slope.max(0.0))
    }
}

/// e^{−x} − 1 for complex x, accurate near 0 (series for |x| < 0.5).
pub fn expm1_neg(x: Complex64) -> Complex64 {
    if x.norm() >= 0.5 {
        return (-x).exp() - 1.0;
    }
    let mut term = -x;
    let mut acc = term;
    for k in 2..26 {
        term *= -x / k as f64;
        acc += term;
        if term.norm() < 1e-20 * acc.norm() {
            break;
        }
    }
    acc
}

/// Empirical growth constant for a rational model: C with |aₙ| ≤ C·nᵏ
/// spot-checked on an initial stretch, padded by 50%.
fn empirical_constant(model: &SeriesModel, k: f64) -> (f64, u32) {
    let coeffs = model.coefficients(2000).expect("rational coefficients");
    let mut c: f64 = 1.0;
    for (i, a) in coeffs.iter().enumerate() {
        let n = (i + 1) as f64;
        c = c.max(a.norm() / n.powf(k));
    }
    (1.5 * c + 0.5, 1)
}

/// Series of a rational function p(z)/q(z) holomorphic on the unit disc.
pub fn from_rational(num: &[i64], den: &[i64]) -> Result<SeriesModel> {
    let p = Poly::from_int(num);
    let q = Poly::from_int(den);
    let closed = RationalFn::new(p, q)?;
    if closed.eval(Complex64::new(0.0, 0.0)).norm() > 1e-12 {
        return Err(Error::InvalidRational("expansion has a₀ ≠ 0".into()));
    }
    // holomorphy on the open disc: no denominator roots strictly inside
    let roots_inside = denominator_root_inside(&closed);
    if roots_inside {
        return Err(Error::InvalidRational(
            "denominator vanishes inside the unit disc".into(),
        ));
    }
    let order = (closed.pole_order_at_1().max(unit_circle_pole_order(&closed)) as f64 - 1.0)
        .max(0.0);
    let rule = CoefficientRule::Rational {
        num: closed.num.coeffs.clone(),
        den: closed.den.coeffs.clone(),
    };
    let mut model = SeriesModel::with_rational(
        "rational",
        rule,
        closed,
        order,
        (1.0, 1),
    )?;
    model.bieberbach_constants = empirical_constant(&model, order);
    Ok(model)
}

fn denominator_root_inside(f: &RationalFn) -> bool {
    // Cheap disc test: sample |q| on shrinking circles and use the argument
    // principle on |z| = 1 − 1e−6 via winding of q.
    let q = &f.den;
    let n = 512;
    let r = 1.0 - 1e-6;
    let mut winding = 0.0f64;
    let mut prev = q.eval(Complex64::from_polar(r, 0.0));
    for j in 1..=n {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let v = q.eval(Complex64::from_polar(r, theta));
        let mut d = v.arg() - prev.arg();
        if d > std::f64::consts::PI {
            d -= 2.0 * std::f64::consts::PI;
        }
        if d < -std::f64::consts::PI {
            d += 2.0 * std::f64::consts::PI;
        }
        winding += d;
        prev = v;
    }
    winding.abs() > std::f64::consts::PI
}

fn unit_circle_pole_order(f: &RationalFn) -> usize {
    // order of the worst denominator root on |z| = 1 (coefficient growth
    // comes from those); probe the reduced denominator on the circle
    let q = &f.den;
    let mut worst = 0usize;
    let n = 720;
    for j in 0..n {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        let z = Complex64::from_polar(1.0, theta);
        if q.eval(z).norm() < 1e-6 {
            // estimate multiplicity by successive derivatives
            let mut d = q.clone();
            let mut ord = 0usize;
            while d.eval(z).norm() < 1e-6 && ord < 8 {
                d = d.derivative();
                ord += 1;
            }
            worst = worst.max(ord);
        }
    }
    worst
}

/// F_Q(z) = z/(1−z), the series with aₙ = 1 underlying ζ(s).
pub fn f_q() -> SeriesModel {
    let mut m = from_rational(&[0, 1], &[1, -1]).expect("z/(1-z) is valid");
    m.label = "F_Q".into();
    m
}

/// The monomial z^k (aₖ = 1, all other coefficients 0).
pub fn monomial(k: u32) -> SeriesModel {
    let mut num = vec![0i64; k as usize + 1];
    num[k as usize] = 1;
    let mut m = from_rational(&num, &[1]).expect("monomial is valid");
    m.label = format!("z^{k}");
    m
}

/// F_χ(z) = Σₐ χ(a) z^a / (1 − z^f) for a non-trivial character χ.
pub fn from_character(chi: &CharacterTable) -> Result<SeriesModel> {
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let f = chi.modulus as usize;
    let mut num = vec![Complex64::new(0.0, 0.0); f + 1];
    for a in 1..=f {
        num[a] = chi.value(a as u64);
    }
    let mut den = vec![Complex64::new(0.0, 0.0); f + 1];
    den[0] = Complex64::new(1.0, 0.0);
    den[f] = Complex64::new(-1.0, 0.0);
    let raw = RationalFn::new(Poly::new(num), Poly::new(den))?;
    // Σχ(a) = 0 makes the numerator vanish at 1: cancel so the closed form
    // is regular there
    let closed = raw.reduced_at_1();
    let laurent = closed.laurent_at_1(6).ok();
    let model = SeriesModel {
        label: format!("F_chi mod {}", chi.modulus),
        rule: CoefficientRule::Character(chi.clone()),
        bieberbach_order: 0.0,
        bieberbach_constants: (1.0, 1),
        closed_form: Some(closed),
        theta: None,
        laurent_at_1: laurent,
    };
    model.check_vanishes_at_zero()?;
    Ok(model)
}

/// Ideal-count series Σ ν(n) zⁿ of the imaginary quadratic field with
/// fundamental discriminant D, with ν(n) = Σ_{d|n} (D|d).
pub fn ideal_count_series(discriminant: i64) -> Result<SeriesModel> {
    let theta = ThetaRep::new(discriminant)?;
    Ok(SeriesModel {
        label: format!("F_K (D = {discriminant})"),
        rule: CoefficientRule::IdealCount { discriminant },
        bieberbach_order: 1.0,
        bieberbach_constants: (1.0, 1),
        closed_form: None,
        theta: Some(Arc::new(theta)),
        laurent_at_1: None,
    })
}

/// The Katz series Ψ(t) = Σ ξ_a(n) tⁿ = (Σ_{n≤a} ξ_a(n) tⁿ)/(1−t^a),
/// regular at t = 1.
pub fn katz_psi(a: u32) -> Result<SeriesModel> {
    if a < 2 {
        return Err(Error::InvalidRational("katz series needs a ≥ 2".into()));
    }
    let mut num = vec![0i64; a as usize + 1];
    for n in 1..=a as usize {
        num[n] = if n == a as usize { 1 - a as i64 } else { 1 };
    }
    let mut den = vec![0i64; a as usize + 1];
    den[0] = 1;
    den[a as usize] = -1;
    let raw = RationalFn::new(Poly::from_int(&num), Poly::from_int(&den))?;
    let closed = raw.reduced_at_1();
    let laurent = closed.laurent_at_1(6).ok();
    let model = SeriesModel {
        label: format!("Katz psi_{a}"),
        rule: CoefficientRule::Katz { a },
        bieberbach_order: 0.0,
        bieberbach_constants: (a as f64, 1),
        closed_form: Some(closed),
        theta: None,
        laurent_at_1: laurent,
    };
    model.check_vanishes_at_zero()?;
    Ok(model)
}

/// Σ μ(n) zⁿ with a sieve cap (coefficient requests beyond it error).
pub fn moebius_series(cap: Option<usize>) -> SeriesModel {
    let cap = cap.unwrap_or(DEFAULT_SIEVE_CAP);
    SeriesModel {
        label: "moebius".into(),
        rule: CoefficientRule::Moebius(Arc::new(moebius_sieve(cap))),
        bieberbach_order: 0.0,
        bieberbach_constants: (1.0, 1),
        closed_form: None,
        theta: None,
        laurent_at_1: None,
    }
}

/// Σ_{p prime} z^p with a sieve cap.
pub fn prime_indicator_series(cap: Option<usize>) -> SeriesModel {
    let cap = cap.unwrap_or(DEFAULT_SIEVE_CAP);
    SeriesModel {
        label: "prime indicator".into(),
        rule: CoefficientRule::PrimeIndicator(Arc::new(prime_sieve(cap))),
        bieberbach_order: 0.0,
        bieberbach_constants: (1.0, 1),
        closed_form: None,
        theta: None,
        laurent_at_1: None,
    }
}

/// Explicit coefficient list: values[i] = a_{i+1}, zero beyond the list.
pub fn from_coefficients(values: Vec<Complex64>, bieberbach_k: f64) -> Result<SeriesModel> {
    let c = values
        .iter()
        .enumerate()
        .map(|(i, v)| v.norm() / ((i + 1) as f64).powf(bieberbach_k))
        .fold(1.0f64, f64::max);
    Ok(SeriesModel {
        label: "explicit coefficients".into(),
        rule: CoefficientRule::Explicit(Arc::new(values)),
        bieberbach_order: bieberbach_k.max(0.0),
        bieberbach_constants: (c, 1),
        closed_form: None,
        theta: None,
        laurent_at_1: None,
    })
}

/// Kronecker-symbol series aₙ = (D|n) as a character-like model
/// (used for Dirichlet L of real characters of non-prime modulus).
pub fn kronecker_character(d: i64) -> Result<CharacterTable> {
    if !crate::arith::is_fundamental_discriminant(d) {
        return Err(Error::UnsupportedField(d));
    }
    let f = (-d) as u32;
    let f_eff = if d % 4 == 1 { f } else { f };
    let values: Vec<Complex64> = (1..=f_eff as u64)
        .map(|n| Complex64::new(kronecker(d, n as i64) as f64, 0.0))
        .collect();
    CharacterTable::new(f_eff, values, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn f_q_coefficients_are_ones() {
        let m = f_q();
        let coeffs = m.coefficients(20).unwrap();
        for (i, a) in coeffs.iter().enumerate() {
            assert!((a - c(1.0)).norm() < 1e-14, "a_{}", i + 1);
        }
        assert_eq!(m.bieberbach_order, 0.0);
    }

    #[test]
    fn f_q_laurent_at_1() {
        let m = f_q();
        let lc = m.laurent_at_1.as_ref().unwrap();
        assert_eq!(lc.min_order, -1);
        assert!((lc.coefficient(-1) - c(-1.0)).norm() < 1e-12);
        assert!((lc.coefficient(0) - c(-1.0)).norm() < 1e-12);
    }

    #[test]
    fn monomial_series() {
        let m = monomial(1);
        assert_eq!(m.coefficient(1).unwrap(), c(1.0));
        assert_eq!(m.coefficient(2).unwrap(), c(0.0));
    }

    #[test]
    fn rational_with_inner_pole_rejected() {
        // z/(1 − 2z) has a pole at 1/2
        assert!(from_rational(&[0, 1], &[1, -2]).is_err());
        // a₀ ≠ 0
        assert!(from_rational(&[1, 1], &[1]).is_err());
        // q(0) = 0
        assert!(from_rational(&[0, 1], &[0, 1]).is_err());
    }

    #[test]
    fn character_series_mod_four() {
        let m = from_character(&CharacterTable::mod_four()).unwrap();
        let coeffs = m.coefficients(8).unwrap();
        let expect = [1.0, 0.0, -1.0, 0.0, 1.0, 0.0, -1.0, 0.0];
        for (i, &e) in expect.iter().enumerate() {
            assert!((coeffs[i] - c(e)).norm() < 1e-14, "a_{}", i + 1);
        }
        // closed form at 0.5: (0.5 − 0.125)/(1 − 0.0625) = 0.4
        assert!((m.eval(c(0.5)).unwrap() - c(0.4)).norm() < 1e-14);
        // regular at 1
        let lc = m.laurent_at_1.as_ref().unwrap();
        assert!(lc.min_order >= 0);
    }

    #[test]
    fn character_periodicity() {
        let chi = CharacterTable::from_prime_modulus(3, 1).unwrap();
        let m = from_character(&chi).unwrap();
        assert!((m.coefficient(4).unwrap() - c(1.0)).norm() < 1e-14);
        for n in 1..=1000usize {
            let a = m.coefficient(n).unwrap();
            let b = m.coefficient(n + 3).unwrap();
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn ideal_count_multiplicativity() {
        let m = ideal_count_series(-4).unwrap();
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                if gcd_u(a, b) == 1 {
                    let va = m.coefficient(a as usize).unwrap();
                    let vb = m.coefficient(b as usize).unwrap();
                    let vab = m.coefficient((a * b) as usize).unwrap();
                    assert!((vab - va * vb).norm() < 1e-12, "({a},{b})");
                }
            }
        }
    }

    fn gcd_u(a: u64, b: u64) -> u64 {
        crate::arith::gcd(a, b)
    }

    #[test]
    fn katz_values() {
        let m = katz_psi(2).unwrap();
        // ξ₂ = (1, −1, 1, −1, …)
        assert_eq!(m.coefficient(1).unwrap(), c(1.0));
        assert_eq!(m.coefficient(2).unwrap(), c(-1.0));
        // Ψ(1) = 1/2 through the reduced closed form
        assert!((m.closed_form.as_ref().unwrap().eval(c(1.0)) - c(0.5)).norm() < 1e-14);
        let m3 = katz_psi(3).unwrap();
        assert_eq!(m3.coefficient(3).unwrap(), c(-2.0));
    }

    #[test]
    fn eval_f_q() {
        let m = f_q();
        assert!((m.eval(c(0.5)).unwrap() - c(1.0)).norm() < 1e-14);
        assert_eq!(m.eval(c(0.0)).unwrap(), c(0.0));
    }

    #[test]
    fn partial_sums_match_closed_forms() {
        for model in [f_q(), katz_psi(3).unwrap()] {
            let sums_only = SeriesModel {
                closed_form: None,
                laurent_at_1: None,
                ..model.clone()
            };
            for &z in &[0.1, 0.5, 0.9, 0.3] {
                let a = model.eval(c(z)).unwrap();
                let b = sums_only.eval(c(z)).unwrap();
                assert!((a - b).norm() < 1e-11, "{} at {z}", model.label);
            }
        }
    }

    #[test]
    fn moebius_and_primes() {
        let mu = moebius_series(Some(100));
        assert_eq!(mu.coefficient(6).unwrap(), c(1.0));
        assert_eq!(mu.coefficient(4).unwrap(), c(0.0));
        assert!(matches!(
            mu.coefficient(101),
            Err(Error::CapExceeded { .. })
        ));
        let pr = prime_indicator_series(Some(100));
        assert_eq!(pr.coefficient(4).unwrap(), c(0.0));
        assert_eq!(pr.coefficient(5).unwrap(), c(1.0));
    }

    #[test]
    fn gap_transform_value() {
        // Σ 0.5^{n²} ≈ 0.564468413603
        let m = f_q();
        let v = m.s_gap_eval(c(2.0), 0.5).unwrap();
        assert!((v - c(0.5644684136)).norm() < 1e-9);
        // s = 1 is the plain evaluation
        let v1 = m.s_gap_eval(c(1.0), 0.5).unwrap();
        assert!((v1 - c(1.0)).norm() < 1e-12);
    }

    #[test]
    fn derivative_at_1() {
        let m = katz_psi(2).unwrap();
        assert!((m.iterated_derivative_at_1(1).unwrap() - c(0.25)).norm() < 1e-13);
        assert!((m.iterated_derivative_at_1(0).unwrap() - c(0.5)).norm() < 1e-13);
        assert!(matches!(
            f_q().iterated_derivative_at_1(1),
            Err(Error::SingularAt1)
        ));
    }

    #[test]
    fn growth_order_estimates() {
        assert!(f_q().estimate_bieberbach_order(2000).unwrap() < 0.05);
        let ideal = ideal_count_series(-4).unwrap();
        assert!(ideal.estimate_bieberbach_order(2000).unwrap() <= 1.0);
        // aₙ = n: z/(1−z)²
        let linear = from_rational(&[0, 1], &[1, -2, 1]).unwrap();
        let est = linear.estimate_bieberbach_order(2000).unwrap();
        assert!((est - 1.0).abs() < 0.05, "{est}");
    }

    #[test]
    fn growth_bound_spot_check() {
        for model in [f_q(), katz_psi(3).unwrap(), ideal_count_series(-4).unwrap()] {
            let (cst, n0) = model.bieberbach_constants;
            let k = model.bieberbach_order;
            let coeffs = model.coefficients(10_000).unwrap();
            for (i, a) in coeffs.iter().enumerate() {
                let n = i + 1;
                if n >= n0 as usize {
                    assert!(
                        a.norm() <= cst * (n as f64).powf(k) + 1e-12,
                        "{} at n={n}",
                        model.label
                    );
                }
            }
        }
    }

    #[test]
    fn exp_eval_matches_direct_sum() {
        let m = f_q();
        let x = 0.7;
        let direct: f64 = (1..200).map(|n| (-(n as f64) * x).exp()).sum();
        assert!((m.exp_eval(x).unwrap() - c(direct)).norm() < 1e-12);
    }
}
