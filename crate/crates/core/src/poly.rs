//! Dense complex polynomials and rational functions.
//!
//! Backs the closed forms of the series catalogue: evaluation, reduction of
//! common (1−z) factors, symbolic application of z·d/dz, and Laurent
//! expansion about z = 1.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laurent::LaurentCoefficients;

const ZERO_TOL: f64 = 1e-12;

/// Polynomial in ascending powers: coeffs[k] is the z^k coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<Complex64>,
}

impl Poly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn from_int(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c as f64, 0.0)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, |c| c.norm() == 0.0) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Complex64::new(0.0, 0.0));
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![Complex64::new(0.0, 0.0)]);
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            out[i] -= b;
        }
        Poly::new(out)
    }

    /// Multiply by the monomial z.
    pub fn shift_up(&self) -> Poly {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Complex64::new(0.0, 0.0));
        out.extend_from_slice(&self.coeffs);
        Poly::new(out)
    }

    /// Exact division by (1 − z); the caller must ensure p(1) = 0.
    pub fn divide_by_one_minus_z(&self) -> Result<Poly> {
        // p(z) = (1 − z) q(z): q_k = p_k + q_{k−1}, checked against the top
        let scale: f64 = self.coeffs.iter().map(|c| c.norm()).sum::<f64>().max(1.0);
        if self.eval(Complex64::new(1.0, 0.0)).norm() > ZERO_TOL * scale {
            return Err(Error::InvalidRational(
                "polynomial does not vanish at 1".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut q = vec![Complex64::new(0.0, 0.0); n.max(2) - 1];
        let mut carry = Complex64::new(0.0, 0.0);
        for k in 0..n - 1 {
            carry = self.coeffs[k] + carry;
            q[k] = carry;
        }
        Ok(Poly::new(q))
    }

    /// Coefficients after the substitution z = 1 + w, ascending in w.
    pub fn shift_to_one(&self) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        // binomial expansion of (1+w)^k
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut binom = 1.0f64;
            for j in 0..=k {
                out[j] += c * binom;
                binom = binom * (k - j) as f64 / (j + 1) as f64;
            }
        }
        Poly::new(out)
    }
}

/// Ratio of two polynomials, kept with q(0) ≠ 0.
///
/// A second representation shifted to w = z − 1 is carried along so that
/// values near z = 1 (in particular at z = e^{−x} for small x) can be
/// computed without cancellation.
#[derive(Debug, Clone)]
pub struct RationalFn {
    pub num: Poly,
    pub den: Poly,
    num_w: Poly,
    den_w: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidRational("zero denominator".into()));
        }
        if den.coeffs[0].norm() == 0.0 {
            return Err(Error::InvalidRational(
                "denominator vanishes at 0".into(),
            ));
        }
        Ok(Self::assemble(num, den))
    }

    fn assemble(num: Poly, den: Poly) -> Self {
        let num_w = num.shift_to_one();
        let den_w = den.shift_to_one();
        Self {
            num,
            den,
            num_w,
            den_w,
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// Value at z = 1 + w, accurate for small |w|.
    pub fn eval_near_1(&self, w: Complex64) -> Complex64 {
        self.num_w.eval(w) / self.den_w.eval(w)
    }

    fn poly_scale(p: &Poly) -> f64 {
        p.coeffs.iter().map(|c| c.norm()).sum::<f64>().max(1.0)
    }

    /// Order of the pole at z = 1 (0 when regular there).
    pub fn pole_order_at_1(&self) -> usize {
        let mut num_ord = 0usize;
        let mut den_ord = 0usize;
        let mut p = self.num.clone();
        while !p.is_zero()
            && p.eval(Complex64::new(1.0, 0.0)).norm() <= ZERO_TOL * Self::poly_scale(&p)
        {
            p = p.divide_by_one_minus_z().expect("vanishing checked");
            num_ord += 1;
        }
        let mut q = self.den.clone();
        while !q.is_zero()
            && q.eval(Complex64::new(1.0, 0.0)).norm() <= ZERO_TOL * Self::poly_scale(&q)
        {
            q = q.divide_by_one_minus_z().expect("vanishing checked");
            den_ord += 1;
        }
        den_ord.saturating_sub(num_ord)
    }

    /// Cancel common (1 − z) factors of numerator and denominator.
    pub fn reduced_at_1(&self) -> RationalFn {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let nv = num.eval(Complex64::new(1.0, 0.0)).norm() <= ZERO_TOL * Self::poly_scale(&num);
            let dv = den.eval(Complex64::new(1.0, 0.0)).norm() <= ZERO_TOL * Self::poly_scale(&den);
            if nv && dv && !num.is_zero() && !den.is_zero() {
                num = num.divide_by_one_minus_z().expect("vanishing checked");
                den = den.divide_by_one_minus_z().expect("vanishing checked");
            } else {
                break;
            }
        }
        RationalFn::assemble(num, den)
    }

    /// Apply z·d/dz once: z·(p'q − pq')/q².
    pub fn euler_derivative(&self) -> RationalFn {
        let p = &self.num;
        let q = &self.den;
        let num = p.derivative().mul(q).sub(&p.mul(&q.derivative())).shift_up();
        let den = q.mul(q);
        RationalFn::assemble(num, den)
    }

    /// Laurent expansion about z = 1 with orders min_order..=max_order.
    ///
    /// min_order = −(pole order); the expansion is computed symbolically by
    /// shifting both polynomials to w = z − 1 and dividing power series.
    pub fn laurent_at_1(&self, max_order: i32) -> Result<LaurentCoefficients> {
        let r = self.reduced_at_1();
        // den(w) = w^m · u(w) with u(0) ≠ 0
        let den_w = r.den.shift_to_one();
        let num_w = r.num.shift_to_one();
        let scale_d = Self::poly_scale(&den_w);
        let mut m = 0usize;
        let mut u = den_w.coeffs.clone();
        while !u.is_empty() && u[0].norm() <= ZERO_TOL * scale_d {
            u.remove(0);
            m += 1;
        }
        if u.is_empty() {
            return Err(Error::InvalidRational("zero denominator".into()));
        }
        let min_order = -(m as i32);
        if max_order < min_order {
            return Err(Error::InvalidRational(
                "requested Laurent range is empty".into(),
            ));
        }
        // series division num_w / u up to order max_order + m
        let terms = (max_order - min_order) as usize + 1;
        let mut quotient = vec![Complex64::new(0.0, 0.0); terms];
        let get = |v: &Vec<Complex64>, k: usize| {
            v.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0))
        };
        for k in 0..terms {
            let mut acc = get(&num_w.coeffs, k);
            for j in 0..k {
                acc -= quotient[j] * get(&u, k - j);
            }
            quotient[k] = acc / u[0];
        }
        Ok(LaurentCoefficients {
            center: Complex64::new(1.0, 0.0),
            min_order,
            coefficients: quotient,
            radius_used: 0.0,
            errors: vec![0.0; terms],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn divide_by_one_minus_z_exact() {
        // 1 − z³ = (1 − z)(1 + z + z²)
        let p = Poly::from_int(&[1, 0, 0, -1]);
        let q = p.divide_by_one_minus_z().unwrap();
        assert_eq!(q, Poly::from_int(&[1, 1, 1]));
    }

    #[test]
    fn laurent_of_z_over_one_minus_z() {
        // z/(1−z) = −(z−1)^{−1} − 1
        let f = RationalFn::new(Poly::from_int(&[0, 1]), Poly::from_int(&[1, -1])).unwrap();
        let lc = f.laurent_at_1(2).unwrap();
        assert_eq!(lc.min_order, -1);
        assert!((lc.coefficient(-1) - c(-1.0)).norm() < 1e-12);
        assert!((lc.coefficient(0) - c(-1.0)).norm() < 1e-12);
        assert!(lc.coefficient(1).norm() < 1e-12);
    }

    #[test]
    fn reduction_cancels_common_root() {
        // (z − z²)/(1 − z²) = z/(1+z)
        let f = RationalFn::new(Poly::from_int(&[0, 1, -1]), Poly::from_int(&[1, 0, -1])).unwrap();
        let r = f.reduced_at_1();
        let one = Complex64::new(1.0, 0.0);
        assert!((r.eval(one) - c(0.5)).norm() < 1e-14);
        assert_eq!(r.pole_order_at_1(), 0);
    }

    #[test]
    fn euler_derivative_of_katz_two() {
        // t·d/dt (t/(1+t)) = t/(1+t)²; at t = 1 this is 1/4
        let f = RationalFn::new(Poly::from_int(&[0, 1]), Poly::from_int(&[1, 1])).unwrap();
        let d = f.euler_derivative();
        assert!((d.eval(Complex64::new(1.0, 0.0)) - c(0.25)).norm() < 1e-14);
    }

    #[test]
    fn pole_order_detection() {
        let f = RationalFn::new(Poly::from_int(&[0, 1]), Poly::from_int(&[1, -2, 1])).unwrap();
        assert_eq!(f.pole_order_at_1(), 2);
    }
}
