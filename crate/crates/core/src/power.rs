//! Principal complex powers and generalized binomial coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Principal-branch logarithm with arg ∈ (−π, π] and an explicit winding
/// offset: log|z| + i·arg(z) + 2πi·branch_offset.
///
/// A signed zero imaginary part is normalized so that negative reals land on
/// the +π side of the cut.
pub fn branch_log(z: Complex64, branch_offset: i32) -> Complex64 {
    let zn = if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    };
    let mut l = zn.ln();
    if branch_offset != 0 {
        l += Complex64::new(0.0, 2.0 * std::f64::consts::PI * branch_offset as f64);
    }
    l
}

/// z^s = exp(s·(log|z| + i·arg z + 2πi·branch_offset)), arg ∈ (−π, π].
///
/// z = 0 maps to 0 when Re(s) > 0 and is rejected otherwise.
pub fn principal_power(z: Complex64, s: Complex64, branch_offset: i32) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return if s.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::ZeroBase)
        };
    }
    Ok((s * branch_log(z, branch_offset)).exp())
}

/// Principal power for callers that have already excluded z = 0.
pub fn pw(z: Complex64, s: Complex64) -> Complex64 {
    debug_assert!(z.re != 0.0 || z.im != 0.0);
    (s * branch_log(z, 0)).exp()
}

/// Generalized binomial coefficient s(s−1)…(s−n+1)/n!, by the product form.
///
/// The product form stays finite when s is a non-negative integer < n
/// (the coefficient is then exactly zero), where a Gamma-quotient would
/// hit a pole.
pub fn generalized_binomial(s: Complex64, n: u32) -> Complex64 {
    let mut b = Complex64::new(1.0, 0.0);
    for k in 0..n {
        b *= (s - k as f64) / (k as f64 + 1.0);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn power_basics() {
        assert_eq!(principal_power(c(1.0, 0.0), c(2.5, -3.0), 0).unwrap(), c(1.0, 0.0));
        let i_sq = principal_power(c(0.0, 1.0), c(2.0, 0.0), 0).unwrap();
        assert!((i_sq - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn negative_real_base_uses_plus_pi() {
        // (−0.693147…)^1.5 = exp(1.5(ln 0.693147… + iπ))
        let z = c(-0.6931471805599453, 0.0);
        let got = principal_power(z, c(1.5, 0.0), 0).unwrap();
        let expect = (c(1.5, 0.0) * c((0.6931471805599453f64).ln(), PI)).exp();
        assert!((got - expect).norm() < 1e-15);
        // the same with a signed negative zero imaginary part
        let z2 = c(-0.6931471805599453, -0.0);
        let got2 = principal_power(z2, c(1.5, 0.0), 0).unwrap();
        assert_eq!(got, got2);
    }

    #[test]
    fn zero_base() {
        assert_eq!(principal_power(c(0.0, 0.0), c(2.0, 5.0), 0).unwrap(), c(0.0, 0.0));
        assert!(principal_power(c(0.0, 0.0), c(0.0, 1.0), 0).is_err());
        assert!(principal_power(c(0.0, 0.0), c(-1.0, 0.0), 0).is_err());
    }

    #[test]
    fn branch_offset_winds() {
        let z = c(2.0, 0.0);
        let s = c(0.5, 0.0);
        let p0 = principal_power(z, s, 0).unwrap();
        let p1 = principal_power(z, s, 1).unwrap();
        // offset by one turn multiplies by e^{iπ} for the square root
        assert!((p1 + p0).norm() < 1e-12);
    }

    #[test]
    fn binomial_values() {
        let s = c(2.5, 1.0);
        assert_eq!(generalized_binomial(s, 0), c(1.0, 0.0));
        assert_eq!(generalized_binomial(s, 1), s);
        let b = generalized_binomial(c(0.5, 0.0), 2);
        assert!((b - c(-0.125, 0.0)).norm() < 1e-16);
        // integer s below n collapses to exactly zero
        assert_eq!(generalized_binomial(c(3.0, 0.0), 5), c(0.0, 0.0));
    }
}
