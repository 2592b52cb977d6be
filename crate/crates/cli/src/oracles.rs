//! Independent reference values used by the verification suites.
//!
//! Everything here is computed through series, sieves and Euler–Maclaurin
//! sums — never through the integral transforms under test.

use citer_core::Complex64;

pub const CATALAN: f64 = 0.915_965_594_177_219_0;

/// B₂, B₄, …, B₁₆.
const BERNOULLI_EVEN: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// ζ(−k) = −B_{k+1}/(k+1) for k ≥ 0 (with ζ(0) = −1/2).
pub fn zeta_negative_integer(k: u32) -> f64 {
    if k == 0 {
        return -0.5;
    }
    if k % 2 == 0 {
        return 0.0;
    }
    let idx = ((k + 1) / 2 - 1) as usize;
    -BERNOULLI_EVEN[idx] / (k as f64 + 1.0)
}

/// Hurwitz zeta Σ_{n≥0} (n+q)^{−s} by Euler–Maclaurin, Re(s) > 1.
pub fn hurwitz_zeta_em(s: Complex64, q: f64) -> Complex64 {
    let n_cut = 24usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..n_cut {
        acc += (-s * Complex64::new(n as f64 + q, 0.0).ln()).exp();
    }
    let edge = Complex64::new(n_cut as f64 + q, 0.0);
    let loge = edge.ln();
    // ∫ tail + half the edge term
    acc += (-(s - 1.0) * loge).exp() / (s - 1.0);
    acc += 0.5 * (-s * loge).exp();
    // correction terms B_{2j}/(2j)! · (s)_{2j−1} · edge^{−s−2j+1}
    let mut pochhammer = s;
    let mut factorial = 1.0f64;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(6) {
        let two_j = 2 * (j + 1);
        factorial *= (two_j - 1) as f64 * if two_j >= 2 { (two_j) as f64 } else { 1.0 };
        let term = b / factorial * pochhammer * (-(s + (two_j as f64 - 1.0)) * loge).exp();
        acc += term;
        // extend the rising product s(s+1)…(s+2j)
        pochhammer *= (s + (two_j as f64 - 1.0)) * (s + two_j as f64);
    }
    acc
}

/// ζ(s) for Re(s) > 1 by Euler–Maclaurin.
pub fn zeta_em(s: Complex64) -> Complex64 {
    hurwitz_zeta_em(s, 1.0)
}

/// Dirichlet L(s, χ) = f^{−s} Σₐ χ(a) ζ_H(s, a/f).
pub fn dirichlet_l_em(s: Complex64, modulus: u32, values: &[Complex64]) -> Complex64 {
    let f = modulus as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 1..=modulus {
        let chi = values[(a - 1) as usize];
        if chi.norm() == 0.0 {
            continue;
        }
        acc += chi * hurwitz_zeta_em(s, a as f64 / f);
    }
    acc * (-s * Complex64::new(f, 0.0).ln()).exp()
}

/// Li_s(w) by direct series summation, |w| < 1.
pub fn polylog_series(s: Complex64, w: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut wn = Complex64::new(1.0, 0.0);
    for n in 1..100_000u32 {
        wn *= w;
        let term = wn * (-s * Complex64::new(n as f64, 0.0).ln()).exp();
        acc += term;
        if term.norm() < 1e-17 * acc.norm().max(1e-3) && n > 8 {
            break;
        }
    }
    acc
}

/// Double sum Σ_{n₁ > n₂ ≥ 1} n₁^{−a} n₂^{−b} with a first-order tail
/// correction (descending-convention multiple zeta value of depth 2).
pub fn mzv_double_sum(a: f64, b: f64, cutoff: usize) -> f64 {
    let mut inner_prefix = 0.0f64; // Σ_{m ≤ n−1} m^{−b}
    let mut total = 0.0f64;
    for n in 2..=cutoff {
        inner_prefix += ((n - 1) as f64).powf(-b);
        total += (n as f64).powf(-a) * inner_prefix;
    }
    // tail over n > cutoff: inner ≈ ζ(b) partial stays ~ constant = inner_prefix
    // (for b > 1) so the remainder is ≈ inner_full · cutoff^{1−a}/(a−1)
    let tail = inner_prefix * (cutoff as f64).powf(1.0 - a) / (a - 1.0);
    total + tail
}

/// Generalized Bernoulli number B_{n,χ} = f^{n−1} Σₐ χ(a) Bₙ(a/f) for
/// n ≤ 5, from the Bernoulli polynomials.
pub fn generalized_bernoulli(n: u32, modulus: u32, values: &[Complex64]) -> Complex64 {
    fn bernoulli_poly(n: u32, x: f64) -> f64 {
        match n {
            0 => 1.0,
            1 => x - 0.5,
            2 => x * x - x + 1.0 / 6.0,
            3 => x * (x * x - 1.5 * x + 0.5),
            4 => x * x * (x * x - 2.0 * x + 1.0) - 1.0 / 30.0,
            5 => x * (x * x * x * (x - 2.5) + (5.0 / 3.0) * x * x - 1.0 / 6.0),
            _ => unreachable!("generalized Bernoulli values are needed only to order 5"),
        }
    }
    let f = modulus as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 1..=modulus {
        acc += values[(a - 1) as usize] * bernoulli_poly(n, a as f64 / f);
    }
    acc * f.powi(n as i32 - 1)
}

/// Gaussian-integer ideal counts by lattice enumeration: the number of
/// ideals of Z[i] of norm n is #{(a,b) : a² + b² = n}/4.
pub fn gaussian_ideal_counts(max_norm: usize) -> Vec<i64> {
    let mut counts = vec![0i64; max_norm + 1];
    let r = (max_norm as f64).sqrt().ceil() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            let n = (a * a + b * b) as usize;
            if n >= 1 && n <= max_norm {
                counts[n] += 1;
            }
        }
    }
    for c in counts.iter_mut() {
        debug_assert!(*c % 4 == 0);
        *c /= 4;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use citer_core::Complex64;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_em_matches_classics() {
        let pi = std::f64::consts::PI;
        assert!((zeta_em(cx(2.0, 0.0)).re - pi * pi / 6.0).abs() < 1e-12);
        assert!((zeta_em(cx(4.0, 0.0)).re - pi.powi(4) / 90.0).abs() < 1e-12);
        assert!((zeta_em(cx(3.0, 0.0)).re - 1.2020569031595943).abs() < 1e-12);
        // reference: ζ(2+3i)
        let z = zeta_em(cx(2.0, 3.0));
        assert!(
            (z - cx(0.7980219851462757, -0.1137443080529385)).norm() < 1e-10,
            "{z}"
        );
    }

    #[test]
    fn hurwitz_em_half() {
        let pi = std::f64::consts::PI;
        assert!((hurwitz_zeta_em(cx(2.0, 0.0), 0.5).re - pi * pi / 2.0).abs() < 1e-12);
    }

    #[test]
    fn dirichlet_em_catalan() {
        let values = [cx(1.0, 0.0), cx(0.0, 0.0), cx(-1.0, 0.0), cx(0.0, 0.0)];
        let l2 = dirichlet_l_em(cx(2.0, 0.0), 4, &values);
        assert!((l2.re - CATALAN).abs() < 1e-13, "{l2}");
        // L(1, χ₄) = π/4 (Leibniz)
        let l1 = dirichlet_l_em(cx(1.0, 0.0), 4, &values);
        assert!((l1.re - std::f64::consts::PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn mzv_oracles() {
        // ζ(2,1) = ζ(3), ζ(2,2) = π⁴/120
        let pi = std::f64::consts::PI;
        assert!((mzv_double_sum(2.0, 1.0, 200_000) - 1.2020569031595943).abs() < 1e-6);
        assert!((mzv_double_sum(2.0, 2.0, 100_000) - pi.powi(4) / 120.0).abs() < 1e-8);
    }

    #[test]
    fn generalized_bernoulli_mod_four() {
        let values = [cx(1.0, 0.0), cx(0.0, 0.0), cx(-1.0, 0.0), cx(0.0, 0.0)];
        // B_{1,χ} = −1/2, B_{2,χ} = 0, B_{3,χ} = 3/2
        assert!((generalized_bernoulli(1, 4, &values).re + 0.5).abs() < 1e-13);
        assert!(generalized_bernoulli(2, 4, &values).norm() < 1e-13);
        assert!((generalized_bernoulli(3, 4, &values).re - 1.5).abs() < 1e-12);
    }

    #[test]
    fn gaussian_counts() {
        let c = gaussian_ideal_counts(25);
        assert_eq!(c[1], 1);
        assert_eq!(c[2], 1);
        assert_eq!(c[3], 0);
        assert_eq!(c[5], 2);
        assert_eq!(c[25], 3);
    }

    #[test]
    fn bernoulli_zeta_values() {
        assert_eq!(zeta_negative_integer(0), -0.5);
        assert!((zeta_negative_integer(1) + 1.0 / 12.0).abs() < 1e-16);
        assert_eq!(zeta_negative_integer(2), 0.0);
        assert!((zeta_negative_integer(3) - 1.0 / 120.0).abs() < 1e-16);
        assert!((zeta_negative_integer(5) + 1.0 / 252.0).abs() < 1e-16);
    }
}
