//! Lattice theta series of binary quadratic forms.
//!
//! For a fundamental discriminant D < 0 the ideal-count generating function
//! Σ ν(n) e^{−nx} equals (Σ_Q θ_Q(x) − h)/w, summing over the h reduced
//! forms Q of discriminant D, where θ_Q(x) = Σ_{v∈Z²} e^{−x·Q(v)} and w is
//! the number of units. Small x is handled by the Poisson-dual expansion,
//! so the evaluation stays cheap and accurate on the whole half-line.

use crate::arith::is_fundamental_discriminant;
use crate::error::{Error, Result};

/// Binary quadratic form a·x² + b·xy + c·y² with b² − 4ac = D < 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// The form attached to the inverse Gram matrix, scaled by |D|/4:
    /// c·x² − b·xy + a·y² (again of discriminant D).
    fn dual(&self) -> QForm {
        QForm {
            a: self.c,
            b: -self.b,
            c: self.a,
        }
    }
}

/// Reduced forms of a fundamental discriminant D < 0
/// (|b| ≤ a ≤ c, with b ≥ 0 when |b| = a or a = c).
pub fn reduced_forms(d: i64) -> Result<Vec<QForm>> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::UnsupportedField(d));
    }
    let mut forms = Vec::new();
    let a_max = (((-d) as f64) / 3.0).sqrt() as i64 + 1;
    for a in 1..=a_max {
        for b in -a..=a {
            if (b * b - d) % (4 * a) != 0 {
                continue;
            }
            let c = (b * b - d) / (4 * a);
            if c < a {
                continue;
            }
            if (b < 0) && (b.abs() == a || a == c) {
                continue;
            }
            forms.push(QForm { a, b, c });
        }
    }
    Ok(forms)
}

/// Number of units in the order of discriminant D.
pub fn unit_count(d: i64) -> u32 {
    match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// Σ_{v∈Z²} e^{−x·Q(v)} by direct lattice summation.
fn theta_direct(q: &QForm, x: f64, log_cutoff: f64) -> f64 {
    // Q(v) ≥ λ_min |v|²; λ_min from the Gram matrix eigenvalues
    let tr = (q.a + q.c) as f64;
    let det = (-q.discriminant()) as f64 / 4.0;
    let lambda_min = 0.5 * (tr - (tr * tr - 4.0 * det).max(0.0).sqrt());
    let r2 = log_cutoff / (x * lambda_min);
    let r = r2.sqrt().ceil() as i64;
    let mut total = 0.0f64;
    for m in -r..=r {
        for n in -r..=r {
            let v = q.eval(m, n) as f64;
            if v * x <= log_cutoff {
                total += (-x * v).exp();
            }
        }
    }
    total
}

/// Σ_{v∈Z²} e^{−x·Q(v)}, switching to the Poisson dual for small x:
/// θ_Q(x) = (2π/(x√|D|)) · θ_{Q'}(4π²/(x|D|)).
pub fn theta_form(q: &QForm, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let abs_d = (-q.discriminant()) as f64;
    let switch = 2.0 * std::f64::consts::PI / abs_d.sqrt();
    if x >= switch {
        theta_direct(q, x, 45.0)
    } else {
        let dual_x = 4.0 * std::f64::consts::PI * std::f64::consts::PI / (x * abs_d);
        let factor = 2.0 * std::f64::consts::PI / (x * abs_d.sqrt());
        factor * theta_direct(&q.dual(), dual_x, 45.0)
    }
}

/// Theta-series representation of an ideal-count generating function.
#[derive(Debug, Clone)]
pub struct ThetaRep {
    pub discriminant: i64,
    pub forms: Vec<QForm>,
    pub unit_count: u32,
}

impl ThetaRep {
    pub fn new(d: i64) -> Result<Self> {
        let forms = reduced_forms(d)?;
        Ok(Self {
            discriminant: d,
            forms,
            unit_count: unit_count(d),
        })
    }

    pub fn class_number(&self) -> usize {
        self.forms.len()
    }

    /// Σ_{n≥1} ν(n) e^{−nx} for real x > 0.
    pub fn exp_sum(&self, x: f64) -> f64 {
        let total: f64 = self.forms.iter().map(|q| theta_form(q, x)).sum();
        (total - self.forms.len() as f64) / self.unit_count as f64
    }

    /// lim_{x→0} x·Σν(n)e^{−nx} = 2πh/(w√|D|), evaluated by Richardson
    /// extrapolation of x·exp_sum(x) at x and x/2 (the linear term cancels,
    /// the rest is beyond all orders).
    pub fn residue_limit(&self) -> f64 {
        let x = 0.05;
        let f1 = x * self.exp_sum(x);
        let f2 = 0.5 * x * self.exp_sum(0.5 * x);
        2.0 * f2 - f1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ideal_count;

    #[test]
    fn class_numbers() {
        assert_eq!(reduced_forms(-4).unwrap(), vec![QForm { a: 1, b: 0, c: 1 }]);
        assert_eq!(reduced_forms(-3).unwrap(), vec![QForm { a: 1, b: 1, c: 1 }]);
        assert_eq!(reduced_forms(-20).unwrap().len(), 2);
        assert_eq!(reduced_forms(-23).unwrap().len(), 3);
    }

    #[test]
    fn representation_counts_match_divisor_sums() {
        // Σ_Q r_Q(n) = w·ν(n) for several fundamental discriminants
        for d in [-3i64, -4, -7, -8, -15, -20] {
            let rep = ThetaRep::new(d).unwrap();
            let mut counts = vec![0i64; 31];
            let bound = 30i64;
            for q in &rep.forms {
                for m in -60..=60i64 {
                    for n in -60..=60i64 {
                        let v = q.eval(m, n);
                        if v >= 1 && v <= bound {
                            counts[v as usize] += 1;
                        }
                    }
                }
            }
            for n in 1..=bound {
                let expect = rep.unit_count as i64 * ideal_count(d, n as u64);
                assert_eq!(counts[n as usize], expect, "d={d}, n={n}");
            }
        }
    }

    #[test]
    fn dual_matches_direct_at_crossover() {
        for d in [-4i64, -3, -20] {
            let rep = ThetaRep::new(d).unwrap();
            for q in &rep.forms {
                let switch = 2.0 * std::f64::consts::PI / ((-d) as f64).sqrt();
                for &x in &[switch * 1.0001, switch * 0.9999, 1.5, 0.7] {
                    let direct = theta_direct(q, x, 60.0);
                    let via = theta_form(q, x);
                    assert!(
                        (direct - via).abs() < 1e-11 * direct.abs().max(1.0),
                        "d={d} x={x}: {direct} vs {via}"
                    );
                }
            }
        }
    }

    #[test]
    fn exp_sum_matches_partial_sums() {
        let rep = ThetaRep::new(-4).unwrap();
        let x = 0.31;
        let direct: f64 = (1..400)
            .map(|n| ideal_count(-4, n) as f64 * (-(n as f64) * x).exp())
            .sum();
        assert!((rep.exp_sum(x) - direct).abs() < 1e-12);
    }

    #[test]
    fn residue_limit_matches_class_number_formula() {
        // 2πh/(w√|D|)
        for (d, expect) in [
            (-4i64, std::f64::consts::PI / 4.0),
            (-3, std::f64::consts::PI / (3.0 * 3.0f64.sqrt())),
        ] {
            let rep = ThetaRep::new(d).unwrap();
            assert!((rep.residue_limit() - expect).abs() < 1e-12, "d={d}");
        }
    }

    #[test]
    fn non_fundamental_is_rejected() {
        assert!(ThetaRep::new(-12).is_err());
        assert!(ThetaRep::new(5).is_err());
    }
}
