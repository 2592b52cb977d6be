//! Dirichlet character tables.

use num_complex::Complex64;

use crate::arith::{gcd, is_prime, primitive_root};
use crate::error::{Error, Result};

/// A Dirichlet character mod f stored as the value table χ(1) … χ(f).
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub modulus: u32,
    pub values: Vec<Complex64>,
    pub primitive: bool,
}

impl CharacterTable {
    /// Build and validate a character from its value table.
    pub fn new(modulus: u32, values: Vec<Complex64>, primitive: bool) -> Result<Self> {
        if modulus == 0 || values.len() != modulus as usize {
            return Err(Error::InvalidCharacter(format!(
                "expected {} values, got {}",
                modulus,
                values.len()
            )));
        }
        let table = Self {
            modulus,
            values,
            primitive,
        };
        table.validate()?;
        Ok(table)
    }

    /// χ(n) by periodicity, for any n ≥ 0.
    pub fn value(&self, n: u64) -> Complex64 {
        let f = self.modulus as u64;
        let r = n % f;
        if r == 0 {
            self.values[(f - 1) as usize]
        } else {
            self.values[(r - 1) as usize]
        }
    }

    pub fn is_trivial(&self) -> bool {
        (1..=self.modulus as u64).all(|a| {
            let v = self.value(a);
            if gcd(a, self.modulus as u64) == 1 {
                (v - Complex64::new(1.0, 0.0)).norm() < 1e-12
            } else {
                v.norm() < 1e-12
            }
        })
    }

    fn validate(&self) -> Result<()> {
        let f = self.modulus as u64;
        let tol = 1e-10;
        for a in 1..=f {
            let v = self.value(a);
            if gcd(a, f) > 1 {
                if v.norm() > tol {
                    return Err(Error::InvalidCharacter(format!(
                        "χ({a}) must vanish (gcd({a},{f}) > 1)"
                    )));
                }
            } else if (v.norm() - 1.0).abs() > tol {
                return Err(Error::InvalidCharacter(format!(
                    "|χ({a})| must be 1 on units"
                )));
            }
        }
        for a in 1..=f {
            for b in a..=f {
                let lhs = self.value(a * b % f.max(1));
                let rhs = self.value(a) * self.value(b);
                if (lhs - rhs).norm() > tol {
                    return Err(Error::InvalidCharacter(format!(
                        "multiplicativity fails at ({a},{b})"
                    )));
                }
            }
        }
        if !self.is_trivial() {
            let s: Complex64 = (1..=f).map(|a| self.value(a)).sum();
            if s.norm() > tol * f as f64 {
                return Err(Error::InvalidCharacter(
                    "character values do not sum to zero".into(),
                ));
            }
        }
        Ok(())
    }

    /// Character mod prime f sending the smallest primitive root g to
    /// exp(2πi·index/(f−1)).
    pub fn from_prime_modulus(f: u64, index: u32) -> Result<Self> {
        if !is_prime(f) {
            return Err(Error::NotPrime(f));
        }
        let order = f - 1;
        if order == 0 || index as u64 % order == 0 {
            return Err(Error::TrivialCharacter);
        }
        let g = primitive_root(f)?;
        let mut values = vec![Complex64::new(0.0, 0.0); f as usize];
        // discrete logs: g^k runs over all units
        let mut power = 1u64;
        for k in 0..order {
            let angle = 2.0 * std::f64::consts::PI * (index as u64 % order) as f64 * k as f64
                / order as f64;
            let mut v = Complex64::from_polar(1.0, angle);
            // snap real characters to exact ±1
            if v.im.abs() < 1e-12 {
                v = Complex64::new(v.re.round(), 0.0);
            }
            values[(power - 1) as usize] = v;
            power = power * g % f;
        }
        Self::new(f as u32, values, true)
    }

    /// The quadratic (order-2) character mod prime f.
    pub fn legendre(f: u64) -> Result<Self> {
        if !is_prime(f) {
            return Err(Error::NotPrime(f));
        }
        if f == 2 {
            return Err(Error::TrivialCharacter);
        }
        Self::from_prime_modulus(f, ((f - 1) / 2) as u32)
    }

    /// The non-principal character mod 4 (1, 0, −1, 0).
    pub fn mod_four() -> Self {
        Self::new(
            4,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
            true,
        )
        .expect("hard-coded table is valid")
    }

    /// χ(−1) = −1?
    pub fn is_odd(&self) -> bool {
        (self.value(self.modulus as u64 - 1) + Complex64::new(1.0, 0.0)).norm() < 1e-9
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(v: Complex64) -> f64 {
        assert!(v.im.abs() < 1e-12);
        v.re
    }

    #[test]
    fn mod_three_order_two() {
        let chi = CharacterTable::from_prime_modulus(3, 1).unwrap();
        assert_eq!(re(chi.value(1)), 1.0);
        assert_eq!(re(chi.value(2)), -1.0);
        assert_eq!(re(chi.value(3)), 0.0);
        assert_eq!(re(chi.value(4)), 1.0);
    }

    #[test]
    fn mod_five_legendre() {
        let chi = CharacterTable::legendre(5).unwrap();
        let expect = [1.0, -1.0, -1.0, 1.0, 0.0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(re(chi.value(i as u64 + 1)), e, "χ({})", i + 1);
        }
    }

    #[test]
    fn mod_two_has_no_nontrivial_character() {
        assert!(matches!(
            CharacterTable::from_prime_modulus(2, 1),
            Err(Error::TrivialCharacter)
        ));
    }

    #[test]
    fn mod_four_table() {
        let chi = CharacterTable::mod_four();
        assert!(chi.is_odd());
        assert!(!chi.is_trivial());
        assert_eq!(re(chi.value(7)), -1.0);
    }

    #[test]
    fn complex_character_mod_five() {
        // order-4 character: χ(2) = i
        let chi = CharacterTable::from_prime_modulus(5, 1).unwrap();
        assert!((chi.value(2) - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((chi.value(4) + Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn invalid_table_is_rejected() {
        let bad = CharacterTable::new(
            4,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0), // must vanish at even arguments
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
            false,
        );
        assert!(bad.is_err());
    }
}
