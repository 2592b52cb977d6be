//! Integer arithmetic helpers: gcd, Kronecker symbol, sieves, primitive
//! roots, fundamental discriminants.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Kronecker symbol (a|n) for arbitrary integer a and n ≥ 0.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut a = a;
    let mut n = n;
    let mut sign = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    // factor out twos of n
    let mut twos = 0u32;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a|2) = 1 if a ≡ ±1 (mod 8), −1 if a ≡ ±3 (mod 8)
        let r = ((a % 8) + 8) % 8;
        let s2 = if r == 1 || r == 7 { 1 } else { -1 };
        if twos % 2 == 1 {
            sign *= s2;
        }
    }
    // now n odd positive: Jacobi symbol with reciprocity
    a = ((a % n) + n) % n;
    while a != 0 {
        let mut t = 0u32;
        while a % 2 == 0 {
            a /= 2;
            t += 1;
        }
        if t % 2 == 1 {
            let r = n % 8;
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        let tmp = n % a;
        n = a;
        a = tmp;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

fn squarefree(mut m: u64) -> bool {
    let mut p = 2u64;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
        p += 1;
    }
    true
}

/// True when D is a fundamental discriminant of an imaginary quadratic field.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    let m = (-d) as u64;
    match ((d % 4) + 4) % 4 {
        1 => squarefree(m),
        0 => {
            let q = m / 4;
            let r = ((-(q as i64) % 4) + 4) % 4; // d/4 ≡ 2 or 3 mod 4
            (r == 2 || r == 3) && squarefree(q)
        }
        _ => false,
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// Smallest primitive root modulo a prime f.
pub fn primitive_root(f: u64) -> Result<u64> {
    if !is_prime(f) {
        return Err(Error::NotPrime(f));
    }
    if f == 2 {
        return Ok(1);
    }
    let phi = f - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            factors.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..f {
        for &q in &factors {
            if mod_pow(g, phi / q, f) == 1 {
                continue 'outer;
            }
        }
        return Ok(g);
    }
    unreachable!("every prime has a primitive root")
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Möbius function values μ(1..=cap) by a factoring sieve.
pub fn moebius_sieve(cap: usize) -> Vec<i8> {
    let mut mu = vec![1i8; cap + 1];
    let mut least = vec![0u32; cap + 1];
    let mut primes = Vec::new();
    if cap >= 1 {
        mu[0] = 0;
    }
    for i in 2..=cap {
        if least[i] == 0 {
            least[i] = i as u32;
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if p > least[i] as usize || ip > cap {
                break;
            }
            least[ip] = p as u32;
            mu[ip] = if i % p == 0 { 0 } else { -mu[i] };
        }
    }
    mu
}

/// Prime indicator for 0..=cap as a boolean sieve.
pub fn prime_sieve(cap: usize) -> Vec<bool> {
    let mut is_p = vec![true; cap + 1];
    is_p[0] = false;
    if cap >= 1 {
        is_p[1] = false;
    }
    let mut p = 2usize;
    while p * p <= cap {
        if is_p[p] {
            let mut q = p * p;
            while q <= cap {
                is_p[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    is_p
}

/// ν(n) = Σ_{d|n} (D|d): the ideal-count coefficient by trial division.
pub fn ideal_count(d: i64, n: u64) -> i64 {
    let mut total = 0i64;
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            total += kronecker(d, i as i64) as i64;
            let j = n / i;
            if j != i {
                total += kronecker(d, j as i64) as i64;
            }
        }
        i += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_matches_legendre_mod_5() {
        // quadratic residues mod 5: 1, 4
        let expect = [1, -1, -1, 1, 0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(kronecker((i + 1) as i64, 5), e);
        }
    }

    #[test]
    fn kronecker_minus_four() {
        // (−4|n) = χ₋₄(n): 1, 0, −1, 0 pattern
        let pattern = [1, 0, -1, 0];
        for n in 1..=40i64 {
            assert_eq!(kronecker(-4, n), pattern[((n - 1) % 4) as usize], "n={n}");
        }
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3i64, -4, -7, -8, -11, -15, -20, -163] {
            assert!(is_fundamental_discriminant(d), "d={d}");
        }
        for d in [-1i64, -5, -9, -12, -16, -25, 5, 0] {
            assert!(!is_fundamental_discriminant(d), "d={d}");
        }
    }

    #[test]
    fn moebius_values() {
        let mu = moebius_sieve(30);
        assert_eq!(mu[1], 1);
        assert_eq!(mu[4], 0);
        assert_eq!(mu[6], 1);
        assert_eq!(mu[30], -1);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert_eq!(primitive_root(5).unwrap(), 2);
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert!(primitive_root(8).is_err());
    }

    #[test]
    fn ideal_counts_gaussian() {
        // Q(i): ν(1)=1, ν(2)=1, ν(3)=0, ν(5)=2
        assert_eq!(ideal_count(-4, 1), 1);
        assert_eq!(ideal_count(-4, 2), 1);
        assert_eq!(ideal_count(-4, 3), 0);
        assert_eq!(ideal_count(-4, 5), 2);
        assert_eq!(ideal_count(-4, 25), 3);
    }
}
