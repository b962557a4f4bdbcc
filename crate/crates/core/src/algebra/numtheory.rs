//! Integer helpers: primality, prime powers, modular powers and quadratic residues.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

/// Reduces a signed integer into `0..m`.
pub fn reduce(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Smallest positive `i` with `i^2 = -1 (mod q)`.
pub fn sqrt_minus_one(q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::Precondition(format!("{q} is not prime")));
    }
    if q % 4 != 1 {
        return Err(Error::Precondition(format!(
            "{q} is not 1 mod 4, so -1 has no square root"
        )));
    }
    (1..q)
        .find(|i| i * i % q == q - 1)
        .ok_or_else(|| Error::Internal(format!("no square root of -1 mod {q}")))
}

/// Euler's criterion, cross-checked against the explicit square set for `q <= 100`.
pub fn is_square_mod(a: i64, q: u64) -> Result<bool> {
    if !is_prime(q) {
        return Err(Error::Precondition(format!("{q} is not prime")));
    }
    let r = reduce(a, q);
    if r == 0 {
        return Err(Error::Precondition(format!("{q} divides {a}")));
    }
    let euler = if q == 2 {
        true
    } else {
        mod_pow(r, (q - 1) / 2, q) == 1
    };
    if q <= 100 {
        let explicit = (1..q).any(|x| x * x % q == r);
        if explicit != euler {
            return Err(Error::Internal(format!(
                "Euler criterion disagrees with the square set for {a} mod {q}"
            )));
        }
    }
    Ok(euler)
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Falling factorial `n (n-1) ... (n-k+1)`; zero when `k > n`.
pub fn falling_factorial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    ((n - k + 1) as u128..=n as u128).product()
}
