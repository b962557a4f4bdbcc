//! Finite fields `F_{p^k}` as `F_p[t] / (m(t))`.
//!
//! An element is stored as its integer code `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_i` is the coefficient of `t^i`. Codes run over `0..q`, so the
//! additive group of the field enumerates in code order.

use super::numtheory::is_prime;
use crate::error::{Error, Result};

/// Fields up to this order get a precomputed multiplication table.
const TABLE_LIMIT: u32 = 1024;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients from `t^0` up to `t^k`.
    modulus: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    inv_table: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

/// Builds `F_{p^k}`. When `modulus` is `None` the lexicographically first monic
/// irreducible of degree `k` is used.
pub fn build_field(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<FiniteField> {
    FiniteField::new(p, k, modulus)
}

impl FiniteField {
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidParameter(
                "field degree must be at least 1".into(),
            ));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= u32::MAX as u64 / 2)
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} is too large")))?
            as u32;
        let modulus = match modulus {
            Some(m) => {
                let m = poly_normalize(m.into_iter().map(|c| c % p).collect());
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "modulus must be monic of degree {k}"
                    )));
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::InvalidParameter(format!(
                        "modulus {} is reducible over F_{p}",
                        poly_to_string(&m)
                    )));
                }
                m
            }
            None => first_irreducible(p, k),
        };
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            mul_table: None,
            inv_table: Vec::new(),
        };
        if k > 1 && q <= TABLE_LIMIT {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.mul_slow(a, b);
                }
            }
            field.mul_table = Some(table);
        }
        field.inv_table = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    field.pow(a, (q - 2) as u64)
                }
            })
            .collect();
        Ok(field)
    }

    /// The field of order `q` with the default modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, k) = super::numtheory::prime_power(q as u64)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        FiniteField::new(p as u32, k, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        poly_to_string(&self.modulus)
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut rest = a;
        for _ in 0..self.k {
            out.push(rest % self.p);
            rest /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        c.iter()
            .rev()
            .fold(0u32, |acc, &x| acc * self.p + (x % self.p))
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let c: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let c: Vec<u32> = self
            .coeffs(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        match &self.mul_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&self.coeffs(a), &self.coeffs(b), self.p);
        let r = poly_rem(&prod, &self.modulus, self.p);
        self.from_coeffs(&r)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1 % self.q.max(2);
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Precondition("zero has no inverse".into()));
        }
        Ok(self.inv_table[a as usize])
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.pow(a, ((self.q - 1) / 2) as u64) == 1
    }

    /// `x -> x^{p^e}`.
    pub fn frobenius_power(&self, a: u32, e: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(e))
    }

    pub fn element_to_string(&self, a: u32) -> String {
        if self.k == 1 {
            a.to_string()
        } else {
            poly_to_string(&poly_normalize(self.coeffs(a)))
        }
    }

    /// Parses either an integer code or a polynomial in `t`.
    pub fn parse_element(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            if self.k == 1 {
                return Ok(self.from_int(v));
            }
            if (0..self.q as i64).contains(&v) {
                return Ok(v as u32);
            }
            return Err(Error::Parse(format!("field code {v} out of range")));
        }
        let poly = parse_poly(s, self.p)?;
        if poly.len() > self.k as usize {
            let r = poly_rem(&poly, &self.modulus, self.p);
            return Ok(self.from_coeffs(&r));
        }
        Ok(self.from_coeffs(&poly))
    }
}

fn poly_normalize(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_normalize(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_normalize(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = (lead as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_normalize(r);
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut rest = code;
            for _ in 0..d {
                div.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            div.push(1);
            if poly_rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographic order on the coefficient list read from `t^{k-1}` down to `t^0`.
fn first_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(k);
    for code in 0..count {
        // digits of `code` give the coefficients from high to low degree
        let mut digits = Vec::with_capacity(k as usize);
        let mut rest = code;
        for _ in 0..k {
            digits.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        let mut m: Vec<u32> = digits; // m[i] is the coefficient of t^i
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

pub fn poly_to_string(a: &[u32]) -> String {
    let terms: Vec<String> = a
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Parses sums of terms like `2t^3`, `t`, `4` with `+` or `-` separators.
pub fn parse_poly(s: &str, p: u32) -> Result<Vec<u32>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut term = String::new();
    let mut sign = 1i64;
    let flush = |term: &str, sign: i64, coeffs: &mut Vec<i64>| -> Result<()> {
        if term.is_empty() {
            return Err(Error::Parse(format!("malformed polynomial '{s}'")));
        }
        let (c, e) = parse_term(term).ok_or_else(|| Error::Parse(format!("bad term '{term}'")))?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += sign * c;
        Ok(())
    };
    for (idx, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && idx > 0 && !term.ends_with('^') {
            flush(&term, sign, &mut coeffs)?;
            term.clear();
            sign = if ch == '-' { -1 } else { 1 };
        } else if ch == '-' && idx == 0 {
            sign = -1;
        } else {
            term.push(ch);
        }
    }
    flush(&term, sign, &mut coeffs)?;
    Ok(poly_normalize(
        coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i64) as u32)
            .collect(),
    ))
}

fn parse_term(t: &str) -> Option<(i64, usize)> {
    let t = t.replace('*', "");
    match t.find('t') {
        None => Some((t.parse().ok()?, 0)),
        Some(pos) => {
            let coef = if pos == 0 { 1 } else { t[..pos].parse().ok()? };
            let rest = &t[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse().ok()?
            };
            Some((coef, exp))
        }
    }
}
