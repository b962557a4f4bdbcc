//! 2x2 matrices over a finite field, stored row-major as field codes.

use super::field::FiniteField;
use crate::error::{Error, Result};

pub type Mat2 = [u32; 4];

pub fn identity() -> Mat2 {
    [1, 0, 0, 1]
}

pub fn mul(f: &FiniteField, a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |x: u32, y: u32, z: u32, w: u32| f.add(f.mul(x, y), f.mul(z, w));
    [
        e(a[0], b[0], a[1], b[2]),
        e(a[0], b[1], a[1], b[3]),
        e(a[2], b[0], a[3], b[2]),
        e(a[2], b[1], a[3], b[3]),
    ]
}

pub fn det(f: &FiniteField, a: &Mat2) -> u32 {
    f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]))
}

pub fn scale(f: &FiniteField, c: u32, a: &Mat2) -> Mat2 {
    [
        f.mul(c, a[0]),
        f.mul(c, a[1]),
        f.mul(c, a[2]),
        f.mul(c, a[3]),
    ]
}

pub fn adjugate(f: &FiniteField, a: &Mat2) -> Mat2 {
    [a[3], f.neg(a[1]), f.neg(a[2]), a[0]]
}

pub fn inverse(f: &FiniteField, a: &Mat2) -> Result<Mat2> {
    let d = det(f, a);
    if d == 0 {
        return Err(Error::Precondition("singular matrix".into()));
    }
    Ok(scale(f, f.inv(d)?, &adjugate(f, a)))
}

/// Scales the class so the first nonzero row-major entry equals 1.
pub fn projective_canonical(f: &FiniteField, a: &Mat2) -> Mat2 {
    match a.iter().find(|&&x| x != 0) {
        Some(&lead) => scale(f, f.inv(lead).expect("nonzero lead"), a),
        None => *a,
    }
}

pub fn to_string(f: &FiniteField, a: &Mat2) -> String {
    let s = |x: u32| f.element_to_string(x);
    format!("[[{},{}],[{},{}]]", s(a[0]), s(a[1]), s(a[2]), s(a[3]))
}

/// Parses `[[a,b],[c,d]]` or `a,b,c,d` with entries in field notation.
pub fn parse(f: &FiniteField, s: &str) -> Result<Mat2> {
    let flat: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']')
        .collect();
    let parts: Vec<&str> = flat.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!(
            "expected four matrix entries in '{s}'"
        )));
    }
    let mut m = [0u32; 4];
    for (slot, p) in m.iter_mut().zip(parts) {
        *slot = f.parse_element(p)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_canonical() {
        let f = FiniteField::new(5, 1, None).unwrap();
        let a = [2, 1, 3, 3];
        let ai = inverse(&f, &a).unwrap();
        assert_eq!(mul(&f, &a, &ai), identity());
        let c = projective_canonical(&f, &a);
        assert_eq!(c[0], 1);
        assert_eq!(projective_canonical(&f, &scale(&f, 3, &a)), c);
        assert!(inverse(&f, &[1, 2, 2, 4]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let f = FiniteField::new(3, 2, Some(vec![1, 0, 1])).unwrap();
        let m = parse(&f, "[[1,t],[2t+1,0]]").unwrap();
        assert_eq!(parse(&f, &to_string(&f, &m)).unwrap(), m);
    }
}
