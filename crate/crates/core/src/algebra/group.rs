//! Enumerated finite groups with canonical element encodings.
//!
//! Elements are addressed by their index in the enumeration order; every
//! graph built over a group uses that order for its vertices.

use super::field::{parse_poly, FiniteField};
use super::matrix::{self, Mat2};
use super::numtheory::prime_power;
use super::perm::{Perm, MAX_DEGREE};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;

/// Largest symmetric or alternating degree accepted for full enumeration.
pub const MAX_PERM_DEGREE: usize = 10;
/// Largest field order accepted for the 2x2 matrix groups.
pub const MAX_MATRIX_Q: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    SL2,
    GL2,
    PSL2,
    PGL2,
}

impl MatrixKind {
    fn tag(self) -> &'static str {
        match self {
            MatrixKind::SL2 => "sl2",
            MatrixKind::GL2 => "gl2",
            MatrixKind::PSL2 => "psl2",
            MatrixKind::PGL2 => "pgl2",
        }
    }

    pub fn is_projective(self) -> bool {
        matches!(self, MatrixKind::PSL2 | MatrixKind::PGL2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    /// `Z^2 / n Z^2`.
    ProductCyclic(u32),
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of order `2n`.
    Dihedral(u32),
    AdditiveField {
        q: u32,
        modulus: Option<Vec<u32>>,
    },
    Matrix {
        kind: MatrixKind,
        q: u32,
        modulus: Option<Vec<u32>>,
    },
}

impl GroupSpec {
    /// Parses strings such as `cyclic:4`, `sym:5`, `pgl2:13`, `addfield:9:t^2+1`, `z2:7`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let mut parts = s.splitn(3, ':');
        let tag = parts.next().unwrap_or_default();
        let arg = parts
            .next()
            .ok_or_else(|| Error::Parse(format!("group spec '{s}' lacks a parameter")))?;
        let extra = parts.next();
        let num = |a: &str| -> Result<u32> {
            a.parse::<u32>()
                .map_err(|_| Error::Parse(format!("'{a}' is not a non-negative integer")))
        };
        let modulus = |q: u32| -> Result<Option<Vec<u32>>> {
            match extra {
                None => Ok(None),
                Some(m) => {
                    let (p, _) = prime_power(q as u64).ok_or_else(|| {
                        Error::InvalidParameter(format!("{q} is not a prime power"))
                    })?;
                    Ok(Some(parse_poly(m, p as u32)?))
                }
            }
        };
        let no_extra = |spec: GroupSpec| -> Result<GroupSpec> {
            match extra {
                Some(e) => Err(Error::Parse(format!("unexpected suffix '{e}' in '{s}'"))),
                None => Ok(spec),
            }
        };
        match tag {
            "cyclic" => no_extra(GroupSpec::Cyclic(num(arg)?)),
            "z2" => no_extra(GroupSpec::ProductCyclic(num(arg)?)),
            "sym" => no_extra(GroupSpec::Symmetric(num(arg)? as usize)),
            "alt" => no_extra(GroupSpec::Alternating(num(arg)? as usize)),
            "dihedral" => no_extra(GroupSpec::Dihedral(num(arg)?)),
            "addfield" => {
                let q = num(arg)?;
                Ok(GroupSpec::AdditiveField {
                    q,
                    modulus: modulus(q)?,
                })
            }
            "sl2" | "gl2" | "psl2" | "pgl2" => {
                let kind = match tag {
                    "sl2" => MatrixKind::SL2,
                    "gl2" => MatrixKind::GL2,
                    "psl2" => MatrixKind::PSL2,
                    _ => MatrixKind::PGL2,
                };
                let q = num(arg)?;
                Ok(GroupSpec::Matrix {
                    kind,
                    q,
                    modulus: modulus(q)?,
                })
            }
            other => Err(Error::Parse(format!("unknown group tag '{other}'"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let with_mod = |f: &mut fmt::Formatter<'_>, m: &Option<Vec<u32>>| match m {
            Some(m) => write!(f, ":{}", super::field::poly_to_string(m)),
            None => Ok(()),
        };
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::ProductCyclic(n) => write!(f, "z2:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alt:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::AdditiveField { q, modulus } => {
                write!(f, "addfield:{q}")?;
                with_mod(f, modulus)
            }
            GroupSpec::Matrix { kind, q, modulus } => {
                write!(f, "{}:{q}", kind.tag())?;
                with_mod(f, modulus)
            }
        }
    }
}

/// A group element in its canonical fixed-size encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Residue mod n, or a field element code for additive field groups.
    Residue(u32),
    /// `(a, b)` in `Z^2/nZ^2`, or `(rotation, reflection bit)` in a dihedral group.
    Pair(u32, u32),
    Perm(Perm),
    /// Row-major 2x2 matrix of field codes; projective classes are canonicalized.
    Mat(Mat2),
}

#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    field: Option<FiniteField>,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    inverses: Vec<usize>,
    identity: usize,
}

pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    Group::build(spec)
}

impl Group {
    pub fn build(spec: &GroupSpec) -> Result<Group> {
        let (field, elements) = enumerate(spec)?;
        let index: HashMap<Element, usize> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::Internal(format!("duplicate elements in {spec}")));
        }
        let mut g = Group {
            spec: spec.clone(),
            field,
            elements,
            index,
            inverses: Vec::new(),
            identity: 0,
        };
        let id = g.identity_element();
        g.identity = g.index[&id];
        g.inverses = (0..g.order())
            .map(|i| {
                let inv = g.inv_elem(&g.elements[i]);
                g.index[&inv]
            })
            .collect();
        Ok(g)
    }

    pub fn parse(s: &str) -> Result<Group> {
        Group::build(&GroupSpec::parse(s)?)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Canonical spec string, also used to tag connection sets and graphs.
    pub fn label(&self) -> String {
        self.spec.to_string()
    }

    pub fn field(&self) -> Option<&FiniteField> {
        self.field.as_ref()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Element {
        self.elements[i]
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn require_index(&self, e: &Element) -> Result<usize> {
        self.index_of(e)
            .ok_or_else(|| Error::NotInGroup(format!("{e:?} in {}", self.label())))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.mul_elem(&self.elements[a], &self.elements[b]);
        self.index[&prod]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x h x^{-1}`.
    pub fn conjugate(&self, x: usize, h: usize) -> usize {
        self.mul(self.mul(x, h), self.inv(x))
    }

    pub fn is_abelian(&self) -> bool {
        match self.spec {
            GroupSpec::Cyclic(_)
            | GroupSpec::ProductCyclic(_)
            | GroupSpec::AdditiveField { .. } => true,
            GroupSpec::Symmetric(n) => n <= 2,
            GroupSpec::Alternating(n) => n <= 3,
            GroupSpec::Dihedral(n) => n <= 2,
            GroupSpec::Matrix { .. } => false,
        }
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn conjugacy_class(&self, h: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.order()).map(|x| self.conjugate(x, h)).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    /// All classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for h in 0..self.order() {
            if seen[h] {
                continue;
            }
            let class = self.conjugacy_class(h);
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn element_label(&self, i: usize) -> String {
        self.format_element(&self.elements[i])
    }

    pub fn format_element(&self, e: &Element) -> String {
        match (e, &self.spec) {
            (Element::Residue(r), GroupSpec::AdditiveField { .. }) => {
                self.field.as_ref().unwrap().element_to_string(*r)
            }
            (Element::Residue(r), _) => r.to_string(),
            (Element::Pair(r, s), GroupSpec::Dihedral(_)) => {
                if *s == 1 {
                    format!("r{r}s")
                } else {
                    format!("r{r}")
                }
            }
            (Element::Pair(a, b), _) => format!("({a},{b})"),
            (Element::Perm(p), _) => p.to_string(),
            (Element::Mat(m), _) => matrix::to_string(self.field.as_ref().unwrap(), m),
        }
    }

    /// Parses an element of the ambient group: `S_n` for alternating groups,
    /// `PGL_2` for `PSL_2`, `GL_2` for `SL_2`. The result may lie outside `self`.
    pub fn parse_ambient(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        match &self.spec {
            GroupSpec::Cyclic(n) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("'{s}' is not an integer")))?;
                Ok(Element::Residue(v.rem_euclid(*n as i64) as u32))
            }
            GroupSpec::ProductCyclic(n) => {
                let inner = s.trim_start_matches('(').trim_end_matches(')');
                let parts: Vec<i64> = inner
                    .split(',')
                    .map(|t| t.trim().parse::<i64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("bad pair '{s}'")))?;
                if parts.len() != 2 {
                    return Err(Error::Parse(format!("bad pair '{s}'")));
                }
                let m = *n as i64;
                Ok(Element::Pair(
                    parts[0].rem_euclid(m) as u32,
                    parts[1].rem_euclid(m) as u32,
                ))
            }
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => {
                Ok(Element::Perm(Perm::parse(*n, s)?))
            }
            GroupSpec::Dihedral(n) => {
                let body = s
                    .strip_prefix('r')
                    .ok_or_else(|| Error::Parse(format!("bad dihedral element '{s}'")))?;
                let (num, refl) = match body.strip_suffix('s') {
                    Some(b) => (b, 1),
                    None => (body, 0),
                };
                let r: i64 = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dihedral element '{s}'")))?;
                Ok(Element::Pair(r.rem_euclid(*n as i64) as u32, refl))
            }
            GroupSpec::AdditiveField { .. } => Ok(Element::Residue(
                self.field.as_ref().unwrap().parse_element(s)?,
            )),
            GroupSpec::Matrix { kind, .. } => {
                let f = self.field.as_ref().unwrap();
                let m = matrix::parse(f, s)?;
                if matrix::det(f, &m) == 0 {
                    return Err(Error::Precondition(format!("matrix {s} is singular")));
                }
                Ok(Element::Mat(if kind.is_projective() {
                    matrix::projective_canonical(f, &m)
                } else {
                    m
                }))
            }
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let e = self.parse_ambient(s)?;
        self.index_of(&e)
            .ok_or_else(|| Error::NotInGroup(format!("{s} in {}", self.label())))
    }

    fn identity_element(&self) -> Element {
        match &self.spec {
            GroupSpec::Cyclic(_) | GroupSpec::AdditiveField { .. } => Element::Residue(0),
            GroupSpec::ProductCyclic(_) | GroupSpec::Dihedral(_) => Element::Pair(0, 0),
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => {
                Element::Perm(Perm::identity(*n))
            }
            GroupSpec::Matrix { .. } => Element::Mat(matrix::identity()),
        }
    }

    /// Product in the ambient group (see [`Group::parse_ambient`]).
    pub fn mul_elem(&self, a: &Element, b: &Element) -> Element {
        match (a, b, &self.spec) {
            (Element::Residue(x), Element::Residue(y), GroupSpec::Cyclic(n)) => {
                Element::Residue(((*x as u64 + *y as u64) % *n as u64) as u32)
            }
            (Element::Residue(x), Element::Residue(y), GroupSpec::AdditiveField { .. }) => {
                Element::Residue(self.field.as_ref().unwrap().add(*x, *y))
            }
            (Element::Pair(a1, b1), Element::Pair(a2, b2), GroupSpec::ProductCyclic(n)) => {
                Element::Pair((a1 + a2) % n, (b1 + b2) % n)
            }
            (Element::Pair(r1, s1), Element::Pair(r2, s2), GroupSpec::Dihedral(n)) => {
                let r2 = if *s1 == 1 { (n - r2) % n } else { *r2 };
                Element::Pair((r1 + r2) % n, s1 ^ s2)
            }
            (Element::Perm(x), Element::Perm(y), _) => Element::Perm(x.compose(y)),
            (Element::Mat(x), Element::Mat(y), GroupSpec::Matrix { kind, .. }) => {
                let f = self.field.as_ref().unwrap();
                let prod = matrix::mul(f, x, y);
                Element::Mat(if kind.is_projective() {
                    matrix::projective_canonical(f, &prod)
                } else {
                    prod
                })
            }
            _ => panic!("mismatched element encodings for {}", self.spec),
        }
    }

    pub fn inv_elem(&self, a: &Element) -> Element {
        match (a, &self.spec) {
            (Element::Residue(x), GroupSpec::Cyclic(n)) => Element::Residue((n - x % n) % n),
            (Element::Residue(x), GroupSpec::AdditiveField { .. }) => {
                Element::Residue(self.field.as_ref().unwrap().neg(*x))
            }
            (Element::Pair(a, b), GroupSpec::ProductCyclic(n)) => {
                Element::Pair((n - a) % n, (n - b) % n)
            }
            (Element::Pair(r, s), GroupSpec::Dihedral(n)) => {
                if *s == 1 {
                    Element::Pair(*r, 1)
                } else {
                    Element::Pair((n - r) % n, 0)
                }
            }
            (Element::Perm(p), _) => Element::Perm(p.inverse()),
            (Element::Mat(m), GroupSpec::Matrix { kind, .. }) => {
                let f = self.field.as_ref().unwrap();
                let inv = matrix::inverse(f, m).expect("group elements are invertible");
                Element::Mat(if kind.is_projective() {
                    matrix::projective_canonical(f, &inv)
                } else {
                    inv
                })
            }
            _ => panic!("mismatched element encoding for {}", self.spec),
        }
    }

    /// Group axioms, exhaustively for `|G| <= 500` and on 1000 random triples otherwise.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        let e = self.identity;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Internal(format!(
                    "associativity fails at ({}, {}, {})",
                    self.element_label(a),
                    self.element_label(b),
                    self.element_label(c)
                )));
            }
            Ok(())
        };
        for a in 0..n {
            if self.mul(a, e) != a || self.mul(e, a) != a || self.mul(a, self.inv(a)) != e {
                return Err(Error::Internal(format!(
                    "identity or inverse law fails at {}",
                    self.element_label(a)
                )));
            }
        }
        if n <= 500 {
            let table: Vec<usize> = (0..n * n).map(|ab| self.mul(ab / n, ab % n)).collect();
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a * n + b];
                    for c in 0..n {
                        if table[ab * n + c] != table[a * n + table[b * n + c]] {
                            check(a, b, c)?;
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1000 {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }
}

fn enumerate(spec: &GroupSpec) -> Result<(Option<FiniteField>, Vec<Element>)> {
    match spec {
        GroupSpec::Cyclic(n) | GroupSpec::ProductCyclic(n) | GroupSpec::Dihedral(n) if *n == 0 => {
            Err(Error::InvalidParameter(format!(
                "{spec}: n must be at least 1"
            )))
        }
        GroupSpec::Cyclic(n) => Ok((None, (0..*n).map(Element::Residue).collect())),
        GroupSpec::ProductCyclic(n) => Ok((
            None,
            (0..*n)
                .flat_map(|a| (0..*n).map(move |b| Element::Pair(a, b)))
                .collect(),
        )),
        GroupSpec::Dihedral(n) => Ok((
            None,
            (0..2)
                .flat_map(|s| (0..*n).map(move |r| Element::Pair(r, s)))
                .collect(),
        )),
        GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => {
            if *n == 0 || *n > MAX_PERM_DEGREE.min(MAX_DEGREE) {
                return Err(Error::InvalidParameter(format!(
                    "{spec}: degree must be in 1..={MAX_PERM_DEGREE}"
                )));
            }
            let even_only = matches!(spec, GroupSpec::Alternating(_));
            let mut out = Vec::new();
            let mut p = Some(Perm::identity(*n));
            while let Some(cur) = p {
                if !even_only || cur.is_even() {
                    out.push(Element::Perm(cur));
                }
                p = cur.next_lex();
            }
            Ok((None, out))
        }
        GroupSpec::AdditiveField { q, modulus } => {
            let field = make_field(*q, modulus.clone())?;
            Ok((Some(field), (0..*q).map(Element::Residue).collect()))
        }
        GroupSpec::Matrix { kind, q, modulus } => {
            if *q > MAX_MATRIX_Q {
                return Err(Error::InvalidParameter(format!(
                    "{spec}: field order above {MAX_MATRIX_Q} is not enumerated"
                )));
            }
            let field = make_field(*q, modulus.clone())?;
            if *kind == MatrixKind::PSL2 && field.characteristic() == 2 {
                return Err(Error::InvalidParameter(format!(
                    "{spec}: PSL2 in characteristic 2 coincides with SL2; use sl2"
                )));
            }
            let mut out = Vec::new();
            for a in 0..*q {
                for b in 0..*q {
                    for c in 0..*q {
                        for d in 0..*q {
                            let m = [a, b, c, d];
                            let det = matrix::det(&field, &m);
                            let keep = match kind {
                                MatrixKind::SL2 => det == 1,
                                MatrixKind::GL2 => det != 0,
                                MatrixKind::PGL2 => det != 0 && first_nonzero_is_one(&m),
                                MatrixKind::PSL2 => {
                                    det != 0 && first_nonzero_is_one(&m) && field.is_square(det)
                                }
                            };
                            if keep {
                                out.push(Element::Mat(m));
                            }
                        }
                    }
                }
            }
            Ok((Some(field), out))
        }
    }
}

fn first_nonzero_is_one(m: &Mat2) -> bool {
    m.iter().find(|&&x| x != 0) == Some(&1)
}

fn make_field(q: u32, modulus: Option<Vec<u32>>) -> Result<FiniteField> {
    let (p, k) = prime_power(q as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    FiniteField::new(p as u32, k, modulus)
}

/// Deterministic sample of index pairs used by the sampled checks.
pub(crate) fn sample_pairs(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Group {
        Group::parse(s).unwrap()
    }

    #[test]
    fn cyclic_four() {
        let z4 = g("cyclic:4");
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.element(z4.identity()), Element::Residue(0));
    }

    #[test]
    fn pgl2_13_order() {
        let q = 13usize;
        assert_eq!(g("pgl2:13").order(), q * (q * q - 1));
        assert_eq!(g("pgl2:13").order(), 2184);
    }

    #[test]
    fn psl2_orders() {
        for q in [3usize, 5, 7, 9, 11, 13] {
            let expect = q * (q * q - 1) / 2;
            assert_eq!(g(&format!("psl2:{q}")).order(), expect, "q = {q}");
        }
        assert!(Group::parse("psl2:4").is_err());
    }

    #[test]
    fn alternating_four() {
        let a4 = g("alt:4");
        assert_eq!(a4.order(), 12);
        assert!(a4
            .elements()
            .iter()
            .all(|e| matches!(e, Element::Perm(p) if p.is_even())));
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(
            Group::parse("cyclic:0"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Group::parse("pgl2:6"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Group::parse("addfield:9:t^2+2"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(Group::parse("foo:3"), Err(Error::Parse(_))));
        assert!(matches!(Group::parse("cyclic"), Err(Error::Parse(_))));
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "cyclic:4",
            "sym:5",
            "alt:5",
            "psl2:13",
            "pgl2:5",
            "addfield:9:t^2+1",
            "z2:7",
        ] {
            assert_eq!(GroupSpec::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn axioms_on_small_groups() {
        for s in [
            "cyclic:7",
            "z2:4",
            "sym:4",
            "alt:5",
            "dihedral:6",
            "addfield:9",
            "sl2:3",
            "gl2:3",
            "psl2:5",
            "pgl2:5",
        ] {
            g(s).check_axioms().unwrap();
        }
    }

    #[test]
    fn class_sizes_partition() {
        for s in ["sym:4", "sl2:3", "pgl2:5", "dihedral:5"] {
            let grp = g(s);
            let total: usize = grp.conjugacy_classes().iter().map(|c| c.len()).sum();
            assert_eq!(total, grp.order());
        }
    }

    #[test]
    fn conjugacy_class_examples() {
        let s4 = g("sym:4");
        assert_eq!(
            s4.conjugacy_class(s4.parse_element("(1,2)").unwrap()).len(),
            6
        );
        assert_eq!(s4.conjugacy_class(s4.identity()), vec![s4.identity()]);
        let sl = g("sl2:3");
        let u = sl.parse_element("[[1,0],[1,1]]").unwrap();
        assert_eq!(sl.conjugacy_class(u).len(), 4);
    }

    #[test]
    fn element_labels_parse_back() {
        for s in [
            "z2:3",
            "sym:4",
            "dihedral:4",
            "addfield:9",
            "pgl2:5",
            "sl2:3",
        ] {
            let grp = g(s);
            for i in 0..grp.order() {
                assert_eq!(grp.parse_element(&grp.element_label(i)).unwrap(), i, "{s}");
            }
        }
    }

    #[test]
    fn alternating_rejects_odd() {
        let a4 = g("alt:4");
        assert!(matches!(
            a4.parse_element("(1,2)"),
            Err(Error::NotInGroup(_))
        ));
    }
}
