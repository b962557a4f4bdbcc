//! Conjugacy-class connection sets on `SL_2(F_q)` for `q = 3 mod 4`.

use crate::algebra::numtheory::prime_power;
use crate::algebra::{
    matrix::Mat2, matrix_conjugation_automorphism, Element, Group, GroupMap, GroupSpec, MatrixKind,
};
use crate::error::{Error, Result};
use crate::graph::{build_variant, ConnectionMultiset, Variant, VariantGraph};

#[derive(Clone, Debug)]
pub struct Sl2ClassData {
    pub q: u32,
    pub group: Group,
    /// Union of the classes of `[[1,0],[1,1]]` and `[[1,0],[-1,1]]`.
    pub set: ConnectionMultiset,
}

pub fn sl2_group(q: u32) -> Result<Group> {
    if prime_power(q as u64).is_none() {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    if q % 4 != 3 {
        return Err(Error::Precondition(format!("q = {q} is not 3 mod 4")));
    }
    Group::build(&GroupSpec::Matrix {
        kind: MatrixKind::SL2,
        q,
        modulus: None,
    })
}

/// The conjugation-closed set generated by the two unipotent lower-triangular elements.
pub fn sl2_class_set(group: &Group) -> Result<ConnectionMultiset> {
    let f = match group.spec() {
        GroupSpec::Matrix {
            kind: MatrixKind::SL2,
            ..
        } => group.field().unwrap(),
        _ => {
            return Err(Error::Precondition(format!(
                "{} is not SL_2",
                group.label()
            )))
        }
    };
    let minus_one = f.neg(1);
    let mut members: Vec<usize> = Vec::new();
    for m in [[1, 0, 1, 1], [1, 0, minus_one, 1]] {
        let idx = group.require_index(&Element::Mat(m))?;
        for c in group.conjugacy_class(idx) {
            if !members.contains(&c) {
                members.push(c);
            }
        }
    }
    ConnectionMultiset::new(group, &members)
}

/// Twist `choice` (1 or 2): conjugation by `antidiag(1,1)` or `antidiag(1,-1)`.
pub fn sl2_twist(group: &Group, choice: usize) -> Result<GroupMap> {
    let f = group
        .field()
        .ok_or_else(|| Error::Precondition(format!("{} is not a matrix group", group.label())))?;
    let m: Mat2 = match choice {
        1 => [0, 1, 1, 0],
        2 => [0, 1, f.neg(1), 0],
        _ => {
            return Err(Error::InvalidParameter(format!(
                "SL_2 twist {choice} outside 1..=2"
            )))
        }
    };
    matrix_conjugation_automorphism(group, &m)
}

impl Sl2ClassData {
    pub fn build(q: u32) -> Result<Self> {
        let group = sl2_group(q)?;
        let set = sl2_class_set(&group)?;
        Ok(Sl2ClassData { q, group, set })
    }

    pub fn twist(&self, choice: usize) -> Result<GroupMap> {
        let map = sl2_twist(&self.group, choice)?;
        if self.set.map_image(&map) != self.set {
            return Err(Error::Internal(format!(
                "twist {choice} moves the class set"
            )));
        }
        Ok(map)
    }

    /// The graph for `variant`, twisted by `twist` when the variant is twisted.
    pub fn graph(&self, variant: Variant, twist: Option<usize>) -> Result<VariantGraph> {
        let sigma = match (variant.is_twisted(), twist) {
            (true, Some(c)) => Some(self.twist(c)?),
            (true, None) => {
                return Err(Error::InvalidParameter(
                    "twisted SL_2 graph needs a twist".into(),
                ))
            }
            (false, _) => None,
        };
        let g = build_variant(&self.group, &self.set, variant, sigma.as_ref())?;
        let mut family = format!("sl2class:q={},variant={}", self.q, variant.tag());
        if let (true, Some(c)) = (variant.is_twisted(), twist) {
            family.push_str(&format!(",twist={c}"));
        }
        Ok(g.with_family(family))
    }
}
