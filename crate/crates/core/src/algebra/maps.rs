//! Self-maps of a group stored as index tables.

use super::field::FiniteField;
use super::group::{sample_pairs, Element, Group, GroupSpec};
use super::matrix::{self, Mat2};
use crate::error::{Error, Result};

/// Compositions longer than this are treated as runaway and rejected.
pub const MAP_ORDER_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Automorphism,
    Inversion,
    Composite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    description: String,
    kind: MapKind,
    table: Vec<usize>,
    order: usize,
}

impl GroupMap {
    /// Wraps a table after checking that it is a bijection of finite order.
    pub fn from_table(
        description: impl Into<String>,
        kind: MapKind,
        table: Vec<usize>,
    ) -> Result<Self> {
        let n = table.len();
        let mut seen = vec![false; n];
        for &t in &table {
            if t >= n || seen[t] {
                return Err(Error::Precondition("map is not a bijection".into()));
            }
            seen[t] = true;
        }
        let order = table_order(&table).ok_or_else(|| {
            Error::Precondition(format!("map order exceeds the cap {MAP_ORDER_CAP}"))
        })?;
        Ok(GroupMap {
            description: description.into(),
            kind,
            table,
            order,
        })
    }

    /// Builds the table by applying `f` to every element; images must lie in the group.
    pub fn from_fn(
        group: &Group,
        description: impl Into<String>,
        kind: MapKind,
        f: impl Fn(&Element) -> Element,
    ) -> Result<Self> {
        let description = description.into();
        let table = group
            .elements()
            .iter()
            .map(|e| {
                let img = f(e);
                group.index_of(&img).ok_or_else(|| {
                    Error::Precondition(format!(
                        "{description} sends {} outside {}",
                        group.format_element(e),
                        group.label()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let map = GroupMap::from_table(description, kind, table)?;
        if kind == MapKind::Automorphism {
            map.check_homomorphism(group)?;
        }
        Ok(map)
    }

    pub fn identity(group: &Group) -> Self {
        GroupMap {
            description: "id".into(),
            kind: MapKind::Automorphism,
            table: (0..group.order()).collect(),
            order: 1,
        }
    }

    pub fn inversion(group: &Group) -> Self {
        let table: Vec<usize> = (0..group.order()).map(|i| group.inv(i)).collect();
        let order = table_order(&table).expect("inversion has order at most 2");
        GroupMap {
            description: "inv".into(),
            kind: MapKind::Inversion,
            table,
            order,
        }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &GroupMap) -> Result<GroupMap> {
        if self.len() != other.len() {
            return Err(Error::Precondition("maps over different groups".into()));
        }
        let table = other.table.iter().map(|&i| self.table[i]).collect();
        let kind = if self.kind == MapKind::Automorphism && other.kind == MapKind::Automorphism {
            MapKind::Automorphism
        } else {
            MapKind::Composite
        };
        GroupMap::from_table(
            format!("{}*{}", self.description, other.description),
            kind,
            table,
        )
    }

    pub fn fixed_points(&self) -> usize {
        self.table
            .iter()
            .enumerate()
            .filter(|(i, &t)| *i == t)
            .count()
    }

    pub fn commutes_with(&self, other: &GroupMap) -> bool {
        (0..self.len()).all(|i| self.table[other.table[i]] == other.table[self.table[i]])
    }

    /// `m(xy) = m(x) m(y)`, exhaustively for `|G| <= 500`, else on 1000 sampled pairs.
    pub fn check_homomorphism(&self, group: &Group) -> Result<()> {
        let n = group.order();
        if self.len() != n {
            return Err(Error::Precondition("map and group sizes differ".into()));
        }
        let check = |x: usize, y: usize| -> Result<()> {
            if self.table[group.mul(x, y)] != group.mul(self.table[x], self.table[y]) {
                return Err(Error::Precondition(format!(
                    "{} is not multiplicative at ({}, {})",
                    self.description,
                    group.element_label(x),
                    group.element_label(y)
                )));
            }
            Ok(())
        };
        if n <= 500 {
            for x in 0..n {
                for y in 0..n {
                    check(x, y)?;
                }
            }
        } else {
            for (x, y) in sample_pairs(n, 1000, 0xa070) {
                check(x, y)?;
            }
        }
        Ok(())
    }
}

fn table_order(table: &[usize]) -> Option<usize> {
    let mut cur: Vec<usize> = table.to_vec();
    for m in 1..=MAP_ORDER_CAP {
        if cur.iter().enumerate().all(|(i, &t)| i == t) {
            return Some(m);
        }
        cur = cur.iter().map(|&i| table[i]).collect();
    }
    None
}

/// `x -> h x h^{-1}`.
pub fn inner_automorphism(group: &Group, h: usize) -> Result<GroupMap> {
    if h >= group.order() {
        return Err(Error::NotInGroup(format!("index {h} in {}", group.label())));
    }
    let table = (0..group.order()).map(|x| group.conjugate(h, x)).collect();
    GroupMap::from_table(
        format!("conj:{}", group.element_label(h)),
        MapKind::Automorphism,
        table,
    )
}

/// Conjugation by an element of the ambient group (e.g. an odd permutation acting on `A_n`).
pub fn ambient_conjugation(group: &Group, g: &Element) -> Result<GroupMap> {
    let g_inv = group.inv_elem(g);
    GroupMap::from_fn(
        group,
        format!("conj:{}", group.format_element(g)),
        MapKind::Automorphism,
        |x| group.mul_elem(&group.mul_elem(g, x), &g_inv),
    )
}

/// `x -> x^{p^k}` on the additive group of `F_{p^{2k}}`.
pub fn frobenius_automorphism(field: &FiniteField) -> Result<GroupMap> {
    let deg = field.degree();
    if !deg.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "field degree {deg} is odd; no order-two Frobenius"
        )));
    }
    let table = (0..field.order())
        .map(|x| field.frobenius_power(x, deg / 2) as usize)
        .collect();
    GroupMap::from_table(format!("frob^{}", deg / 2), MapKind::Automorphism, table)
}

/// `x -> M x M^{-1}` on a 2x2 matrix group.
pub fn matrix_conjugation_automorphism(group: &Group, m: &Mat2) -> Result<GroupMap> {
    let (field, projective) = match group.spec() {
        GroupSpec::Matrix { kind, .. } => (group.field().unwrap(), kind.is_projective()),
        _ => {
            return Err(Error::Precondition(format!(
                "{} is not a matrix group",
                group.label()
            )))
        }
    };
    let m_inv = matrix::inverse(field, m)?;
    GroupMap::from_fn(
        group,
        format!("mat:{}", matrix::to_string(field, m)),
        MapKind::Automorphism,
        |x| match x {
            Element::Mat(a) => {
                let c = matrix::mul(field, &matrix::mul(field, m, a), &m_inv);
                Element::Mat(if projective {
                    matrix::projective_canonical(field, &c)
                } else {
                    c
                })
            }
            _ => unreachable!("matrix group elements are matrices"),
        },
    )
}

/// `x -> -x` on an abelian group, recorded as an automorphism.
pub fn negation(group: &Group) -> Result<GroupMap> {
    if !group.is_abelian() {
        return Err(Error::Precondition(format!(
            "{} is not abelian; inversion is not an automorphism",
            group.label()
        )));
    }
    let table = (0..group.order()).map(|i| group.inv(i)).collect();
    GroupMap::from_table("neg", MapKind::Automorphism, table)
}

/// The map `g -> g_ij` relating variant `i` to variant `j` (indices 1..4:
/// Cayley, Cayley sum, twisted Cayley, twisted Cayley sum).
pub fn gij_map(group: &Group, i: usize, j: usize, sigma: &GroupMap) -> Result<GroupMap> {
    if !(1..=4).contains(&i) || !(1..=4).contains(&j) {
        return Err(Error::InvalidParameter(format!(
            "variant indices must lie in 1..4, got ({i}, {j})"
        )));
    }
    if sigma.order() > 2 || sigma.kind() != MapKind::Automorphism {
        return Err(Error::Precondition(format!(
            "sigma must be an automorphism of order at most 2 (order {})",
            sigma.order()
        )));
    }
    if sigma.len() != group.order() {
        return Err(Error::Precondition(
            "sigma is defined on a different group".into(),
        ));
    }
    let inv = GroupMap::inversion(group);
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    let map = match (a, b) {
        _ if a == b => GroupMap::identity(group),
        (1, 2) | (3, 4) => inv,
        (1, 3) | (2, 4) => sigma.clone(),
        (1, 4) | (2, 3) => inv.compose(sigma)?,
        _ => unreachable!(),
    };
    let table = map.table;
    let order = table_order(&table).unwrap();
    if order > 2 {
        return Err(Error::Internal(format!("g_{i}{j} has order {order}")));
    }
    Ok(GroupMap {
        description: format!("g{i}{j}[{}]", sigma.description()),
        kind: MapKind::Composite,
        table,
        order,
    })
}

pub fn count_fixed_points(map: &GroupMap) -> usize {
    map.fixed_points()
}
