//! The four edge rules over a group, plus the undirectedness tests and set closures.
//!
//! For a connection multiset `S` and an automorphism `sigma`, the adjacency matrix
//! counts `A[x, y] = #{s in S : y = rule(x, s)}` where `rule` is one of
//! `x s`, `x^{-1} s`, `sigma(x s)` or `sigma(x^{-1} s)`.

use super::adjacency::Adjacency;
use super::multiset::ConnectionMultiset;
use crate::algebra::{Group, GroupMap, MapKind};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Cayley,
    CayleySum,
    TwistedCayley,
    TwistedCayleySum,
    /// Graphs on a vertex set given by explicit maps (Gabber–Galil).
    Schreier,
}

impl Variant {
    pub const GROUP_VARIANTS: [Variant; 4] = [
        Variant::Cayley,
        Variant::CayleySum,
        Variant::TwistedCayley,
        Variant::TwistedCayleySum,
    ];

    /// 1-based index used by the pairing maps.
    pub fn index(self) -> Option<usize> {
        match self {
            Variant::Cayley => Some(1),
            Variant::CayleySum => Some(2),
            Variant::TwistedCayley => Some(3),
            Variant::TwistedCayleySum => Some(4),
            Variant::Schreier => None,
        }
    }

    pub fn from_index(i: usize) -> Result<Variant> {
        match i {
            1 => Ok(Variant::Cayley),
            2 => Ok(Variant::CayleySum),
            3 => Ok(Variant::TwistedCayley),
            4 => Ok(Variant::TwistedCayleySum),
            _ => Err(Error::InvalidParameter(format!(
                "variant index {i} outside 1..4"
            ))),
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(self, Variant::TwistedCayley | Variant::TwistedCayleySum)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Variant::Cayley => "cayley",
            Variant::CayleySum => "sum",
            Variant::TwistedCayley => "twisted",
            Variant::TwistedCayleySum => "twisted-sum",
            Variant::Schreier => "schreier",
        }
    }

    pub fn parse(s: &str) -> Result<Variant> {
        match s {
            "cayley" | "cay" | "1" => Ok(Variant::Cayley),
            "sum" | "2" => Ok(Variant::CayleySum),
            "twisted" | "tcay" | "3" => Ok(Variant::TwistedCayley),
            "twisted-sum" | "tsum" | "4" => Ok(Variant::TwistedCayleySum),
            "schreier" => Ok(Variant::Schreier),
            other => Err(Error::Parse(format!("unknown variant '{other}'"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantGraph {
    variant: Variant,
    family: String,
    sigma: Option<String>,
    degree: u32,
    adjacency: Adjacency,
    undirected: bool,
    vertex_labels: Vec<String>,
}

impl VariantGraph {
    /// Assembles a graph, checking regularity and computing the undirected flag.
    pub fn from_parts(
        variant: Variant,
        family: impl Into<String>,
        sigma: Option<String>,
        degree: u32,
        adjacency: Adjacency,
        vertex_labels: Vec<String>,
    ) -> Result<Self> {
        if vertex_labels.len() != adjacency.n() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                vertex_labels.len(),
                adjacency.n()
            )));
        }
        if let Some(x) = (0..adjacency.n()).find(|&x| adjacency.row_sum(x) != degree) {
            return Err(Error::Precondition(format!(
                "row {x} sums to {}, expected degree {degree}",
                adjacency.row_sum(x)
            )));
        }
        let undirected = adjacency.is_symmetric();
        Ok(VariantGraph {
            variant,
            family: family.into(),
            sigma,
            degree,
            adjacency,
            undirected,
            vertex_labels,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn sigma(&self) -> Option<&str> {
        self.sigma.as_deref()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn n(&self) -> usize {
        self.adjacency.n()
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn with_family(mut self, family: impl Into<String>) -> Self {
        self.family = family.into();
        self
    }

    pub fn require_undirected(&self) -> Result<()> {
        match self.adjacency.first_asymmetry() {
            None => Ok(()),
            Some((x, y)) => Err(Error::hypothesis(
                format!("graph {} is directed", self.family),
                format!("edge ({x},{y}) has no matching reverse"),
            )),
        }
    }
}

fn check_sigma(group: &Group, variant: Variant, sigma: Option<&GroupMap>) -> Result<()> {
    match (variant.is_twisted(), sigma) {
        (true, None) => Err(Error::Precondition(format!(
            "variant {variant} needs an automorphism sigma"
        ))),
        (_, Some(s)) if s.len() != group.order() => Err(Error::Precondition(
            "sigma is defined on a different group".into(),
        )),
        (true, Some(s)) if s.kind() != MapKind::Automorphism || s.order() > 2 => {
            Err(Error::Precondition(format!(
                "sigma must be an automorphism of order at most 2 (got order {})",
                s.order()
            )))
        }
        _ => Ok(()),
    }
}

/// Vertex `rule(x, s)` for the given variant.
pub fn edge_target(
    group: &Group,
    variant: Variant,
    sigma: Option<&GroupMap>,
    x: usize,
    s: usize,
) -> usize {
    match variant {
        Variant::Cayley => group.mul(x, s),
        Variant::CayleySum => group.mul(group.inv(x), s),
        Variant::TwistedCayley => sigma.expect("checked").apply(group.mul(x, s)),
        Variant::TwistedCayleySum => sigma.expect("checked").apply(group.mul(group.inv(x), s)),
        Variant::Schreier => panic!("Schreier graphs are not built from group rules"),
    }
}

/// Family string used to tag group-built graphs; mirrors the CLI grammar.
pub fn variant_family_string(
    group: &Group,
    s: &ConnectionMultiset,
    variant: Variant,
    sigma: Option<&GroupMap>,
) -> String {
    let mut out = format!(
        "{}/{}/{}",
        variant.tag(),
        group.label(),
        s.to_spec_string(group)
    );
    if let (true, Some(sg)) = (variant.is_twisted(), sigma) {
        out.push('/');
        out.push_str(sg.description());
    }
    out
}

pub fn build_variant(
    group: &Group,
    s: &ConnectionMultiset,
    variant: Variant,
    sigma: Option<&GroupMap>,
) -> Result<VariantGraph> {
    if variant == Variant::Schreier {
        return Err(Error::Precondition(
            "Schreier graphs are built by their own constructors".into(),
        ));
    }
    s.require_group(group)?;
    check_sigma(group, variant, sigma)?;
    let sigma = if variant.is_twisted() { sigma } else { None };
    let n = group.order();
    let support: Vec<(usize, u32)> = s.iter().collect();
    let targets: Vec<Vec<(usize, u32)>> = (0..n)
        .map(|x| {
            support
                .iter()
                .map(|&(e, m)| (edge_target(group, variant, sigma, x, e), m))
                .collect()
        })
        .collect();
    let adjacency = Adjacency::from_targets(&targets);
    let labels = (0..n).map(|i| group.element_label(i)).collect();
    VariantGraph::from_parts(
        variant,
        variant_family_string(group, s, variant, sigma),
        sigma.map(|m| m.description().to_string()),
        s.degree(),
        adjacency,
        labels,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedVerdict {
    pub undirected: bool,
    /// Verdict of the set-level criterion; `None` for the Cayley sum variant.
    pub closed_form: Option<bool>,
    /// A directed edge `(x, y)` with `A[x,y] > A[y,x]` when not undirected.
    pub witness: Option<(usize, usize)>,
}

pub fn check_undirected(
    group: &Group,
    s: &ConnectionMultiset,
    variant: Variant,
    sigma: Option<&GroupMap>,
) -> Result<UndirectedVerdict> {
    let graph = build_variant(group, s, variant, sigma)?;
    let witness = graph.adjacency().first_asymmetry();
    let operational = witness.is_none();
    let closed_form = match variant {
        Variant::Cayley => Some(s.inverse(group) == *s),
        Variant::TwistedCayley => {
            let sg = sigma.expect("checked by build_variant");
            Some(s.inverse(group).map_image(sg) == *s)
        }
        Variant::TwistedCayleySum => {
            let sg = sigma.expect("checked by build_variant");
            let sigma_s = s.map_image(sg);
            Some((0..group.order()).all(|g| sigma_s.image(|e| group.conjugate(g, e)) == *s))
        }
        Variant::CayleySum | Variant::Schreier => None,
    };
    if let Some(cf) = closed_form {
        if cf != operational {
            return Err(Error::Internal(format!(
                "closed-form undirectedness ({cf}) disagrees with A = A^T ({operational}) for {}",
                graph.family()
            )));
        }
    }
    Ok(UndirectedVerdict {
        undirected: operational,
        closed_form,
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// `S ∪ S^{-1}`.
    Inverse,
    /// `S ∪ sigma(S^{-1})` for the first map.
    SigmaInverse,
    /// Union of the images of `S` under every product of the maps.
    Orbit,
}

/// Closure of `s` as a set (multiplicities collapsed to 1).
pub fn closure_set(
    group: &Group,
    s: &ConnectionMultiset,
    maps: &[GroupMap],
    mode: ClosureMode,
) -> Result<ConnectionMultiset> {
    s.require_group(group)?;
    for m in maps {
        if m.len() != group.order() || m.order() > 2 {
            return Err(Error::Precondition(format!(
                "closure map {} must be an order-at-most-2 map on {}",
                m.description(),
                group.label()
            )));
        }
    }
    match mode {
        ClosureMode::Inverse => Ok(s.union_set(&s.inverse(group))),
        ClosureMode::SigmaInverse => {
            let sigma = maps
                .first()
                .ok_or_else(|| Error::Precondition("sigma-inverse closure needs one map".into()))?;
            Ok(s.union_set(&s.inverse(group).map_image(sigma)))
        }
        ClosureMode::Orbit => {
            for (a, ma) in maps.iter().enumerate() {
                for mb in &maps[a + 1..] {
                    if !ma.commutes_with(mb) {
                        return Err(Error::Precondition(format!(
                            "maps {} and {} do not commute",
                            ma.description(),
                            mb.description()
                        )));
                    }
                }
            }
            let mut out = s.as_set();
            for mask in 1u32..(1 << maps.len()) {
                let img = s.image(|e| {
                    maps.iter()
                        .enumerate()
                        .filter(|(t, _)| mask >> t & 1 == 1)
                        .fold(e, |acc, (_, m)| m.apply(acc))
                });
                out = out.union_set(&img);
            }
            Ok(out)
        }
    }
}
