//! Paley graphs and their sum and Frobenius-twisted variants on the additive group of `F_q`.

use crate::algebra::numtheory::prime_power;
use crate::algebra::{frobenius_automorphism, Group, GroupMap, GroupSpec};
use crate::error::{Error, Result};
use crate::graph::{build_variant, ConnectionMultiset, Variant, VariantGraph};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaleyVariant {
    Graph,
    Sum,
    TwistedGraph,
    TwistedSum,
}

impl PaleyVariant {
    pub const ALL: [PaleyVariant; 4] = [
        PaleyVariant::Graph,
        PaleyVariant::Sum,
        PaleyVariant::TwistedGraph,
        PaleyVariant::TwistedSum,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(PaleyVariant::Graph),
            "sum" => Ok(PaleyVariant::Sum),
            "twisted-graph" => Ok(PaleyVariant::TwistedGraph),
            "twisted-sum" => Ok(PaleyVariant::TwistedSum),
            _ => Err(Error::Parse(format!("unknown Paley variant '{s}'"))),
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            PaleyVariant::Graph => Variant::Cayley,
            PaleyVariant::Sum => Variant::CayleySum,
            PaleyVariant::TwistedGraph => Variant::TwistedCayley,
            PaleyVariant::TwistedSum => Variant::TwistedCayleySum,
        }
    }
}

impl fmt::Display for PaleyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaleyVariant::Graph => "graph",
            PaleyVariant::Sum => "sum",
            PaleyVariant::TwistedGraph => "twisted-graph",
            PaleyVariant::TwistedSum => "twisted-sum",
        })
    }
}

/// Additive group of `F_q`, the nonzero squares, and the order-two Frobenius when `q` is an even power.
pub fn paley_parts(q: u32) -> Result<(Group, ConnectionMultiset, Option<GroupMap>)> {
    let (_, k) = prime_power(q as u64)
        .ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    if q % 4 != 1 {
        return Err(Error::Precondition(format!("q = {q} is not 1 mod 4")));
    }
    let group = Group::build(&GroupSpec::AdditiveField { q, modulus: None })?;
    let field = group.field().unwrap();
    let squares: Vec<usize> = (1..q)
        .filter(|&a| field.is_square(a))
        .map(|a| a as usize)
        .collect();
    // additive group elements are indexed by their field code
    let set = ConnectionMultiset::new(&group, &squares)?;
    let frob = if k % 2 == 0 {
        Some(frobenius_automorphism(field)?)
    } else {
        None
    };
    Ok((group, set, frob))
}

pub fn paley(q: u32, variant: PaleyVariant) -> Result<VariantGraph> {
    let (group, set, frob) = paley_parts(q)?;
    let v = variant.variant();
    if v.is_twisted() && frob.is_none() {
        return Err(Error::Precondition(format!(
            "twisted Paley graphs need q an even prime power, got {q}"
        )));
    }
    let g = build_variant(&group, &set, v, frob.as_ref())?;
    Ok(g.with_family(format!("paley:q={q},variant={variant}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley13() {
        let g = paley(13, PaleyVariant::Graph).unwrap();
        assert_eq!(g.n(), 13);
        assert_eq!(g.adjacency().regular_degree(), Some(6));
        assert_eq!(g.adjacency().loop_vertices(), 0);
        assert!(g.is_undirected());
        // oracle: x ~ y iff y - x is a nonzero quadratic residue mod 13
        let qr: Vec<u32> = (1..13u32).map(|x| x * x % 13).collect();
        for x in 0..13u32 {
            for y in 0..13u32 {
                let expect = u32::from(qr.contains(&((y + 13 - x) % 13)));
                assert_eq!(g.adjacency().get(x as usize, y as usize), expect);
            }
        }
    }

    #[test]
    fn paley5_sum_loops() {
        let g = paley(5, PaleyVariant::Sum).unwrap();
        assert_eq!(g.adjacency().regular_degree(), Some(2));
        // loop at x iff 2x is a nonzero square mod 5, i.e. 2x in {1, 4}
        let expected: Vec<usize> = (0..5).filter(|x| [1, 4].contains(&(2 * x % 5))).collect();
        let got: Vec<usize> = (0..5).filter(|&x| g.adjacency().get(x, x) > 0).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn paley9_twisted() {
        for v in PaleyVariant::ALL {
            let g = paley(9, v).unwrap();
            assert_eq!(g.n(), 9);
            assert_eq!(g.adjacency().regular_degree(), Some(4));
            assert!(g.is_undirected(), "{v}");
        }
    }

    #[test]
    fn errors() {
        assert!(paley(7, PaleyVariant::Graph).is_err());
        assert!(paley(13, PaleyVariant::TwistedGraph).is_err());
        assert!(PaleyVariant::parse("twisted").is_err());
    }
}
