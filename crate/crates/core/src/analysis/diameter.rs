use super::traversal::{bfs_diameter, connectivity_bipartite, Diameter};
use crate::algebra::Group;
use crate::error::{Error, Result};
use crate::graph::{ConnectionMultiset, VariantGraph};
use serde::Serialize;

fn connected_diameter(g: &VariantGraph) -> Result<u32> {
    g.require_undirected()?;
    let c = connectivity_bipartite(g.adjacency())?;
    if c.components != 1 {
        return Err(Error::hypothesis(
            format!("{} is disconnected", g.family()),
            format!("{} components", c.components),
        ));
    }
    match bfs_diameter(g.adjacency()) {
        Diameter::Finite(d) => Ok(d),
        Diameter::Unreachable => Err(Error::Internal(
            "connected graph with unreachable pair".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterRelation {
    pub families: [String; 2],
    pub diameters: [u32; 2],
    pub pass: bool,
}

/// `diam(X) <= 2 diam(Y)` and `diam(Y) <= 2 diam(X)`.
pub fn diameter_relation_check(x: &VariantGraph, y: &VariantGraph) -> Result<DiameterRelation> {
    let dx = connected_diameter(x)?;
    let dy = connected_diameter(y)?;
    Ok(DiameterRelation {
        families: [x.family().to_string(), y.family().to_string()],
        diameters: [dx, dy],
        pass: dx <= 2 * dy && dy <= 2 * dx,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbelianDiameterBound {
    pub family: String,
    pub group_order: usize,
    pub set_size: u32,
    /// `(|S| / 4e) |G|^{1/|S|} - |S|/2`.
    pub bound: f64,
    pub diameter: u32,
    /// The bound is positive, so the check says something.
    pub binding: bool,
    pub pass: bool,
}

pub fn abelian_bound_value(order: usize, set_size: u32) -> f64 {
    let k = set_size as f64;
    k / (4.0 * std::f64::consts::E) * (order as f64).powf(1.0 / k) - k / 2.0
}

pub fn abelian_diameter_lower_bound(
    group: &Group,
    s: &ConnectionMultiset,
    graph: &VariantGraph,
) -> Result<AbelianDiameterBound> {
    if !group.is_abelian() {
        return Err(Error::Precondition(format!(
            "{} is not abelian",
            group.label()
        )));
    }
    if !s.is_symmetric(group) {
        return Err(Error::hypothesis(
            "connection set is not symmetric",
            s.to_spec_string(group),
        ));
    }
    let diameter = connected_diameter(graph)?;
    let bound = abelian_bound_value(group.order(), s.degree());
    Ok(AbelianDiameterBound {
        family: graph.family().to_string(),
        group_order: group.order(),
        set_size: s.degree(),
        bound,
        diameter,
        binding: bound > 0.0,
        pass: diameter as f64 >= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inner_automorphism, negation};
    use crate::graph::{build_variant, Variant};

    #[test]
    fn relation_examples() {
        let z12 = Group::parse("cyclic:12").unwrap();
        let s = ConnectionMultiset::parse(&z12, "1;11").unwrap();
        let a = build_variant(&z12, &s, Variant::Cayley, None).unwrap();
        let b = build_variant(&z12, &s, Variant::CayleySum, None).unwrap();
        let r = diameter_relation_check(&a, &b).unwrap();
        assert!(r.pass);
        assert_eq!(r.diameters[0], 6);
        assert!(diameter_relation_check(&a, &a).unwrap().pass);

        let s4 = Group::parse("sym:4").unwrap();
        let t = ConnectionMultiset::parse(&s4, "(1,2);(1,3);(1,4);(2,3);(2,4);(3,4)").unwrap();
        let sigma = inner_automorphism(&s4, s4.parse_element("(1,2)").unwrap()).unwrap();
        let x = build_variant(&s4, &t, Variant::Cayley, None).unwrap();
        let y = build_variant(&s4, &t, Variant::TwistedCayley, Some(&sigma)).unwrap();
        assert!(diameter_relation_check(&x, &y).unwrap().pass);
    }

    #[test]
    fn abelian_bound_examples() {
        let z64 = Group::parse("cyclic:64").unwrap();
        let s = ConnectionMultiset::parse(&z64, "1;63").unwrap();
        let g = build_variant(&z64, &s, Variant::CayleySum, None).unwrap();
        let r = abelian_diameter_lower_bound(&z64, &s, &g).unwrap();
        assert!((r.bound - 0.4715).abs() < 1e-3 && r.binding && r.pass);

        let z16 = Group::parse("cyclic:16").unwrap();
        let s = ConnectionMultiset::parse(&z16, "1;15").unwrap();
        let neg = negation(&z16).unwrap();
        let g = build_variant(&z16, &s, Variant::TwistedCayley, Some(&neg)).unwrap();
        let r = abelian_diameter_lower_bound(&z16, &s, &g).unwrap();
        assert!(r.bound < 0.0 && r.pass && !r.binding);

        assert!(abelian_bound_value(256, 4) < 0.0);
        let s3 = Group::parse("sym:3").unwrap();
        let t = ConnectionMultiset::parse(&s3, "(1,2)").unwrap();
        let g = build_variant(&s3, &t, Variant::Cayley, None).unwrap();
        assert!(abelian_diameter_lower_bound(&s3, &t, &g).is_err());
    }
}
