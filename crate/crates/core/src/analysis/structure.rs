use crate::algebra::{ambient_conjugation, Element, Group, GroupMap};
use crate::error::{Error, Result};
use crate::graph::{build_variant, ConnectionMultiset, Variant, VariantGraph};
use serde::Serialize;

pub const MAX_GS_SIGMA_ORDER: usize = 5040;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsSigmaReport {
    pub group: String,
    /// Elements `h` whose left multiplication preserves every edge of `C(G,S)^sigma`.
    pub subgroup: Vec<usize>,
    pub fixed_subgroup: Vec<usize>,
    pub contains_fixed: bool,
    pub equal: bool,
    /// `|S S^{-1}|`.
    pub ss_inv_size: usize,
    pub min_class_size: usize,
    /// `|S S^{-1}|` is below every nontrivial conjugacy class size.
    pub hypothesis_holds: bool,
    pub pass: bool,
}

pub fn compute_gs_sigma(
    group: &Group,
    s: &ConnectionMultiset,
    sigma: &GroupMap,
) -> Result<GsSigmaReport> {
    let n = group.order();
    if n > MAX_GS_SIGMA_ORDER {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_GS_SIGMA_ORDER,
        });
    }
    let graph = build_variant(group, s, Variant::TwistedCayley, Some(sigma))?;
    let a = graph.adjacency();
    // every row sums to |S|, so matching the image of each row entry forces row equality
    let subgroup: Vec<usize> = (0..n)
        .filter(|&h| {
            (0..n).all(|x| {
                let hx = group.mul(h, x);
                a.row(x)
                    .iter()
                    .all(|&(y, m)| a.get(hx, group.mul(h, y as usize)) == m)
            })
        })
        .collect();
    let fixed_subgroup: Vec<usize> = (0..n).filter(|&x| sigma.apply(x) == x).collect();
    let contains_fixed = fixed_subgroup
        .iter()
        .all(|h| subgroup.binary_search(h).is_ok());
    let equal = subgroup == fixed_subgroup;

    let support = s.support();
    let mut ss_inv: Vec<usize> = support
        .iter()
        .flat_map(|&x| support.iter().map(move |&y| (x, y)))
        .map(|(x, y)| group.mul(x, group.inv(y)))
        .collect();
    ss_inv.sort_unstable();
    ss_inv.dedup();
    let min_class_size = group
        .conjugacy_classes()
        .iter()
        .filter(|c| !c.contains(&group.identity()))
        .map(Vec::len)
        .min()
        .unwrap_or(usize::MAX);
    let hypothesis_holds = ss_inv.len() < min_class_size;
    Ok(GsSigmaReport {
        group: group.label(),
        subgroup,
        fixed_subgroup,
        contains_fixed,
        equal,
        ss_inv_size: ss_inv.len(),
        min_class_size,
        hypothesis_holds,
        pass: contains_fixed && (!hypothesis_holds || equal),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismVerdict {
    pub families: [String; 2],
    /// `g S g^{-1} = S`.
    pub set_stable: bool,
    pub verified: bool,
    /// `mapping[u] = g u g^{-1}` when verified.
    pub mapping: Option<Vec<usize>>,
    /// First edge `(x, y)` of the first graph whose image is missing or has the wrong multiplicity.
    pub witness: Option<(usize, usize)>,
}

/// Tests whether conjugation by the ambient element `g` carries `a` onto `b`.
///
/// Fails with an error when `g` does not normalize the group. When `g` does not
/// stabilize `S` the edge check still runs and reports a witness.
pub fn conjugation_isomorphism(
    group: &Group,
    s: &ConnectionMultiset,
    a: &VariantGraph,
    b: &VariantGraph,
    g: &Element,
) -> Result<IsomorphismVerdict> {
    s.require_group(group)?;
    if a.n() != group.order() || b.n() != group.order() {
        return Err(Error::InvalidParameter(
            "graphs are not on the group's vertex set".into(),
        ));
    }
    let conj = ambient_conjugation(group, g)?;
    let set_stable = s.map_image(&conj) == *s;
    let (aa, ba) = (a.adjacency(), b.adjacency());
    let mut witness = None;
    'outer: for x in 0..aa.n() {
        for &(y, m) in aa.row(x) {
            if ba.get(conj.apply(x), conj.apply(y as usize)) != m {
                witness = Some((x, y as usize));
                break 'outer;
            }
        }
    }
    if witness.is_none() && aa.nnz() != ba.nnz() {
        return Err(Error::Internal(
            "edge images match but edge counts differ".into(),
        ));
    }
    let verified = witness.is_none();
    Ok(IsomorphismVerdict {
        families: [a.family().to_string(), b.family().to_string()],
        set_stable,
        verified,
        mapping: verified.then(|| conj.table().to_vec()),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::inner_automorphism;

    fn conj(g: &Group, p: &str) -> GroupMap {
        ambient_conjugation(g, &g.parse_ambient(p).unwrap()).unwrap()
    }

    #[test]
    fn gs_sigma_examples() {
        let s4 = Group::parse("sym:4").unwrap();
        let sigma = conj(&s4, "(1,2)(3,4)");
        let s = ConnectionMultiset::parse(&s4, "(1,2,3)").unwrap();
        let r = compute_gs_sigma(&s4, &s, &sigma).unwrap();
        assert_eq!((r.ss_inv_size, r.min_class_size), (1, 3));
        assert!(r.hypothesis_holds && r.equal && r.pass);
        assert_eq!(r.subgroup.len(), 8);

        let s = ConnectionMultiset::parse(&s4, "(1,2,3);(1,3,2)").unwrap();
        let r = compute_gs_sigma(&s4, &s, &sigma).unwrap();
        assert_eq!(r.ss_inv_size, 3);
        assert!(!r.hypothesis_holds && r.contains_fixed);

        let z6 = Group::parse("cyclic:6").unwrap();
        let all = ConnectionMultiset::new(&z6, &(0..6).collect::<Vec<_>>()).unwrap();
        let neg = crate::algebra::negation(&z6).unwrap();
        assert_eq!(compute_gs_sigma(&z6, &all, &neg).unwrap().subgroup.len(), 6);
    }

    #[test]
    fn conjugation_examples() {
        let s5 = Group::parse("sym:5").unwrap();
        let class = s5.conjugacy_class(s5.parse_element("(1,2,3,4,5)").unwrap());
        let s = ConnectionMultiset::new(&s5, &class).unwrap();
        let a = build_variant(&s5, &s, Variant::TwistedCayley, Some(&conj(&s5, "(1,2)"))).unwrap();
        let b = build_variant(&s5, &s, Variant::TwistedCayley, Some(&conj(&s5, "(3,4)"))).unwrap();
        let g = s5.parse_ambient("(1,3)(2,4)").unwrap();
        let v = conjugation_isomorphism(&s5, &s, &a, &b, &g).unwrap();
        assert!(v.verified && v.set_stable);

        let e = s5.parse_ambient("()").unwrap();
        assert!(
            conjugation_isomorphism(&s5, &s, &a, &a, &e)
                .unwrap()
                .verified
        );

        let cyc = ConnectionMultiset::parse(&s5, "(1,2,3,4,5);(1,5,4,3,2)").unwrap();
        let a =
            build_variant(&s5, &cyc, Variant::TwistedCayley, Some(&conj(&s5, "(1,2)"))).unwrap();
        let b =
            build_variant(&s5, &cyc, Variant::TwistedCayley, Some(&conj(&s5, "(3,4)"))).unwrap();
        let v = conjugation_isomorphism(&s5, &cyc, &a, &b, &g).unwrap();
        assert!(!v.set_stable && !v.verified);
        let (x, y) = v.witness.unwrap();
        assert!(a.adjacency().get(x, y) > 0);

        let a5 = Group::parse("alt:5").unwrap();
        let t = ConnectionMultiset::parse(&a5, "(1,2,3);(1,3,2)").unwrap();
        let id = inner_automorphism(&a5, a5.identity()).unwrap();
        let x = build_variant(&a5, &t, Variant::TwistedCayley, Some(&id)).unwrap();
        let odd = a5.parse_ambient("(1,4)").unwrap();
        assert!(
            !conjugation_isomorphism(&a5, &t, &x, &x, &odd)
                .unwrap()
                .set_stable
        );
        let outside = a5.parse_ambient("(1,2,3,4,5,6)");
        assert!(
            outside.is_err()
                || conjugation_isomorphism(&a5, &t, &x, &x, &outside.unwrap()).is_err()
        );
    }
}
