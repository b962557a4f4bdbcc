//! The transposition set `T_{k,n}`, the elementary abelian group `H_{k,n}` it generates,
//! and the connection set `S_{k,n}` on `S_n`.

use crate::algebra::{ambient_conjugation, Element, Group, GroupMap, GroupSpec, Perm};
use crate::error::{Error, Result};
use crate::graph::{build_variant, ConnectionMultiset, Variant, VariantGraph};

#[derive(Clone, Debug)]
pub struct PermutationApparatus {
    pub k: usize,
    pub n: usize,
    /// `(1,2), (3,4), ..., (2k-1,2k)`.
    pub transpositions: Vec<Perm>,
    /// All `2^k` products of subsets of the transpositions; index bit `t` selects transposition `t`.
    pub h: Vec<Perm>,
    /// `T_{k,n}` together with the `H`-conjugates of the `n`-cycle and their inverses, as a set.
    pub s: Vec<Perm>,
}

pub fn perm_apparatus(k: usize, n: usize) -> Result<PermutationApparatus> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2k >= 2, got k = {k}, n = {n}"
        )));
    }
    if n > crate::algebra::perm::MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "degree {n} exceeds the permutation cap"
        )));
    }
    let transpositions: Vec<Perm> = (0..k)
        .map(|t| Perm::from_cycles(n, &[vec![2 * t + 1, 2 * t + 2]]))
        .collect::<Result<_>>()?;
    let h: Vec<Perm> = (0..1usize << k)
        .map(|mask| {
            (0..k)
                .filter(|t| mask >> t & 1 == 1)
                .fold(Perm::identity(n), |acc, t| acc.compose(&transpositions[t]))
        })
        .collect();
    let cycle = Perm::from_cycles(n, &[(1..=n).collect()])?;
    let mut s: Vec<Perm> = transpositions.clone();
    for hh in &h {
        let c = hh.compose(&cycle).compose(&hh.inverse());
        for x in [c, c.inverse()] {
            if !s.contains(&x) {
                s.push(x);
            }
        }
    }
    Ok(PermutationApparatus {
        k,
        n,
        transpositions,
        h,
        s,
    })
}

impl PermutationApparatus {
    pub fn h_element(&self, mask: usize) -> Result<Perm> {
        self.h.get(mask).copied().ok_or_else(|| {
            Error::InvalidParameter(format!("twist mask {mask} outside 0..{}", self.h.len()))
        })
    }

    /// `S_n` with `S_{k,n}` as a connection set.
    pub fn group_and_set(&self) -> Result<(Group, ConnectionMultiset)> {
        let group = Group::build(&GroupSpec::Symmetric(self.n))?;
        let idx: Vec<usize> = self
            .s
            .iter()
            .map(|p| group.require_index(&Element::Perm(*p)))
            .collect::<Result<_>>()?;
        let set = ConnectionMultiset::new(&group, &idx)?;
        Ok((group, set))
    }

    /// Conjugation by each transposition in `T_{k,n}`, as automorphisms of `group`.
    pub fn generator_maps(&self, group: &Group) -> Result<Vec<GroupMap>> {
        self.transpositions
            .iter()
            .map(|t| ambient_conjugation(group, &Element::Perm(*t)))
            .collect()
    }

    /// `C(S_n, S_{k,n})`, twisted by conjugation with `H` element `mask` when given.
    pub fn graph(&self, twist: Option<usize>) -> Result<VariantGraph> {
        let (group, set) = self.group_and_set()?;
        let mut family = format!("perm:k={},n={}", self.k, self.n);
        let g = match twist {
            None => build_variant(&group, &set, Variant::Cayley, None)?,
            Some(mask) => {
                let sigma = ambient_conjugation(&group, &Element::Perm(self.h_element(mask)?))?;
                family.push_str(&format!(",twist={mask}"));
                build_variant(&group, &set, Variant::TwistedCayley, Some(&sigma))?
            }
        };
        Ok(g.with_family(family))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_n4() {
        let a = perm_apparatus(1, 4).unwrap();
        assert_eq!(a.transpositions, vec![Perm::parse(4, "(1,2)").unwrap()]);
        assert_eq!(a.h.len(), 2);
        let c = Perm::parse(4, "(1,2,3,4)").unwrap();
        let c2 = Perm::parse(4, "(1,3,4,2)").unwrap();
        assert!(a.s.contains(&c) && a.s.contains(&c2));
        assert!(a.s.len() <= 1 + 4);
    }

    #[test]
    fn h_is_elementary_abelian() {
        let a = perm_apparatus(2, 6).unwrap();
        assert_eq!(a.h.len(), 4);
        for x in &a.h {
            assert!(x.compose(x) == Perm::identity(6));
            for y in &a.h {
                assert_eq!(x.compose(y), y.compose(x));
            }
        }
        assert!(a.s.len() <= 2 + 8);
    }

    #[test]
    fn orbit_sizes_divide_h_order() {
        let a = perm_apparatus(2, 5).unwrap();
        for x in &a.s {
            let mut orbit: Vec<Perm> =
                a.h.iter()
                    .map(|h| h.compose(x).compose(&h.inverse()))
                    .collect();
            orbit.sort();
            orbit.dedup();
            assert_eq!(4 % orbit.len(), 0);
        }
    }

    #[test]
    fn set_symmetric_and_twists_undirected() {
        let a = perm_apparatus(1, 5).unwrap();
        let (g, s) = a.group_and_set().unwrap();
        assert!(s.is_symmetric(&g));
        assert!(a.graph(None).unwrap().is_undirected());
    }

    #[test]
    fn rejects_small_n() {
        assert!(perm_apparatus(2, 3).is_err());
        assert!(perm_apparatus(0, 3).is_err());
    }
}
