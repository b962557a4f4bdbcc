//! The 8-regular Gabber–Galil graphs on `Z^2/nZ^2` and their coordinate twists.
//!
//! Vertex `(a, b)` has index `a n + b`. The eight maps are
//! `S(a,b) = (a, a+b)`, `T(a,b) = (a+b, b)`, `U(a,b) = (a+1, b)`, `V(a,b) = (a, b+1)`
//! and their inverses; a twist `theta` gives `A[x, y] = #{phi : y = theta(phi(x))}`.

use super::adjacency::Adjacency;
use super::variant::{Variant, VariantGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GgTwist {
    Identity,
    /// `(a,b) -> (b,a)`.
    Swap,
    /// `(a,b) -> (-b,-a)`.
    NegSwap,
    /// `(a,b) -> (a,-b)`.
    NegY,
    /// `(a,b) -> (-a,b)`.
    NegX,
    /// `(a,b) -> (-a,-b)`.
    Neg,
}

impl GgTwist {
    /// The five nontrivial twists.
    pub const ALL: [GgTwist; 5] = [
        GgTwist::Swap,
        GgTwist::NegSwap,
        GgTwist::NegY,
        GgTwist::NegX,
        GgTwist::Neg,
    ];

    pub fn parse(s: &str) -> Result<GgTwist> {
        match s {
            "id" | "none" => Ok(GgTwist::Identity),
            "swap" => Ok(GgTwist::Swap),
            "negswap" => Ok(GgTwist::NegSwap),
            "negy" => Ok(GgTwist::NegY),
            "negx" => Ok(GgTwist::NegX),
            "neg" => Ok(GgTwist::Neg),
            other => Err(Error::Parse(format!("unknown twist '{other}'"))),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            GgTwist::Identity => "id",
            GgTwist::Swap => "swap",
            GgTwist::NegSwap => "negswap",
            GgTwist::NegY => "negy",
            GgTwist::NegX => "negx",
            GgTwist::Neg => "neg",
        }
    }

    pub fn apply(self, n: u32, a: u32, b: u32) -> (u32, u32) {
        let neg = |x: u32| (n - x % n) % n;
        match self {
            GgTwist::Identity => (a, b),
            GgTwist::Swap => (b, a),
            GgTwist::NegSwap => (neg(b), neg(a)),
            GgTwist::NegY => (a, neg(b)),
            GgTwist::NegX => (neg(a), b),
            GgTwist::Neg => (neg(a), neg(b)),
        }
    }

    /// `self` after `other`, as coordinate maps.
    pub fn compose(self, other: GgTwist) -> GgTwist {
        // (1, 2) over Z/5 separates all six maps
        let (a, b) = other.apply(5, 1, 2);
        let target = self.apply(5, a, b);
        std::iter::once(GgTwist::Identity)
            .chain(GgTwist::ALL)
            .find(|t| t.apply(5, 1, 2) == target)
            .expect("the six maps form a group")
    }

    /// The twist as a vertex permutation of `Z^2/nZ^2`.
    pub fn vertex_map(self, n: u32) -> Vec<usize> {
        (0..n * n)
            .map(|v| {
                let (a, b) = self.apply(n, v / n, v % n);
                (a * n + b) as usize
            })
            .collect()
    }
}

/// Tables of `S, S^-1, T, T^-1, U, U^-1, V, V^-1` as vertex maps.
/// A Klein four-group of twists, given by two commuting generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KleinGroup {
    pub name: &'static str,
    pub generators: [GgTwist; 2],
}

impl KleinGroup {
    /// Elements indexed by a 2-bit mask over the generators.
    pub fn elements(&self) -> [GgTwist; 4] {
        let [g, h] = self.generators;
        [GgTwist::Identity, g, h, g.compose(h)]
    }
}

/// The coordinate-sign group, the group generated by the two swaps, and the
/// groups `{id, tau_eps, -id, tau_eps (-id)}` for both swaps `tau_eps`.
pub fn klein_groups() -> [KleinGroup; 4] {
    [
        KleinGroup {
            name: "signs",
            generators: [GgTwist::NegY, GgTwist::NegX],
        },
        KleinGroup {
            name: "swaps",
            generators: [GgTwist::Swap, GgTwist::NegSwap],
        },
        KleinGroup {
            name: "swap-neg",
            generators: [GgTwist::Swap, GgTwist::Neg],
        },
        KleinGroup {
            name: "negswap-neg",
            generators: [GgTwist::NegSwap, GgTwist::Neg],
        },
    ]
}

pub fn generator_tables(n: u32) -> [Vec<usize>; 8] {
    let idx = |a: u32, b: u32| ((a % n) * n + (b % n)) as usize;
    let table = |f: &dyn Fn(u32, u32) -> usize| -> Vec<usize> {
        (0..n * n).map(|v| f(v / n, v % n)).collect()
    };
    [
        table(&|a, b| idx(a, a + b)),
        table(&|a, b| idx(a, b + n - a)),
        table(&|a, b| idx(a + b, b)),
        table(&|a, b| idx(a + n - b, b)),
        table(&|a, b| idx(a + 1, b)),
        table(&|a, b| idx(a + n - 1, b)),
        table(&|a, b| idx(a, b + 1)),
        table(&|a, b| idx(a, b + n - 1)),
    ]
}

pub fn build_gabber_galil(n: u32, theta: Option<GgTwist>) -> Result<VariantGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "Gabber–Galil modulus {n} < 2"
        )));
    }
    let theta = theta.unwrap_or(GgTwist::Identity);
    let tw = theta.vertex_map(n);
    let gens = generator_tables(n);
    let targets: Vec<Vec<(usize, u32)>> = (0..(n * n) as usize)
        .map(|x| gens.iter().map(|g| (tw[g[x]], 1)).collect())
        .collect();
    let labels = (0..n * n)
        .map(|v| format!("({},{})", v / n, v % n))
        .collect();
    VariantGraph::from_parts(
        Variant::Schreier,
        format!("gg:n={n},theta={}", theta.tag()),
        (theta != GgTwist::Identity).then(|| theta.tag().to_string()),
        8,
        Adjacency::from_targets(&targets),
        labels,
    )
}

/// True when conjugating by `theta` permutes the eight generator maps as a multiset.
///
/// For small `n` some generators coincide (mod 2, `S = S^-1`), so the comparison is by multiset.
pub fn twist_permutes_generators(n: u32, theta: GgTwist) -> bool {
    let tw = theta.vertex_map(n);
    let mut gens: Vec<Vec<usize>> = generator_tables(n).to_vec();
    let mut conj: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| (0..tw.len()).map(|x| tw[g[tw[x]]]).collect())
        .collect();
    gens.sort();
    conj.sort();
    gens == conj
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_groups_are_groups() {
        for k in klein_groups() {
            let el = k.elements();
            let mut sorted: Vec<&str> = el.iter().map(|t| t.tag()).collect();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), 4, "{}", k.name);
            for x in el {
                assert_eq!(x.compose(x), GgTwist::Identity);
                for y in el {
                    assert!(el.contains(&x.compose(y)));
                    assert_eq!(x.compose(y), y.compose(x));
                }
            }
        }
        assert_eq!(GgTwist::Swap.compose(GgTwist::NegSwap), GgTwist::Neg);
    }

    #[test]
    fn n2_untwisted() {
        let g = build_gabber_galil(2, None).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.adjacency().regular_degree(), Some(8));
        // oracle: the diagonal entry counts the generator maps fixing the vertex
        let gens = generator_tables(2);
        for x in 0..4 {
            let fixed = gens.iter().filter(|t| t[x] == x).count() as u32;
            assert_eq!(g.adjacency().get(x, x), fixed);
        }
        let diag: Vec<u32> = (0..4).map(|x| g.adjacency().get(x, x)).collect();
        assert_eq!(diag, vec![4, 2, 2, 0]);
        // U and U^-1 coincide mod 2, giving a double edge rather than a loop
        assert_eq!(g.adjacency().get(0, 2), 2);
    }

    #[test]
    fn n3_swap_is_undirected() {
        assert!(build_gabber_galil(3, Some(GgTwist::Swap))
            .unwrap()
            .is_undirected());
    }

    #[test]
    fn neg_twist_trivial_mod_2() {
        let a = build_gabber_galil(2, None).unwrap();
        let b = build_gabber_galil(2, Some(GgTwist::Neg)).unwrap();
        assert_eq!(a.adjacency(), b.adjacency());
    }

    #[test]
    fn twists_permute_generators() {
        for n in 2..=9 {
            for t in GgTwist::ALL {
                assert!(twist_permutes_generators(n, t), "n = {n}, {t:?}");
            }
        }
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(build_gabber_galil(1, None).is_err());
        assert!(GgTwist::parse("rotate").is_err());
    }
}
