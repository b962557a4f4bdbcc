use super::traversal::{bfs_diameter, connectivity_bipartite, Diameter};
use super::walks::closed_walk_counts;
use crate::error::Result;
use crate::graph::Adjacency;
use crate::spectral::{eigensolve, EigenOptions, Spectrum};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Isomorphism invariants. Different fingerprints prove two graphs non-isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub spectrum_digest: String,
    pub loop_count: u64,
    pub loop_vertices: usize,
    /// `(closed 3-walk count, number of vertices with that count)`, ascending.
    pub closed3_histogram: Vec<(u64, usize)>,
    pub diameter: Diameter,
    pub bipartite: bool,
}

/// SHA-256 of the eigenvalues rounded to multiples of `1e-6`.
pub fn spectrum_digest(sp: &Spectrum<f64>) -> String {
    let mut h = Sha256::new();
    for v in sp.values() {
        h.update(((v * 1e6).round() as i64).to_le_bytes());
    }
    hex::encode(h.finalize())
}

pub fn fingerprint(a: &Adjacency, opts: EigenOptions) -> Result<Fingerprint> {
    let conn = connectivity_bipartite(a)?;
    let sp: Spectrum<f64> = eigensolve(a, opts)?;
    let mut hist = std::collections::BTreeMap::new();
    for c in closed_walk_counts(a, 3)? {
        *hist.entry(c).or_insert(0usize) += 1;
    }
    Ok(Fingerprint {
        spectrum_digest: spectrum_digest(&sp),
        loop_count: a.trace(),
        loop_vertices: a.loop_vertices(),
        closed3_histogram: hist.into_iter().collect(),
        diameter: bfs_diameter(a),
        bipartite: conn.bipartite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ambient_conjugation, Group};
    use crate::graph::{build_variant, ConnectionMultiset, Variant};

    #[test]
    fn relabeled_cycle_matches() {
        let a = Adjacency::from_entries(
            4,
            (0..4).flat_map(|x| [(x, (x + 1) % 4, 1), (x, (x + 3) % 4, 1)]),
        )
        .unwrap();
        let b = a.relabel(&[2, 0, 3, 1]);
        let opts = EigenOptions::default();
        assert_eq!(
            fingerprint(&a, opts).unwrap(),
            fingerprint(&b, opts).unwrap()
        );
    }

    #[test]
    fn loops_distinguish_variants() {
        let z5 = Group::parse("cyclic:5").unwrap();
        let s = ConnectionMultiset::parse(&z5, "1;4").unwrap();
        let opts = EigenOptions::default();
        let c = fingerprint(
            build_variant(&z5, &s, Variant::Cayley, None)
                .unwrap()
                .adjacency(),
            opts,
        )
        .unwrap();
        let sum = fingerprint(
            build_variant(&z5, &s, Variant::CayleySum, None)
                .unwrap()
                .adjacency(),
            opts,
        )
        .unwrap();
        assert_eq!((c.loop_count, sum.loop_count), (0, 2));
        assert_ne!(c, sum);
    }

    #[test]
    fn a6_twists_differ() {
        let a6 = Group::parse("alt:6").unwrap();
        let f = ConnectionMultiset::parse(&a6, "(1,2,3);(1,3,2);(1,2,4);(1,4,2)").unwrap();
        let opts = EigenOptions::default();
        let fp = |p: &str| {
            let sigma = ambient_conjugation(&a6, &a6.parse_ambient(p).unwrap()).unwrap();
            let g = build_variant(&a6, &f, Variant::TwistedCayley, Some(&sigma)).unwrap();
            fingerprint(g.adjacency(), opts).unwrap()
        };
        let (x, y) = (fp("(1,2)"), fp("(1,2)(3,4)"));
        // frozen from enumeration: the two twists differ already in loops and 3-walks
        assert_eq!(x.closed3_histogram, vec![(0, 216), (4, 48), (8, 96)]);
        assert_eq!(y.closed3_histogram, vec![(0, 336), (4, 24)]);
        assert_eq!((x.loop_count, y.loop_count), (96, 0));
        assert_ne!(x, y);
    }
}
