use super::traversal::connectivity_bipartite;
use crate::algebra::numtheory::gcd;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Variant, VariantGraph};
use crate::spectral::{checked_spectrum, eigensolve, EigenOptions, Spectrum};
use serde::Serialize;

pub const MAX_CHEEGER_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheegerMode {
    Edge,
    Vertex,
}

impl CheegerMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(CheegerMode::Edge),
            "vertex" => Ok(CheegerMode::Vertex),
            other => Err(Error::Parse(format!("unknown Cheeger mode '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheegerConstant {
    pub mode: CheegerMode,
    /// Reduced fraction `numerator / denominator`.
    pub numerator: u64,
    pub denominator: u64,
    pub value: f64,
    /// Vertex indices of the first minimizing subset in mask order.
    pub subset: Vec<usize>,
}

/// Exhaustive minimum of `|boundary(U)| / |U|` over nonempty `U` with `|U| <= |V|/2`.
///
/// Edge mode counts edges leaving `U` with multiplicity and ignores loops.
/// Vertex mode counts the outer boundary `N(U) \ U`.
pub fn cheeger_exact(a: &Adjacency, mode: CheegerMode) -> Result<CheegerConstant> {
    let n = a.n();
    if n > MAX_CHEEGER_VERTICES {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_CHEEGER_VERTICES,
        });
    }
    let conn = connectivity_bipartite(a)?;
    if conn.components != 1 || n < 2 {
        return Err(Error::hypothesis(
            "Cheeger constant needs a connected graph on at least two vertices",
            format!("{} vertices, {} components", n, conn.components),
        ));
    }
    let nbr: Vec<u32> = (0..n)
        .map(|x| a.row(x).iter().fold(0u32, |m, &(y, _)| m | (1 << y)))
        .collect();
    let mut best: Option<(u64, u64, u32)> = None;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as u64;
        if 2 * size > n as u64 {
            continue;
        }
        let boundary = match mode {
            CheegerMode::Vertex => {
                let reach = (0..n)
                    .filter(|&x| mask >> x & 1 == 1)
                    .fold(0u32, |m, x| m | nbr[x]);
                (reach & !mask).count_ones() as u64
            }
            CheegerMode::Edge => (0..n)
                .filter(|&x| mask >> x & 1 == 1)
                .flat_map(|x| a.row(x).iter())
                .filter(|&&(y, _)| mask >> y & 1 == 0)
                .map(|&(_, m)| m as u64)
                .sum(),
        };
        let better = match best {
            None => true,
            Some((b, s, _)) => boundary * s < b * size,
        };
        if better {
            best = Some((boundary, size, mask));
        }
    }
    let (b, s, mask) = best.expect("n >= 2 admits a singleton");
    let g = gcd(b, s).max(1);
    Ok(CheegerConstant {
        mode,
        numerator: b / g,
        denominator: s / g,
        value: b as f64 / s as f64,
        subset: (0..n).filter(|&x| mask >> x & 1 == 1).collect(),
    })
}

/// The exponent `eta` in the lower end of the interval: 0 for untwisted variants, 3 for twisted ones.
pub fn interval_eta(variant: Variant) -> Result<u32> {
    match variant {
        Variant::Cayley | Variant::CayleySum => Ok(0),
        Variant::TwistedCayley | Variant::TwistedCayleySum => Ok(3),
        Variant::Schreier => Err(Error::Precondition(
            "the spectral interval is stated for the four group variants only".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheegerIntervalVerdict {
    pub family: String,
    pub d: u32,
    pub epsilon: f64,
    pub eta: u32,
    pub lower: f64,
    pub upper: f64,
    /// Extremes of the normalized nontrivial spectrum.
    pub min_normalized: f64,
    pub max_normalized: f64,
    pub pass: bool,
}

/// Checks that the normalized nontrivial spectrum lies in
/// `(-1 + eps^4 / (2^(9+eta) d^8), 1 - eps^2 / (2 d^2)]`.
pub fn cheeger_spec_interval_check(
    graph: &VariantGraph,
    epsilon: f64,
    opts: EigenOptions,
) -> Result<CheegerIntervalVerdict> {
    let eta = interval_eta(graph.variant())?;
    let (d, sp, bipartite) = checked_spectrum(graph, opts)?;
    let df = d as f64;
    let lower = -1.0 + epsilon.powi(4) / (2f64.powi(9 + eta as i32) * df.powi(8));
    let upper = 1.0 - epsilon * epsilon / (2.0 * df * df);
    let normalized: Vec<f64> = sp.nontrivial(bipartite).iter().map(|v| v / df).collect();
    let min = normalized.iter().copied().fold(f64::INFINITY, f64::min);
    let max = normalized.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let slack = opts.tol / df;
    let pass = normalized.is_empty() || (min > lower - slack && max <= upper + slack);
    Ok(CheegerIntervalVerdict {
        family: graph.family().to_string(),
        d,
        epsilon,
        eta,
        lower,
        upper,
        min_normalized: min,
        max_normalized: max,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheegerBuser {
    pub d: u32,
    pub lambda2: f64,
    pub h_edge: f64,
    /// `(1 - lambda2/d) / 2`.
    pub lower: f64,
    /// `sqrt(2 (1 - lambda2/d))`.
    pub upper: f64,
    pub pass: bool,
}

/// `(1 - lambda2/d)/2 <= h_E/d <= sqrt(2(1 - lambda2/d))`.
pub fn cheeger_buser_check(a: &Adjacency, opts: EigenOptions) -> Result<CheegerBuser> {
    let d = a
        .regular_degree()
        .ok_or_else(|| Error::hypothesis("graph is not regular", "row sums differ"))?;
    let h = cheeger_exact(a, CheegerMode::Edge)?;
    let sp: Spectrum<f64> = eigensolve(a, opts)?;
    let lambda2 = sp.nontrivial(false).first().copied().unwrap_or(d as f64);
    let gap = 1.0 - lambda2 / d as f64;
    let ratio = h.value / d as f64;
    let lower = gap / 2.0;
    let upper = (2.0 * gap.max(0.0)).sqrt();
    let slack = 1e-9;
    Ok(CheegerBuser {
        d,
        lambda2,
        h_edge: h.value,
        lower,
        upper,
        pass: lower <= ratio + slack && ratio <= upper + slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;
    use crate::graph::{build_variant, ConnectionMultiset};

    fn cayley(spec: &str, set: &str, v: Variant) -> VariantGraph {
        let g = Group::parse(spec).unwrap();
        let s = ConnectionMultiset::parse(&g, set).unwrap();
        build_variant(&g, &s, v, None).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let c4 = cayley("cyclic:4", "1;3", Variant::Cayley);
        let e = cheeger_exact(c4.adjacency(), CheegerMode::Edge).unwrap();
        assert_eq!((e.numerator, e.denominator), (1, 1));
        assert_eq!(e.subset, vec![0, 1]);
        let k5 = cayley("cyclic:5", "1;2;3;4", Variant::Cayley);
        let v = cheeger_exact(k5.adjacency(), CheegerMode::Vertex).unwrap();
        assert_eq!((v.numerator, v.denominator), (3, 2));
        let c16 = cayley("cyclic:16", "1;15", Variant::Cayley);
        let e = cheeger_exact(c16.adjacency(), CheegerMode::Edge).unwrap();
        assert_eq!((e.numerator, e.denominator), (1, 4));
        let big = cayley("cyclic:21", "1;20", Variant::Cayley);
        assert!(matches!(
            cheeger_exact(big.adjacency(), CheegerMode::Edge),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn interval_examples() {
        let opts = EigenOptions::default();
        for (spec, set, v) in [
            ("cyclic:4", "1;3", Variant::Cayley),
            ("cyclic:5", "1;2;3;4", Variant::Cayley),
            ("cyclic:8", "1;7", Variant::CayleySum),
        ] {
            let g = cayley(spec, set, v);
            let eps = cheeger_exact(g.adjacency(), CheegerMode::Vertex)
                .unwrap()
                .value;
            let r = cheeger_spec_interval_check(&g, eps, opts).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.eta, 0);
            assert!(cheeger_buser_check(g.adjacency(), opts).unwrap().pass);
        }
        let c4 = cayley("cyclic:4", "1;3", Variant::Cayley);
        let r = cheeger_spec_interval_check(&c4, 1.0, opts).unwrap();
        assert!((r.lower - (-1.0 + 1.0 / (512.0 * 256.0))).abs() < 1e-15);
        assert!((r.upper - 0.875).abs() < 1e-15);
        assert!(r.max_normalized.abs() < 1e-9 && r.min_normalized.abs() < 1e-9);
    }
}
