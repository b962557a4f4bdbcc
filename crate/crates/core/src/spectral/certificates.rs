//! Ramanujan certificates, spectral gaps and the variant pairing certificate.

use super::dense::DenseMatrix;
use super::eigen::{dense_eigenvalues, eigensolve, EigenOptions};
use super::projection::{compress, signed_basis};
use super::spectrum::{match_multisets, Spectrum};
use crate::algebra::{gij_map, Group, GroupMap};
use crate::analysis::traversal::connectivity_bipartite;
use crate::error::{Error, Result};
use crate::graph::{build_variant, ConnectionMultiset, InvolutionMatrix, Variant, VariantGraph};
use serde::Serialize;

/// How trivial eigenvalues were removed; recorded verbatim in every certificate.
pub const NONTRIVIAL_CONVENTION: &str =
    "one copy of d removed; one copy of -d also removed when connected and bipartite";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RamanujanCertificate {
    pub family: String,
    pub n: usize,
    pub d: u32,
    pub bipartite: bool,
    pub removed: Vec<f64>,
    pub lambda_star: f64,
    pub bound: f64,
    /// `bound - lambda_star`.
    pub margin: f64,
    pub tol: f64,
    pub convention: String,
    pub pass: bool,
}

/// Checks that a graph is undirected, regular and connected; returns `(d, bipartite)`.
pub fn regular_connected(graph: &VariantGraph) -> Result<(u32, bool)> {
    graph.require_undirected()?;
    let a = graph.adjacency();
    let d = a.regular_degree().ok_or_else(|| {
        Error::hypothesis(
            "graph is not regular",
            format!("row sums differ in {}", graph.family()),
        )
    })?;
    let c = connectivity_bipartite(a)?;
    if c.components != 1 {
        let other = c.labels.iter().position(|&l| l != 0).unwrap_or(0);
        return Err(Error::hypothesis(
            "graph is disconnected",
            format!(
                "{} components; vertex {other} unreachable from 0",
                c.components
            ),
        ));
    }
    Ok((d, c.bipartite))
}

/// Confirms the BFS bipartite flag against `-d` in the spectrum (connected graphs).
fn bipartite_cross_check(sp: &Spectrum<f64>, d: u32, bipartite: bool) -> Result<()> {
    let spectral = sp.contains(-(d as f64));
    if spectral != bipartite {
        return Err(Error::Internal(format!(
            "2-colouring says bipartite = {bipartite} but -d in spectrum = {spectral}"
        )));
    }
    Ok(())
}

/// Degree, spectrum and bipartite flag of a connected regular undirected graph,
/// with the flag cross-checked against `-d` in the spectrum.
pub fn checked_spectrum(
    graph: &VariantGraph,
    opts: EigenOptions,
) -> Result<(u32, Spectrum<f64>, bool)> {
    let (d, bipartite) = regular_connected(graph)?;
    let sp: Spectrum<f64> = eigensolve(graph.adjacency(), opts)?;
    bipartite_cross_check(&sp, d, bipartite)?;
    Ok((d, sp, bipartite))
}

pub fn certify_ramanujan(graph: &VariantGraph, opts: EigenOptions) -> Result<RamanujanCertificate> {
    let (d, sp, bipartite) = checked_spectrum(graph, opts)?;
    let nontrivial = sp.nontrivial(bipartite);
    let lambda_star = nontrivial.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let bound = 2.0 * ((d as f64) - 1.0).max(0.0).sqrt();
    let mut removed = vec![d as f64];
    if bipartite {
        removed.push(-(d as f64));
    }
    Ok(RamanujanCertificate {
        family: graph.family().to_string(),
        n: graph.n(),
        d,
        bipartite,
        removed,
        lambda_star,
        bound,
        margin: bound - lambda_star,
        tol: opts.tol,
        convention: NONTRIVIAL_CONVENTION.to_string(),
        pass: lambda_star <= bound + opts.tol,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralGap {
    pub d: u32,
    pub lambda2: f64,
    pub lambda_star: f64,
    /// `lambda2 / d`.
    pub lambda2_over_d: f64,
    /// `1 - lambda2 / d`.
    pub one_sided: f64,
    /// `1 - lambda_star / d`.
    pub two_sided: f64,
}

pub fn spectral_gap(graph: &VariantGraph, opts: EigenOptions) -> Result<SpectralGap> {
    let (d, sp, bipartite) = checked_spectrum(graph, opts)?;
    let nontrivial = sp.nontrivial(bipartite);
    // descending order survives removal, so the largest nontrivial value leads
    let lambda2 = sp.nontrivial(false).first().copied().unwrap_or(0.0);
    let lambda_star = nontrivial.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let df = d as f64;
    Ok(SpectralGap {
        d,
        lambda2,
        lambda_star,
        lambda2_over_d: lambda2 / df,
        one_sided: 1.0 - lambda2 / df,
        two_sided: 1.0 - lambda_star / df,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingCertificate {
    pub group: String,
    pub families: [String; 2],
    pub i: usize,
    pub j: usize,
    pub f_ij: usize,
    pub n: usize,
    pub e_plus: Vec<f64>,
    pub e_minus: Vec<f64>,
    pub plus_size: usize,
    pub minus_size: usize,
    /// Largest mismatch of `E_i^+` against `E_j^+` and of `E_i^-` against `-E_j^-`.
    pub max_residual: f64,
    pub exact_identity: bool,
    pub pass: bool,
}

fn sign_block(
    a: &crate::graph::Adjacency,
    map: &[usize],
    negative: bool,
    tol: f64,
) -> Result<Vec<f64>> {
    let basis = signed_basis::<f64>(a.n(), &[map], &[negative]);
    let m: DenseMatrix<f64> = compress(a, &basis);
    dense_eigenvalues(&m, tol)
}

/// Relates variants `i` and `j` of `(group, s, sigma)` through `A_j = P_ij A_i`.
pub fn pairing_certificate(
    group: &Group,
    s: &ConnectionMultiset,
    sigma: &GroupMap,
    i: usize,
    j: usize,
    tol: f64,
) -> Result<PairingCertificate> {
    let vi = Variant::from_index(i)?;
    let vj = Variant::from_index(j)?;
    let mut pair = [i, j];
    pair.sort_unstable();
    if pair == [2, 3] && !s.is_symmetric(group) {
        let e = s
            .iter()
            .find(|&(e, m)| s.multiplicity(group.inv(e)) != m)
            .map(|(e, _)| group.element_label(e))
            .unwrap_or_default();
        return Err(Error::hypothesis(
            "connection set must be symmetric for the sum/twisted pair",
            format!("inverse of {e} has a different multiplicity"),
        ));
    }
    let xi = build_variant(group, s, vi, Some(sigma))?;
    let xj = build_variant(group, s, vj, Some(sigma))?;
    xi.require_undirected()?;
    xj.require_undirected()?;
    let g = gij_map(group, i, j, sigma)?;
    let p = InvolutionMatrix::from_group_map(&g)?;
    let f_ij = p.fixed_rows();
    let predicted = p.left_mul(xi.adjacency());
    if predicted != *xj.adjacency() {
        let (x, y) = predicted
            .entries()
            .find(|&(x, y, m)| xj.adjacency().get(x, y) != m)
            .map(|(x, y, _)| (x, y))
            .or_else(|| {
                xj.adjacency()
                    .entries()
                    .find(|&(x, y, m)| predicted.get(x, y) != m)
                    .map(|(x, y, _)| (x, y))
            })
            .unwrap_or((0, 0));
        return Err(Error::hypothesis(
            format!("A_{j} differs from P_{i}{j} A_{i}"),
            format!("entry ({x}, {y})"),
        ));
    }
    let map = p.map();
    let ei_plus = sign_block(xi.adjacency(), map, false, tol)?;
    let ei_minus = sign_block(xi.adjacency(), map, true, tol)?;
    let ej_plus = sign_block(xj.adjacency(), map, false, tol)?;
    let ej_minus = sign_block(xj.adjacency(), map, true, tol)?;
    let n = group.order();
    let plus_ok = match_multisets(&ei_plus, &ej_plus, tol);
    let neg_j: Vec<f64> = ej_minus.iter().map(|v| -v).collect();
    let minus_ok = match_multisets(&ei_minus, &neg_j, tol);
    let size_ok = 2 * ei_plus.len() == n + f_ij && ei_plus.len() + ei_minus.len() == n;
    Ok(PairingCertificate {
        group: group.label(),
        families: [xi.family().to_string(), xj.family().to_string()],
        i,
        j,
        f_ij,
        n,
        plus_size: ei_plus.len(),
        minus_size: ei_minus.len(),
        e_plus: ei_plus,
        e_minus: ei_minus,
        max_residual: plus_ok.residual.max(minus_ok.residual),
        exact_identity: true,
        pass: plus_ok.matched && minus_ok.matched && size_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inner_automorphism, negation};

    fn opts() -> EigenOptions {
        EigenOptions::default()
    }

    #[test]
    fn k5_is_ramanujan() {
        let z5 = Group::parse("cyclic:5").unwrap();
        let s = ConnectionMultiset::parse(&z5, "1;2;3;4").unwrap();
        let g = build_variant(&z5, &s, Variant::Cayley, None).unwrap();
        let c = certify_ramanujan(&g, opts()).unwrap();
        assert!(c.pass);
        assert!((c.lambda_star - 1.0).abs() < 1e-12);
        let gap = spectral_gap(&g, opts()).unwrap();
        assert!((gap.lambda2_over_d + 0.25).abs() < 1e-12);
    }

    #[test]
    fn failing_circulant() {
        let z14 = Group::parse("cyclic:14").unwrap();
        let s = ConnectionMultiset::parse(&z14, "1;6;8;13").unwrap();
        let g = build_variant(&z14, &s, Variant::Cayley, None).unwrap();
        let c = certify_ramanujan(&g, opts()).unwrap();
        assert!(!c.pass);
        // oracle: circulant eigenvalues sum_s cos(2 pi k s / 14)
        let oracle = (1..14)
            .map(|k| {
                [1.0, 6.0, 8.0, 13.0]
                    .iter()
                    .map(|s: &f64| (2.0 * std::f64::consts::PI * k as f64 * s / 14.0).cos())
                    .sum::<f64>()
                    .abs()
            })
            .filter(|v| (v - 4.0).abs() > 1e-9)
            .fold(0.0f64, f64::max);
        assert!((c.lambda_star - oracle).abs() < 1e-9);
        assert!(c.lambda_star > 2.0 * 3f64.sqrt());
    }

    #[test]
    fn disconnected_rejected() {
        let z8 = Group::parse("cyclic:8").unwrap();
        let s = ConnectionMultiset::parse(&z8, "2;6").unwrap();
        let g = build_variant(&z8, &s, Variant::Cayley, None).unwrap();
        assert!(matches!(
            certify_ramanujan(&g, opts()),
            Err(Error::Hypothesis { .. })
        ));
    }

    #[test]
    fn pairing_examples() {
        let z5 = Group::parse("cyclic:5").unwrap();
        let s = ConnectionMultiset::parse(&z5, "1;4").unwrap();
        let c = pairing_certificate(&z5, &s, &GroupMap::identity(&z5), 1, 2, 1e-6).unwrap();
        assert_eq!((c.f_ij, c.plus_size), (1, 3));
        assert!(c.pass);

        let z4 = Group::parse("cyclic:4").unwrap();
        let s = ConnectionMultiset::parse(&z4, "1;3").unwrap();
        let c = pairing_certificate(&z4, &s, &negation(&z4).unwrap(), 1, 3, 1e-6).unwrap();
        assert_eq!((c.f_ij, c.plus_size), (2, 3));
        assert!(c.pass);

        let s3 = Group::parse("sym:3").unwrap();
        let s = ConnectionMultiset::parse(&s3, "(1,2,3);(1,3,2)").unwrap();
        let t = s3.parse_element("(1,2)").unwrap();
        let sigma = inner_automorphism(&s3, t).unwrap();
        let c = pairing_certificate(&s3, &s, &sigma, 1, 3, 1e-6).unwrap();
        assert_eq!((c.f_ij, c.plus_size), (2, 4));
        assert!(c.pass);
    }

    #[test]
    fn pairing_rejects_directed() {
        let z5 = Group::parse("cyclic:5").unwrap();
        let s = ConnectionMultiset::parse(&z5, "1").unwrap();
        let err = pairing_certificate(&z5, &s, &GroupMap::identity(&z5), 1, 2, 1e-6).unwrap_err();
        assert!(matches!(err, Error::Hypothesis { .. }));
    }
}
