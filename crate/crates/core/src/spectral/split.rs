//! Joint sign decompositions under commuting involutions, and the checks built on them:
//! the symmetric-spectrum verifier, `H`-isospectrality, isotypic dimensions, uniformity
//! counts and the symmetric-subset / non-isospectral dichotomy.

use super::eigen::{dense_eigenvalues, eigensolve, EigenOptions};
use super::projection::{compress, dense_projector, signed_basis};
use super::spectrum::{match_multisets, max_symmetric_subset, Spectrum, SymmetricSubset};
use crate::algebra::{Group, GroupMap, Perm};
use crate::error::{Error, Result};
use crate::graph::{
    build_gabber_galil, build_variant, Adjacency, ConnectionMultiset, InvolutionMatrix, KleinGroup,
    Variant,
};
use serde::Serialize;

pub const MAX_SPLIT_K: usize = 6;

/// Sign vector of a mask: bit `t` set means `eps_t = -1`.
pub fn signs_of(mask: usize, k: usize) -> Vec<bool> {
    (0..k).map(|t| mask >> t & 1 == 1).collect()
}

/// `chi(h)` for characters and elements of `(Z/2)^k` both written as masks.
pub fn character(chi: usize, h: usize) -> i32 {
    if (chi & h).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn sign_string(mask: usize, k: usize) -> String {
    (0..k)
        .map(|t| if mask >> t & 1 == 1 { '-' } else { '+' })
        .collect()
}

/// Checks that the involutions commute pairwise.
pub fn require_commuting(ps: &[InvolutionMatrix]) -> Result<()> {
    for s in 0..ps.len() {
        for t in s + 1..ps.len() {
            if let Some(x) =
                (0..ps[s].n()).find(|&x| ps[s].apply(ps[t].apply(x)) != ps[t].apply(ps[s].apply(x)))
            {
                return Err(Error::hypothesis(
                    format!("involutions {s} and {t} do not commute"),
                    format!("vertex {x}"),
                ));
            }
        }
    }
    Ok(())
}

fn require_commutes_with(a: &Adjacency, ps: &[InvolutionMatrix], label: &str) -> Result<()> {
    for (t, p) in ps.iter().enumerate() {
        if let Some((x, y)) = p.commutator_witness(a) {
            return Err(Error::hypothesis(
                format!("{label} does not commute with involution {t}"),
                format!("entry ({x}, {y})"),
            ));
        }
    }
    Ok(())
}

/// The product of the involutions selected by `mask`.
pub fn subset_product(ps: &[InvolutionMatrix], mask: usize) -> Vec<usize> {
    let n = ps.first().map_or(0, InvolutionMatrix::n);
    (0..n)
        .map(|x| {
            ps.iter()
                .enumerate()
                .filter(|(t, _)| mask >> t & 1 == 1)
                .fold(x, |y, (_, p)| p.apply(y))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignedBlock {
    pub mask: usize,
    pub signs: String,
    pub dim: usize,
    pub eigenvalues: Vec<f64>,
    pub positive: Vec<f64>,
    pub negative: Vec<f64>,
    pub zero: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignedSplit {
    pub n: usize,
    pub k: usize,
    pub tol: f64,
    /// Indexed by mask; mask 0 is `(1, ..., 1)`.
    pub blocks: Vec<SignedBlock>,
}

fn block_spectrum(a: &Adjacency, maps: &[&[usize]], mask: usize, tol: f64) -> Result<Vec<f64>> {
    let basis = signed_basis::<f64>(a.n(), maps, &signs_of(mask, maps.len()));
    dense_eigenvalues(&compress(a, &basis), tol)
}

pub fn joint_signed_split(a: &Adjacency, ps: &[InvolutionMatrix], tol: f64) -> Result<SignedSplit> {
    let k = ps.len();
    if k > MAX_SPLIT_K {
        return Err(Error::InvalidParameter(format!(
            "{k} involutions exceed the cap {MAX_SPLIT_K}"
        )));
    }
    if ps.iter().any(|p| p.n() != a.n()) {
        return Err(Error::Precondition(
            "involutions act on a different vertex set".into(),
        ));
    }
    if let Some((row, col)) = a.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    require_commuting(ps)?;
    require_commutes_with(a, ps, "A")?;
    let maps: Vec<&[usize]> = ps.iter().map(InvolutionMatrix::map).collect();
    let mut blocks = Vec::with_capacity(1 << k);
    for mask in 0..1usize << k {
        let ev = block_spectrum(a, &maps, mask, tol)?;
        let positive: Vec<f64> = ev.iter().copied().filter(|&v| v > tol).collect();
        let negative: Vec<f64> = ev.iter().copied().filter(|&v| v < -tol).collect();
        blocks.push(SignedBlock {
            mask,
            signs: sign_string(mask, k),
            dim: ev.len(),
            zero: ev.len() - positive.len() - negative.len(),
            positive,
            negative,
            eigenvalues: ev,
        });
    }
    let total: usize = blocks.iter().map(|b| b.dim).sum();
    if total != a.n() {
        return Err(Error::Internal(format!(
            "joint eigenspaces sum to {total}, not {}",
            a.n()
        )));
    }
    Ok(SignedSplit {
        n: a.n(),
        k,
        tol,
        blocks,
    })
}

/// Largest deviation of the sign projectors from idempotence and mutual orthogonality.
pub fn projector_defect(n: usize, ps: &[InvolutionMatrix]) -> f64 {
    let maps: Vec<&[usize]> = ps.iter().map(InvolutionMatrix::map).collect();
    let k = maps.len();
    let pis: Vec<_> = (0..1usize << k)
        .map(|m| dense_projector::<f64>(n, &maps, &signs_of(m, k)))
        .collect();
    let zero = super::dense::DenseMatrix::<f64>::zeros(n);
    let mut worst = 0.0f64;
    for (i, p) in pis.iter().enumerate() {
        worst = worst.max(p.matmul(p).max_abs_diff(p));
        for q in &pis[i + 1..] {
            worst = worst.max(p.matmul(q).max_abs_diff(&zero));
        }
    }
    worst
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetricSplitVerdict {
    /// `spec(A) = spec(P_I A)` for every nonempty `I`.
    pub hypothesis_holds: bool,
    pub hypothesis_residual: f64,
    /// `E_{eps,+} = -E_{eps,-}` for every `eps != (1, ..., 1)`; `None` when the hypothesis fails.
    pub conclusion_holds: Option<bool>,
    pub conclusion_residual: f64,
    /// `N - dim V_{(1, ..., 1)}`.
    pub symmetric_subset_size: usize,
    /// Largest symmetric sub-multiset of `spec(A)`, for comparison.
    pub max_symmetric: usize,
}

pub fn verify_symmetric_split(
    a: &Adjacency,
    ps: &[InvolutionMatrix],
    split: &SignedSplit,
    opts: EigenOptions,
) -> Result<SymmetricSplitVerdict> {
    let tol = split.tol;
    let base: Spectrum<f64> = eigensolve(a, opts)?;
    let mut hypothesis_residual = 0.0f64;
    let mut hypothesis_holds = true;
    for mask in 1..1usize << ps.len() {
        let pa = a.permute_rows(&subset_product(ps, mask));
        let sp: Spectrum<f64> = eigensolve(&pa, opts)?;
        let m = base.matches(&sp);
        hypothesis_residual = hypothesis_residual.max(m.residual);
        hypothesis_holds &= m.matched;
    }
    let mut conclusion_residual = 0.0f64;
    let mut conclusion = true;
    for b in split.blocks.iter().skip(1) {
        let neg: Vec<f64> = b.negative.iter().map(|v| -v).collect();
        let m = match_multisets(&b.positive, &neg, tol);
        conclusion_residual = conclusion_residual.max(m.residual);
        conclusion &= m.matched;
    }
    let symmetric_subset_size = split.n - split.blocks[0].dim;
    Ok(SymmetricSplitVerdict {
        hypothesis_holds,
        hypothesis_residual,
        conclusion_holds: hypothesis_holds.then_some(conclusion),
        conclusion_residual,
        symmetric_subset_size,
        max_symmetric: base.max_symmetric_subset().size,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterVerdict {
    pub chi: usize,
    pub signs: String,
    pub dim: usize,
    pub pass: bool,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HIsospectralVerdict {
    pub k: usize,
    pub characters: Vec<CharacterVerdict>,
    pub pass: bool,
}

/// `H`-isospectrality of the twists `G_n^h` for `h` in a Klein four-group of coordinate twists.
pub fn gabber_galil_h_isospectral(
    n: u32,
    group: &KleinGroup,
    tol: f64,
) -> Result<HIsospectralVerdict> {
    let members = group
        .elements()
        .iter()
        .map(|&t| build_gabber_galil(n, Some(t)).map(|g| g.adjacency().clone()))
        .collect::<Result<Vec<_>>>()?;
    let gens = group
        .generators
        .iter()
        .map(|t| InvolutionMatrix::new(t.vertex_map(n)))
        .collect::<Result<Vec<_>>>()?;
    h_isospectral_check(&members, &gens, tol)
}

/// `H`-isospectrality of `C(G,S)^h` for `h` in the group generated by commuting involutive
/// automorphisms `sigmas`; mask 0 is the untwisted Cayley graph.
pub fn twisted_h_isospectral(
    group: &Group,
    s: &ConnectionMultiset,
    sigmas: &[GroupMap],
    tol: f64,
) -> Result<HIsospectralVerdict> {
    let k = sigmas.len();
    if k == 0 || k > MAX_SPLIT_K {
        return Err(Error::InvalidParameter(format!(
            "need 1..={MAX_SPLIT_K} automorphisms, got {k}"
        )));
    }
    let mut members = Vec::with_capacity(1 << k);
    for mask in 0..1usize << k {
        let mut h = GroupMap::identity(group);
        for (t, sg) in sigmas.iter().enumerate() {
            if mask >> t & 1 == 1 {
                h = h.compose(sg)?;
            }
        }
        members.push(
            build_variant(group, s, Variant::TwistedCayley, Some(&h))?
                .adjacency()
                .clone(),
        );
    }
    let gens = sigmas
        .iter()
        .map(InvolutionMatrix::from_group_map)
        .collect::<Result<Vec<_>>>()?;
    h_isospectral_check(&members, &gens, tol)
}

/// `members[h]` is the graph indexed by the element `h` (a mask over `gens`); `members[0]` is the base.
pub fn h_isospectral_check(
    members: &[Adjacency],
    gens: &[InvolutionMatrix],
    tol: f64,
) -> Result<HIsospectralVerdict> {
    let k = gens.len();
    if k > MAX_SPLIT_K {
        return Err(Error::InvalidParameter(format!(
            "{k} generators exceed the cap {MAX_SPLIT_K}"
        )));
    }
    if members.len() != 1 << k {
        return Err(Error::InvalidParameter(format!(
            "need {} graphs for |H| = {}, got {}",
            1 << k,
            1 << k,
            members.len()
        )));
    }
    require_commuting(gens)?;
    for (h, a) in members.iter().enumerate() {
        if let Some((row, col)) = a.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        require_commutes_with(a, gens, &format!("graph {h}"))?;
    }
    let maps: Vec<&[usize]> = gens.iter().map(InvolutionMatrix::map).collect();
    let mut characters = Vec::with_capacity(1 << k);
    for chi in 0..1usize << k {
        let base = block_spectrum(&members[0], &maps, chi, tol)?;
        let mut residual = 0.0f64;
        let mut pass = true;
        for (h, a) in members.iter().enumerate().skip(1) {
            let ev = block_spectrum(a, &maps, chi, tol)?;
            let c = character(chi, h) as f64;
            let scaled: Vec<f64> = base.iter().map(|v| c * v).collect();
            let m = match_multisets(&ev, &scaled, tol);
            residual = residual.max(m.residual);
            pass &= m.matched;
        }
        characters.push(CharacterVerdict {
            chi,
            signs: sign_string(chi, k),
            dim: base.len(),
            pass,
            residual,
        });
    }
    let pass = characters.iter().all(|c| c.pass);
    Ok(HIsospectralVerdict {
        k,
        characters,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicDimensions {
    /// `Fix(h)` per element mask.
    pub fixed: Vec<usize>,
    /// `dim V_chi` per character mask.
    pub dims: Vec<usize>,
}

/// Burnside: `dim V_chi = |H|^{-1} sum_h chi(h) Fix(h)`, in exact integer arithmetic.
pub fn isotypic_dimensions(n: usize, gens: &[InvolutionMatrix]) -> Result<IsotypicDimensions> {
    let k = gens.len();
    if k > MAX_SPLIT_K {
        return Err(Error::InvalidParameter(format!(
            "{k} generators exceed the cap {MAX_SPLIT_K}"
        )));
    }
    require_commuting(gens)?;
    let fixed: Vec<usize> = (0..1usize << k)
        .map(|h| {
            subset_product(gens, h)
                .iter()
                .enumerate()
                .filter(|(x, &y)| *x == y)
                .count()
        })
        .collect();
    let fixed = if k == 0 { vec![n] } else { fixed };
    let order = 1i64 << k;
    let dims = (0..1usize << k)
        .map(|chi| {
            let s: i64 = fixed
                .iter()
                .enumerate()
                .map(|(h, &f)| character(chi, h) as i64 * f as i64)
                .sum();
            if s % order != 0 || s < 0 {
                Err(Error::Internal(format!(
                    "character sum {s} is not a multiple of {order}"
                )))
            } else {
                Ok((s / order) as usize)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IsotypicDimensions { fixed, dims })
}

/// Rank of the dense projector onto `V_chi`, as the number of eigenvalues above one half.
pub fn projector_rank(n: usize, gens: &[InvolutionMatrix], chi: usize) -> Result<usize> {
    let maps: Vec<&[usize]> = gens.iter().map(InvolutionMatrix::map).collect();
    let pi = dense_projector::<f64>(n, &maps, &signs_of(chi, gens.len()));
    Ok(dense_eigenvalues(&pi, 1e-9)?
        .iter()
        .filter(|&&v| v > 0.5)
        .count())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniformityRow {
    pub n: usize,
    pub group_order: usize,
    /// Elements whose `H`-conjugates are pairwise distinct.
    pub m: usize,
    pub m_ratio: f64,
    pub dims: Vec<usize>,
    pub ratios: Vec<f64>,
}

/// `H = <(1,2), (3,4), ..., (2k-1,2k)>` acting by conjugation on `S_n` or `A_n`.
pub fn uniformity_row(k: usize, n: usize, alternating: bool) -> Result<UniformityRow> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2k >= 2, got k = {k}, n = {n}"
        )));
    }
    if n > 9 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is too large to enumerate"
        )));
    }
    let h: Vec<Perm> = (0..1usize << k)
        .map(|mask| {
            (0..k)
                .filter(|t| mask >> t & 1 == 1)
                .fold(Perm::identity(n), |acc, t| {
                    acc.compose(
                        &Perm::from_cycles(n, &[vec![2 * t + 1, 2 * t + 2]])
                            .expect("valid transposition"),
                    )
                })
        })
        .collect();
    let mut fixed = vec![0usize; h.len()];
    let mut m = 0usize;
    let mut order = 0usize;
    let mut cur = Some(Perm::identity(n));
    while let Some(g) = cur {
        if !alternating || g.is_even() {
            order += 1;
            let mut conj: Vec<Perm> = h.iter().map(|x| x.compose(&g).compose(x)).collect();
            for (i, c) in conj.iter().enumerate() {
                if *c == g {
                    fixed[i] += 1;
                }
            }
            conj.sort_unstable();
            conj.dedup();
            if conj.len() == h.len() {
                m += 1;
            }
        }
        cur = g.next_lex();
    }
    let size = h.len() as i64;
    let dims: Vec<usize> = (0..h.len())
        .map(|chi| {
            let s: i64 = fixed
                .iter()
                .enumerate()
                .map(|(x, &f)| character(chi, x) as i64 * f as i64)
                .sum();
            (s / size) as usize
        })
        .collect();
    Ok(UniformityRow {
        n,
        group_order: order,
        m,
        m_ratio: m as f64 / order as f64,
        ratios: dims.iter().map(|&d| d as f64 / order as f64).collect(),
        dims,
    })
}

pub fn uniformity_report(
    k: usize,
    ns: impl IntoIterator<Item = usize>,
    alternating: bool,
) -> Result<Vec<UniformityRow>> {
    ns.into_iter()
        .map(|n| uniformity_row(k, n, alternating))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwistComparison {
    pub mask: usize,
    pub sigma: String,
    pub isospectral: bool,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DichotomyReport {
    pub n: usize,
    /// `N - dim` of the joint fixed space of the twists acting on functions.
    pub required_symmetric_size: usize,
    pub max_symmetric: SymmetricSubset,
    pub twists: Vec<TwistComparison>,
    pub symmetric_horn: bool,
    pub non_isospectral_horn: bool,
    pub pass: bool,
}

/// Either `spec C(G,S)` has a symmetric subset of size `N - dim V_{(1,...,1)}` or some twist
/// `C(G,S)^{sigma_I}` is not isospectral to `C(G,S)`.
pub fn dichotomy(
    group: &Group,
    s: &ConnectionMultiset,
    sigmas: &[GroupMap],
    opts: EigenOptions,
) -> Result<DichotomyReport> {
    let k = sigmas.len();
    if k == 0 || k > MAX_SPLIT_K {
        return Err(Error::InvalidParameter(format!(
            "need 1..={MAX_SPLIT_K} twists, got {k}"
        )));
    }
    for (t, sg) in sigmas.iter().enumerate() {
        if s.map_image(sg) != *s {
            return Err(Error::hypothesis(
                format!("twist {t} does not preserve S"),
                sg.description().to_string(),
            ));
        }
    }
    let ps: Vec<InvolutionMatrix> = sigmas
        .iter()
        .map(InvolutionMatrix::from_group_map)
        .collect::<Result<_>>()?;
    require_commuting(&ps)?;
    let base = build_variant(group, s, Variant::Cayley, None)?;
    base.require_undirected()?;
    let sp: Spectrum<f64> = eigensolve(base.adjacency(), opts)?;
    let dims = isotypic_dimensions(group.order(), &ps)?;
    let required = group.order() - dims.dims[0];
    let max_symmetric = sp.max_symmetric_subset();
    let mut twists = Vec::new();
    for mask in 1..1usize << k {
        let mut sigma = GroupMap::identity(group);
        for (t, sg) in sigmas.iter().enumerate() {
            if mask >> t & 1 == 1 {
                sigma = sg.compose(&sigma)?;
            }
        }
        let tw = build_variant(group, s, Variant::TwistedCayley, Some(&sigma))?;
        let tsp: Spectrum<f64> = eigensolve(tw.adjacency(), opts)?;
        let m = sp.matches(&tsp);
        twists.push(TwistComparison {
            mask,
            sigma: sigma.description().to_string(),
            isospectral: m.matched,
            residual: m.residual,
        });
    }
    let symmetric_horn = max_symmetric.size >= required;
    let non_isospectral_horn = twists.iter().any(|t| !t.isospectral);
    Ok(DichotomyReport {
        n: group.order(),
        required_symmetric_size: required,
        max_symmetric,
        twists,
        symmetric_horn,
        non_isospectral_horn,
        pass: symmetric_horn || non_isospectral_horn,
    })
}

/// Largest symmetric subset of an arbitrary value list (re-exported for reports).
pub fn symmetric_subset_of(values: &[f64], tol: f64) -> SymmetricSubset {
    max_symmetric_subset(values, tol)
}
