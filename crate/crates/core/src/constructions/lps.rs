//! Lubotzky–Phillips–Sarnak connection sets on `PSL_2(F_q)` / `PGL_2(F_q)` and their
//! order-two conjugation twists.

use crate::algebra::numtheory::{is_prime, is_square_mod, sqrt_minus_one};
use crate::algebra::{
    matrix::{self, Mat2},
    matrix_conjugation_automorphism, Element, Group, GroupMap, GroupSpec, MatrixKind,
};
use crate::error::{Error, Result};
use crate::graph::{build_variant, ConnectionMultiset, Variant, VariantGraph};

/// Number of twist matrices offered by [`lps_sigma`].
pub const LPS_SIGMA_CHOICES: usize = 5;

#[derive(Clone, Debug)]
pub struct LpsData {
    pub p: u32,
    pub q: u32,
    /// Smallest positive square root of `-1` mod `q`.
    pub i: u32,
    pub kind: MatrixKind,
    pub group: Group,
    pub set: ConnectionMultiset,
    /// Integer solutions of `a0^2 + a1^2 + a2^2 + a3^2 = p` with `a0` odd and the rest even.
    pub quadruples: Vec<[i64; 4]>,
}

fn quadruples(p: u32) -> Vec<[i64; 4]> {
    let r = (p as f64).sqrt().floor() as i64 + 1;
    let p = p as i64;
    let mut out = Vec::new();
    for a0 in -r..=r {
        for a1 in -r..=r {
            for a2 in -r..=r {
                for a3 in -r..=r {
                    let ok_parity =
                        a0.rem_euclid(2) == 1 && a1 % 2 == 0 && a2 % 2 == 0 && a3 % 2 == 0;
                    if ok_parity && a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p {
                        out.push([a0, a1, a2, a3]);
                    }
                }
            }
        }
    }
    out
}

pub fn lps_build(p: u32, q: u32) -> Result<LpsData> {
    for (name, v) in [("p", p), ("q", q)] {
        if !is_prime(v as u64) || v % 4 != 1 {
            return Err(Error::Precondition(format!(
                "{name} = {v} must be a prime congruent to 1 mod 4"
            )));
        }
    }
    if p == q {
        return Err(Error::Precondition(format!(
            "p and q must differ (both {p})"
        )));
    }
    let kind = if is_square_mod(p as i64, q as u64)? {
        MatrixKind::PSL2
    } else {
        MatrixKind::PGL2
    };
    let group = Group::build(&GroupSpec::Matrix {
        kind,
        q,
        modulus: None,
    })?;
    let f = group.field().expect("matrix groups carry a field").clone();
    let i = sqrt_minus_one(q as u64)? as u32;
    let fi = |n: i64| f.from_int(n);
    let iu = i as i64;
    let quads = quadruples(p);
    let mut indices = Vec::new();
    for a in &quads {
        let m: Mat2 = [
            fi(a[0] + iu * a[1]),
            fi(a[2] + iu * a[3]),
            fi(-a[2] + iu * a[3]),
            fi(a[0] - iu * a[1]),
        ];
        if matrix::det(&f, &m) != fi(p as i64) {
            return Err(Error::Internal(format!(
                "determinant of {a:?} is not p mod q"
            )));
        }
        let canon = matrix::projective_canonical(&f, &m);
        let idx = group.index_of(&Element::Mat(canon)).ok_or_else(|| {
            Error::Internal(format!("quadruple {a:?} falls outside {}", group.label()))
        })?;
        if !indices.contains(&idx) {
            indices.push(idx);
        }
    }
    let set = ConnectionMultiset::new(&group, &indices)?;
    if set.degree() != p + 1 {
        return Err(Error::Internal(format!(
            "projective deduplication left {} elements, expected {}",
            set.degree(),
            p + 1
        )));
    }
    if !set.is_symmetric(&group) {
        return Err(Error::Internal(
            "LPS set is not closed under inversion".into(),
        ));
    }
    Ok(LpsData {
        p,
        q,
        i,
        kind,
        group,
        set,
        quadruples: quads,
    })
}

/// Twist matrix number `choice` (1..=5): `antidiag(1,1)`, `antidiag(1,-1)`,
/// `diag(-1,1)`, `[[0,1],[i,0]]`, `[[0,-1],[i,0]]`.
pub fn lps_sigma_matrix(q: u32, i: u32, choice: usize) -> Result<Mat2> {
    let m1 = q - 1;
    Ok(match choice {
        1 => [0, 1, 1, 0],
        2 => [0, 1, m1, 0],
        3 => [m1, 0, 0, 1],
        4 => [0, 1, i, 0],
        5 => [0, m1, i, 0],
        _ => {
            return Err(Error::InvalidParameter(format!(
                "sigma choice {choice} outside 1..={LPS_SIGMA_CHOICES}"
            )))
        }
    })
}

/// Conjugation by the chosen twist matrix on `data.group`, checked to have order 2
/// and to preserve the connection set.
pub fn lps_sigma(data: &LpsData, choice: usize) -> Result<GroupMap> {
    let m = lps_sigma_matrix(data.q, data.i, choice)?;
    let map = matrix_conjugation_automorphism(&data.group, &m)?;
    if map.order() != 2 {
        return Err(Error::Internal(format!(
            "twist {choice} has order {} on {}",
            map.order(),
            data.group.label()
        )));
    }
    if data.set.map_image(&map) != data.set {
        return Err(Error::Internal(format!(
            "twist {choice} does not preserve the LPS set"
        )));
    }
    Ok(map)
}

/// `C(G_q, S^{p,q})` when `sigma` is `None`, otherwise its twist by choice `sigma`.
pub fn lps_graph(p: u32, q: u32, sigma: Option<usize>) -> Result<VariantGraph> {
    let data = lps_build(p, q)?;
    let graph = match sigma {
        None => build_variant(&data.group, &data.set, Variant::Cayley, None)?,
        Some(c) => {
            let sg = lps_sigma(&data, c)?;
            build_variant(&data.group, &data.set, Variant::TwistedCayley, Some(&sg))?
        }
    };
    let family = match sigma {
        None => format!("lps:p={p},q={q}"),
        Some(c) => format!("lps:p={p},q={q},sigma={c}"),
    };
    Ok(graph.with_family(family))
}
