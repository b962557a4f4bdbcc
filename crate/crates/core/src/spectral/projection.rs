//! Orthonormal bases of joint sign eigenspaces of commuting involutions, and compression
//! of a symmetric matrix onto them.
//!
//! The columns of `prod_t (1 + e_t P_t)/2` are supported on single orbits of the group the
//! involutions generate, so Gram–Schmidt runs orbit by orbit on short sparse vectors.

use super::dense::DenseMatrix;
use super::real::Real;
use crate::graph::Adjacency;
use std::collections::BTreeMap;

/// Sparse unit vectors spanning `V_eps`.
#[derive(Clone, Debug)]
pub struct SignedBasis<T> {
    pub n: usize,
    pub vectors: Vec<Vec<(usize, T)>>,
}

impl<T: Real> SignedBasis<T> {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Orbits of the group generated by `maps`, each sorted, listed by smallest element.
pub fn orbits(n: usize, maps: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for m in maps {
                let y = m[x];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// `signs[t] = true` selects the `-1` eigenspace of `maps[t]`.
pub fn signed_basis<T: Real>(n: usize, maps: &[&[usize]], signs: &[bool]) -> SignedBasis<T> {
    assert_eq!(maps.len(), signs.len(), "one sign per involution");
    let k = maps.len();
    let weight = T::one() / T::of((1u64 << k) as f64);
    let drop = T::of(1e-9);
    let mut vectors = Vec::new();
    for orbit in orbits(n, maps) {
        let mut accepted: Vec<BTreeMap<usize, T>> = Vec::new();
        for &x in &orbit {
            let mut col: BTreeMap<usize, T> = BTreeMap::new();
            for mask in 0..1usize << k {
                let mut y = x;
                let mut negative = false;
                for t in 0..k {
                    if mask >> t & 1 == 1 {
                        y = maps[t][y];
                        negative ^= signs[t];
                    }
                }
                let w = if negative { -weight } else { weight };
                let e = col.entry(y).or_insert(T::zero());
                *e = *e + w;
            }
            for q in &accepted {
                let dot = col.iter().fold(T::zero(), |acc, (i, &v)| {
                    acc + v * q.get(i).copied().unwrap_or(T::zero())
                });
                for (i, &qv) in q {
                    let e = col.entry(*i).or_insert(T::zero());
                    *e = *e - dot * qv;
                }
            }
            let norm = col.values().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
            if norm > drop {
                col.retain(|_, v| v.abs() > T::epsilon());
                for v in col.values_mut() {
                    *v = *v / norm;
                }
                accepted.push(col);
            }
        }
        vectors.extend(
            accepted
                .into_iter()
                .map(|c| c.into_iter().collect::<Vec<_>>()),
        );
    }
    SignedBasis { n, vectors }
}

/// `B^T A B` for a symmetric `A`, symmetrized.
pub fn compress<T: Real>(a: &Adjacency, basis: &SignedBasis<T>) -> DenseMatrix<T> {
    let dim = basis.dim();
    let mut member: Vec<Vec<(usize, T)>> = vec![Vec::new(); basis.n];
    for (bi, v) in basis.vectors.iter().enumerate() {
        for &(x, c) in v {
            member[x].push((bi, c));
        }
    }
    let mut m = DenseMatrix::<T>::zeros(dim);
    let mut acc: BTreeMap<usize, T> = BTreeMap::new();
    for (b, v) in basis.vectors.iter().enumerate() {
        acc.clear();
        // (A v)[z] = sum_y A[y, z] v[y] by symmetry
        for &(y, c) in v {
            for &(z, mult) in a.row(y) {
                let e = acc.entry(z as usize).or_insert(T::zero());
                *e = *e + c * T::from_u32(mult).expect("multiplicity fits");
            }
        }
        for (&z, &av) in &acc {
            for &(row, c) in &member[z] {
                let cur = m.get(row, b);
                m.set(row, b, cur + c * av);
            }
        }
    }
    let half = T::of(0.5);
    for i in 0..dim {
        for j in 0..i {
            let s = (m.get(i, j) + m.get(j, i)) * half;
            m.set(i, j, s);
            m.set(j, i, s);
        }
    }
    m
}

/// Dense `prod_t (1 + e_t P_t)/2`, for rank cross-checks on small instances.
pub fn dense_projector<T: Real>(n: usize, maps: &[&[usize]], signs: &[bool]) -> DenseMatrix<T> {
    let mut pi = DenseMatrix::<T>::identity(n);
    let half = T::of(0.5);
    for (m, &neg) in maps.iter().zip(signs) {
        let mut factor = DenseMatrix::<T>::zeros(n);
        for y in 0..n {
            let cur = factor.get(y, y);
            factor.set(y, y, cur + half);
            // P e_y = e_{m(y)}
            let cur = factor.get(m[y], y);
            factor.set(m[y], y, cur + if neg { -half } else { half });
        }
        pi = pi.matmul(&factor);
    }
    pi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_on_z8() {
        let neg: Vec<usize> = (0..8).map(|x| (8 - x) % 8).collect();
        let plus = signed_basis::<f64>(8, &[&neg], &[false]);
        let minus = signed_basis::<f64>(8, &[&neg], &[true]);
        assert_eq!((plus.dim(), minus.dim()), (5, 3));
    }

    #[test]
    fn identity_involution() {
        let id: Vec<usize> = (0..6).collect();
        assert_eq!(signed_basis::<f64>(6, &[&id], &[false]).dim(), 6);
        assert_eq!(signed_basis::<f64>(6, &[&id], &[true]).dim(), 0);
    }

    #[test]
    fn projector_is_idempotent() {
        let p1: Vec<usize> = vec![1, 0, 2, 3];
        let p2: Vec<usize> = vec![0, 1, 3, 2];
        for signs in [[false, false], [true, false], [false, true], [true, true]] {
            let pi = dense_projector::<f64>(4, &[&p1, &p2], &signs);
            assert!(pi.matmul(&pi).max_abs_diff(&pi) < 1e-12);
        }
    }

    #[test]
    fn compression_preserves_trace_split() {
        // C(Z/8, {1,7}) with negation: the compressed blocks partition the spectrum
        let a = Adjacency::from_entries(
            8,
            (0..8).flat_map(|x| [(x, (x + 1) % 8, 1), (x, (x + 7) % 8, 1)]),
        )
        .unwrap();
        let neg: Vec<usize> = (0..8).map(|x| (8 - x) % 8).collect();
        let mut all = Vec::new();
        for s in [false, true] {
            let b = signed_basis::<f64>(8, &[&neg], &[s]);
            let m = compress(&a, &b);
            all.extend(super::super::eigen::dense_eigenvalues(&m, 1e-9).unwrap());
        }
        all.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let mut expect: Vec<f64> = (0..8)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 8.0).cos())
            .collect();
        expect.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (x, y) in all.iter().zip(&expect) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
