use super::real::Real;
use serde::Serialize;

/// Default absolute tolerance for multiset comparisons and clustering.
pub const DEFAULT_TOL: f64 = 1e-6;

/// Eigenvalues sorted descending, with the degree bound of the source matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum<T> {
    values: Vec<T>,
    degree: u32,
    tol: f64,
}

/// Outcome of comparing two multisets of reals.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MultisetMatch {
    pub matched: bool,
    /// Largest difference after sorted pairing; infinite when the sizes differ.
    pub residual: f64,
}

/// Sorted pairing is the optimal bottleneck matching for multisets on the line.
pub fn match_multisets<T: Real>(a: &[T], b: &[T], tol: f64) -> MultisetMatch {
    if a.len() != b.len() {
        return MultisetMatch {
            matched: false,
            residual: f64::INFINITY,
        };
    }
    let mut x: Vec<f64> = a.iter().map(|v| v.to_f64_lossy()).collect();
    let mut y: Vec<f64> = b.iter().map(|v| v.to_f64_lossy()).collect();
    x.sort_by(|p, q| p.total_cmp(q));
    y.sort_by(|p, q| p.total_cmp(q));
    let residual = x
        .iter()
        .zip(&y)
        .fold(0.0f64, |acc, (p, q)| acc.max((p - q).abs()));
    MultisetMatch {
        matched: residual <= tol,
        residual,
    }
}

/// Groups sorted values into runs whose consecutive gaps are at most `tol`.
/// Returns `(mean, count)` per run, in the input order.
pub fn cluster<T: Real>(sorted: &[T], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut prev: Option<f64> = None;
    for v in sorted.iter().map(|v| v.to_f64_lossy()) {
        match prev {
            Some(p) if (p - v).abs() <= tol => {
                let last = out.last_mut().expect("run open");
                last.1 += 1;
                sum += v;
                last.0 = sum / last.1 as f64;
            }
            _ => {
                out.push((v, 1));
                sum = v;
            }
        }
        prev = Some(v);
    }
    out
}

/// Size of the largest sub-multiset symmetric about the origin, and the matched `(lambda, -lambda)` pairs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetricSubset {
    pub size: usize,
    /// `(lambda, count)` for each positive cluster paired with its negative.
    pub pairs: Vec<(f64, usize)>,
    pub zeros: usize,
}

pub fn max_symmetric_subset<T: Real>(values: &[T], tol: f64) -> SymmetricSubset {
    let mut v: Vec<f64> = values.iter().map(|x| x.to_f64_lossy()).collect();
    v.sort_by(|p, q| q.total_cmp(p));
    let zeros = v.iter().filter(|x| x.abs() <= tol).count();
    let pos: Vec<f64> = v.iter().copied().filter(|&x| x > tol).collect();
    let mut neg: Vec<f64> = v
        .iter()
        .copied()
        .filter(|&x| x < -tol)
        .map(|x| -x)
        .collect();
    neg.sort_by(|p, q| q.total_cmp(p));
    let pc = cluster(&pos, tol);
    let nc = cluster(&neg, tol);
    let mut pairs = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < pc.len() && j < nc.len() {
        let (a, ca) = pc[i];
        let (b, cb) = nc[j];
        if (a - b).abs() <= tol {
            pairs.push((a, ca.min(cb)));
            i += 1;
            j += 1;
        } else if a > b {
            i += 1;
        } else {
            j += 1;
        }
    }
    let size = 2 * pairs.iter().map(|p| p.1).sum::<usize>() + zeros;
    SymmetricSubset { size, pairs, zeros }
}

impl<T: Real> Spectrum<T> {
    /// Sorts `values` descending.
    pub fn new(mut values: Vec<T>, degree: u32, tol: f64) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Spectrum {
            values,
            degree,
            tol,
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_f64_lossy()).collect()
    }

    pub fn sum(&self) -> f64 {
        self.to_f64().iter().sum()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.values
            .iter()
            .any(|v| (v.to_f64_lossy() - x).abs() <= self.tol)
    }

    pub fn negated(&self) -> Spectrum<T> {
        Spectrum::new(
            self.values.iter().map(|&v| -v).collect(),
            self.degree,
            self.tol,
        )
    }

    pub fn abs(&self) -> Spectrum<T> {
        Spectrum::new(
            self.values.iter().map(|v| v.abs()).collect(),
            self.degree,
            self.tol,
        )
    }

    pub fn matches(&self, other: &Spectrum<T>) -> MultisetMatch {
        match_multisets(&self.values, &other.values, self.tol)
    }

    /// `(value, multiplicity)` clusters in descending order.
    pub fn clusters(&self) -> Vec<(f64, usize)> {
        cluster(&self.values, self.tol)
    }

    /// Removes one copy of `d`, and one of `-d` when `bipartite`.
    pub fn nontrivial(&self, bipartite: bool) -> Vec<f64> {
        let d = self.degree as f64;
        let mut v = self.to_f64();
        if let Some(pos) = v.iter().position(|x| (x - d).abs() <= self.tol) {
            v.remove(pos);
        }
        if bipartite {
            if let Some(pos) = v.iter().rposition(|x| (x + d).abs() <= self.tol) {
                v.remove(pos);
            }
        }
        v
    }

    pub fn max_symmetric_subset(&self) -> SymmetricSubset {
        max_symmetric_subset(&self.values, self.tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_subset_examples() {
        assert_eq!(
            max_symmetric_subset(&[3.0, 1.0, -1.0, -1.0, 0.0], 1e-6).size,
            3
        );
        assert_eq!(max_symmetric_subset(&[2.0, 2.0, -2.0], 1e-6).size, 2);
        assert_eq!(max_symmetric_subset(&[2.0, 0.0, 0.0, -2.0], 1e-6).size, 4);
        assert_eq!(max_symmetric_subset::<f64>(&[], 1e-6).size, 0);
    }

    #[test]
    fn clustering_and_matching() {
        let s = Spectrum::new(vec![1.0, 3.0, 1.0 + 1e-9, -2.0], 3, 1e-6);
        assert_eq!(s.values()[0], 3.0);
        assert_eq!(s.clusters().len(), 3);
        assert_eq!(s.clusters()[1].1, 2);
        let t = Spectrum::new(vec![3.0, 1.0, 1.0, -2.0 + 5e-7], 3, 1e-6);
        assert!(s.matches(&t).matched);
        let u = Spectrum::new(vec![3.0, 1.0, 1.0], 3, 1e-6);
        assert!(!s.matches(&u).matched);
    }

    #[test]
    fn nontrivial_removes_single_copies() {
        let s = Spectrum::new(vec![2.0, 2.0, 0.0, -2.0], 2, 1e-6);
        assert_eq!(s.nontrivial(false), vec![2.0, 0.0, -2.0]);
        assert_eq!(s.nontrivial(true), vec![2.0, 0.0]);
    }
}
