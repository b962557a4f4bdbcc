//! Householder reduction of a symmetric matrix to tridiagonal form, implicit-shift QL
//! on the tridiagonal, and inverse iteration for selected eigenvectors.
//!
//! The reduction keeps its reflectors so that eigenvectors of the tridiagonal can be
//! carried back to the original basis in `O(n^2)` each, which is what the backward
//! check needs on matrices too large for a dense LU per shift.

use super::dense::DenseMatrix;
use super::real::Real;
use crate::error::{Error, Result};

/// Iteration cap per eigenvalue in the QL sweep.
const QL_MAX_ITER: usize = 60;

#[derive(Clone, Debug)]
pub struct Tridiagonal<T> {
    /// Diagonal.
    pub d: Vec<T>,
    /// `e[i] = T[i+1][i]`; `e.len() == d.len()` with a trailing zero.
    pub e: Vec<T>,
    /// Unit reflector `v_k` acting on coordinates `k+1..n`, or `None` when skipped.
    reflectors: Vec<Option<Vec<T>>>,
}

/// Reduces `a` (assumed symmetric) in place; only the lower-right blocks are touched.
pub fn tridiagonalize<T: Real>(mut a: DenseMatrix<T>) -> Tridiagonal<T> {
    let n = a.n();
    let two = T::one() + T::one();
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
    let data = a.data_mut();
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        let mut v: Vec<T> = (k + 1..n).map(|i| data[k * n + i]).collect();
        let norm = v.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
        d[k] = data[k * n + k];
        if norm == T::zero() {
            e[k] = T::zero();
            reflectors.push(None);
            continue;
        }
        let alpha = if v[0] > T::zero() { -norm } else { norm };
        v[0] = v[0] - alpha;
        let vnorm = v.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
        for x in v.iter_mut() {
            *x = *x / vnorm;
        }
        e[k] = alpha;
        let off = k + 1;
        let mut w = vec![T::zero(); m];
        for (i, wi) in w.iter_mut().enumerate() {
            let row = &data[(off + i) * n + off..(off + i) * n + n];
            *wi = row
                .iter()
                .zip(&v)
                .fold(T::zero(), |acc, (&x, &y)| acc + x * y);
        }
        let c = w
            .iter()
            .zip(&v)
            .fold(T::zero(), |acc, (&x, &y)| acc + x * y);
        for (wi, &vi) in w.iter_mut().zip(&v) {
            *wi = *wi - c * vi;
        }
        for i in 0..m {
            let (vi, qi) = (two * v[i], two * w[i]);
            let row = &mut data[(off + i) * n + off..(off + i) * n + n];
            for j in 0..m {
                row[j] = row[j] - vi * w[j] - qi * v[j];
            }
        }
        reflectors.push(Some(v));
    }
    if n >= 2 {
        d[n - 2] = data[(n - 2) * n + n - 2];
        e[n - 2] = data[(n - 1) * n + n - 2];
    }
    if n >= 1 {
        d[n - 1] = data[(n - 1) * n + n - 1];
    }
    Tridiagonal { d, e, reflectors }
}

impl<T: Real> Tridiagonal<T> {
    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// All eigenvalues by implicit-shift QL, sorted descending.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        let mut d = self.d.clone();
        let mut e = self.e.clone();
        ql_implicit(&mut d, &mut e)?;
        d.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Ok(d)
    }

    /// Unit eigenvector of the original matrix for the (approximate) eigenvalue `lambda`,
    /// by three steps of inverse iteration on the tridiagonal followed by back-transformation.
    pub fn eigenvector(&self, lambda: T) -> Vec<T> {
        let n = self.n();
        let scale = self
            .d
            .iter()
            .chain(&self.e)
            .fold(T::one(), |acc, &x| acc.max(x.abs()));
        let shift = lambda + T::epsilon() * scale * T::of(16.0);
        let lu = TridiagLu::factor(&self.d, &self.e, shift, scale);
        let mut y: Vec<T> = (0..n)
            .map(|i| T::one() + T::of((i % 7) as f64 / 10.0))
            .collect();
        for _ in 0..3 {
            lu.solve(&mut y);
            let norm = y.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
            for x in y.iter_mut() {
                *x = *x / norm;
            }
        }
        self.back_transform(&mut y);
        y
    }

    /// Applies `Q = H_0 H_1 ... H_{n-3}` to `y` in place.
    pub fn back_transform(&self, y: &mut [T]) {
        let two = T::one() + T::one();
        for (k, v) in self.reflectors.iter().enumerate().rev() {
            if let Some(v) = v {
                let sub = &mut y[k + 1..];
                let dot = sub
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (&a, &b)| acc + a * b);
                for (s, &vi) in sub.iter_mut().zip(v) {
                    *s = *s - two * dot * vi;
                }
            }
        }
    }
}

/// QL with implicit Wilkinson-type shifts on `(d, e)`; eigenvalues are left in `d`.
fn ql_implicit<T: Real>(d: &mut [T], e: &mut [T]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = T::zero();
    let two = T::one() + T::one();
    // absolute floor so clusters of (near-)zero eigenvalues still deflate
    let norm = d
        .iter()
        .zip(e.iter())
        .fold(T::zero(), |acc, (&a, &b)| acc.max(a.abs() + b.abs()));
    let floor = T::epsilon() * norm;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_MAX_ITER {
                return Err(Error::Internal(format!(
                    "QL iteration did not converge for eigenvalue {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}

/// LU of `T - shift I` with partial pivoting (fill in the second superdiagonal).
struct TridiagLu<T> {
    dl: Vec<T>,
    dd: Vec<T>,
    du: Vec<T>,
    du2: Vec<T>,
    swapped: Vec<bool>,
}

impl<T: Real> TridiagLu<T> {
    fn factor(d: &[T], e: &[T], shift: T, scale: T) -> Self {
        let n = d.len();
        let tiny = T::epsilon() * scale;
        let mut dd: Vec<T> = d.iter().map(|&x| x - shift).collect();
        let mut dl: Vec<T> = e[..n.saturating_sub(1)].to_vec();
        let mut du = dl.clone();
        let mut du2 = vec![T::zero(); n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if dd[i].abs() >= dl[i].abs() {
                if dd[i] == T::zero() {
                    dd[i] = tiny;
                }
                let fact = dl[i] / dd[i];
                dl[i] = fact;
                dd[i + 1] = dd[i + 1] - fact * du[i];
            } else {
                let fact = dd[i] / dl[i];
                dd[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = dd[i + 1];
                dd[i + 1] = temp - fact * dd[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        if n > 0 && dd[n - 1] == T::zero() {
            dd[n - 1] = tiny;
        }
        TridiagLu {
            dl,
            dd,
            du,
            du2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [T]) {
        let n = b.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] = b[i + 1] - self.dl[i] * b[i];
            }
        }
        if n == 0 {
            return;
        }
        b[n - 1] = b[n - 1] / self.dd[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.dd[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.dd[i];
        }
    }
}
