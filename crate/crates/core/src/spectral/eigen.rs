use super::dense::DenseMatrix;
use super::real::Real;
use super::spectrum::Spectrum;
use super::tridiag::{tridiagonalize, Tridiagonal};
use crate::error::{Error, Result};
use crate::graph::Adjacency;
use serde::Serialize;

pub const DEFAULT_MAX_DENSE_N: usize = 6000;
pub const MAX_DENSE_ENV: &str = "CGL_MAX_DENSE_N";

/// The dense cap, from `CGL_MAX_DENSE_N` when set to a positive integer.
pub fn max_dense_n() -> usize {
    std::env::var(MAX_DENSE_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(DEFAULT_MAX_DENSE_N)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenOptions {
    pub cap: usize,
    pub tol: f64,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            cap: max_dense_n(),
            tol: super::spectrum::DEFAULT_TOL,
        }
    }
}

/// Full spectrum of a symmetric nonnegative integer matrix, plus the reduction it came from.
pub struct Eigensystem<T> {
    pub spectrum: Spectrum<T>,
    pub trace: u64,
    tridiagonal: Tridiagonal<T>,
}

pub fn eigensolve<T: Real>(a: &Adjacency, opts: EigenOptions) -> Result<Spectrum<T>> {
    Ok(eigensystem(a, opts)?.spectrum)
}

pub fn eigensystem<T: Real>(a: &Adjacency, opts: EigenOptions) -> Result<Eigensystem<T>> {
    let n = a.n();
    if n > opts.cap {
        return Err(Error::CapExceeded { n, cap: opts.cap });
    }
    if let Some((row, col)) = a.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let degree = (0..n).map(|x| a.row_sum(x)).max().unwrap_or(0);
    let tridiagonal = tridiagonalize(DenseMatrix::<T>::from_adjacency(a));
    let spectrum = Spectrum::new(tridiagonal.eigenvalues()?, degree, opts.tol);
    let trace = a.trace();
    let slack = (n as f64 * 1e-8)
        .max(n as f64 * degree.max(1) as f64 * T::epsilon().to_f64_lossy() * 100.0);
    if (spectrum.sum() - trace as f64).abs() > slack {
        return Err(Error::Internal(format!(
            "eigenvalue sum {} differs from trace {trace}",
            spectrum.sum()
        )));
    }
    let bound = degree as f64 + 1e-9;
    if let Some(v) = spectrum.to_f64().iter().find(|v| v.abs() > bound + slack) {
        return Err(Error::Internal(format!(
            "eigenvalue {v} outside [-{degree}, {degree}]"
        )));
    }
    Ok(Eigensystem {
        spectrum,
        trace,
        tridiagonal,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BackwardCheck {
    pub samples: usize,
    /// Largest `||A v - lambda v||` over the sampled unit eigenvectors.
    pub max_residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl<T: Real> Eigensystem<T> {
    /// Recomputes `samples` eigenvectors (evenly spaced through the sorted spectrum) by
    /// inverse iteration and measures their residuals against the sparse matrix.
    pub fn backward_check(&self, a: &Adjacency, samples: usize) -> BackwardCheck {
        let n = self.spectrum.len();
        let d = self.spectrum.degree().max(1) as f64;
        let threshold = 1e-7 * d;
        let count = samples.min(n);
        let mut max_residual = 0.0f64;
        for s in 0..count {
            let idx = if count <= 1 {
                0
            } else {
                s * (n - 1) / (count - 1)
            };
            let lambda = self.spectrum.values()[idx];
            let v: Vec<f64> = self
                .tridiagonal
                .eigenvector(lambda)
                .iter()
                .map(|x| x.to_f64_lossy())
                .collect();
            let lf = lambda.to_f64_lossy();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            let res = (0..n)
                .map(|x| {
                    let av: f64 = a
                        .row(x)
                        .iter()
                        .map(|&(c, m)| m as f64 * v[c as usize])
                        .sum();
                    (av - lf * v[x]).powi(2)
                })
                .sum::<f64>()
                .sqrt()
                / norm;
            max_residual = max_residual.max(res);
        }
        BackwardCheck {
            samples: count,
            max_residual,
            threshold,
            pass: max_residual <= threshold,
        }
    }
}

/// Eigenvalues of an arbitrary symmetric dense matrix, descending.
pub fn dense_eigenvalues<T: Real>(m: &DenseMatrix<T>, tol: f64) -> Result<Vec<T>> {
    let scale = (0..m.n()).fold(T::one(), |acc, i| {
        acc.max(m.row(i).iter().fold(T::zero(), |s, x| s + x.abs()))
    });
    if m.asymmetry() > T::of(tol) * scale {
        return Err(Error::Precondition("dense matrix is not symmetric".into()));
    }
    tridiagonalize(m.clone()).eigenvalues()
}
