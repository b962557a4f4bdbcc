//! Cayley graphs, Cayley sum graphs and their twists over finite groups,
//! with exact spectra and machine-checkable certificates.

pub mod algebra;
pub mod analysis;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod spectral;

pub use error::{Error, Result};

pub type Spectrum64 = spectral::Spectrum<f64>;
pub type Spectrum32 = spectral::Spectrum<f32>;
pub type DenseMatrix64 = spectral::DenseMatrix<f64>;
pub type DenseMatrix32 = spectral::DenseMatrix<f32>;
