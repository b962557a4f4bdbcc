//! Dense eigensolves, multiset spectra and the certificates built from them.

pub mod certificates;
pub mod dense;
pub mod eigen;
pub mod projection;
pub mod real;
pub mod spectrum;
pub mod split;
pub mod tridiag;

pub use certificates::{
    certify_ramanujan, checked_spectrum, pairing_certificate, regular_connected, spectral_gap,
    PairingCertificate, RamanujanCertificate, SpectralGap, NONTRIVIAL_CONVENTION,
};
pub use dense::DenseMatrix;
pub use eigen::{
    dense_eigenvalues, eigensolve, eigensystem, max_dense_n, BackwardCheck, EigenOptions,
    Eigensystem,
};
pub use real::Real;
pub use spectrum::{
    match_multisets, max_symmetric_subset, MultisetMatch, Spectrum, SymmetricSubset, DEFAULT_TOL,
};
pub use split::{
    dichotomy, gabber_galil_h_isospectral, h_isospectral_check, isotypic_dimensions,
    joint_signed_split, projector_defect, projector_rank, twisted_h_isospectral, uniformity_report,
    uniformity_row, verify_symmetric_split, DichotomyReport, HIsospectralVerdict,
    IsotypicDimensions, SignedSplit, SymmetricSplitVerdict, UniformityRow,
};
