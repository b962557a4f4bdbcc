//! Materialized variant graphs, involution matrices and the Gabber–Galil family.

pub mod adjacency;
pub mod gabber_galil;
pub mod involution;
pub mod multiset;
pub mod variant;

pub use adjacency::Adjacency;
pub use gabber_galil::{build_gabber_galil, klein_groups, GgTwist, KleinGroup};
pub use involution::{involution_matrix, InvolutionMatrix};
pub use multiset::ConnectionMultiset;
pub use variant::{
    build_variant, check_undirected, closure_set, ClosureMode, UndirectedVerdict, Variant,
    VariantGraph,
};
