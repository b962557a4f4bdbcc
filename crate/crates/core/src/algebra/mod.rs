//! Finite groups, finite fields and the self-maps of a group used by the graph builders.

pub mod field;
pub mod group;
pub mod maps;
pub mod matrix;
pub mod numtheory;
pub mod perm;

pub use field::{build_field, FiniteField};
pub use group::{build_group, Element, Group, GroupSpec, MatrixKind};
pub use maps::{
    ambient_conjugation, count_fixed_points, frobenius_automorphism, gij_map, inner_automorphism,
    matrix_conjugation_automorphism, negation, GroupMap, MapKind,
};
pub use numtheory::{is_square_mod, sqrt_minus_one};
pub use perm::Perm;
