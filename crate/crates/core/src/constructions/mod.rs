//! Named families: LPS sets, `SL_2` class sets, Paley variants and the permutation apparatus.

pub mod lps;
pub mod paley;
pub mod perm_apparatus;
pub mod sl2;

pub use lps::{lps_build, lps_graph, lps_sigma, lps_sigma_matrix, LpsData};
pub use paley::{paley, paley_parts, PaleyVariant};
pub use perm_apparatus::{perm_apparatus, PermutationApparatus};
pub use sl2::{sl2_class_set, sl2_group, sl2_twist, Sl2ClassData};
