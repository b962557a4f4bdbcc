pub mod cheeger;
pub mod diameter;
pub mod fingerprint;
pub mod structure;
pub mod traversal;
pub mod walks;

pub use cheeger::{
    cheeger_buser_check, cheeger_exact, cheeger_spec_interval_check, interval_eta, CheegerBuser,
    CheegerConstant, CheegerIntervalVerdict, CheegerMode,
};
pub use diameter::{
    abelian_bound_value, abelian_diameter_lower_bound, diameter_relation_check,
    AbelianDiameterBound, DiameterRelation,
};
pub use fingerprint::{fingerprint, spectrum_digest, Fingerprint};
pub use structure::{compute_gs_sigma, conjugation_isomorphism, GsSigmaReport, IsomorphismVerdict};
pub use traversal::{bfs_diameter, bfs_distances, connectivity_bipartite, Connectivity, Diameter};
pub use walks::{
    closed_walk_counts, closed_walk_vertex_count, counting_report, loop_vertex_count,
    twisted_loop_vertices, CountingReport,
};
