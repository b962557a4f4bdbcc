//! Persistence formats, run configuration and report envelopes.

pub mod config;
pub mod family;
pub mod graph_json;
pub mod report;
pub mod spectrum_csv;

pub use config::RunConfig;
pub use family::{parse_instance, parse_sigma, resolve_family, GroupInstance};
pub use graph_json::{
    graph_from_json, graph_to_json, read_graph, write_graph, GraphFile, GRAPH_SCHEMA,
};
pub use report::{AnalysisReport, CertificateReport, Payload, TOOL_VERSION};
pub use spectrum_csv::{read_spectrum_csv, spectrum_to_csv, values_from_csv, write_spectrum_csv};
