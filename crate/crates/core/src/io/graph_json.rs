use crate::error::{Error, Result};
use crate::graph::{Adjacency, Variant, VariantGraph};
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const GRAPH_SCHEMA: &str = "vcg-1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CooAdjacency {
    pub format: String,
    /// `[row, col, multiplicity]`, row-major.
    pub entries: Vec<[u64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub schema: String,
    pub family: String,
    pub variant: String,
    pub sigma: Option<String>,
    pub n_vertices: usize,
    pub degree: u32,
    pub undirected: bool,
    pub vertex_labels: Vec<String>,
    pub adjacency: CooAdjacency,
}

impl GraphFile {
    pub fn from_graph(g: &VariantGraph) -> Self {
        GraphFile {
            schema: GRAPH_SCHEMA.into(),
            family: g.family().into(),
            variant: g.variant().tag().into(),
            sigma: g.sigma().map(str::to_string),
            n_vertices: g.n(),
            degree: g.degree(),
            undirected: g.is_undirected(),
            vertex_labels: g.vertex_labels().to_vec(),
            adjacency: CooAdjacency {
                format: "coo".into(),
                entries: g
                    .adjacency()
                    .entries()
                    .map(|(r, c, m)| [r as u64, c as u64, m as u64])
                    .collect(),
            },
        }
    }

    pub fn into_graph(self) -> Result<VariantGraph> {
        if self.schema != GRAPH_SCHEMA {
            return Err(Error::Parse(format!(
                "schema '{}' is not {GRAPH_SCHEMA}",
                self.schema
            )));
        }
        if self.adjacency.format != "coo" {
            return Err(Error::Parse(format!(
                "adjacency format '{}' is not coo",
                self.adjacency.format
            )));
        }
        let n = self.n_vertices;
        let entries = self.adjacency.entries.iter().map(|&[r, c, m]| {
            let m = u32::try_from(m)
                .map_err(|_| Error::Parse(format!("multiplicity {m} too large")))?;
            Ok((r as usize, c as usize, m))
        });
        let entries = entries.collect::<Result<Vec<_>>>()?;
        if entries.iter().any(|&(r, c, _)| r >= n || c >= n) {
            return Err(Error::Parse(
                "adjacency entry outside the vertex range".into(),
            ));
        }
        let adjacency =
            Adjacency::from_entries(n, entries).map_err(|e| Error::Parse(e.to_string()))?;
        let g = VariantGraph::from_parts(
            Variant::parse(&self.variant)?,
            self.family,
            self.sigma,
            self.degree,
            adjacency,
            self.vertex_labels,
        )
        .map_err(|e| Error::Parse(e.to_string()))?;
        if g.is_undirected() != self.undirected {
            return Err(Error::Parse(
                "undirected flag disagrees with the adjacency".into(),
            ));
        }
        Ok(g)
    }
}

pub fn graph_to_json(g: &VariantGraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph files serialize") + "\n"
}

pub fn graph_from_json(s: &str) -> Result<VariantGraph> {
    serde_json::from_str::<GraphFile>(s)?.into_graph()
}

pub fn write_graph(g: &VariantGraph, path: &Path) -> Result<()> {
    std::fs::write(path, graph_to_json(g))?;
    Ok(())
}

pub fn read_graph(path: &Path) -> Result<VariantGraph> {
    graph_from_json(&std::fs::read_to_string(path)?)
}
