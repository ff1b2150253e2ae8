//! The labeled-graph input document: a small JSON file with vertex ids,
//! group labels and edges.
//!
//! ```json
//! {
//!   "vertices": [
//!     {"id": "a", "group": {"free_rank": 1, "torsion": []}},
//!     {"id": "s", "group": {"non_abelian": "Sym(5)", "known_semicomplete": "yes"}}
//!   ],
//!   "edges": [["a", "s"]]
//! }
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianError, ExpandedGraph, GroupLabel};
use crate::graph::{GraphError, SimplicialGraph};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex `{id}`: {source}")]
    Label {
        id: String,
        #[source]
        source: AbelianError,
    },
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: String,
    pub group: GroupLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    pub vertices: Vec<VertexEntry>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

impl InputDocument {
    pub fn from_str(text: &str) -> Result<InputDocument, InputError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: &str) -> Result<InputDocument, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.to_string(),
            source,
        })?;
        InputDocument::from_str(&text)
    }

    /// Validates and builds the graph plus labels in the graph's vertex
    /// order.
    pub fn build(&self) -> Result<(SimplicialGraph, Vec<GroupLabel>), InputError> {
        for entry in &self.vertices {
            entry.group.validate().map_err(|source| InputError::Label {
                id: entry.id.clone(),
                source,
            })?;
        }
        let names: Vec<String> = self.vertices.iter().map(|v| v.id.clone()).collect();
        let graph = SimplicialGraph::new(names, &self.edges)?;
        let mut labels = vec![GroupLabel::z2(); graph.n()];
        for entry in &self.vertices {
            let v = graph.index(&entry.id).expect("id was just inserted");
            labels[v] = entry.group.clone();
        }
        Ok((graph, labels))
    }

    /// Re-encodes an expanded graph as a document (all labels cyclic), so
    /// `expand` output round-trips through the parser.
    pub fn from_expanded(eg: &ExpandedGraph) -> InputDocument {
        let g = &eg.graph;
        let vertices = (0..g.n())
            .map(|v| VertexEntry {
                id: g.name(v).to_string(),
                group: if eg.orders[v] == 0 {
                    GroupLabel::free(1)
                } else {
                    GroupLabel::cyclic(eg.orders[v])
                },
            })
            .collect();
        let edges = g
            .edges()
            .into_iter()
            .map(|(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
            .collect();
        InputDocument { vertices, edges }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}
