//! Text formats: edge lists, Matrix Market, permutation files and
//! line-delimited traversal traces, plus a seeded random graph generator.

mod edgelist;
mod generate;
mod matrix_market;
mod permutation;
mod trace_doc;

use std::str::FromStr;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use generate::generate_random_graph;
pub use matrix_market::{parse_matrix_market, write_matrix_market};
pub use permutation::{parse_permutation, write_permutation};
pub use trace_doc::{TraceDocument, TraceIteration, TRACE_SCHEMA_VERSION};

/// Vertex count and undirected edges read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl EdgeList {
    pub fn into_graph(self, d: u64) -> Result<Graph, ParseError> {
        Graph::from_edges(self.n, &self.edges, d).map_err(|e| match e {
            GraphError::Empty => ParseError::Dimension("graph has no vertices".into()),
            other => ParseError::Dimension(other.to_string()),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    MatrixMarket,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "mm" | "mtx" | "matrix-market" => Ok(GraphFormat::MatrixMarket),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

/// Parses `text` in the given format and builds a graph with diagonal `d`.
pub fn parse_graph(text: &str, format: GraphFormat, d: u64) -> Result<Graph, ParseError> {
    let list = match format {
        GraphFormat::EdgeList => parse_edge_list(text)?,
        GraphFormat::MatrixMarket => parse_matrix_market(text)?,
    };
    list.into_graph(d)
}

/// Splits a line into whitespace-separated fields, treating '#' and '%'
/// lines as comments. Returns `None` for blank and comment lines.
pub(crate) fn data_fields(line: &str) -> Option<Vec<&str>> {
    let t = line.trim();
    if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
        return None;
    }
    Some(t.split_whitespace().collect())
}

/// Parses a 1-based vertex label.
pub(crate) fn parse_label(field: &str, line: usize) -> Result<u32, ParseError> {
    let value: i64 = field.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("expected an integer, found '{field}'"),
    })?;
    if value <= 0 {
        return Err(ParseError::NonPositiveLabel { line });
    }
    u32::try_from(value).map_err(|_| ParseError::Malformed {
        line,
        message: format!("label {value} is too large"),
    })
}
