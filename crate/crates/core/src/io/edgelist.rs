use std::fmt::Write;

use super::{data_fields, parse_label, EdgeList};
use crate::error::ParseError;
use crate::graph::Graph;

/// Parses "u v" lines. A first data line "n m" is taken as a header when
/// exactly `m` edge lines follow and none uses a label above `n`; otherwise
/// `n` is the largest label seen.
pub fn parse_edge_list(text: &str) -> Result<EdgeList, ParseError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let Some(fields) = data_fields(line) else {
            continue;
        };
        let line = idx + 1;
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                message: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        rows.push((line, fields[0], fields[1]));
    }

    let header = match rows.first() {
        Some(&(_, a, b)) => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(m)) if m == rows.len() - 1 => Some((n, m)),
            _ => None,
        },
        None => None,
    };

    let parse_rows = |rows: &[(usize, &str, &str)]| -> Result<Vec<(usize, u32, u32)>, ParseError> {
        rows.iter()
            .map(|&(line, a, b)| {
                let u = parse_label(a, line)?;
                let v = parse_label(b, line)?;
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                Ok((line, u, v))
            })
            .collect()
    };

    if let Some((n, _)) = header {
        if let Ok(edges) = parse_rows(&rows[1..]) {
            if edges.iter().all(|&(_, u, v)| u.max(v) as usize <= n) {
                return Ok(EdgeList {
                    n,
                    edges: edges.into_iter().map(|(_, u, v)| (u, v)).collect(),
                });
            }
        }
    }

    let edges = parse_rows(&rows)?;
    let n = edges
        .iter()
        .map(|&(_, u, v)| u.max(v) as usize)
        .max()
        .unwrap_or(0);
    Ok(EdgeList {
        n,
        edges: edges.into_iter().map(|(_, u, v)| (u, v)).collect(),
    })
}

/// Writes an "n m" header followed by one "u v" line per edge, u < v.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
