use std::fmt::Write;

use super::{data_fields, parse_label, EdgeList};
use crate::error::ParseError;
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Field {
    Pattern,
    Valued,
}

/// Reads a symmetric coordinate Matrix Market file. Off-diagonal entries
/// become undirected edges; values and diagonal entries are ignored.
pub fn parse_matrix_market(text: &str) -> Result<EdgeList, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, banner) = lines
        .next()
        .ok_or_else(|| ParseError::Unsupported("missing %%MatrixMarket banner".into()))?;
    let words: Vec<String> = banner.split_whitespace().map(str::to_ascii_lowercase).collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(ParseError::Unsupported(format!("bad banner '{banner}'")));
    }
    if words[2] != "coordinate" {
        return Err(ParseError::Unsupported(format!("{} storage", words[2])));
    }
    let field = match words[3].as_str() {
        "pattern" => Field::Pattern,
        "integer" | "real" => Field::Valued,
        other => return Err(ParseError::Unsupported(format!("{other} field"))),
    };
    if words[4] != "symmetric" {
        return Err(ParseError::Unsupported(format!("{} symmetry", words[4])));
    }

    let mut size = None;
    let mut edges = Vec::new();
    let mut entries = 0usize;
    for (idx, line) in lines {
        let Some(fields) = data_fields(line) else {
            continue;
        };
        let line = idx + 1;
        let Some((n, nnz)) = size else {
            if fields.len() != 3 {
                return Err(ParseError::Malformed {
                    line,
                    message: "size line must be 'rows cols entries'".into(),
                });
            }
            let nums: Vec<usize> = fields
                .iter()
                .map(|f| {
                    f.parse().map_err(|_| ParseError::Malformed {
                        line,
                        message: format!("expected an integer, found '{f}'"),
                    })
                })
                .collect::<Result<_, _>>()?;
            if nums[0] != nums[1] {
                return Err(ParseError::Dimension(format!(
                    "matrix is {}x{}, expected square",
                    nums[0], nums[1]
                )));
            }
            size = Some((nums[0], nums[2]));
            continue;
        };
        let expected = if field == Field::Pattern { 2 } else { 3 };
        if fields.len() != expected {
            return Err(ParseError::Malformed {
                line,
                message: format!("expected {expected} fields, found {}", fields.len()),
            });
        }
        entries += 1;
        if entries > nnz {
            return Err(ParseError::Dimension(format!(
                "more than the declared {nnz} entries"
            )));
        }
        let i = parse_label(fields[0], line)?;
        let j = parse_label(fields[1], line)?;
        if i as usize > n || j as usize > n {
            return Err(ParseError::Dimension(format!(
                "line {line}: entry ({i}, {j}) outside {n}x{n}"
            )));
        }
        if field == Field::Valued && fields[2].parse::<f64>().is_err() {
            return Err(ParseError::Malformed {
                line,
                message: format!("bad value '{}'", fields[2]),
            });
        }
        if i != j {
            edges.push((i, j));
        }
    }
    let (n, nnz) = size.ok_or_else(|| ParseError::Dimension("missing size line".into()))?;
    if entries != nnz {
        return Err(ParseError::Dimension(format!(
            "declared {nnz} entries, found {entries}"
        )));
    }
    Ok(EdgeList { n, edges })
}

/// Writes the strictly lower triangle as a pattern symmetric matrix.
pub fn write_matrix_market(g: &Graph) -> String {
    let edges = g.edges();
    let n = g.vertex_count();
    let mut out = String::from("%%MatrixMarket matrix coordinate pattern symmetric\n");
    let _ = writeln!(out, "{n} {n} {}", edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{v} {u}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::io::parse_edge_list;

    #[test]
    fn example_matches_edge_list() {
        let g = fixtures::example_graph();
        let mm = parse_matrix_market(&write_matrix_market(&g)).unwrap();
        assert_eq!(mm.into_graph(2).unwrap(), g);
        let el = parse_edge_list("1 2\n2 3\n2 6\n3 4\n3 7\n5 6\n6 7\n7 8\n").unwrap();
        assert_eq!(el.into_graph(2).unwrap(), g);
    }

    #[test]
    fn empty_matrix() {
        let e = parse_matrix_market("%%MatrixMarket matrix coordinate pattern symmetric\n4 4 0\n")
            .unwrap();
        assert_eq!(e.n, 4);
        assert!(e.edges.is_empty());
    }

    #[test]
    fn valued_entries_and_diagonal() {
        let text = "%%MatrixMarket matrix coordinate real symmetric\n% c\n3 3 3\n1 1 2.0\n2 1 -1\n3 2 -1\n";
        let e = parse_matrix_market(text).unwrap();
        assert_eq!(e.edges, vec![(2, 1), (3, 2)]);
    }

    #[test]
    fn rejects_unsupported_headers() {
        for banner in [
            "%%MatrixMarket matrix coordinate pattern general",
            "%%MatrixMarket matrix coordinate complex symmetric",
            "%%MatrixMarket matrix array real symmetric",
            "1 2",
        ] {
            let text = format!("{banner}\n2 2 1\n2 1\n");
            assert!(
                matches!(parse_matrix_market(&text), Err(ParseError::Unsupported(_))),
                "{banner}"
            );
        }
    }

    #[test]
    fn dimension_errors() {
        let head = "%%MatrixMarket matrix coordinate pattern symmetric\n";
        for body in ["2 3 0\n", "2 2 2\n2 1\n", "2 2 1\n3 1\n", "2 2 1\n2 1\n1 2\n"] {
            let text = format!("{head}{body}");
            assert!(
                matches!(parse_matrix_market(&text), Err(ParseError::Dimension(_))),
                "{body}"
            );
        }
    }
}
