use std::fmt::Write;

use super::{data_fields, parse_label};
use crate::error::ParseError;
use crate::graph::VertexPermutation;

/// Reads "old new" lines. Bijectivity is checked by
/// [`VertexPermutation::from_pairs`].
pub fn parse_permutation(text: &str) -> Result<Vec<(u32, u32)>, ParseError> {
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let Some(fields) = data_fields(line) else {
            continue;
        };
        let line = idx + 1;
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                message: "expected 'old new'".into(),
            });
        }
        pairs.push((parse_label(fields[0], line)?, parse_label(fields[1], line)?));
    }
    Ok(pairs)
}

pub fn write_permutation(p: &VertexPermutation) -> String {
    let mut out = String::new();
    for (old, new) in p.pairs() {
        let _ = writeln!(out, "{old} {new}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = VertexPermutation::from_new_labels(&[1, 5, 4, 3, 2]).unwrap();
        let text = write_permutation(&p);
        assert_eq!(text, "1 1\n2 5\n3 4\n4 3\n5 2\n");
        let q = VertexPermutation::from_pairs(5, &parse_permutation(&text).unwrap()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_permutation("1\n").is_err());
        assert_eq!(
            parse_permutation("# c\n1 0\n"),
            Err(ParseError::NonPositiveLabel { line: 2 })
        );
    }
}
