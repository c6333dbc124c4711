//! Line-delimited JSON traces: one header record, one record per
//! frontier-producing iteration, one summary record.

use serde::{Deserialize, Serialize};

use crate::algebraic::{ArithmeticMode, TraversalConfig, Variant};
use crate::error::ParseError;
use crate::graph::{Graph, VertexId};
use crate::trace::TraversalTrace;

pub const TRACE_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceIteration {
    pub k: usize,
    pub frontier: Vec<u32>,
    /// `x^(k)` as decimal strings, present only for snapshot runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<Vec<String>>,
}

/// A traversal run together with the graph and configuration that
/// produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceDocument {
    pub n: usize,
    pub m: usize,
    pub d: u64,
    pub variant: Variant,
    pub mode: ArithmeticMode,
    pub masking: bool,
    pub regularize_every: Option<u32>,
    pub start: u32,
    pub iterations: Vec<TraceIteration>,
    pub components: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
enum Record {
    Header {
        schema_version: u32,
        n: usize,
        m: usize,
        d: u64,
        variant: Variant,
        arith: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        saturate_cap: Option<u64>,
        masking: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        regularize_every: Option<u32>,
        start: u32,
    },
    Iteration(TraceIteration),
    Summary {
        iterations: usize,
        components: Vec<Vec<u32>>,
    },
}

fn labels(vs: &[VertexId]) -> Vec<u32> {
    vs.iter().map(|v| v.label()).collect()
}

impl TraceDocument {
    /// Packages a single-start traversal; its visited set is recorded as the
    /// one component found.
    pub fn from_trace(g: &Graph, cfg: &TraversalConfig, trace: &TraversalTrace) -> Self {
        let iterations = trace
            .records()
            .iter()
            .map(|r| TraceIteration {
                k: r.k,
                frontier: labels(&r.frontier),
                state: r.state.as_ref().map(|s| s.to_decimal_strings()),
            })
            .collect();
        TraceDocument {
            n: g.vertex_count(),
            m: g.edge_count(),
            d: cfg.diagonal(g),
            variant: cfg.variant,
            mode: cfg.mode,
            masking: cfg.masking,
            regularize_every: match cfg.mode {
                ArithmeticMode::Float => cfg.regularize_every,
                _ => None,
            },
            start: trace.start().label(),
            iterations,
            components: vec![labels(&trace.visited())],
        }
    }

    /// Number of frontier-producing iterations `N`.
    pub fn iteration_count(&self) -> usize {
        self.iterations.len().saturating_sub(1)
    }

    pub fn to_json_lines(&self) -> String {
        let (arith, saturate_cap) = match self.mode {
            ArithmeticMode::Saturate { cap } => ("saturate", Some(cap)),
            other => (other.name(), None),
        };
        let mut records = vec![Record::Header {
            schema_version: TRACE_SCHEMA_VERSION,
            n: self.n,
            m: self.m,
            d: self.d,
            variant: self.variant,
            arith: arith.to_string(),
            saturate_cap,
            masking: self.masking,
            regularize_every: self.regularize_every,
            start: self.start,
        }];
        records.extend(self.iterations.iter().cloned().map(Record::Iteration));
        records.push(Record::Summary {
            iterations: self.iteration_count(),
            components: self.components.clone(),
        });
        let mut out = String::new();
        for r in &records {
            out.push_str(&serde_json::to_string(r).expect("trace records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn from_json_lines(text: &str) -> Result<Self, ParseError> {
        let bad = |msg: String| ParseError::Trace(msg);
        let mut records = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let r: Record = serde_json::from_str(line)
                .map_err(|e| bad(format!("line {}: {e}", idx + 1)))?;
            records.push(r);
        }
        let mut it = records.into_iter();
        let Some(Record::Header {
            schema_version,
            n,
            m,
            d,
            variant,
            arith,
            saturate_cap,
            masking,
            regularize_every,
            start,
        }) = it.next()
        else {
            return Err(bad("first record must be the header".into()));
        };
        if schema_version != TRACE_SCHEMA_VERSION {
            return Err(bad(format!("unsupported schema version {schema_version}")));
        }
        let mode = match (arith.as_str(), saturate_cap) {
            ("exact", None) => ArithmeticMode::Exact,
            ("float", None) => ArithmeticMode::Float,
            ("saturate", Some(cap)) => ArithmeticMode::Saturate { cap },
            _ => return Err(bad(format!("bad arithmetic '{arith}'"))),
        };
        let mut iterations = Vec::new();
        let mut summary = None;
        for r in it {
            match r {
                Record::Iteration(rec) if summary.is_none() => {
                    if rec.k != iterations.len() {
                        return Err(bad(format!("iteration {} out of order", rec.k)));
                    }
                    iterations.push(rec);
                }
                Record::Summary {
                    iterations: count,
                    components,
                } if summary.is_none() => summary = Some((count, components)),
                _ => return Err(bad("unexpected record after summary or duplicate header".into())),
            }
        }
        let (count, components) = summary.ok_or_else(|| bad("missing summary record".into()))?;
        let doc = TraceDocument {
            n,
            m,
            d,
            variant,
            mode,
            masking,
            regularize_every,
            start,
            iterations,
            components,
        };
        if doc.iterations.is_empty() || count != doc.iteration_count() {
            return Err(bad(format!(
                "summary reports {count} iterations, found {}",
                doc.iteration_count()
            )));
        }
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::find_connected_component;
    use crate::fixtures;

    #[test]
    fn ccs_snapshot_round_trip() {
        let g = fixtures::example_graph();
        let cfg = TraversalConfig::gauss_seidel().with_snapshots(true);
        let (_, trace) = find_connected_component(&g, VertexId::new(1), &cfg).unwrap();
        let doc = TraceDocument::from_trace(&g, &cfg, &trace);
        assert_eq!(doc.iteration_count(), 2);
        assert_eq!(
            doc.iterations[2].state.as_deref().unwrap(),
            ["10", "-52", "200", "-400", "-16", "200", "-928", "1856"]
        );
        let text = doc.to_json_lines();
        assert_eq!(text.lines().count(), 5);
        assert_eq!(TraceDocument::from_json_lines(&text).unwrap(), doc);
    }

    #[test]
    fn saturate_round_trip_without_state() {
        let g = fixtures::path5();
        let cfg = TraversalConfig::detection();
        let (_, trace) = find_connected_component(&g, VertexId::new(3), &cfg).unwrap();
        let doc = TraceDocument::from_trace(&g, &cfg, &trace);
        let text = doc.to_json_lines();
        assert!(!text.contains("\"state\""));
        assert_eq!(TraceDocument::from_json_lines(&text).unwrap(), doc);
    }

    #[test]
    fn rejects_broken_documents() {
        let g = fixtures::example_graph();
        let cfg = TraversalConfig::jacobi();
        let (_, trace) = find_connected_component(&g, VertexId::new(1), &cfg).unwrap();
        let text = TraceDocument::from_trace(&g, &cfg, &trace).to_json_lines();
        let lines: Vec<&str> = text.lines().collect();
        let no_summary = lines[..lines.len() - 1].join("\n");
        assert!(TraceDocument::from_json_lines(&no_summary).is_err());
        let no_header = lines[1..].join("\n");
        assert!(TraceDocument::from_json_lines(&no_header).is_err());
        let bumped = text.replace("\"schema_version\":1", "\"schema_version\":9");
        assert!(TraceDocument::from_json_lines(&bumped).is_err());
    }
}
