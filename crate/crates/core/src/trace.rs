//! Per-iteration traversal records shared by the algebraic engine and the
//! combinatorial reference traversals.

use crate::algebraic::StateVector;
use crate::graph::VertexId;

/// One frontier-producing iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationRecord {
    pub k: usize,
    /// Vertices first reached at iteration `k`, ascending.
    pub frontier: Vec<VertexId>,
    /// `x^(k)` when snapshotting was requested.
    pub state: Option<StateVector>,
}

/// Frontiers `F^(0), ..., F^(N)` of a traversal from one start vertex.
///
/// Only frontier-producing iterations are recorded: the final sweep that
/// finds nothing new is not part of the trace, so `F^(N)` is the last
/// nonempty frontier and `N` is the iteration count.
#[derive(Clone, Debug, PartialEq)]
pub struct TraversalTrace {
    vertex_count: usize,
    start: VertexId,
    records: Vec<IterationRecord>,
}

impl TraversalTrace {
    pub(crate) fn new(vertex_count: usize, start: VertexId, state: Option<StateVector>) -> Self {
        TraversalTrace {
            vertex_count,
            start,
            records: vec![IterationRecord {
                k: 0,
                frontier: vec![start],
                state,
            }],
        }
    }

    pub(crate) fn push(&mut self, mut frontier: Vec<VertexId>, state: Option<StateVector>) {
        debug_assert!(!frontier.is_empty());
        frontier.sort_unstable();
        let k = self.records.len();
        self.records.push(IterationRecord { k, frontier, state });
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    /// Number of vertices in the traversed graph.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn records(&self) -> &[IterationRecord] {
        &self.records
    }

    /// `N`: the number of frontier-producing iterations after `F^(0)`.
    pub fn iteration_count(&self) -> usize {
        self.records.len() - 1
    }

    pub fn frontier(&self, k: usize) -> &[VertexId] {
        &self.records[k].frontier
    }

    pub fn frontiers(&self) -> Vec<Vec<VertexId>> {
        self.records.iter().map(|r| r.frontier.clone()).collect()
    }

    /// `C^(k)`, the union of `F^(0..=k)`, ascending.
    pub fn visited_through(&self, k: usize) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.records[..=k]
            .iter()
            .flat_map(|r| r.frontier.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Every vertex reached by the traversal: the component of the start.
    pub fn visited(&self) -> Vec<VertexId> {
        self.visited_through(self.iteration_count())
    }
}
