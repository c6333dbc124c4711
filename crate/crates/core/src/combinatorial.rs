//! Reference traversals over vertex sets: level-order BFS and correct chain
//! search (CCS). The algebraic sweeps must reproduce their frontiers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, VertexId};
use crate::trace::TraversalTrace;

/// Current frontier, visited set and neighborhood buffer of a
/// combinatorial traversal.
#[derive(Clone, Debug)]
pub struct FrontierState<'g> {
    graph: &'g Graph,
    frontier: Vec<u32>,
    visited: Vec<bool>,
    neighborhood: Vec<u32>,
}

impl<'g> FrontierState<'g> {
    pub fn new(graph: &'g Graph, s: VertexId) -> Self {
        let mut visited = vec![false; graph.vertex_count()];
        visited[s.index()] = true;
        FrontierState {
            graph,
            frontier: vec![s.index() as u32],
            visited,
            neighborhood: Vec::new(),
        }
    }

    pub fn frontier(&self) -> Vec<VertexId> {
        labels(&self.frontier)
    }

    pub fn is_visited(&self, v: VertexId) -> bool {
        self.visited[v.index()]
    }

    /// Fills the neighborhood buffer with the unvisited neighbors of the
    /// current frontier.
    fn gather_neighborhood(&mut self) {
        self.neighborhood.clear();
        let mut seen = Vec::new();
        for &j in &self.frontier {
            for &i in self.graph.row(j as usize) {
                if !self.visited[i as usize] {
                    // temporarily mark to dedupe; undone below
                    self.visited[i as usize] = true;
                    seen.push(i);
                }
            }
        }
        for &i in &seen {
            self.visited[i as usize] = false;
        }
        seen.sort_unstable();
        self.neighborhood = seen;
    }

    fn commit(&mut self, mut next: Vec<u32>) -> bool {
        if next.is_empty() {
            self.frontier.clear();
            return false;
        }
        next.sort_unstable();
        for &i in &next {
            self.visited[i as usize] = true;
        }
        self.frontier = next;
        true
    }

    /// One BFS iteration. Returns false once no new vertex is reached.
    pub fn advance_bfs(&mut self) -> bool {
        self.gather_neighborhood();
        let next = std::mem::take(&mut self.neighborhood);
        self.commit(next)
    }

    /// One CCS iteration: the BFS neighborhood step, then every unvisited
    /// vertex reachable from it along an ascending chain.
    pub fn advance_ccs(&mut self) -> bool {
        self.gather_neighborhood();
        let seeds = std::mem::take(&mut self.neighborhood);
        let mut next = closure(self.graph, &seeds, &self.visited);
        next.extend_from_slice(&seeds);
        self.commit(next)
    }
}

fn labels(indices: &[u32]) -> Vec<VertexId> {
    indices
        .iter()
        .map(|&i| VertexId::from_index(i as usize))
        .collect()
}

/// Ascending closure: processes candidates in label order, so a vertex is
/// decided only after every lower neighbor that could reach it.
fn closure(g: &Graph, seeds: &[u32], visited: &[bool]) -> Vec<u32> {
    let n = g.vertex_count();
    let mut in_set = vec![false; n];
    let mut queued = vec![false; n];
    let mut queue = BinaryHeap::new();
    for &s in seeds {
        in_set[s as usize] = true;
    }
    for &s in seeds {
        for &j in g.upper(s as usize) {
            let ju = j as usize;
            if !visited[ju] && !in_set[ju] && !queued[ju] {
                queued[ju] = true;
                queue.push(Reverse(j));
            }
        }
    }
    let mut joined = Vec::new();
    while let Some(Reverse(i)) = queue.pop() {
        let iu = i as usize;
        in_set[iu] = true;
        joined.push(i);
        for &j in g.upper(iu) {
            let ju = j as usize;
            if !visited[ju] && !in_set[ju] && !queued[ju] {
                queued[ju] = true;
                queue.push(Reverse(j));
            }
        }
    }
    joined
}

/// Unvisited vertices reachable from `seeds` along label-ascending chains
/// whose vertices are all unvisited. Seeds themselves are not included.
pub fn correct_chain_closure(
    g: &Graph,
    seeds: &[VertexId],
    visited: &[VertexId],
) -> Vec<VertexId> {
    let mut flags = vec![false; g.vertex_count()];
    for v in visited {
        flags[v.index()] = true;
    }
    let seeds: Vec<u32> = seeds.iter().map(|v| v.index() as u32).collect();
    let mut out = labels(&closure(g, &seeds, &flags));
    out.sort_unstable();
    out
}

/// Level-order traversal: `F^(k+1)` is the set of unvisited neighbors of
/// `F^(k)`.
pub fn combinatorial_bfs(g: &Graph, s: VertexId) -> TraversalTrace {
    let mut state = FrontierState::new(g, s);
    let mut trace = TraversalTrace::new(g.vertex_count(), s, None);
    while state.advance_bfs() {
        trace.push(state.frontier(), None);
    }
    trace
}

/// Correct chain search: each iteration takes the BFS neighborhood and then
/// its ascending closure.
pub fn combinatorial_ccs(g: &Graph, s: VertexId) -> TraversalTrace {
    let mut state = FrontierState::new(g, s);
    let mut trace = TraversalTrace::new(g.vertex_count(), s, None);
    while state.advance_ccs() {
        trace.push(state.frontier(), None);
    }
    trace
}
