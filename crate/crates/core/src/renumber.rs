//! Relabeling vertices by distance from a root so that every vertex is
//! reachable from the root along an ascending chain. Correct chain search
//! from the root then finishes in a single iteration.

use std::collections::VecDeque;

use crate::combinatorial::combinatorial_ccs;
use crate::graph::{Graph, VertexId, VertexPermutation};

/// Breadth-first distances from `root`; `None` for other components.
fn distances(g: &Graph, root: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[root.index()] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u.index()].unwrap_or_default();
        for w in g.neighbors(u) {
            if dist[w.index()].is_none() {
                dist[w.index()] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// New labels in order of (distance from `root`, old label). The root's
/// component comes first; every other component follows in order of its
/// smallest old label, numbered the same way from that vertex.
pub fn bfs_order_renumbering(g: &Graph, root: VertexId) -> VertexPermutation {
    let n = g.vertex_count();
    let mut new_labels = vec![0u32; n];
    let mut next = 1u32;
    let roots = std::iter::once(root).chain(g.vertices());
    for r in roots {
        if new_labels[r.index()] != 0 {
            continue;
        }
        let dist = distances(g, r);
        let mut order: Vec<(usize, VertexId)> = g
            .vertices()
            .filter_map(|v| dist[v.index()].map(|dv| (dv, v)))
            .collect();
        order.sort_unstable();
        for (_, v) in order {
            new_labels[v.index()] = next;
            next += 1;
        }
    }
    VertexPermutation::from_new_labels(&new_labels).expect("level order assigns each label once")
}

/// Iteration counts and edge orientation before and after renumbering.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberingReport {
    pub root: VertexId,
    /// Among edges joining consecutive distance levels from the root, the
    /// fraction whose nearer endpoint carries the smaller label, i.e. edges
    /// usable by ascending chains leaving the root.
    pub correct_edge_fraction_before: f64,
    pub correct_edge_fraction_after: f64,
    pub ccs_iterations_before: usize,
    pub ccs_iterations_after: usize,
}

fn correct_edge_fraction(g: &Graph, root: VertexId) -> f64 {
    let dist = distances(g, root);
    let mut level_edges = 0usize;
    let mut ascending = 0usize;
    for (u, v) in g.edges() {
        let (u, v) = (VertexId::new(u), VertexId::new(v));
        let (Some(du), Some(dv)) = (dist[u.index()], dist[v.index()]) else {
            continue;
        };
        if du == dv {
            continue;
        }
        level_edges += 1;
        // u < v by construction
        if du < dv {
            ascending += 1;
        }
    }
    if level_edges == 0 {
        1.0
    } else {
        ascending as f64 / level_edges as f64
    }
}

/// Runs correct chain search from `root` under the current labels and
/// again after [`bfs_order_renumbering`].
pub fn numbering_quality(g: &Graph, root: VertexId) -> NumberingReport {
    let p = bfs_order_renumbering(g, root);
    let h = g.permute(&p).expect("permutation matches graph size");
    let new_root = p.apply(root);
    NumberingReport {
        root,
        correct_edge_fraction_before: correct_edge_fraction(g, root),
        correct_edge_fraction_after: correct_edge_fraction(&h, new_root),
        ccs_iterations_before: combinatorial_ccs(g, root).iteration_count(),
        ccs_iterations_after: combinatorial_ccs(&h, new_root).iteration_count(),
    }
}
