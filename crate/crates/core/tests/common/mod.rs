#![allow(dead_code)]

use std::collections::VecDeque;

use chainsearch::io::generate_random_graph;
use chainsearch::{Graph, VertexId};

/// One randomly generated test graph and how it was produced.
pub struct CorpusGraph {
    pub seed: u64,
    pub graph: Graph,
    pub requested_components: Option<usize>,
}

pub const CORPUS_SIZE: u64 = 540;
pub const CORPUS_MAX_N: usize = 200;

/// Mixed corpus: sizes 2..=200, sparse (average degree 2.5), medium
/// (density 0.08) and dense (density 0.4) graphs; a quarter split into
/// 2..=10 components, a quarter unconstrained, the rest connected.
pub fn corpus() -> Vec<CorpusGraph> {
    (0..CORPUS_SIZE).map(corpus_graph).collect()
}

pub fn corpus_graph(seed: u64) -> CorpusGraph {
    let n = 2 + (seed as usize * 37 + 11) % (CORPUS_MAX_N - 1);
    let density = match seed % 3 {
        0 => 2.5 / (n - 1) as f64,
        1 => 0.08,
        _ => 0.4,
    }
    .min(1.0);
    let components = match seed % 4 {
        0 => Some((2 + (seed as usize / 4) % 9).min(n)),
        1 => None,
        _ => Some(1),
    };
    let edges = generate_random_graph(n, density, components, seed).unwrap();
    CorpusGraph {
        seed,
        graph: Graph::from_edges(n, &edges, 2).unwrap(),
        requested_components: components,
    }
}

/// Hop distances from `s` by plain queue-based search.
pub fn distances(g: &Graph, s: VertexId) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    dist[s.label() as usize - 1] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u.label() as usize - 1].unwrap();
        for w in g.neighbors(u) {
            let slot = &mut dist[w.label() as usize - 1];
            if slot.is_none() {
                *slot = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest finite distance between two vertices of the same component.
pub fn diameter(g: &Graph) -> usize {
    g.vertices()
        .map(|s| distances(g, s).into_iter().flatten().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// All start vertices for small graphs, eight spread-out ones otherwise.
pub fn starts(g: &Graph, exhaustive_up_to: usize) -> Vec<VertexId> {
    let n = g.vertex_count();
    if n <= exhaustive_up_to {
        g.vertices().collect()
    } else {
        (0..8).map(|i| VertexId::new(1 + (i * n / 8) as u32)).collect()
    }
}

pub fn is_connected(g: &Graph) -> bool {
    distances(g, VertexId::new(1)).iter().all(Option::is_some)
}
