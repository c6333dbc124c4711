//! Graph families shared by the traversal benchmarks.

use chainsearch::io::generate_random_graph;
use chainsearch::Graph;

/// Connected sparse random graph with about `avg_degree` neighbors per vertex.
pub fn sparse_connected(n: usize, avg_degree: f64, seed: u64) -> Graph {
    let density = (avg_degree / (n.max(2) - 1) as f64).min(1.0);
    let edges = generate_random_graph(n, density, Some(1), seed).expect("valid parameters");
    Graph::from_edges(n, &edges, 2).expect("generated labels are in range")
}

/// Path `1-2-...-n`: correct chain search finishes in one iteration.
pub fn ascending_path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges, 2).expect("path labels are in range")
}

/// Path `1-n-(n-1)-...-2`: every chain from vertex 1 descends.
pub fn descending_path(n: usize) -> Graph {
    let mut edges = vec![(1, n as u32)];
    edges.extend((3..=n as u32).rev().map(|i| (i, i - 1)));
    Graph::from_edges(n, &edges, 2).expect("path labels are in range")
}

/// Graph with `k` equal-sized random components.
pub fn multi_component(n: usize, k: usize, avg_degree: f64, seed: u64) -> Graph {
    let density = (avg_degree / (n.max(2) - 1) as f64).min(1.0);
    let edges = generate_random_graph(n, density, Some(k), seed).expect("valid parameters");
    Graph::from_edges(n, &edges, 2).expect("generated labels are in range")
}
