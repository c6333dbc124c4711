//! Small graphs with hand-checkable traversals, used by tests and the
//! `verify` command.

use crate::graph::{Graph, DEFAULT_DIAGONAL};

/// Eight-vertex graph whose BFS needs four iterations from vertex 1 and
/// whose Gauss-Seidel traversal needs two.
pub const EXAMPLE_EDGES: [(u32, u32); 8] = [
    (1, 2),
    (2, 3),
    (2, 6),
    (3, 4),
    (3, 7),
    (5, 6),
    (6, 7),
    (7, 8),
];

pub fn example_graph() -> Graph {
    Graph::from_edges(8, &EXAMPLE_EDGES, DEFAULT_DIAGONAL).expect("fixture is valid")
}

/// Path `1-2-3-4-5`: a single correct chain from vertex 2.
pub fn path5() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], DEFAULT_DIAGONAL)
        .expect("fixture is valid")
}

/// The same path labeled `1-5-4-3-2`, with no ascending edge leaving the
/// visited set.
pub fn reversed_path5() -> Graph {
    Graph::from_edges(5, &[(1, 5), (5, 4), (4, 3), (3, 2)], DEFAULT_DIAGONAL)
        .expect("fixture is valid")
}

/// Path `1-2-3`, traversed from vertex 2: the walk `2-1-2-3` feeds `x_3`.
pub fn walk_fixture(d: u64) -> Graph {
    Graph::from_edges(3, &[(1, 2), (2, 3)], d).expect("fixture is valid")
}

/// Two correct chains `1-3-4-5` and `1-2-5` meeting at vertex 5.
pub fn two_chain_fixture(d: u64) -> Graph {
    Graph::from_edges(5, &[(1, 3), (3, 4), (4, 5), (1, 2), (2, 5)], d)
        .expect("fixture is valid")
}
