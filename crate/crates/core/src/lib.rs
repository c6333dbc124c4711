//! Connected-component search by Gauss-Seidel and Jacobi sweeps over the
//! diagonally modified adjacency matrix, with the combinatorial traversals
//! and brute-force chain enumeration used to check them.
//!
//! ```
//! use chainsearch::{find_connected_component, fixtures, TraversalConfig, VertexId};
//!
//! let g = fixtures::example_graph();
//! let cfg = TraversalConfig::gauss_seidel();
//! let (component, trace) = find_connected_component(&g, VertexId::new(1), &cfg).unwrap();
//! assert_eq!(component.len(), 8);
//! assert_eq!(trace.iteration_count(), 2);
//! ```

pub mod algebraic;
pub mod chain;
pub mod combinatorial;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod renumber;
pub mod trace;
pub mod union_find;

pub use algebraic::{
    extract_frontier, find_all_components, find_connected_component, gauss_seidel_step,
    jacobi_step, regularize, unsigned_step, update_mask, ArithmeticMode, MaskSet, SeedRule,
    StateValues, StateVector, TraversalConfig, Variant, DEFAULT_REGULARIZE_EVERY,
    DEFAULT_SATURATION_CAP,
};
pub use combinatorial::{combinatorial_bfs, combinatorial_ccs, correct_chain_closure};
pub use error::{GenerateError, GraphError, OracleError, ParseError, TraversalError};
pub use graph::{
    apply_permutation, vertex_set, ComponentPartition, Graph, VertexId, VertexPermutation,
    DEFAULT_DIAGONAL,
};
pub use renumber::{bfs_order_renumbering, numbering_quality, NumberingReport};
pub use trace::{IterationRecord, TraversalTrace};
pub use union_find::{components_union_find, UnionFind};
