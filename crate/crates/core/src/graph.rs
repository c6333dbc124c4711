//! Undirected simple graphs in compressed adjacency form.
//!
//! Vertices carry 1-based labels at every public interface. Internally the
//! adjacency arrays are 0-based, with each neighbor list sorted ascending so
//! that the Gauss-Seidel sweep can split a row into lower and higher labels
//! with a single binary search.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Diagonal value used when none is given.
pub const DEFAULT_DIAGONAL: u64 = 2;

/// A 1-based vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(u32);

impl VertexId {
    /// Panics if `label` is zero.
    pub fn new(label: u32) -> Self {
        assert!(label >= 1, "vertex labels start at 1");
        VertexId(label)
    }

    pub fn label(self) -> u32 {
        self.0
    }

    pub(crate) fn from_index(index: usize) -> Self {
        VertexId(index as u32 + 1)
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<VertexId> for u32 {
    fn from(v: VertexId) -> u32 {
        v.0
    }
}

/// Shorthand for building a sorted label list in tests and fixtures.
pub fn vertex_set<I: IntoIterator<Item = u32>>(labels: I) -> Vec<VertexId> {
    let mut v: Vec<VertexId> = labels.into_iter().map(VertexId::new).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Immutable undirected simple graph together with the modified diagonal
/// value `d` of its adjacency matrix. Equality compares structure and `d`.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    d: u64,
    dropped_duplicates: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.offsets == other.offsets && self.targets == other.targets
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds the canonical graph on labels `1..=n` from an edge list.
    ///
    /// Repeated edges (in either orientation) are collapsed and counted in
    /// [`Graph::dropped_duplicates`]; self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)], d: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if d == 0 {
            return Err(GraphError::InvalidDiagonal(d));
        }
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            for label in [u, v] {
                if label == 0 || label as usize > n {
                    return Err(GraphError::LabelOutOfRange {
                        label: label as u64,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u as usize - 1].push(v - 1);
            rows[v as usize - 1].push(u - 1);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(edges.len() * 2);
        offsets.push(0);
        let mut kept = 0usize;
        for mut row in rows {
            row.sort_unstable();
            row.dedup();
            kept += row.len();
            targets.extend_from_slice(&row);
            offsets.push(targets.len());
        }
        Ok(Graph {
            offsets,
            targets,
            d,
            dropped_duplicates: edges.len() - kept / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Modified diagonal value of the adjacency matrix.
    pub fn diagonal(&self) -> u64 {
        self.d
    }

    /// Copy of this graph with a different diagonal value.
    pub fn with_diagonal(&self, d: u64) -> Result<Self, GraphError> {
        if d == 0 {
            return Err(GraphError::InvalidDiagonal(d));
        }
        Ok(Graph { d, ..self.clone() })
    }

    /// Number of input edges discarded as duplicates during construction.
    pub fn dropped_duplicates(&self) -> usize {
        self.dropped_duplicates
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId::from_index)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count()
    }

    /// Neighbors of `v` in ascending label order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.row(v.index()).iter().map(|&j| VertexId::from_index(j as usize))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.row(v.index()).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.row(u.index()).binary_search(&(v.index() as u32)).is_ok()
    }

    /// Edges as `(u, v)` label pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.vertex_count() {
            for &j in self.upper(i) {
                out.push((i as u32 + 1, j + 1));
            }
        }
        out
    }

    /// Zero-based neighbor indices of vertex index `i`, ascending.
    pub(crate) fn row(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Neighbors with index above `i`.
    pub(crate) fn upper(&self, i: usize) -> &[u32] {
        let row = self.row(i);
        &row[row.partition_point(|&j| (j as usize) < i)..]
    }

    /// Relabels every vertex `v` as `p.apply(v)`.
    pub fn permute(&self, p: &VertexPermutation) -> Result<Self, GraphError> {
        if p.len() != self.vertex_count() {
            return Err(GraphError::SizeMismatch {
                permutation: p.len(),
                graph: self.vertex_count(),
            });
        }
        let edges: Vec<(u32, u32)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                (
                    p.apply(VertexId::new(u)).label(),
                    p.apply(VertexId::new(v)).label(),
                )
            })
            .collect();
        Graph::from_edges(self.vertex_count(), &edges, self.d)
    }
}

/// Relabels `g` under `p`; adjacency lists are re-sorted.
pub fn apply_permutation(g: &Graph, p: &VertexPermutation) -> Result<Graph, GraphError> {
    g.permute(p)
}

/// A bijection on `1..=n` mapping old labels to new labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    forward: Vec<u32>,
    inverse: Vec<u32>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        let forward: Vec<u32> = (0..n as u32).collect();
        VertexPermutation {
            inverse: forward.clone(),
            forward,
        }
    }

    /// `new_labels[i]` is the new label of old label `i + 1`.
    pub fn from_new_labels(new_labels: &[u32]) -> Result<Self, GraphError> {
        let n = new_labels.len();
        let mut inverse = vec![u32::MAX; n];
        for (old, &new) in new_labels.iter().enumerate() {
            if new == 0 || new as usize > n || inverse[new as usize - 1] != u32::MAX {
                return Err(GraphError::NotBijection(n));
            }
            inverse[new as usize - 1] = old as u32;
        }
        Ok(VertexPermutation {
            forward: new_labels.iter().map(|&l| l - 1).collect(),
            inverse,
        })
    }

    /// Builds the permutation from explicit `(old, new)` pairs covering `1..=n`.
    pub fn from_pairs(n: usize, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        if pairs.len() != n {
            return Err(GraphError::NotBijection(n));
        }
        let mut new_labels = vec![0u32; n];
        for &(old, new) in pairs {
            if old == 0 || old as usize > n || new_labels[old as usize - 1] != 0 {
                return Err(GraphError::NotBijection(n));
            }
            new_labels[old as usize - 1] = new;
        }
        Self::from_new_labels(&new_labels)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// New label of `old`.
    pub fn apply(&self, old: VertexId) -> VertexId {
        VertexId::from_index(self.forward[old.index()] as usize)
    }

    /// Old label of `new`.
    pub fn preimage(&self, new: VertexId) -> VertexId {
        VertexId::from_index(self.inverse[new.index()] as usize)
    }

    pub fn inverse(&self) -> VertexPermutation {
        VertexPermutation {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `(old, new)` pairs in ascending old-label order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.forward
            .iter()
            .enumerate()
            .map(|(old, &new)| (old as u32 + 1, new + 1))
            .collect()
    }
}

/// Assignment of every vertex to one of `K` connected components.
///
/// Components are numbered `1..=K` in discovery order; each member list is
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    assignment: Vec<u32>,
    members: Vec<Vec<VertexId>>,
}

impl ComponentPartition {
    /// Builds a partition of `1..=n` from component member lists. Panics if
    /// the lists do not cover every vertex exactly once.
    pub fn from_members(n: usize, mut members: Vec<Vec<VertexId>>) -> Self {
        let mut assignment = vec![0u32; n];
        for (c, list) in members.iter_mut().enumerate() {
            list.sort_unstable();
            for v in list.iter() {
                assert_eq!(assignment[v.index()], 0, "vertex {v} assigned twice");
                assignment[v.index()] = c as u32 + 1;
            }
        }
        assert!(
            assignment.iter().all(|&c| c != 0),
            "partition does not cover every vertex"
        );
        ComponentPartition {
            assignment,
            members,
        }
    }

    /// Number of components `K`.
    pub fn count(&self) -> usize {
        self.members.len()
    }

    /// 1-based component index of `v`.
    pub fn component_of(&self, v: VertexId) -> usize {
        self.assignment[v.index()] as usize
    }

    pub fn members(&self) -> &[Vec<VertexId>] {
        &self.members
    }

    /// Same partition with components ordered by their smallest label.
    pub fn canonical(&self) -> ComponentPartition {
        let mut members = self.members.clone();
        members.sort_unstable_by_key(|m| m[0]);
        ComponentPartition::from_members(self.assignment.len(), members)
    }

    /// True when both describe the same set partition, regardless of the
    /// order in which components were discovered.
    pub fn same_partition(&self, other: &ComponentPartition) -> bool {
        self.canonical() == other.canonical()
    }

    /// Image of this partition under a relabeling.
    pub fn relabel(&self, p: &VertexPermutation) -> ComponentPartition {
        let members = self
            .members
            .iter()
            .map(|m| m.iter().map(|&v| p.apply(v)).collect())
            .collect();
        ComponentPartition::from_members(self.assignment.len(), members)
    }

    /// True when every edge of `g` joins two vertices of the same component.
    pub fn respects_edges(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| {
            self.component_of(VertexId::new(u)) == self.component_of(VertexId::new(v))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_graph_has_eight_edges() {
        let g = fixtures::example_graph();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.diagonal(), 2);
        let adj2: Vec<u32> = g.neighbors(VertexId::new(2)).map(VertexId::label).collect();
        assert_eq!(adj2, vec![1, 3, 6]);
        let adj7: Vec<u32> = g.neighbors(VertexId::new(7)).map(VertexId::label).collect();
        assert_eq!(adj7, vec![3, 6, 8]);
    }

    #[test]
    fn single_isolated_vertex() {
        let g = Graph::from_edges(1, &[], 2).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(1, 2), (1, 2), (2, 1)], 2).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.dropped_duplicates(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(0, &[], 2), Err(GraphError::Empty));
        assert_eq!(
            Graph::from_edges(3, &[(1, 4)], 2),
            Err(GraphError::LabelOutOfRange { label: 4, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1)], 2),
            Err(GraphError::LabelOutOfRange { label: 0, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(2, 2)], 2),
            Err(GraphError::SelfLoop(2))
        );
        assert_eq!(
            Graph::from_edges(3, &[], 0),
            Err(GraphError::InvalidDiagonal(0))
        );
    }

    #[test]
    fn upper_neighbors() {
        let g = fixtures::example_graph();
        assert_eq!(g.upper(6), &[7]);
        assert_eq!(g.upper(0), &[1]);
        assert_eq!(g.upper(7), &[] as &[u32]);
    }

    #[test]
    fn identity_permutation_is_noop() {
        let g = Graph::from_edges(3, &[(1, 2), (2, 3)], 2).unwrap();
        let p = VertexPermutation::identity(3);
        assert_eq!(apply_permutation(&g, &p).unwrap(), g);
    }

    #[test]
    fn reversed_path_relabels_to_path() {
        let g = fixtures::reversed_path5();
        let p = VertexPermutation::from_pairs(5, &[(1, 1), (5, 2), (4, 3), (3, 4), (2, 5)]).unwrap();
        let h = apply_permutation(&g, &p).unwrap();
        assert_eq!(h.edges(), vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn permutation_errors() {
        let g = fixtures::example_graph();
        let p = VertexPermutation::identity(3);
        assert!(matches!(
            apply_permutation(&g, &p),
            Err(GraphError::SizeMismatch { .. })
        ));
        assert!(VertexPermutation::from_new_labels(&[1, 1]).is_err());
        assert!(VertexPermutation::from_new_labels(&[0, 1]).is_err());
        assert!(VertexPermutation::from_pairs(2, &[(1, 2)]).is_err());
    }

    #[test]
    fn permutation_inverse_roundtrip() {
        let p = VertexPermutation::from_new_labels(&[3, 1, 2]).unwrap();
        let q = p.inverse();
        for v in 1..=3 {
            let v = VertexId::new(v);
            assert_eq!(q.apply(p.apply(v)), v);
            assert_eq!(p.preimage(p.apply(v)), v);
        }
    }

    #[test]
    fn partition_canonical_compare() {
        let a = ComponentPartition::from_members(3, vec![vertex_set([3]), vertex_set([2, 1])]);
        let b = ComponentPartition::from_members(3, vec![vertex_set([1, 2]), vertex_set([3])]);
        assert_ne!(a, b);
        assert!(a.same_partition(&b));
        assert_eq!(a.component_of(VertexId::new(1)), 2);
    }
}
