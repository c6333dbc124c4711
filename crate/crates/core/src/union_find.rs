//! Disjoint-set forest; the independent oracle for component tests.

use crate::graph::{ComponentPartition, Graph, VertexId};

/// Union by size with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Connected components by edge-set union. Components are numbered by
/// their smallest label.
pub fn components_union_find(g: &Graph) -> ComponentPartition {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for (u, v) in g.edges() {
        uf.union(u as usize - 1, v as usize - 1);
    }
    let mut slot = vec![usize::MAX; n];
    let mut members: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        if slot[r] == usize::MAX {
            slot[r] = members.len();
            members.push(Vec::new());
        }
        members[slot[r]].push(VertexId::from_index(i));
    }
    ComponentPartition::from_members(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::vertex_set;

    #[test]
    fn example_graph_is_connected() {
        let p = components_union_find(&fixtures::example_graph());
        assert_eq!(p.count(), 1);
        assert_eq!(p.members()[0], vertex_set(1..=8));
    }

    #[test]
    fn isolated_vertex_is_own_component() {
        let g = Graph::from_edges(3, &[(1, 2)], 2).unwrap();
        let p = components_union_find(&g);
        assert_eq!(p.count(), 2);
        assert_eq!(p.members(), &[vertex_set([1, 2]), vertex_set([3])]);
        assert!(p.respects_edges(&g));
    }

    #[test]
    fn union_reports_merges() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(uf.union(2, 3));
        assert!(!uf.union(1, 0));
        assert!(uf.union(1, 3));
        assert_eq!(uf.find(0), uf.find(2));
    }
}
