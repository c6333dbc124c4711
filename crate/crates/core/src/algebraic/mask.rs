use crate::graph::VertexId;

/// Vertices excluded from the sweep: never read, never written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskSet {
    masked: Vec<bool>,
    len: usize,
}

impl MaskSet {
    pub fn empty(vertex_count: usize) -> Self {
        MaskSet {
            masked: vec![false; vertex_count],
            len: 0,
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(vertex_count: usize, vs: I) -> Self {
        let mut m = Self::empty(vertex_count);
        m.extend(vs);
        m
    }

    pub fn insert(&mut self, v: VertexId) {
        let slot = &mut self.masked[v.index()];
        if !*slot {
            *slot = true;
            self.len += 1;
        }
    }

    pub fn extend<I: IntoIterator<Item = VertexId>>(&mut self, vs: I) {
        for v in vs {
            self.insert(v);
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.masked[v.index()]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.masked.len()
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.masked
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| VertexId::from_index(i))
            .collect()
    }

    pub(crate) fn flags(&self) -> &[bool] {
        &self.masked
    }
}
