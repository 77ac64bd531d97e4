use serde::{Deserialize, Serialize};

use super::GraphError;

/// Where a vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexLabel {
    /// Vertex `(block, offset)` of `Z_m × Z_ℓ`.
    Block { block: usize, offset: usize },
    /// The universal vertex added by bordering.
    Border,
}

/// Undirected simple graph stored as a symmetric bit-adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<VertexLabel>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    /// Builds a graph from 0-based edges. Self-loops, repeated edges and
    /// out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    /// Adjacency row of `u` as little-endian words.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, 0-based, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Checks symmetry and the empty diagonal.
    pub fn check_simple(&self) -> Result<(), GraphError> {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for v in self.neighbors(u) {
                if !self.has_edge(v, u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(())
    }

    /// Renames vertex `u` to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SimpleGraph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        if let Some(labels) = &self.labels {
            let mut moved = labels.clone();
            for (u, &p) in perm.iter().enumerate() {
                moved[p] = labels[u];
            }
            g.labels = Some(moved);
        }
        g
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// Sorted 1-based edge list, the numbering used by every external format.
pub fn edge_list(g: &SimpleGraph) -> Vec<(usize, usize)> {
    g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
}
