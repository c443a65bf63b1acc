//! The ordered-pair transition digraph of a hypergraph.
//!
//! Nodes are ordered pairs `(u, v)`, `u != v`; there is an arc
//! `(u, v) -> (v, w)` exactly when `{u, v, w}` is an edge. Closed walks of
//! length `l` in this digraph are the closed tight walks of length `l` in the
//! hypergraph.

use crate::bits;
use crate::hypergraph::{Hypergraph3, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDigraph {
    n: usize,
    nodes: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl PairDigraph {
    pub fn new(h: &Hypergraph3) -> Self {
        let n = h.n();
        let nodes: Vec<_> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let mut offsets = Vec::with_capacity(nodes.len() + 1);
        let mut targets = Vec::with_capacity(6 * h.edge_count());
        offsets.push(0);
        for &(u, v) in &nodes {
            targets.extend(bits::ones(h.row(u, v)).map(|w| pair_index(n, v, w)));
            offsets.push(targets.len());
        }
        Self {
            n,
            nodes,
            offsets,
            targets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    /// Nodes in lexicographic order; a node's position is its index.
    pub fn nodes(&self) -> &[(VertexId, VertexId)] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> (VertexId, VertexId) {
        self.nodes[index]
    }

    pub fn index_of(&self, u: VertexId, v: VertexId) -> Option<usize> {
        (u < self.n && v < self.n && u != v).then(|| pair_index(self.n, u, v))
    }

    pub fn successors(&self, index: usize) -> &[usize] {
        &self.targets[self.offsets[index]..self.offsets[index + 1]]
    }

    pub fn has_arc(&self, from: (VertexId, VertexId), to: (VertexId, VertexId)) -> bool {
        match (self.index_of(from.0, from.1), self.index_of(to.0, to.1)) {
            (Some(i), Some(j)) if from.1 == to.0 => self.successors(i).binary_search(&j).is_ok(),
            _ => false,
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = ((VertexId, VertexId), (VertexId, VertexId))> + '_ {
        (0..self.nodes.len()).flat_map(move |i| {
            self.successors(i)
                .iter()
                .map(move |&j| (self.nodes[i], self.nodes[j]))
        })
    }
}

/// Index of `(u, v)` in the lexicographic list of ordered pairs with distinct entries.
#[inline]
pub(crate) fn pair_index(n: usize, u: VertexId, v: VertexId) -> usize {
    u * (n - 1) + if v > u { v - 1 } else { v }
}

impl Hypergraph3 {
    pub fn pair_digraph(&self) -> PairDigraph {
        PairDigraph::new(self)
    }
}
