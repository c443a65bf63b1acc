//! Copies of the tight cycle `C_l` (closed tight walks without repeated vertices).

use rayon::prelude::*;

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, VertexId};
use crate::search::cert::TightWalkCert;
use crate::search::walks::{backward_layers, closed_walk_unchecked, PairSet};

struct CycleDfs<'a> {
    h: &'a Hypergraph3,
    len: usize,
    layers: Vec<PairSet>,
    path: Vec<VertexId>,
    visited: Vec<u64>,
    // vertices > path[0]
    allowed: Vec<u64>,
}

impl CycleDfs<'_> {
    /// Extends `path` (length >= 2) in increasing vertex order.
    fn extend(&mut self) -> bool {
        let k = self.path.len();
        if k == self.len {
            return true;
        }
        let x = self.path[k - 2];
        let y = self.path[k - 1];
        let mut cand: Vec<u64> = self
            .h
            .row(x, y)
            .iter()
            .zip(&self.allowed)
            .zip(&self.visited)
            .map(|((n, a), v)| n & a & !v)
            .collect();
        if k + 1 == self.len {
            // the last vertex closes the triples (x, y, w), (y, w, v1), (w, v1, v2)
            let (v1, v2) = (self.path[0], self.path[1]);
            for (c, (p, q)) in cand
                .iter_mut()
                .zip(self.h.row(y, v1).iter().zip(self.h.row(v1, v2)))
            {
                *c &= p & q;
            }
        }
        // (y, w) must still reach (v1, v2) in the remaining steps
        let layer = &self.layers[self.len - (k - 1)];
        let next: Vec<VertexId> = bits::ones(&cand)
            .filter(|&w| layer.contains(y, w))
            .collect();
        for w in next {
            self.path.push(w);
            bits::set(&mut self.visited, w);
            if self.extend() {
                return true;
            }
            bits::clear(&mut self.visited, w);
            self.path.pop();
        }
        false
    }
}

fn least_cycle_from(
    h: &Hypergraph3,
    v1: VertexId,
    v2: VertexId,
    len: usize,
) -> Option<TightWalkCert> {
    if h.codegree_unchecked(v1, v2) == 0 {
        return None;
    }
    let words = h.words();
    let mut allowed = vec![0u64; words];
    for v in v1..h.n() {
        bits::set(&mut allowed, v);
    }
    let layers = backward_layers(h, (v1, v2), len, Some(&allowed));
    if layers.len() <= len || !layers[len].contains(v1, v2) {
        return None;
    }
    bits::clear(&mut allowed, v1);
    let mut visited = vec![0u64; words];
    bits::set(&mut visited, v1);
    bits::set(&mut visited, v2);
    let mut dfs = CycleDfs {
        h,
        len,
        layers,
        path: vec![v1, v2],
        visited,
        allowed,
    };
    dfs.extend()
        .then(|| TightWalkCert::new(dfs.path).expect("len >= 4"))
}

/// The lexicographically least copy of `C_len`, as an injective walk.
///
/// Every rotation of a cycle starting at its smallest vertex is considered,
/// so the first hit in lexicographic order is already canonical under
/// rotation and reversal. Depth-first search prunes with a visited bitset, by
/// requiring every later vertex to exceed the first, and by the exact
/// reachability layers of the pair digraph restricted to those vertices.
pub fn find_tight_cycle(h: &Hypergraph3, len: usize) -> Result<Option<TightWalkCert>> {
    if len < 4 {
        return Err(Error::invalid(format!(
            "cycle length must be >= 4, got {len}"
        )));
    }
    // no homomorphic image means no copy
    if len > h.n() || closed_walk_unchecked(h, len).is_none() {
        return Ok(None);
    }
    let n = h.n();
    Ok((0..n * n)
        .into_par_iter()
        .map(|i| (i / n, i % n))
        .filter(|&(a, b)| a < b)
        .find_map_first(|(a, b)| least_cycle_from(h, a, b, len)))
}
