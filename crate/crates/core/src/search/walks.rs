//! Closed tight walks: existence, extraction and counting.
//!
//! A closed tight walk of length `l` is a cyclic sequence `v_1 .. v_l` whose
//! cyclically consecutive triples are edges (hence 3-sets). These are exactly
//! the homomorphic images of the tight cycle `C_l`, and exactly the closed
//! walks of length `l` in the ordered-pair digraph.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, VertexId};
use crate::pair_digraph::PairDigraph;
use crate::search::cert::TightWalkCert;

/// A set of ordered pairs, stored as one vertex bitset per first coordinate.
#[derive(Clone)]
pub(crate) struct PairSet {
    words: usize,
    rows: Vec<u64>,
}

impl PairSet {
    fn empty(n: usize, words: usize) -> Self {
        Self {
            words,
            rows: vec![0; n * words],
        }
    }

    #[inline]
    pub(crate) fn row(&self, u: VertexId) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub(crate) fn contains(&self, u: VertexId, v: VertexId) -> bool {
        bits::test(self.row(u), v)
    }

    fn is_empty(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }
}

/// `layers[k]` holds the ordered pairs from which `target` is reachable in
/// exactly `k` steps of the pair digraph, using only vertices in `allowed`
/// (all vertices when `None`). Stops early once a layer is empty.
pub(crate) fn backward_layers(
    h: &Hypergraph3,
    target: (VertexId, VertexId),
    steps: usize,
    allowed: Option<&[u64]>,
) -> Vec<PairSet> {
    let n = h.n();
    let words = h.words();
    let mut first = PairSet::empty(n, words);
    bits::set(
        &mut first.rows[target.0 * words..(target.0 + 1) * words],
        target.1,
    );
    let mut layers = Vec::with_capacity(steps + 1);
    layers.push(first);
    for _ in 0..steps {
        let cur = layers.last().expect("non-empty");
        let mut prev = PairSet::empty(n, words);
        for u in 0..n {
            if allowed.is_some_and(|m| !bits::test(m, u)) {
                continue;
            }
            let out = &mut prev.rows[u * words..(u + 1) * words];
            for v in 0..n {
                if v == u
                    || h.codegree_unchecked(u, v) == 0
                    || allowed.is_some_and(|m| !bits::test(m, v))
                {
                    continue;
                }
                // (u, v) -> (v, w) for w in N(u, v); need (v, w) in cur
                if bits::intersects(h.row(u, v), cur.row(v)) {
                    bits::set(out, v);
                }
            }
        }
        let done = prev.is_empty();
        layers.push(prev);
        if done {
            break;
        }
    }
    layers
}

fn check_len(len: usize, min: usize) -> Result<()> {
    if len < min {
        return Err(Error::invalid(format!(
            "walk length must be >= {min}, got {len}"
        )));
    }
    Ok(())
}

/// Lexicographically least closed walk of length `len` starting with the
/// ordered pair `start`, if any.
pub(crate) fn least_walk_from(
    h: &Hypergraph3,
    start: (VertexId, VertexId),
    len: usize,
) -> Option<TightWalkCert> {
    let (a, b) = start;
    if h.codegree_unchecked(a, b) == 0 {
        return None;
    }
    let layers = backward_layers(h, start, len, None);
    if layers.len() <= len || !layers[len].contains(a, b) {
        return None;
    }
    let mut seq = vec![a, b];
    let (mut x, mut y) = start;
    for step in 1..=len - 2 {
        // after `step` arcs we sit on (y, w) and must still reach start in len - step
        let w = bits::first_common(h.row(x, y), layers[len - step].row(y))
            .expect("layer guarantees a continuation");
        seq.push(w);
        (x, y) = (y, w);
    }
    TightWalkCert::new(seq).ok()
}

/// The lexicographically least closed tight walk of length `len` (which is
/// also canonical under rotation and reversal), or `None`.
///
/// Starting pairs are tried in parallel; the first success in lexicographic
/// order wins, so the answer does not depend on the thread count.
pub fn find_closed_tight_walk(h: &Hypergraph3, len: usize) -> Result<Option<TightWalkCert>> {
    check_len(len, 4)?;
    Ok(closed_walk_unchecked(h, len))
}

pub(crate) fn closed_walk_unchecked(h: &Hypergraph3, len: usize) -> Option<TightWalkCert> {
    let n = h.n();
    (0..n * n)
        .into_par_iter()
        .map(|i| (i / n, i % n))
        .filter(|&(a, b)| a != b)
        .find_map_first(|s| least_walk_from(h, s, len))
}

pub fn has_closed_tight_walk(h: &Hypergraph3, len: usize) -> Result<bool> {
    Ok(find_closed_tight_walk(h, len)?.is_some())
}

/// Whether some closed tight walk of length `len` uses the edge `e` as one of
/// its consecutive triples. `e` must be an edge of `h`.
///
/// A walk through `e` contains `x, y, z` consecutively for some ordering of
/// `e`; reversing the walk turns the ordering around, so the three cyclic
/// rotations of `e` suffice.
pub fn walk_through_edge(h: &Hypergraph3, e: [VertexId; 3], len: usize) -> bool {
    debug_assert!(h.contains(&e));
    let [p, q, r] = e;
    [(p, q, r), (q, r, p), (r, p, q)]
        .into_iter()
        .any(|(x, y, z)| {
            // arc (x, y) -> (y, z), then back to (x, y) in len - 1 steps
            let layers = backward_layers(h, (x, y), len - 1, None);
            layers.len() == len && layers[len - 1].contains(y, z)
        })
}

/// Number of closed tight walks, possibly saturated at `u128::MAX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WalkCount {
    pub count: u128,
    pub saturated: bool,
}

/// Counts sequences `(v_1, .., v_len)` all of whose cyclic triples are edges,
/// as the trace of the `len`-th power of the pair digraph's adjacency matrix.
/// Rotations and reversals are counted separately.
pub fn count_closed_tight_walks(h: &Hypergraph3, len: usize) -> Result<WalkCount> {
    check_len(len, 3)?;
    let d = PairDigraph::new(h);
    let nodes = d.node_count();
    let per_start: Vec<(u128, bool)> = (0..nodes)
        .into_par_iter()
        .map(|s| {
            if d.successors(s).is_empty() {
                return (0, false);
            }
            let mut saturated = false;
            let mut cur = vec![0u128; nodes];
            cur[s] = 1;
            for _ in 0..len {
                let mut next = vec![0u128; nodes];
                for (i, &c) in cur.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for &j in d.successors(i) {
                        next[j] = next[j].checked_add(c).unwrap_or_else(|| {
                            saturated = true;
                            u128::MAX
                        });
                    }
                }
                cur = next;
            }
            (cur[s], saturated)
        })
        .collect();
    let mut total = WalkCount {
        count: 0,
        saturated: false,
    };
    for (c, sat) in per_start {
        total.saturated |= sat;
        match total.count.checked_add(c) {
            Some(sum) => total.count = sum,
            None => total.saturated = true,
        }
    }
    if total.saturated {
        total.count = u128::MAX;
    }
    Ok(total)
}
