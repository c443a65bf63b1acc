use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{sort3, Hypergraph3, VertexId};

/// A copy of K4⁻: an apex `a` and a base `{b, c, d}` such that `abc`, `abd`
/// and `acd` are edges. The base triple itself may or may not be an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct K4MinusCert {
    pub apex: VertexId,
    /// Ascending.
    pub base: [VertexId; 3],
}

impl K4MinusCert {
    pub fn new(apex: VertexId, base: [VertexId; 3]) -> Result<Self> {
        let base = sort3(base);
        if base[0] == base[1] || base[1] == base[2] || base.contains(&apex) {
            return Err(Error::invalid(format!(
                "K4- needs four distinct vertices, got apex {apex} and base {base:?}"
            )));
        }
        Ok(Self { apex, base })
    }

    /// All four vertices, ascending.
    pub fn vertices(&self) -> [VertexId; 4] {
        let mut v = [self.apex, self.base[0], self.base[1], self.base[2]];
        v.sort_unstable();
        v
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.apex == v || self.base.contains(&v)
    }

    /// The three edges through the apex.
    pub fn edges(&self) -> [[VertexId; 3]; 3] {
        let [b, c, d] = self.base;
        let a = self.apex;
        [sort3([a, b, c]), sort3([a, b, d]), sort3([a, c, d])]
    }

    pub fn is_valid_in(&self, h: &Hypergraph3) -> bool {
        self.edges().iter().all(|e| h.contains(e))
    }
}

/// Every K4⁻ with apex `a`, i.e. the triangles of the link of `a`, in
/// lexicographic order of their bases.
pub fn k4minus_with_apex(h: &Hypergraph3, a: VertexId) -> Result<Vec<K4MinusCert>> {
    Ok(h.link_graph(a)?
        .triangles()
        .into_iter()
        .map(|base| K4MinusCert { apex: a, base })
        .collect())
}

/// Least K4⁻ (by base) with apex `apex` that contains `other`.
pub fn apex_witness(h: &Hypergraph3, other: VertexId, apex: VertexId) -> Option<K4MinusCert> {
    if other >= h.n() || apex >= h.n() || other == apex {
        return None;
    }
    // base = {other, c, d} with c in N(apex, other) and d in N(apex, other) ∩ N(apex, c)
    let mut best: Option<K4MinusCert> = None;
    for c in bits::ones(h.row(apex, other)) {
        if let Some(d) = bits::ones(h.row(apex, other))
            .filter(|&d| d != c)
            .find(|&d| bits::test(h.row(apex, c), d))
        {
            let cert = K4MinusCert {
                apex,
                base: sort3([other, c, d]),
            };
            if best.is_none_or(|b| cert < b) {
                best = Some(cert);
            }
        }
    }
    best
}

/// Least K4⁻ (by apex, then base) containing both `u` and `v`, neither as apex.
pub fn base_witness(h: &Hypergraph3, u: VertexId, v: VertexId) -> Option<K4MinusCert> {
    if u >= h.n() || v >= h.n() || u == v {
        return None;
    }
    // apex a with uv in its link, plus d adjacent to both u and v in that link
    for a in bits::ones(h.row(u, v)) {
        if let Some(d) = bits::first_common(h.row(a, u), h.row(a, v)) {
            return Some(K4MinusCert {
                apex: a,
                base: sort3([u, v, d]),
            });
        }
    }
    None
}
