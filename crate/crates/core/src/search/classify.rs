//! Apex and base pairs of K4⁻ copies.
//!
//! A pair `{u, v}` is a base pair if some K4⁻ contains both with neither as
//! apex, and `(u, v)` is an arc of the apex digraph `D` if some K4⁻ has apex
//! `v` and contains `u`. In a hypergraph without a closed tight 10-walk and
//! with large minimum codegree every pair is exactly one of: a base pair, an
//! arc one way, an arc the other way. Nothing here assumes that; overlaps are
//! reported, not prevented.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClassification {
    n: usize,
    base: Vec<bool>,
    arc: Vec<bool>,
    base_degree: Vec<usize>,
    out_degree: Vec<usize>,
    in_degree: Vec<usize>,
}

/// Per-vertex tallies `d_B(v)`, `d⁺_D(v)`, `d⁻_D(v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexTally {
    pub vertex: VertexId,
    pub base: usize,
    pub out: usize,
    pub inn: usize,
}

impl PairClassification {
    /// Builds a classification from explicit base pairs and arcs `(u, v)`
    /// (meaning `v` is the apex).
    pub fn from_parts(
        n: usize,
        base_pairs: &[(VertexId, VertexId)],
        arcs: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let mut base = vec![false; n * n];
        let mut arc = vec![false; n * n];
        for &(u, v) in base_pairs {
            check(n, u, v)?;
            base[u * n + v] = true;
            base[v * n + u] = true;
        }
        for &(u, v) in arcs {
            check(n, u, v)?;
            arc[u * n + v] = true;
        }
        Ok(Self::with_tallies(n, base, arc))
    }

    fn with_tallies(n: usize, base: Vec<bool>, arc: Vec<bool>) -> Self {
        let mut base_degree = vec![0; n];
        let mut out_degree = vec![0; n];
        let mut in_degree = vec![0; n];
        for u in 0..n {
            for v in 0..n {
                if base[u * n + v] {
                    base_degree[u] += 1;
                }
                if arc[u * n + v] {
                    out_degree[u] += 1;
                    in_degree[v] += 1;
                }
            }
        }
        Self {
            n,
            base,
            arc,
            base_degree,
            out_degree,
            in_degree,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_base(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.base[u * self.n + v]
    }

    /// Whether `(u, v)` is an arc of `D`, i.e. `{u, v}` is an apex pair with apex `v`.
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.arc[u * self.n + v]
    }

    pub fn is_apex_pair(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn base_degree(&self, v: VertexId) -> usize {
        self.base_degree[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_degree[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_degree[v]
    }

    pub fn tallies(&self) -> Vec<VertexTally> {
        (0..self.n)
            .map(|v| VertexTally {
                vertex: v,
                base: self.base_degree[v],
                out: self.out_degree[v],
                inn: self.in_degree[v],
            })
            .collect()
    }

    /// Base pairs `(u, v)` with `u < v`, sorted.
    pub fn base_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.base[u * n + v])
            .collect()
    }

    /// Arcs of `D`, sorted.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.arc[u * n + v])
            .collect()
    }

    /// Pairs `u < v` that are both a base pair and an apex pair.
    pub fn conflicting_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.base_pairs()
            .into_iter()
            .filter(|&(u, v)| self.is_apex_pair(u, v))
            .collect()
    }

    /// Pairs `u < v` lying in no K4⁻ at all.
    pub fn unclassified_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.is_base(u, v) && !self.is_apex_pair(u, v))
            .collect()
    }

    /// Graphviz rendering of `D`; base pairs follow as a comment block.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph D {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "  {u} -> {v};");
        }
        out.push_str("  // base pairs (undirected)\n");
        for (u, v) in self.base_pairs() {
            let _ = writeln!(out, "  // {u} -- {v}");
        }
        out.push_str("}\n");
        out
    }
}

fn check(n: usize, u: VertexId, v: VertexId) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange {
            vertex: u.max(v),
            n,
        });
    }
    if u == v {
        return Err(Error::InvalidPair { u, v });
    }
    Ok(())
}

/// Vertices with an arc into one apex, and the base pairs under it.
type ApexScan = (Vec<VertexId>, Vec<(VertexId, VertexId)>);

/// Classifies every pair by scanning the link of each vertex for triangles.
///
/// For an apex `a` and a link edge `{b, c}`, the pair lies in a link triangle
/// iff `N(a, b) ∩ N(a, c)` is non-empty; then `{b, c}` is a base pair and both
/// `(b, a)` and `(c, a)` are arcs. Apexes are processed in parallel and merged
/// by union, so the result does not depend on the thread count.
pub fn classify_pairs(h: &Hypergraph3) -> PairClassification {
    let n = h.n();
    let per_apex: Vec<ApexScan> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut into_a = vec![false; n];
            let mut bases = Vec::new();
            for b in (0..n).filter(|&b| b != a) {
                let nab = h.row(a, b);
                for c in bits::ones(nab).filter(|&c| c > b) {
                    if bits::intersects(nab, h.row(a, c)) {
                        into_a[b] = true;
                        into_a[c] = true;
                        bases.push((b, c));
                    }
                }
            }
            let sources = (0..n).filter(|&v| into_a[v]).collect();
            (sources, bases)
        })
        .collect();

    let mut base = vec![false; n * n];
    let mut arc = vec![false; n * n];
    for (a, (sources, bases)) in per_apex.into_iter().enumerate() {
        for u in sources {
            arc[u * n + a] = true;
        }
        for (b, c) in bases {
            base[b * n + c] = true;
            base[c * n + b] = true;
        }
    }
    PairClassification::with_tallies(n, base, arc)
}

/// Unordered pairs `{u, v}`, `u < v`, with both `(u, v)` and `(v, u)` in `D`.
pub fn digraph_two_cycles(pc: &PairClassification) -> Vec<(VertexId, VertexId)> {
    let n = pc.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| pc.has_arc(u, v) && pc.has_arc(v, u))
        .collect()
}
