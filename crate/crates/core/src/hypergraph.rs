//! Dense 3-uniform hypergraphs with a per-pair neighbourhood index.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Vertices are dense indices `0..n` of their host hypergraph.
pub type VertexId = usize;

/// An edge, always stored with its vertices in ascending order.
pub type Edge = [VertexId; 3];

/// Largest vertex count accepted. The neighbourhood index takes `n^3 / 8` bytes.
pub const MAX_VERTICES: usize = 1024;

/// Sorts a triple ascending.
#[inline]
pub fn sort3([a, b, c]: [VertexId; 3]) -> Edge {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let (b, c) = if b <= c { (b, c) } else { (c, b) };
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    [a, b, c]
}

/// A 3-uniform hypergraph on vertices `0..n`.
///
/// For every ordered pair `(u, v)` the index keeps the neighbourhood
/// `N(u, v) = { w : {u, v, w} is an edge }` as a bitset together with its size,
/// so membership, codegree and neighbourhood queries are O(1) or O(n / 64).
/// Both orientations of a pair are stored to keep lookups branch-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    n: usize,
    words: usize,
    edges: usize,
    nbr: Vec<u64>,
    codeg: Vec<u32>,
}

impl Hypergraph3 {
    /// The edgeless hypergraph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let words = bits::words_for(n);
        Ok(Self {
            n,
            words,
            edges: 0,
            nbr: vec![0; n * n * words],
            codeg: vec![0; n * n],
        })
    }

    /// Builds a hypergraph from a list of triples. Triples may be given in any
    /// vertex order; repeated vertices, out-of-range vertices and duplicate
    /// edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [VertexId; 3]>,
    {
        let mut h = Self::new(n)?;
        for e in edges {
            h.add_edge(e)?;
        }
        Ok(h)
    }

    /// The complete 3-graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut h = Self::new(n)?;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    h.insert_unchecked([a, b, c]);
                }
            }
        }
        Ok(h)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges == 0
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn row(&self, u: VertexId, v: VertexId) -> &[u64] {
        let at = (u * self.n + v) * self.words;
        &self.nbr[at..at + self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: VertexId, v: VertexId) -> &mut [u64] {
        let at = (u * self.n + v) * self.words;
        &mut self.nbr[at..at + self.words]
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidPair { u, v });
        }
        Ok(())
    }

    fn check_triple(&self, e: [VertexId; 3]) -> Result<Edge> {
        for &v in &e {
            self.check_vertex(v)?;
        }
        let s = sort3(e);
        if s[0] == s[1] || s[1] == s[2] {
            return Err(Error::DegenerateEdge(e));
        }
        Ok(s)
    }

    /// Whether `{a, b, c}` is an edge. Degenerate or out-of-range triples are not.
    #[inline]
    pub fn has_edge(&self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        a < self.n
            && b < self.n
            && c < self.n
            && a != b
            && a != c
            && b != c
            && bits::test(self.row(a, b), c)
    }

    #[inline]
    pub fn contains(&self, e: &[VertexId; 3]) -> bool {
        self.has_edge(e[0], e[1], e[2])
    }

    fn for_each_orientation(e: Edge, mut f: impl FnMut(VertexId, VertexId, VertexId)) {
        let [a, b, c] = e;
        f(a, b, c);
        f(b, a, c);
        f(a, c, b);
        f(c, a, b);
        f(b, c, a);
        f(c, b, a);
    }

    fn insert_unchecked(&mut self, e: Edge) {
        Self::for_each_orientation(e, |u, v, w| {
            bits::set(self.row_mut(u, v), w);
        });
        Self::for_each_orientation(e, |u, v, _| {
            // each ordered pair appears once among the six orientations
            self.codeg[u * self.n + v] += 1;
        });
        self.edges += 1;
    }

    fn remove_unchecked(&mut self, e: Edge) {
        Self::for_each_orientation(e, |u, v, w| {
            bits::clear(self.row_mut(u, v), w);
        });
        Self::for_each_orientation(e, |u, v, _| {
            self.codeg[u * self.n + v] -= 1;
        });
        self.edges -= 1;
    }

    pub fn add_edge(&mut self, e: [VertexId; 3]) -> Result<()> {
        let s = self.check_triple(e)?;
        if self.contains(&s) {
            return Err(Error::DuplicateEdge(s));
        }
        self.insert_unchecked(s);
        Ok(())
    }

    pub fn remove_edge(&mut self, e: [VertexId; 3]) -> Result<()> {
        let s = self.check_triple(e)?;
        if !self.contains(&s) {
            return Err(Error::MissingEdge(s));
        }
        self.remove_unchecked(s);
        Ok(())
    }

    /// Flips membership of `e`; returns whether it is present afterwards.
    pub fn toggle_edge(&mut self, e: [VertexId; 3]) -> Result<bool> {
        let s = self.check_triple(e)?;
        if self.contains(&s) {
            self.remove_unchecked(s);
            Ok(false)
        } else {
            self.insert_unchecked(s);
            Ok(true)
        }
    }

    /// Edges in lexicographic order, each sorted ascending.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| {
            (a + 1..n).flat_map(move |b| {
                bits::ones(self.row(a, b))
                    .filter(move |&c| c > b)
                    .map(move |c| [a, b, c])
            })
        })
    }

    /// `N(u, v)` in ascending order.
    pub fn neighborhood(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_pair(u, v)?;
        Ok(bits::ones(self.row(u, v)).collect())
    }

    pub fn codegree(&self, u: VertexId, v: VertexId) -> Result<usize> {
        self.check_pair(u, v)?;
        Ok(self.codegree_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn codegree_unchecked(&self, u: VertexId, v: VertexId) -> usize {
        self.codeg[u * self.n + v] as usize
    }

    /// Number of edges containing `a`.
    pub fn degree(&self, a: VertexId) -> Result<usize> {
        self.check_vertex(a)?;
        let twice: usize = (0..self.n)
            .filter(|&b| b != a)
            .map(|b| self.codegree_unchecked(a, b))
            .sum();
        Ok(twice / 2)
    }

    /// Minimum codegree over all unordered pairs.
    pub fn min_codegree(&self) -> Result<usize> {
        self.worst_pair()
            .map(|(_, _, d)| d)
            .ok_or_else(|| Error::invalid("minimum codegree needs at least two vertices"))
    }

    /// Lexicographically least pair attaining the minimum codegree, with that codegree.
    pub fn worst_pair(&self) -> Option<(VertexId, VertexId, usize)> {
        let mut best: Option<(VertexId, VertexId, usize)> = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let d = self.codegree_unchecked(u, v);
                if best.is_none_or(|(_, _, b)| d < b) {
                    best = Some((u, v, d));
                }
            }
        }
        best
    }

    /// `hist[d]` is the number of unordered pairs of codegree `d`.
    pub fn codegree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.n.saturating_sub(1).max(1)];
        for u in 0..self.n {
            for v in u + 1..self.n {
                hist[self.codegree_unchecked(u, v)] += 1;
            }
        }
        hist
    }

    /// The link of `a`: the graph on the other vertices whose edges are the
    /// pairs `{b, c}` with `{a, b, c}` an edge.
    pub fn link_graph(&self, a: VertexId) -> Result<LinkGraph> {
        self.check_vertex(a)?;
        let mut adj = vec![0u64; self.n * self.words];
        for b in (0..self.n).filter(|&b| b != a) {
            adj[b * self.words..(b + 1) * self.words].copy_from_slice(self.row(a, b));
        }
        Ok(LinkGraph {
            center: a,
            n: self.n,
            words: self.words,
            adj,
        })
    }
}

impl fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph3")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A simple graph on `V \ {center}` stored as adjacency bitsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    center: VertexId,
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl LinkGraph {
    pub fn center(&self) -> VertexId {
        self.center
    }

    pub(crate) fn row(&self, b: VertexId) -> &[u64] {
        &self.adj[b * self.words..(b + 1) * self.words]
    }

    pub fn has_edge(&self, b: VertexId, c: VertexId) -> bool {
        b < self.n && c < self.n && bits::test(self.row(b), c)
    }

    pub fn neighbors(&self, b: VertexId) -> Vec<VertexId> {
        if b >= self.n {
            return Vec::new();
        }
        bits::ones(self.row(b)).collect()
    }

    /// Edges `(b, c)` with `b < c`, lexicographically.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.n)
            .flat_map(|b| {
                bits::ones(self.row(b))
                    .filter(move |&c| c > b)
                    .map(move |c| (b, c))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|b| bits::count(self.row(b))).sum::<usize>() / 2
    }

    /// Triangles `[b, c, d]` with `b < c < d`, lexicographically.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for (b, c) in self.edges() {
            let common = self
                .row(b)
                .iter()
                .zip(self.row(c))
                .map(|(x, y)| x & y)
                .collect::<Vec<_>>();
            out.extend(bits::ones(&common).filter(|&d| d > c).map(|d| [b, c, d]));
        }
        out
    }
}
