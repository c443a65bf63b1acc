use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, VertexId};

/// A cyclic vertex sequence whose cyclically consecutive triples are meant to
/// be edges: the image of a homomorphism from the tight cycle of the same
/// length. Vertices may repeat.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct TightWalkCert {
    vertices: Vec<VertexId>,
}

impl TightWalkCert {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::invalid(format!(
                "a tight walk needs at least 3 positions, got {}",
                vertices.len()
            )));
        }
        Ok(Self { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Whether no vertex repeats, i.e. the walk is a copy of the tight cycle.
    pub fn is_injective(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// The `i`-th cyclic triple `(v_i, v_{i+1}, v_{i+2})`.
    pub fn triple(&self, i: usize) -> [VertexId; 3] {
        let l = self.vertices.len();
        [
            self.vertices[i % l],
            self.vertices[(i + 1) % l],
            self.vertices[(i + 2) % l],
        ]
    }

    /// Lexicographically least sequence among all rotations and reversals.
    /// Both operations preserve the set of cyclic triples.
    pub fn canonical(&self) -> TightWalkCert {
        let l = self.vertices.len();
        let mut reversed = self.vertices.clone();
        reversed.reverse();
        let best = [&self.vertices, &reversed]
            .into_iter()
            .flat_map(|seq| (0..l).map(move |r| (seq, r)))
            .min_by(|&(a, ra), &(b, rb)| {
                (0..l)
                    .map(|i| a[(ra + i) % l])
                    .cmp((0..l).map(|i| b[(rb + i) % l]))
            })
            .map(|(seq, r)| (0..l).map(|i| seq[(r + i) % l]).collect())
            .expect("non-empty walk");
        TightWalkCert { vertices: best }
    }
}

impl TryFrom<Vec<VertexId>> for TightWalkCert {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<TightWalkCert> for Vec<VertexId> {
    fn from(c: TightWalkCert) -> Self {
        c.vertices
    }
}

impl fmt::Display for TightWalkCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkVerdict {
    Valid,
    /// The first cyclic triple, by starting position, that is not an edge.
    Failed {
        position: usize,
        triple: [VertexId; 3],
    },
}

impl WalkVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, WalkVerdict::Valid)
    }
}

/// Checks every cyclic triple of `cert` against `h`.
pub fn verify_walk(h: &Hypergraph3, cert: &TightWalkCert) -> WalkVerdict {
    (0..cert.len())
        .map(|i| (i, cert.triple(i)))
        .find(|(_, t)| !h.contains(t))
        .map_or(WalkVerdict::Valid, |(position, triple)| {
            WalkVerdict::Failed { position, triple }
        })
}
