//! The mod-3 partition construction, tight cycles as hypergraphs, and
//! homomorphisms between tight cycles.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::hypergraph::{sort3, Edge, Hypergraph3, VertexId};

/// A partition of `0..n` into three contiguous parts `V1, V2, V3`, with the
/// colouring `c(v) = i` for `v` in `V_i`.
///
/// Its hypergraph has as edges exactly the triples whose colours sum to
/// `1 mod 3`. Every cyclically consecutive triple of a closed tight walk then
/// has colour sum `1 mod 3`, while every position of the walk lies in exactly
/// three of those triples, so a closed tight walk of length `l` forces
/// `l = 0 mod 3`. This holds for any part sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionConstruction {
    n: usize,
    // part i is starts[i]..starts[i + 1]
    starts: [usize; 4],
}

impl PartitionConstruction {
    /// Equal parts of size `n / 3`; `n` must be a positive multiple of 3.
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 || !n.is_multiple_of(3) {
            return Err(Error::invalid(format!(
                "the partition construction needs n >= 3 divisible by 3, got {n}"
            )));
        }
        Ok(Self::with_sizes([n / 3; 3]))
    }

    /// Parts as equal as possible, earlier parts taking the remainder. Any `n`.
    pub fn balanced(n: usize) -> Self {
        let q = n / 3;
        let r = n % 3;
        Self::with_sizes([q + usize::from(r > 0), q + usize::from(r > 1), q])
    }

    pub fn with_sizes(sizes: [usize; 3]) -> Self {
        let n = sizes.iter().sum();
        Self {
            n,
            starts: [0, sizes[0], sizes[0] + sizes[1], n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> [Range<VertexId>; 3] {
        let s = self.starts;
        [s[0]..s[1], s[1]..s[2], s[2]..s[3]]
    }

    /// Colour of `v`, in `1..=3`.
    pub fn part_of(&self, v: VertexId) -> Option<u8> {
        if v >= self.n {
            None
        } else if v < self.starts[1] {
            Some(1)
        } else if v < self.starts[2] {
            Some(2)
        } else {
            Some(3)
        }
    }

    fn colour(&self, v: VertexId) -> u8 {
        self.part_of(v).expect("vertex in range")
    }

    pub fn is_edge(&self, e: [VertexId; 3]) -> bool {
        let s = sort3(e);
        s[0] != s[1]
            && s[1] != s[2]
            && s[2] < self.n
            && s.iter().map(|&v| self.colour(v) as u32).sum::<u32>() % 3 == 1
    }

    pub fn hypergraph(&self) -> Hypergraph3 {
        let n = self.n;
        let mut h = Hypergraph3::new(n).expect("construction size within limits");
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.is_edge([a, b, c]) {
                        h.add_edge([a, b, c]).expect("fresh edge");
                    }
                }
            }
        }
        h
    }
}

/// The extremal example with three equal parts; `min_codegree = n / 3 - 1`.
pub fn mod3_construction(n: usize) -> Result<Hypergraph3> {
    Ok(PartitionConstruction::new(n)?.hypergraph())
}

/// Whether the colouring argument rules out a closed tight walk of length
/// `len` in every partition construction, i.e. whether `len` is not a
/// multiple of 3.
pub fn mod3_walk_obstruction(len: usize) -> Result<bool> {
    if len < 3 {
        return Err(Error::invalid(format!(
            "walk length must be >= 3, got {len}"
        )));
    }
    Ok(!len.is_multiple_of(3))
}

/// The tight cycle `C_len` on vertices `0..len`, with edges `{i, i+1, i+2}` mod `len`.
pub fn tight_cycle(len: usize) -> Result<Hypergraph3> {
    if len < 3 {
        return Err(Error::invalid(format!(
            "tight cycle length must be >= 3, got {len}"
        )));
    }
    let mut h = Hypergraph3::new(len)?;
    for i in 0..len {
        let e = [i, (i + 1) % len, (i + 2) % len];
        if !h.contains(&sort3(e)) {
            h.add_edge(e)?;
        }
    }
    Ok(h)
}

/// A vertex map from `C_source_len` to `C_target_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleHom {
    pub source_len: usize,
    pub target_len: usize,
    pub map: Vec<VertexId>,
}

impl CycleHom {
    pub fn identity(len: usize) -> Self {
        Self {
            source_len: len,
            target_len: len,
            map: (0..len).collect(),
        }
    }

    /// `next ∘ self`. Fails if `self`'s target is not `next`'s source.
    pub fn then(&self, next: &CycleHom) -> Result<CycleHom> {
        if self.target_len != next.source_len {
            return Err(Error::invalid(format!(
                "cannot compose C{} -> C{} with C{} -> C{}",
                self.source_len, self.target_len, next.source_len, next.target_len
            )));
        }
        Ok(CycleHom {
            source_len: self.source_len,
            target_len: next.target_len,
            map: self.map.iter().map(|&v| next.map[v]).collect(),
        })
    }

    /// Checks the map against freshly built tight cycles.
    pub fn verify(&self) -> Result<HomVerdict> {
        verify_homomorphism(
            &tight_cycle(self.source_len)?,
            &tight_cycle(self.target_len)?,
            &self.map,
        )
    }
}

/// `C_{len+3} -> C_len`: the first `len` vertices map to themselves and the
/// last three retrace the final three vertices of `C_len`.
pub fn wrap_homomorphism(len: usize) -> Result<CycleHom> {
    if len < 6 {
        return Err(Error::invalid(format!(
            "wrap homomorphism needs len >= 6, got {len}"
        )));
    }
    Ok(CycleHom {
        source_len: len + 3,
        target_len: len,
        map: (0..len + 3)
            .map(|i| if i < len { i } else { i - 3 })
            .collect(),
    })
}

/// `C_{t*len} -> C_len`, `i -> i mod len`: go around `C_len` `t` times.
/// `t = 1` gives the identity.
pub fn cover_homomorphism(len: usize, t: usize) -> Result<CycleHom> {
    // C_3 is a single edge, and going around it repeats vertices inside a triple
    // of the source; rejected rather than guessed at.
    if len < 4 {
        return Err(Error::invalid(format!(
            "cover homomorphism needs len >= 4, got {len}"
        )));
    }
    if t < 1 {
        return Err(Error::invalid("cover homomorphism needs t >= 1"));
    }
    Ok(CycleHom {
        source_len: t * len,
        target_len: len,
        map: (0..t * len).map(|i| i % len).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomVerdict {
    Valid,
    /// The first edge of the source (lexicographically) whose image is not an edge.
    Violated {
        edge: Edge,
        image: [VertexId; 3],
    },
}

impl HomVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, HomVerdict::Valid)
    }
}

/// Checks that `map` sends every edge of `from` to an edge of `to`.
pub fn verify_homomorphism(
    from: &Hypergraph3,
    to: &Hypergraph3,
    map: &[VertexId],
) -> Result<HomVerdict> {
    if map.len() != from.n() {
        return Err(Error::invalid(format!(
            "map covers {} vertices, source has {}",
            map.len(),
            from.n()
        )));
    }
    if let Some(&v) = map.iter().find(|&&v| v >= to.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: to.n(),
        });
    }
    for e in from.edges() {
        let image = e.map(|v| map[v]);
        if !to.contains(&image) {
            return Ok(HomVerdict::Violated { edge: e, image });
        }
    }
    Ok(HomVerdict::Valid)
}
