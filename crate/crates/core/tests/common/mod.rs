//! Naive reference implementations. None of these touch the library's
//! bitsets, pair digraph or reachability layers; they work from the edge list.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tightcycle::Hypergraph3;

/// Dense `n^3` membership table built from the edge list, plus for each
/// ordered pair the list of vertices completing it to an edge.
pub struct Cube {
    pub n: usize,
    cells: Vec<bool>,
    completions: Vec<Vec<usize>>,
}

impl Cube {
    pub fn new(n: usize, edges: &[[usize; 3]]) -> Self {
        let mut cells = vec![false; n * n * n];
        for &[a, b, c] in edges {
            for [x, y, z] in [
                [a, b, c],
                [a, c, b],
                [b, a, c],
                [b, c, a],
                [c, a, b],
                [c, b, a],
            ] {
                cells[(x * n + y) * n + z] = true;
            }
        }
        let completions = (0..n * n)
            .map(|ab| (0..n).filter(|&w| cells[ab * n + w]).collect())
            .collect();
        Self {
            n,
            cells,
            completions,
        }
    }

    pub fn completing(&self, a: usize, b: usize) -> &[usize] {
        &self.completions[a * self.n + b]
    }

    pub fn of(h: &Hypergraph3) -> Self {
        Self::new(h.n(), &h.edges().collect::<Vec<_>>())
    }

    pub fn edge(&self, a: usize, b: usize, c: usize) -> bool {
        self.cells[(a * self.n + b) * self.n + c]
    }
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_edges(n: usize, p: f64, rng: &mut impl Rng) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rng.random_bool(p) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn codegree_by_scan(edges: &[[usize; 3]], u: usize, v: usize) -> usize {
    edges
        .iter()
        .filter(|e| e.contains(&u) && e.contains(&v))
        .count()
}

pub fn min_codegree_by_scan(n: usize, edges: &[[usize; 3]]) -> usize {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| codegree_by_scan(edges, u, v))
        .min()
        .unwrap()
}

/// Number of vertex sequences `v_0 .. v_{len-1}` whose cyclic triples are all
/// edges, by plain depth-first enumeration.
pub fn count_walks_dfs(cube: &Cube, len: usize) -> u128 {
    fn go(cube: &Cube, len: usize, seq: &mut Vec<usize>) -> u128 {
        let k = seq.len();
        if k == len - 1 {
            // the last vertex must close all three wrap-around triples
            return cube
                .completing(seq[k - 2], seq[k - 1])
                .iter()
                .filter(|&&w| cube.edge(seq[k - 1], w, seq[0]) && cube.edge(w, seq[0], seq[1]))
                .count() as u128;
        }
        let next: Vec<usize> = if k < 2 {
            (0..cube.n).collect()
        } else {
            cube.completing(seq[k - 2], seq[k - 1]).to_vec()
        };
        let mut total = 0;
        for w in next {
            seq.push(w);
            total += go(cube, len, seq);
            seq.pop();
        }
        total
    }
    go(cube, len, &mut Vec::with_capacity(len))
}

pub fn has_walk_dfs(cube: &Cube, len: usize) -> bool {
    fn go(cube: &Cube, len: usize, seq: &mut Vec<usize>) -> bool {
        let k = seq.len();
        if k == len {
            return (0..len).all(|i| cube.edge(seq[i], seq[(i + 1) % len], seq[(i + 2) % len]));
        }
        for w in 0..cube.n {
            if k >= 2 && !cube.edge(seq[k - 2], seq[k - 1], w) {
                continue;
            }
            seq.push(w);
            if go(cube, len, seq) {
                return true;
            }
            seq.pop();
        }
        false
    }
    go(cube, len, &mut Vec::with_capacity(len))
}

/// Whether some sequence of `len` distinct vertices has all cyclic triples as edges.
pub fn has_cycle_dfs(cube: &Cube, len: usize) -> bool {
    fn go(cube: &Cube, len: usize, seq: &mut Vec<usize>) -> bool {
        let k = seq.len();
        if k == len {
            return (0..len).all(|i| cube.edge(seq[i], seq[(i + 1) % len], seq[(i + 2) % len]));
        }
        for w in 0..cube.n {
            if seq.contains(&w) || (k >= 2 && !cube.edge(seq[k - 2], seq[k - 1], w)) {
                continue;
            }
            seq.push(w);
            if go(cube, len, seq) {
                return true;
            }
            seq.pop();
        }
        false
    }
    len <= cube.n && go(cube, len, &mut Vec::with_capacity(len))
}

pub type PairSet = BTreeSet<(usize, usize)>;

/// Base pairs and apex arcs `(u, apex)` from every 4-subset and apex choice.
pub fn classify_by_subsets(cube: &Cube) -> (PairSet, PairSet) {
    let n = cube.n;
    let mut base = BTreeSet::new();
    let mut arcs = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    for i in 0..4 {
                        let apex = s[i];
                        let rest: Vec<usize> = s.iter().copied().filter(|&x| x != apex).collect();
                        let (x, y, z) = (rest[0], rest[1], rest[2]);
                        if cube.edge(apex, x, y) && cube.edge(apex, x, z) && cube.edge(apex, y, z) {
                            base.extend([(x, y), (x, z), (y, z)]);
                            arcs.extend([(x, apex), (y, apex), (z, apex)]);
                        }
                    }
                }
            }
        }
    }
    (base, arcs)
}

/// Maximum `δ₂` over all edge subsets of `K_n^(3)` with no closed tight
/// `len`-walk, trying every subset.
pub fn max_codegree_scan(n: usize, len: usize) -> usize {
    let triples: Vec<[usize; 3]> = Hypergraph3::complete(n).unwrap().edges().collect();
    let mut best = 0;
    for mask in 0u32..(1 << triples.len()) {
        let edges: Vec<[usize; 3]> = (0..triples.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| triples[i])
            .collect();
        let d = min_codegree_by_scan(n, &edges);
        if d <= best {
            continue;
        }
        if !has_walk_dfs(&Cube::new(n, &edges), len) {
            best = d;
        }
    }
    best
}
