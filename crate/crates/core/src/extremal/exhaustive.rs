use crate::error::{Error, Result};
use crate::extremal::{SearchMode, SearchReport, SearchStats};
use crate::hypergraph::{Edge, Hypergraph3};
use crate::search::walk_through_edge;

/// Largest `n` accepted: 2^C(6,3) = 2^20 candidate edge sets.
pub const MAX_EXHAUSTIVE_N: usize = 6;

struct Branch {
    len: usize,
    triples: Vec<Edge>,
    // remaining[u * n + v]: triples at index >= current containing {u, v}
    remaining: Vec<usize>,
    h: Hypergraph3,
    best: Option<(usize, Hypergraph3)>,
    visited: u64,
}

impl Branch {
    fn upper_bound(&self) -> usize {
        let n = self.h.n();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| self.h.codegree_unchecked(u, v) + self.remaining[u * n + v])
            .min()
            .unwrap_or(0)
    }

    fn consume(&mut self, e: Edge, delta: isize) {
        let n = self.h.n();
        let [a, b, c] = e;
        for (u, v) in [(a, b), (a, c), (b, c)] {
            self.remaining[u * n + v] = self.remaining[u * n + v].wrapping_add_signed(delta);
        }
    }

    fn run(&mut self, i: usize) {
        self.visited += 1;
        if let Some((best, _)) = &self.best {
            if self.upper_bound() <= *best {
                return;
            }
        }
        if i == self.triples.len() {
            let d = self.h.min_codegree().expect("n >= 2");
            if self.best.as_ref().is_none_or(|(b, _)| d > *b) {
                self.best = Some((d, self.h.clone()));
            }
            return;
        }
        let e = self.triples[i];
        self.consume(e, -1);
        self.h.add_edge(e).expect("fresh triple");
        if !walk_through_edge(&self.h, e, self.len) {
            self.run(i + 1);
        }
        self.h.remove_edge(e).expect("just added");
        self.run(i + 1);
        self.consume(e, 1);
    }
}

/// Exact maximum of `δ₂` over all hypergraphs on `n <= 6` vertices without a
/// closed tight `len`-walk.
///
/// Branch and bound over the triples in lexicographic order, trying
/// "include" before "exclude". Hom-freeness is hereditary, so a branch dies as
/// soon as an included triple closes a walk; a branch is also cut when even
/// adding every remaining triple could not beat the best `δ₂` found. The
/// witness is the first optimum in that order.
pub fn exhaustive_small(n: usize, len: usize) -> Result<SearchReport> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::invalid(format!(
            "exhaustive search is limited to n <= {MAX_EXHAUSTIVE_N}; use local search for n = {n}"
        )));
    }
    if n < 2 {
        return Err(Error::invalid("exhaustive search needs n >= 2"));
    }
    if len < 4 {
        return Err(Error::invalid(format!(
            "walk length must be >= 4, got {len}"
        )));
    }
    let triples: Vec<Edge> = Hypergraph3::complete(n)?.edges().collect();
    let mut remaining = vec![0; n * n];
    for &[a, b, c] in &triples {
        for (u, v) in [(a, b), (a, c), (b, c)] {
            remaining[u * n + v] += 1;
        }
    }
    let mut branch = Branch {
        len,
        triples,
        remaining,
        h: Hypergraph3::new(n)?,
        best: None,
        visited: 0,
    };
    branch.run(0);
    let (_, witness) = branch
        .best
        .expect("the empty hypergraph is always feasible");
    SearchReport::certify(
        len,
        SearchMode::Exhaustive,
        witness,
        true,
        SearchStats {
            states_visited: branch.visited,
            ..SearchStats::default()
        },
    )
}
