use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{mod3_walk_obstruction, PartitionConstruction};
use crate::error::{Error, Result};
use crate::extremal::{SearchMode, SearchReport, SearchStats};
use crate::format::serialize;
use crate::hypergraph::{Edge, Hypergraph3};
use crate::random::rng_for;
use crate::search::walk_through_edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StartState {
    /// The balanced three-part construction. Only valid when `len` is not a
    /// multiple of 3, where it has no closed tight `len`-walk.
    Construction,
    Empty,
}

impl StartState {
    /// The construction when it is feasible for `len`, otherwise empty.
    pub fn best_for(len: usize) -> Self {
        if mod3_walk_obstruction(len).unwrap_or(false) {
            StartState::Construction
        } else {
            StartState::Empty
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnealConfig {
    /// Proposed moves per restart.
    pub iterations: u64,
    /// Independent runs, each with its own derived seed.
    pub restarts: u64,
    pub seed: u64,
    pub start: StartState,
    pub initial_temperature: f64,
    pub final_temperature: f64,
}

impl AnnealConfig {
    pub fn new(iterations: u64, seed: u64, start: StartState) -> Self {
        Self {
            iterations,
            restarts: 4,
            seed,
            start,
            initial_temperature: 2.0,
            final_temperature: 0.05,
        }
    }
}

/// Codegree bookkeeping for the current state.
struct State {
    h: Hypergraph3,
    // hist[d] = number of pairs with codegree d
    hist: Vec<usize>,
    pairs: usize,
}

impl State {
    fn new(h: Hypergraph3) -> Self {
        let n = h.n();
        let mut hist = vec![0; n.max(2) - 1];
        for u in 0..n {
            for v in u + 1..n {
                hist[h.codegree_unchecked(u, v)] += 1;
            }
        }
        Self {
            h,
            hist,
            pairs: n * (n - 1) / 2,
        }
    }

    fn delta2(&self) -> usize {
        self.hist.iter().position(|&c| c > 0).unwrap_or(0)
    }

    /// Higher is better: `δ₂` first, then fewer pairs sitting at `δ₂`.
    fn energy(&self) -> i64 {
        let d = self.delta2();
        (d * (self.pairs + 1)) as i64 - self.hist[d] as i64
    }

    fn toggle(&mut self, e: Edge) -> bool {
        let [a, b, c] = e;
        let pairs = [(a, b), (a, c), (b, c)];
        for &(u, v) in &pairs {
            self.hist[self.h.codegree_unchecked(u, v)] -= 1;
        }
        let added = self.h.toggle_edge(e).expect("valid triple");
        for &(u, v) in &pairs {
            self.hist[self.h.codegree_unchecked(u, v)] += 1;
        }
        added
    }
}

fn random_triple(n: usize, rng: &mut ChaCha8Rng) -> Edge {
    loop {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        let c = rng.random_range(0..n);
        if a != b && b != c && a != c {
            let mut e = [a, b, c];
            e.sort_unstable();
            return e;
        }
    }
}

struct RunResult {
    best: Hypergraph3,
    best_delta: usize,
    proposals: u64,
}

fn run(n: usize, len: usize, cfg: &AnnealConfig, start: &Hypergraph3, index: u64) -> RunResult {
    let mut rng = rng_for(cfg.seed, "anneal", index);
    let mut state = State::new(start.clone());
    let mut energy = state.energy();
    let mut best = state.h.clone();
    let mut best_energy = energy;
    let patience = (cfg.iterations / 10).max(1000);
    let mut since_best = 0u64;
    let ratio = cfg.final_temperature / cfg.initial_temperature;
    let steps = cfg.iterations.max(1) as f64;

    for it in 0..cfg.iterations {
        let temp = cfg.initial_temperature * ratio.powf(it as f64 / steps);
        let e = random_triple(n, &mut rng);
        let added = state.toggle(e);
        // Hom-freeness is hereditary: only an added edge can create a walk,
        // and any new walk passes through it.
        if added && walk_through_edge(&state.h, e, len) {
            state.toggle(e);
            continue;
        }
        let next = state.energy();
        let accept = next >= energy || rng.random::<f64>() < ((next - energy) as f64 / temp).exp();
        if accept {
            energy = next;
            if energy > best_energy {
                best_energy = energy;
                best = state.h.clone();
                since_best = 0;
            }
        } else {
            state.toggle(e);
        }
        since_best += 1;
        if since_best >= patience {
            state = State::new(best.clone());
            energy = best_energy;
            since_best = 0;
        }
    }
    let best_delta = best.min_codegree().expect("n >= 6");
    RunResult {
        best,
        best_delta,
        proposals: cfg.iterations,
    }
}

/// Simulated annealing for large `δ₂` without a closed tight `len`-walk.
///
/// Moves toggle one random triple; additions that close a walk are rejected
/// outright, so every visited state is feasible. The score is `δ₂` with ties
/// broken by how few pairs attain it. Temperature cools geometrically, and a
/// run that has not improved for a tenth of its budget jumps back to its best
/// state. Runs are independent and seeded from `cfg.seed`; the reported
/// witness has the largest `δ₂`, ties going to the lexicographically least
/// `.h3` serialization, so the result does not depend on thread scheduling.
pub fn local_search_max_codegree(n: usize, len: usize, cfg: &AnnealConfig) -> Result<SearchReport> {
    if n < 6 {
        return Err(Error::invalid(format!(
            "local search needs n >= 6, got {n}; use exhaustive search for small n"
        )));
    }
    if len < 4 {
        return Err(Error::invalid(format!(
            "walk length must be >= 4, got {len}"
        )));
    }
    if cfg.restarts == 0 {
        return Err(Error::invalid("at least one restart is required"));
    }
    if !(cfg.initial_temperature > 0.0 && cfg.final_temperature > 0.0) {
        return Err(Error::invalid("temperatures must be positive"));
    }
    let start = match cfg.start {
        StartState::Construction => {
            if !mod3_walk_obstruction(len)? {
                return Err(Error::Precondition(format!(
                    "the partition construction contains closed tight {len}-walks"
                )));
            }
            PartitionConstruction::balanced(n).hypergraph()
        }
        StartState::Empty => Hypergraph3::new(n)?,
    };

    let runs: Vec<RunResult> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run(n, len, cfg, &start, r))
        .collect();
    let proposals = runs.iter().map(|r| r.proposals).sum();
    let best = runs
        .into_iter()
        .map(|r| {
            let text = serialize(&r.best);
            (r.best_delta, text, r.best)
        })
        .reduce(|a, b| {
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        })
        .expect("restarts >= 1");

    SearchReport::certify(
        len,
        SearchMode::LocalSearch,
        best.2,
        false,
        SearchStats {
            states_visited: proposals,
            seed: Some(cfg.seed),
            iterations: cfg.iterations,
            restarts: cfg.restarts,
            start: Some(cfg.start),
        },
    )
}
