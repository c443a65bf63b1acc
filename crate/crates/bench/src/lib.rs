//! Fixed inputs shared by the benchmarks.

use tightcycle::random::random_with_min_codegree;
use tightcycle::{Epsilon, Hypergraph3};

/// A random host meeting the codegree hypothesis for `ε = 1/20`.
pub fn qualifying_host(n: usize, seed: u64) -> Hypergraph3 {
    let eps = Epsilon::new(1, 20).expect("valid epsilon");
    random_with_min_codegree(n, 0.45, eps.threshold(n), seed).expect("threshold below n - 2")
}

/// A sparse random host, where walk searches have to explore before deciding.
pub fn sparse_host(n: usize, seed: u64) -> Hypergraph3 {
    random_with_min_codegree(n, 0.08, 0, seed).expect("valid probability")
}
