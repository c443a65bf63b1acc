use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::extremal::{
    exhaustive_small, local_search_max_codegree, AnnealConfig, SearchReport, StartState,
    MAX_EXHAUSTIVE_N,
};
use crate::hypergraph::Hypergraph3;
use crate::random::derive_seed;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub n: usize,
    pub len: usize,
    pub mode: &'static str,
    pub delta2: usize,
    /// `delta2 - ⌈n / 3⌉`.
    pub gap: i64,
    pub seed: u64,
    pub iterations: u64,
    pub witness_file: String,
    #[serde(skip)]
    pub witness: Hypergraph3,
}

impl ProbeRow {
    fn from_report(r: SearchReport, seed: u64) -> Self {
        Self {
            n: r.n,
            len: r.len,
            mode: r.mode.as_str(),
            delta2: r.delta2,
            gap: r.gap(),
            seed,
            iterations: r.stats.iterations,
            witness_file: format!("witness_n{}_len{}.h3", r.n, r.len),
            witness: r.witness,
        }
    }
}

/// Best `δ₂` found without a closed tight `len`-walk, for each `n`.
///
/// Small `n` are solved exactly; larger ones use local search with `budget`
/// moves per run, seeded per `n` from `seed` and started from the partition
/// construction when that is feasible.
pub fn probe_constant_c(ns: &[usize], len: usize, budget: u64, seed: u64) -> Result<Vec<ProbeRow>> {
    ns.iter()
        .map(|&n| {
            if n <= MAX_EXHAUSTIVE_N {
                return Ok(ProbeRow::from_report(exhaustive_small(n, len)?, seed));
            }
            let sub = derive_seed(seed, "probe", n as u64);
            let cfg = AnnealConfig::new(budget, sub, StartState::best_for(len));
            Ok(ProbeRow::from_report(
                local_search_max_codegree(n, len, &cfg)?,
                sub,
            ))
        })
        .collect()
}

pub fn probe_csv(rows: &[ProbeRow]) -> String {
    let mut out = String::from("n,len,mode,delta2,gap,seed,iterations,witness_file\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n, r.len, r.mode, r.delta2, r.gap, r.seed, r.iterations, r.witness_file
        );
    }
    out
}
