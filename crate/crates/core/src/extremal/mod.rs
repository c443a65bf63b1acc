//! Finite-`n` search for hypergraphs with large minimum codegree and no
//! closed tight walk of a given length.
//!
//! Freeness here always means *hom-freeness*: no closed tight `l`-walk, i.e.
//! no homomorphic image of `C_l`. This is stronger than having no copy of
//! `C_l`, and for `n < l` the two differ (copies cannot exist at all). The
//! values measured are therefore maxima of `δ₂` over hom-`C_l`-free
//! hypergraphs, which bound the copy-free quantity from below.

mod anneal;
mod exhaustive;
mod probe;

pub use anneal::{local_search_max_codegree, AnnealConfig, StartState};
pub use exhaustive::{exhaustive_small, MAX_EXHAUSTIVE_N};
pub use probe::{probe_constant_c, probe_csv, ProbeRow};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;
use crate::search::count_closed_tight_walks;

pub const FREENESS_NOTE: &str =
    "hom-free: no closed tight walk of the given length (no homomorphic image of the tight cycle)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exhaustive,
    LocalSearch,
}

impl SearchMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::LocalSearch => "local-search",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Search-tree nodes (exhaustive) or proposed moves (local search).
    pub states_visited: u64,
    pub seed: Option<u64>,
    pub iterations: u64,
    pub restarts: u64,
    pub start: Option<StartState>,
}

/// Outcome of an extremal search. Only constructed through [`SearchReport::certify`],
/// which re-checks the witness independently of the search that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub len: usize,
    pub mode: SearchMode,
    pub delta2: usize,
    pub witness: Hypergraph3,
    /// Closed tight `len`-walks in the witness, recounted from scratch. Always 0.
    pub walk_count: u128,
    /// Whether `delta2` is the exact maximum.
    pub exact: bool,
    pub freeness: &'static str,
    pub stats: SearchStats,
}

impl SearchReport {
    pub(crate) fn certify(
        len: usize,
        mode: SearchMode,
        witness: Hypergraph3,
        exact: bool,
        stats: SearchStats,
    ) -> Result<Self> {
        let walks = count_closed_tight_walks(&witness, len)?;
        if walks.count != 0 || walks.saturated {
            return Err(Error::SoundnessAlarm(format!(
                "search witness on {} vertices has {} closed tight {len}-walks",
                witness.n(),
                walks.count
            )));
        }
        Ok(Self {
            n: witness.n(),
            len,
            mode,
            delta2: witness.min_codegree()?,
            witness,
            walk_count: 0,
            exact,
            freeness: FREENESS_NOTE,
            stats,
        })
    }

    /// `delta2 - ⌈n / 3⌉`: the measured offset from one third of `n`.
    pub fn gap(&self) -> i64 {
        self.delta2 as i64 - self.n.div_ceil(3) as i64
    }
}
