//! Detection and enumeration: K4⁻ copies, apex/base pair classification,
//! tight cycles and closed tight walks.

mod cert;
mod classify;
mod cycles;
mod k4minus;
mod walks;

pub use cert::{verify_walk, TightWalkCert, WalkVerdict};
pub use classify::{classify_pairs, digraph_two_cycles, PairClassification, VertexTally};
pub use cycles::find_tight_cycle;
pub use k4minus::{apex_witness, base_witness, k4minus_with_apex, K4MinusCert};
pub use walks::{
    count_closed_tight_walks, find_closed_tight_walk, has_closed_tight_walk, walk_through_edge,
    WalkCount,
};
