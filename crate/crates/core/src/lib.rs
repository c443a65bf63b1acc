//! Tight cycles in 3-uniform hypergraphs under minimum codegree conditions.
//!
//! The crate provides a dense hypergraph type with per-pair neighbourhood
//! bitsets, the `.h3` text format, the mod-3 partition construction, searches
//! for closed tight walks and tight cycles, K4⁻-based certificate extraction
//! for homomorphic `C_10` images, and exhaustive and annealing searches for
//! extremal hom-free hypergraphs.
//!
//! ```
//! use tightcycle::{mod3_construction, count_closed_tight_walks};
//!
//! let h = mod3_construction(9).unwrap();
//! assert_eq!(h.min_codegree().unwrap(), 2);
//! assert_eq!(count_closed_tight_walks(&h, 10).unwrap().count, 0);
//! ```

mod bits;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod format;
pub mod hypergraph;
pub mod pair_digraph;
pub mod proof;
pub mod random;
pub mod search;

pub use constructions::{
    cover_homomorphism, mod3_construction, mod3_walk_obstruction, tight_cycle, verify_homomorphism,
    wrap_homomorphism, CycleHom, HomVerdict, PartitionConstruction,
};
pub use error::{Error, Result};
pub use extremal::{
    exhaustive_small, local_search_max_codegree, probe_constant_c, AnnealConfig, ProbeRow,
    SearchMode, SearchReport, StartState,
};
pub use format::{parse, serialize, FORMAT_VERSION};
pub use hypergraph::{Edge, Hypergraph3, LinkGraph, VertexId};
pub use pair_digraph::PairDigraph;
pub use proof::{
    check_hypothesis, claim1_witness, claim2_gadget, claim3_gadget, claim4_check, find_vstar,
    prove_pipeline, CertificateFile, Epsilon, PipelineOutcome, Provenance,
};
pub use search::{
    classify_pairs, count_closed_tight_walks, digraph_two_cycles, find_closed_tight_walk,
    find_tight_cycle, has_closed_tight_walk, verify_walk, K4MinusCert, PairClassification,
    TightWalkCert, WalkCount, WalkVerdict,
};
