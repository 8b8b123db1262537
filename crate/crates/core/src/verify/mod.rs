//! Brute-force ground truth with direct access to both matroids.

mod audit;
mod brute;
mod circuits;
mod matching;
mod suite;

pub use audit::{
    audit_graphs, partitions_into_cycles, partitions_into_path_and_cycles, simple_cycles,
    simple_paths, AuditOptions, BruteReport, Fault, DEFAULT_LIMIT,
};
pub use brute::{
    brute_dual, brute_lexmax, brute_max_common, brute_max_weight, brute_w_maximal,
    common_independent_sets, w_maximal_among, DualReport, WMaximal,
};
pub use circuits::{
    check_promise_no_circuit_inclusion, circuits, has_circuit_inclusion, max_circuit_size,
};
pub use matching::{has_perfect_matching, perfect_matchings, Matching};
pub use suite::{verify_instance, SUITE_GAMMA};
