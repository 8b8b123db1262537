//! Augmentation algorithms driven only by `r_min` queries.

mod cardinality;
mod cheapest;
mod cost;
mod fpt;
mod lexmax;
mod weighted;

pub use cardinality::{
    augment_min_rank, augment_step, max_cardinality, max_cardinality_with, CardinalityRun,
    SolveResult, StarPairChoice, StepKind, StepReport, TraceRecord,
};
pub use cheapest::{find_negative_cycle, shortest_cheapest_path};
pub use cost::{CostModel, LexCost, LexModel, PathCost, WeightCost};
pub use fpt::{exceptional_set, fpt_consistent_graph, FptOutcome, Side};
pub use lexmax::{
    approx_max_weight, approximation_guarantee, consecutive_ratio, lexicographic_max,
    lexicographic_max_in, ApproxRun, LexRun,
};
pub use weighted::{
    cheapest_path_augment, weighted_fpt_circuit, weighted_levels, weighted_no_circuit_inclusion,
    weighted_step, Strategy, WeightedRun, WeightedStep,
};
