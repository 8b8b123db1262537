//! Exchangeability graphs: true (hidden access), modified and intersected
//! (oracle access), with sure/suspicious arc labels.

mod graph;
mod modified;
mod truth;

pub use graph::{ArcLabel, ExchangeGraph};
pub use modified::{
    build_modified_graph, find_star_pair, intersect_modified, scan_pairs, star_terminals, PairScan,
    StarPair, StarStep,
};
pub use truth::{build_true_graph, build_true_graph_in};
