//! Reduction from 4-coloring: vertex and edge gadgets, their prescribed
//! minimum-rank values, and rational representations realizing them.

mod check;
mod colorings;
mod layout;
mod prescribe;
mod realize;

pub use check::{singular_prime_minors, verify_gadget};
pub use colorings::colorings_from_consistent_graphs;
pub use layout::{
    legal_sides, link_for, Atom, Color, ColoredGraph, Layout, Link, Orientation, Role, Situation,
};
pub use prescribe::{GadgetSpec, Origin, Prescription, Unsettled};
pub use realize::{build_gadget, pair_order, primes, realize, GadgetInstance};
