//! Local-exchange observations, the 2-CNF that encodes consistency with them,
//! a 2-SAT solver, and assembly of almost consistent graphs.

mod almost;
mod cnf;
mod estimate;
mod le_pairs;
mod twosat;

pub use almost::{
    almost_consistent_graph, almost_violation, assemble, observe, AlmostConsistent, AlmostViolation,
};
pub use cnf::{
    build_cnf, clauses_for_pair, has, lacks, Arc, ArcClause, ArcLiteral, Clause, Cnf2, CnfOptions,
    Lit,
};
pub use estimate::{
    any_first_arc, any_second_arc, check_all, check_consistency, inconsistent_pairs, Estimate,
};
pub use le_pairs::{is_evil, small_subsets, LeObservation, LeTable};
pub use twosat::{solve_2sat, solve_clauses, Assignment};
