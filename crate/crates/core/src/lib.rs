//! Matroid intersection when the two matroids are visible only through
//! `r_min(X) = min(r1(X), r2(X))`.

pub mod bench;
pub mod consistency;
pub mod dot;
pub mod error;
pub mod exchange;
pub mod gadgets;
pub mod gen;
pub mod instance;
pub mod matroid;
pub mod oracle;
pub mod set;
pub mod solvers;
pub mod verify;
pub mod weight;

#[cfg(test)]
mod testing;

pub use error::{ConsistencyError, GadgetError, MatroidError, SolveError};
pub use matroid::Matroid;
pub use oracle::{MinRankOracle, QueryCache};
pub use set::{Element, ElementSet};
pub use weight::WeightFn;
