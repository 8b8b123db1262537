use thiserror::Error;

use crate::set::{Element, ElementSet};

/// Errors raised by matroid construction and rank evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("element {element} is outside the ground set of size {n}")]
    OutOfRange { element: Element, n: usize },
    #[error("ground set of {0} elements exceeds the supported width")]
    TooLarge(usize),
    #[error("set {0} is not independent")]
    NotIndependent(ElementSet),
    #[error("{set} + {element} is independent, so there is no fundamental circuit")]
    NoCircuit { set: ElementSet, element: Element },
    #[error("invalid matroid description: {0}")]
    Malformed(String),
}

/// Errors raised while building or solving clause systems from oracle data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConsistencyError {
    #[error("observation r_min(({x} + I) - {y}) = {value} lies outside [{low}, {high}]")]
    ValueOutOfRange {
        x: ElementSet,
        y: ElementSet,
        value: usize,
        low: usize,
        high: usize,
    },
    #[error("no observation recorded for subpair ({x}, {y})")]
    MissingSubpair { x: ElementSet, y: ElementSet },
    #[error("constants alone falsify a clause of pair ({x}, {y})")]
    Contradiction { x: ElementSet, y: ElementSet },
    #[error("2-SAT instance is unsatisfiable")]
    Unsatisfiable,
}

/// Errors surfaced by the augmenting-path solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
    #[error("{0} is not a common independent set")]
    NotCommonIndependent(ElementSet),
    #[error("negative-cost cycle through element {0}")]
    NegativeCycle(Element),
    #[error(
        "no guess of the exceptional set produced a consistent graph (|J| = {size}, bound {gamma})"
    )]
    PromiseViolated { size: usize, gamma: usize },
    #[error("S-T path exists; no reachability certificate")]
    PathExists,
}

/// Errors raised while building hardness gadgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("edge ({u}, {w}) uses a vertex outside 0..{vertices}")]
    VertexOutOfRange { u: usize, w: usize, vertices: usize },
    #[error("edge ({0}, {1}) is listed twice")]
    DuplicateEdge(usize, usize),
    #[error("coloring has {got} entries for {expected} vertices")]
    ColoringLength { got: usize, expected: usize },
    #[error("invalid color ({0}, {1}); colors are (i, j) with i, j in {{1, 2}}")]
    BadColor(u8, u8),
    #[error("no coloring given")]
    MissingColoring,
    #[error("adjacent vertices {u} and {w} share a color")]
    ImproperColoring { u: usize, w: usize },
    #[error("gadget needs {0} elements, more than the supported 64")]
    TooLarge(usize),
    #[error("vertex gadget {0} is in none of the four color situations")]
    UnexpectedSituation(usize),
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
}
