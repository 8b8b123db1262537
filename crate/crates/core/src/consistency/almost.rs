//! Almost consistent exchangeability graphs from a 2-SAT assignment.

use std::fmt;

use super::cnf::{build_cnf, Cnf2, CnfOptions};
use super::estimate::{any_first_arc, any_second_arc, check_consistency, Estimate};
use super::le_pairs::LeTable;
use super::twosat::{solve_2sat, Assignment};
use crate::error::{ConsistencyError, SolveError};
use crate::exchange::{intersect_modified, ArcLabel, ExchangeGraph, StarPair};
use crate::oracle::QueryCache;
use crate::set::{Element, ElementSet};

/// Everything produced while building an almost consistent graph.
#[derive(Clone, Debug)]
pub struct AlmostConsistent {
    /// The intersected graph with sure/suspicious labels.
    pub intersected: ExchangeGraph,
    pub table: LeTable,
    pub cnf: Cnf2,
    pub assignment: Assignment,
    /// Sure arcs plus the suspicious arcs assigned true.
    pub graph: ExchangeGraph,
}

/// Keeps sure arcs and the suspicious arcs whose variable is true.
pub fn assemble(intersected: &ExchangeGraph, cnf: &Cnf2, assignment: &[bool]) -> ExchangeGraph {
    let mut g = intersected.clone();
    for (v, &(u, w)) in cnf.variables().iter().enumerate() {
        if !assignment[v] {
            g.remove_arc(u, w);
        }
    }
    g
}

/// Observes all local exchanges at `I` and returns the labelled intersection
/// together with the observation table.
pub fn observe(
    cache: &QueryCache<'_>,
    i: ElementSet,
    sp: StarPair,
) -> Result<(ExchangeGraph, LeTable), ConsistencyError> {
    let intersected = intersect_modified(cache, i, sp);
    let rest = intersected.rest(cache.ground());
    let table = LeTable::observe(cache, i, rest)?;
    Ok((intersected, table))
}

pub fn almost_consistent_graph(
    cache: &QueryCache<'_>,
    i: ElementSet,
    sp: StarPair,
) -> Result<AlmostConsistent, SolveError> {
    let (intersected, table) = observe(cache, i, sp)?;
    let cnf = build_cnf(&table, &intersected, CnfOptions::default())?;
    let assignment = solve_2sat(&cnf).ok_or(ConsistencyError::Unsatisfiable)?;
    let graph = assemble(&intersected, &cnf, &assignment);
    Ok(AlmostConsistent {
        intersected,
        table,
        cnf,
        assignment,
        graph,
    })
}

/// The first way a graph fails to be almost consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlmostViolation {
    MissingSureArc(Element, Element),
    ArcOutsideIntersection(Element, Element),
    NonEvilInconsistent { x: ElementSet, y: ElementSet },
    EvilOverestimated { x: ElementSet, y: ElementSet },
    EvilPartiallyPresent { x: ElementSet, y: ElementSet },
}

impl fmt::Display for AlmostViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlmostViolation::MissingSureArc(u, v) => write!(f, "sure arc ({u}, {v}) missing"),
            AlmostViolation::ArcOutsideIntersection(u, v) => {
                write!(f, "arc ({u}, {v}) is not in the intersected graph")
            }
            AlmostViolation::NonEvilInconsistent { x, y } => {
                write!(f, "inconsistent with non-evil pair ({x}, {y})")
            }
            AlmostViolation::EvilOverestimated { x, y } => {
                write!(f, "evil pair ({x}, {y}) is not underestimated")
            }
            AlmostViolation::EvilPartiallyPresent { x, y } => {
                write!(f, "evil pair ({x}, {y}) is inconsistent but keeps arcs")
            }
        }
    }
}

/// First violated condition of almost consistency, if any.
pub fn almost_violation(
    g: &ExchangeGraph,
    intersected: &ExchangeGraph,
    table: &LeTable,
) -> Result<Option<AlmostViolation>, ConsistencyError> {
    for (u, v) in intersected.arcs() {
        if intersected.label(u, v) == Some(ArcLabel::Sure) && !g.has_arc(u, v) {
            return Ok(Some(AlmostViolation::MissingSureArc(u, v)));
        }
    }
    if let Some((u, v)) = g.arcs().find(|&(u, v)| !intersected.has_arc(u, v)) {
        return Ok(Some(AlmostViolation::ArcOutsideIntersection(u, v)));
    }
    for obs in table.iter() {
        let estimate = check_consistency(g, obs);
        let (x, y) = (obs.x, obs.y);
        if !table.is_evil(obs)? {
            if estimate != Estimate::Consistent {
                return Ok(Some(AlmostViolation::NonEvilInconsistent { x, y }));
            }
        } else if !estimate.is_underestimated() {
            return Ok(Some(AlmostViolation::EvilOverestimated { x, y }));
        } else if estimate != Estimate::Consistent
            && (any_first_arc(g, x, y) || any_second_arc(g, x, y))
        {
            return Ok(Some(AlmostViolation::EvilPartiallyPresent { x, y }));
        }
    }
    Ok(None)
}
