//! Consistency of an arc set with local-exchange observations.

use super::le_pairs::{LeObservation, LeTable};
use crate::exchange::ExchangeGraph;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Estimate {
    Consistent,
    /// Fixable only by removing arcs.
    OverestimatedOnly,
    /// Fixable only by adding arcs.
    UnderestimatedOnly,
    /// Different pairs need removals and additions.
    Neither,
}

impl Estimate {
    pub fn is_overestimated(self) -> bool {
        matches!(self, Estimate::Consistent | Estimate::OverestimatedOnly)
    }

    pub fn is_underestimated(self) -> bool {
        matches!(self, Estimate::Consistent | Estimate::UnderestimatedOnly)
    }

    fn from_flags(over: bool, under: bool) -> Self {
        match (over, under) {
            (true, true) => Estimate::Consistent,
            (true, false) => Estimate::OverestimatedOnly,
            (false, true) => Estimate::UnderestimatedOnly,
            (false, false) => Estimate::Neither,
        }
    }

    /// Classification of a family given the classifications of its members.
    pub fn combine(self, other: Estimate) -> Estimate {
        Estimate::from_flags(
            self.is_overestimated() && other.is_overestimated(),
            self.is_underestimated() && other.is_underestimated(),
        )
    }
}

/// Some arc `(y, x)` with `y` in `ys`, `x` in `xs`.
pub fn any_first_arc(g: &ExchangeGraph, xs: ElementSet, ys: ElementSet) -> bool {
    ys.iter().any(|y| !g.successors(y).is_disjoint(xs))
}

/// Some arc `(x, y)` with `x` in `xs`, `y` in `ys`.
pub fn any_second_arc(g: &ExchangeGraph, xs: ElementSet, ys: ElementSet) -> bool {
    xs.iter().any(|x| !g.successors(x).is_disjoint(ys))
}

pub fn check_consistency(g: &ExchangeGraph, obs: &LeObservation) -> Estimate {
    let k = g.independent().len();
    let first = any_first_arc(g, obs.x, obs.y);
    let second = any_second_arc(g, obs.x, obs.y);
    if obs.is_high(k) {
        if first && second {
            Estimate::Consistent
        } else {
            Estimate::UnderestimatedOnly
        }
    } else if first && second {
        Estimate::OverestimatedOnly
    } else {
        Estimate::Consistent
    }
}

/// Aggregate classification over every observation of `table`.
pub fn check_all(g: &ExchangeGraph, table: &LeTable) -> Estimate {
    table.iter().fold(Estimate::Consistent, |acc, obs| {
        acc.combine(check_consistency(g, obs))
    })
}

/// Observations the graph is inconsistent with.
pub fn inconsistent_pairs<'t>(g: &ExchangeGraph, table: &'t LeTable) -> Vec<&'t LeObservation> {
    table
        .iter()
        .filter(|obs| check_consistency(g, obs) != Estimate::Consistent)
        .collect()
}
