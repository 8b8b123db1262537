//! Consistent graphs when one matroid has small circuits: guess which
//! exceptional elements have no removable suspicious arc, then extend the
//! 2-SAT system with one clause per evil pair.

use crate::consistency::{
    assemble, build_cnf, check_all, has, solve_2sat, Assignment, Cnf2, CnfOptions, Estimate,
    LeTable,
};
use crate::error::{ConsistencyError, SolveError};
use crate::exchange::{ArcLabel, ExchangeGraph};
use crate::set::{Element, ElementSet};

/// Which layer of arcs the exceptional set is read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Arcs `(y, x)` leaving `I`.
    First,
    /// Arcs `(x, y)` entering `I`.
    Second,
}

impl Side {
    /// The arc between `x` outside `I` and `y` inside on this side.
    fn arc(self, x: Element, y: Element) -> (Element, Element) {
        match self {
            Side::First => (y, x),
            Side::Second => (x, y),
        }
    }

    fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FptOutcome {
    pub graph: ExchangeGraph,
    pub cnf: Cnf2,
    pub assignment: Assignment,
    pub side: Side,
    /// Elements of `I` with a suspicious arc on `side`.
    pub exceptional: ElementSet,
    /// The accepted guess.
    pub guess: ElementSet,
    /// Guesses tried, including the accepted one.
    pub guesses: usize,
}

/// Elements of `I` incident to a suspicious arc on the given side.
pub fn exceptional_set(g: &ExchangeGraph, side: Side) -> ElementSet {
    let i = g.independent();
    g.suspicious_arcs()
        .filter_map(|(u, v)| match side {
            Side::First if i.contains(u) && !i.contains(v) => Some(u),
            Side::Second if !i.contains(u) && i.contains(v) => Some(v),
            _ => None,
        })
        .collect()
}

/// The guessed clause system, or `None` when the guess is refuted outright.
fn guessed_cnf(
    intersected: &ExchangeGraph,
    table: &LeTable,
    side: Side,
    exceptional: ElementSet,
    guess: ElementSet,
) -> Result<Option<Cnf2>, ConsistencyError> {
    let mut cnf = build_cnf(table, intersected, CnfOptions::default())?;
    let sure = |x: Element, y: Element| {
        let (u, v) = side.arc(x, y);
        intersected.label(u, v) == Some(ArcLabel::Sure)
    };
    for obs in table.iter() {
        if !table.is_evil(obs)? {
            continue;
        }
        let xs = obs.x.to_vec();
        let sure_into = |y: Element| xs.iter().any(|&x| sure(x, y));
        let excluded = if !obs.y.is_subset(exceptional) {
            obs.y.difference(exceptional)
        } else if obs.y.is_subset(guess) {
            if !obs.y.iter().any(sure_into) {
                return Ok(None);
            }
            ElementSet::EMPTY
        } else {
            obs.y.intersection(guess)
        };
        for y in excluded {
            if sure_into(y) {
                continue;
            }
            let other = obs.y.without(y).first().expect("evil pairs are 2x2");
            let clause = (has(side.arc(xs[0], other)), has(side.arc(xs[1], other)));
            match cnf.add_arc_clause(intersected, clause, (obs.x, obs.y)) {
                Ok(()) => {}
                Err(ConsistencyError::Contradiction { .. }) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Some(cnf))
}

fn try_side(
    intersected: &ExchangeGraph,
    table: &LeTable,
    side: Side,
    tried: &mut usize,
) -> Result<Option<FptOutcome>, ConsistencyError> {
    let exceptional = exceptional_set(intersected, side);
    for guess in exceptional.subsets() {
        *tried += 1;
        let cnf = match guessed_cnf(intersected, table, side, exceptional, guess)? {
            Some(cnf) => cnf,
            None => continue,
        };
        let assignment = match solve_2sat(&cnf) {
            Some(a) => a,
            None => continue,
        };
        let graph = assemble(intersected, &cnf, &assignment);
        if check_all(&graph, table) == Estimate::Consistent {
            return Ok(Some(FptOutcome {
                graph,
                cnf,
                assignment,
                side,
                exceptional,
                guess,
                guesses: *tried,
            }));
        }
    }
    Ok(None)
}

/// A graph consistent with every observation, trying at most `2^gamma`
/// guesses per side. The side with the smaller exceptional set goes first.
pub fn fpt_consistent_graph(
    intersected: &ExchangeGraph,
    table: &LeTable,
    gamma: usize,
) -> Result<FptOutcome, SolveError> {
    let first = exceptional_set(intersected, Side::First).len();
    let second = exceptional_set(intersected, Side::Second).len();
    let side = if first < second {
        Side::First
    } else {
        Side::Second
    };
    let smallest = first.min(second);
    if smallest > gamma {
        return Err(SolveError::PromiseViolated {
            size: smallest,
            gamma,
        });
    }
    let mut tried = 0;
    if let Some(out) = try_side(intersected, table, side, &mut tried)? {
        return Ok(out);
    }
    if first.max(second) <= gamma {
        if let Some(out) = try_side(intersected, table, side.other(), &mut tried)? {
            return Ok(out);
        }
    }
    Err(ConsistencyError::Unsatisfiable.into())
}
