//! Two-literal clause systems over arc-membership variables.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::le_pairs::{LeObservation, LeTable};
use crate::error::ConsistencyError;
use crate::exchange::{ArcLabel, ExchangeGraph};
use crate::set::{Element, ElementSet};

/// Directed arc `(tail, head)`.
pub type Arc = (Element, Element);

/// Literal over an arc: `positive` means "the arc is present".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArcLiteral {
    pub arc: Arc,
    pub positive: bool,
}

pub fn has(arc: Arc) -> ArcLiteral {
    ArcLiteral {
        arc,
        positive: true,
    }
}

pub fn lacks(arc: Arc) -> ArcLiteral {
    ArcLiteral {
        arc,
        positive: false,
    }
}

pub type ArcClause = (ArcLiteral, ArcLiteral);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CnfOptions {
    /// Also emit the clauses already implied by singleton subpairs.
    pub redundant: bool,
}

/// Clauses expressing consistency (or, for evil pairs, underestimation with an
/// all-or-nothing pattern) for one observation.
pub fn clauses_for_pair(
    obs: &LeObservation,
    k: usize,
    evil: bool,
    options: CnfOptions,
) -> Vec<ArcClause> {
    let xs = obs.x.to_vec();
    let ys = obs.y.to_vec();
    // a(i, j) = (x_i, y_j) enters I, b(i, j) = (y_j, x_i) leaves it
    let a = |i: usize, j: usize| (xs[i], ys[j]);
    let b = |i: usize, j: usize| (ys[j], xs[i]);
    let high = obs.is_high(k);
    match (xs.len(), ys.len()) {
        (1, 1) => {
            if high {
                vec![
                    (has(a(0, 0)), has(b(0, 0))),
                    (lacks(a(0, 0)), has(b(0, 0))),
                    (has(a(0, 0)), lacks(b(0, 0))),
                ]
            } else {
                vec![(lacks(a(0, 0)), lacks(b(0, 0)))]
            }
        }
        (1, 2) | (2, 1) => {
            // index the two arcs of each direction along the side of size two
            let pick = |f: &dyn Fn(usize, usize) -> Arc, t: usize| {
                if xs.len() == 2 {
                    f(t, 0)
                } else {
                    f(0, t)
                }
            };
            let (a1, a2) = (pick(&a, 0), pick(&a, 1));
            let (b1, b2) = (pick(&b, 0), pick(&b, 1));
            if high {
                vec![(has(a1), has(a2)), (has(b1), has(b2))]
            } else {
                let mut c = vec![(lacks(a1), lacks(b2)), (lacks(a2), lacks(b1))];
                if options.redundant {
                    c.push((lacks(a1), lacks(b1)));
                    c.push((lacks(a2), lacks(b2)));
                }
                c
            }
        }
        (2, 2) => {
            let crossed = [(0, 0), (0, 1), (1, 0), (1, 1)];
            if obs.value + 2 == k {
                crossed
                    .iter()
                    .map(|&(i, j)| (lacks(a(i, j)), lacks(b(1 - i, 1 - j))))
                    .collect()
            } else if evil {
                let forward = crossed
                    .iter()
                    .map(|&(i, j)| (lacks(a(i, j)), has(b(1 - i, 1 - j))));
                let backward = crossed
                    .iter()
                    .map(|&(i, j)| (has(a(i, j)), lacks(b(1 - i, 1 - j))));
                forward.chain(backward).collect()
            } else {
                Vec::new()
            }
        }
        _ => Vec::new(),
    }
}

/// Literal over a declared variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn negated(self) -> Lit {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

pub type Clause = (Lit, Lit);

/// A 2-CNF whose variables are the suspicious arcs of an intersected graph.
/// Sure arcs act as the constant true, non-arcs as false.
#[derive(Clone, Debug)]
pub struct Cnf2 {
    variables: Vec<Arc>,
    index: HashMap<Arc, usize>,
    clauses: Vec<Clause>,
    emitted: usize,
}

enum Resolved {
    Const(bool),
    Var(Lit),
}

impl Cnf2 {
    pub fn new(graph: &ExchangeGraph) -> Self {
        Cnf2::with_variables(graph.suspicious_arcs().collect())
    }

    pub fn with_variables(variables: Vec<Arc>) -> Self {
        let index = variables.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        Cnf2 {
            variables,
            index,
            clauses: Vec::new(),
            emitted: 0,
        }
    }

    pub fn variables(&self) -> &[Arc] {
        &self.variables
    }

    pub fn variable(&self, arc: Arc) -> Option<usize> {
        self.index.get(&arc).copied()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Clauses generated before constant folding.
    pub fn emitted_count(&self) -> usize {
        self.emitted
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        self.emitted += 1;
        self.clauses.push((a, b));
    }

    fn resolve(&self, graph: &ExchangeGraph, lit: ArcLiteral) -> Resolved {
        let (u, v) = lit.arc;
        match graph.label(u, v) {
            Some(ArcLabel::Sure) => Resolved::Const(lit.positive),
            None => Resolved::Const(!lit.positive),
            Some(ArcLabel::Suspicious) => Resolved::Var(Lit {
                var: self.index[&lit.arc],
                positive: lit.positive,
            }),
        }
    }

    /// Adds an arc clause after substituting constants. Satisfied clauses are
    /// dropped, false literals removed, units stored as `(l ∨ l)`.
    pub fn add_arc_clause(
        &mut self,
        graph: &ExchangeGraph,
        clause: ArcClause,
        origin: (ElementSet, ElementSet),
    ) -> Result<(), ConsistencyError> {
        self.emitted += 1;
        let lits = [self.resolve(graph, clause.0), self.resolve(graph, clause.1)];
        if lits.iter().any(|l| matches!(l, Resolved::Const(true))) {
            return Ok(());
        }
        let vars: Vec<Lit> = lits
            .iter()
            .filter_map(|l| match l {
                Resolved::Var(v) => Some(*v),
                Resolved::Const(_) => None,
            })
            .collect();
        match vars.as_slice() {
            [] => Err(ConsistencyError::Contradiction {
                x: origin.0,
                y: origin.1,
            }),
            [l] => {
                self.clauses.push((*l, *l));
                Ok(())
            }
            [l, m] => {
                self.clauses.push((*l, *m));
                Ok(())
            }
            _ => unreachable!(),
        }
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|(a, b)| a.holds(assignment) || b.holds(assignment))
    }

    /// DIMACS text; variable `v` is written as `v + 1`.
    pub fn dimacs(&self) -> String {
        let mut out = String::new();
        for (v, (u, w)) in self.variables.iter().enumerate() {
            let _ = writeln!(out, "c {} = arc ({u}, {w})", v + 1);
        }
        let _ = writeln!(out, "p cnf {} {}", self.variables.len(), self.clauses.len());
        let lit = |l: &Lit| {
            let v = l.var as i64 + 1;
            if l.positive {
                v
            } else {
                -v
            }
        };
        for (a, b) in &self.clauses {
            let _ = writeln!(out, "{} {} 0", lit(a), lit(b));
        }
        out
    }
}

/// The clause system over all observations of `table`.
pub fn build_cnf(
    table: &LeTable,
    graph: &ExchangeGraph,
    options: CnfOptions,
) -> Result<Cnf2, ConsistencyError> {
    let k = table.independent().len();
    let mut cnf = Cnf2::new(graph);
    for obs in table.iter() {
        let evil = table.is_evil(obs)?;
        for clause in clauses_for_pair(obs, k, evil, options) {
            cnf.add_arc_clause(graph, clause, (obs.x, obs.y))?;
        }
    }
    Ok(cnf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    #[test]
    fn single_exchange_clauses() {
        // x = 0, y = 1, |I| = 1
        let high = LeObservation {
            x: set(&[0]),
            y: set(&[1]),
            value: 1,
        };
        let (a, b) = ((0, 1), (1, 0));
        assert_eq!(
            clauses_for_pair(&high, 1, false, CnfOptions::default()),
            vec![(has(a), has(b)), (lacks(a), has(b)), (has(a), lacks(b))]
        );
        let low = LeObservation { value: 0, ..high };
        assert_eq!(
            clauses_for_pair(&low, 1, false, CnfOptions::default()),
            vec![(lacks(a), lacks(b))]
        );
    }

    #[test]
    fn evil_pair_has_eight_equivalence_clauses() {
        // x1 = 0, x2 = 1, y1 = 2, y2 = 3
        let obs = LeObservation {
            x: set(&[0, 1]),
            y: set(&[2, 3]),
            value: 1,
        };
        let clauses = clauses_for_pair(&obs, 2, true, CnfOptions::default());
        assert_eq!(clauses.len(), 8);
        // a(1,1) = (x1, y1) paired with b(2,2) = (y2, x2)
        assert_eq!(clauses[0], (lacks((0, 2)), has((3, 1))));
        assert_eq!(clauses[4], (has((0, 2)), lacks((3, 1))));
        assert!(clauses_for_pair(&obs, 2, false, CnfOptions::default()).is_empty());
    }

    #[test]
    fn redundant_clauses_on_request() {
        let obs = LeObservation {
            x: set(&[0]),
            y: set(&[2, 3]),
            value: 0,
        };
        assert_eq!(
            clauses_for_pair(&obs, 2, false, CnfOptions::default()).len(),
            2
        );
        assert_eq!(
            clauses_for_pair(&obs, 2, false, CnfOptions { redundant: true }).len(),
            4
        );
    }

    #[test]
    fn constants_fold() {
        let mut g = ExchangeGraph::new(2, set(&[1]), ElementSet::EMPTY, ElementSet::EMPTY);
        g.add_arc(0, 1, ArcLabel::Sure);
        g.add_arc(1, 0, ArcLabel::Suspicious);
        let mut cnf = Cnf2::new(&g);
        assert_eq!(cnf.variables(), &[(1, 0)]);
        let origin = (set(&[0]), set(&[1]));
        // (a ∨ b) with a sure: dropped
        cnf.add_arc_clause(&g, (has((0, 1)), has((1, 0))), origin)
            .unwrap();
        // (¬a ∨ b): unit b
        cnf.add_arc_clause(&g, (lacks((0, 1)), has((1, 0))), origin)
            .unwrap();
        assert_eq!(cnf.clauses().len(), 1);
        assert_eq!(cnf.emitted_count(), 2);
        g.remove_arc(1, 0);
        let mut cnf = Cnf2::new(&g);
        assert!(cnf
            .add_arc_clause(&g, (lacks((0, 1)), has((1, 0))), origin)
            .is_err());
    }

    #[test]
    fn all_sure_gives_empty_formula() {
        let mut g = ExchangeGraph::new(2, set(&[1]), ElementSet::EMPTY, ElementSet::EMPTY);
        g.add_arc(0, 1, ArcLabel::Sure);
        g.add_arc(1, 0, ArcLabel::Sure);
        let obs = LeObservation {
            x: set(&[0]),
            y: set(&[1]),
            value: 1,
        };
        let table = LeTable::from_observations(set(&[1]), set(&[0]), vec![obs]).unwrap();
        let cnf = build_cnf(&table, &g, CnfOptions::default()).unwrap();
        assert!(cnf.variables().is_empty());
        assert!(cnf.clauses().is_empty());
    }
}
