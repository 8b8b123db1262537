//! Maximum-cardinality common independent sets from `r_min` queries.

use std::fmt;

use crate::error::SolveError;
use crate::exchange::{build_modified_graph, scan_pairs, ExchangeGraph, StarStep};
use crate::oracle::{MinRankOracle, QueryCache};
use crate::set::{Element, ElementSet};

/// One augmentation attempt: a larger common independent set, or `Z` with
/// `r_min(Z) + r_min(E - Z) = |I|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Augmented(ElementSet),
    Certificate(ElementSet),
}

impl SolveResult {
    pub fn augmented(self) -> Option<ElementSet> {
        match self {
            SolveResult::Augmented(j) => Some(j),
            SolveResult::Certificate(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// No extension raises `r_min`; `Z = E`.
    Exhausted,
    Direct,
    Path,
    /// No augmenting path; `Z` from reachability.
    Unreachable,
    /// A path exists but does not gain weight.
    Stopped,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Exhausted => "exhausted",
            StepKind::Direct => "direct",
            StepKind::Path => "path",
            StepKind::Unreachable => "certificate",
            StepKind::Stopped => "stopped",
        })
    }
}

/// Which admissible probe pair to build the modified graph from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StarPairChoice {
    /// Lexicographically smallest `(s, t)`.
    #[default]
    First,
    /// The `k`-th pair in lexicographic order, wrapping around.
    Nth(usize),
}

/// A step together with the data it was decided from.
#[derive(Clone, Debug)]
pub struct StepReport {
    pub result: SolveResult,
    pub kind: StepKind,
    pub path: Vec<Element>,
    pub graph: Option<ExchangeGraph>,
}

/// One line of a solver trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    /// `|I|` before the step.
    pub size: usize,
    pub kind: StepKind,
    /// `I` after the step (unchanged on certificates).
    pub set: ElementSet,
    pub path: Vec<Element>,
    pub cost: Option<String>,
    /// Oracle queries spent by this step.
    pub queries: u64,
    /// Exceptional-set guesses tried (FPT strategy only).
    pub guesses: usize,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} {} ", self.size, self.kind)?;
        if !self.path.is_empty() {
            let p: Vec<String> = self.path.iter().map(|e| e.to_string()).collect();
            write!(f, "path={} ", p.join("-"))?;
        }
        if let Some(c) = &self.cost {
            write!(f, "cost={c} ")?;
        }
        if self.guesses > 0 {
            write!(f, "guesses={} ", self.guesses)?;
        }
        write!(f, "set={} queries={}", self.set, self.queries)
    }
}

/// One augmentation step at a common independent `I`.
pub fn augment_step(cache: &QueryCache<'_>, i: ElementSet, choice: StarPairChoice) -> StepReport {
    let scan = scan_pairs(cache, i);
    let sp = match scan.step() {
        StarStep::Exhausted => {
            return StepReport {
                result: SolveResult::Certificate(cache.ground()),
                kind: StepKind::Exhausted,
                path: Vec::new(),
                graph: None,
            }
        }
        StarStep::DirectAugment(x) => {
            return StepReport {
                result: SolveResult::Augmented(i.with(x)),
                kind: StepKind::Direct,
                path: vec![x],
                graph: None,
            }
        }
        StarStep::Pair(first) => match choice {
            StarPairChoice::First => first,
            StarPairChoice::Nth(k) => scan.star_pairs[k % scan.star_pairs.len()],
        },
    };
    let g = build_modified_graph(cache, i, sp);
    match g.shortest_augmenting_path() {
        Some(path) => {
            let moved: ElementSet = path.iter().copied().collect();
            StepReport {
                result: SolveResult::Augmented(i.symmetric_difference(moved)),
                kind: StepKind::Path,
                path,
                graph: Some(g),
            }
        }
        None => {
            let z = g
                .reachability_certificate()
                .expect("no augmenting path was found");
            StepReport {
                result: SolveResult::Certificate(z),
                kind: StepKind::Unreachable,
                path: Vec::new(),
                graph: Some(g),
            }
        }
    }
}

pub(crate) fn require_common_independent(
    oracle: &MinRankOracle,
    i: ElementSet,
) -> Result<(), SolveError> {
    if oracle.is_common_independent(i)? {
        Ok(())
    } else {
        Err(SolveError::NotCommonIndependent(i))
    }
}

/// Augments `I` by one element or certifies that it is maximum.
pub fn augment_min_rank(oracle: &MinRankOracle, i: ElementSet) -> Result<SolveResult, SolveError> {
    require_common_independent(oracle, i)?;
    let cache = QueryCache::new(oracle, oracle.ground());
    Ok(augment_step(&cache, i, StarPairChoice::First).result)
}

#[derive(Clone, Debug)]
pub struct CardinalityRun {
    pub set: ElementSet,
    pub certificate: ElementSet,
    pub queries: u64,
    pub trace: Vec<TraceRecord>,
}

/// Augments from the empty set until a certificate appears.
pub fn max_cardinality(oracle: &MinRankOracle) -> Result<CardinalityRun, SolveError> {
    max_cardinality_with(oracle, StarPairChoice::First)
}

pub fn max_cardinality_with(
    oracle: &MinRankOracle,
    choice: StarPairChoice,
) -> Result<CardinalityRun, SolveError> {
    let start = oracle.query_count();
    let mut i = ElementSet::EMPTY;
    let mut trace = Vec::new();
    loop {
        let before = oracle.query_count();
        let cache = QueryCache::new(oracle, oracle.ground());
        let step = augment_step(&cache, i, choice);
        let size = i.len();
        if let SolveResult::Augmented(j) = step.result {
            i = j;
        }
        trace.push(TraceRecord {
            size,
            kind: step.kind,
            set: i,
            path: step.path,
            cost: None,
            queries: oracle.query_count() - before,
            guesses: 0,
        });
        if let SolveResult::Certificate(z) = step.result {
            return Ok(CardinalityRun {
                set: i,
                certificate: z,
                queries: oracle.query_count() - start,
                trace,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::testing::crossed;

    #[test]
    fn crossed_partition_reaches_two() {
        let o = crossed();
        let run = max_cardinality(&o).unwrap();
        assert_eq!(run.set.len(), 2);
        assert!(o.is_common_independent(run.set).unwrap());
        let z = run.certificate;
        let e = o.ground();
        assert_eq!(o.rmin(z).unwrap() + o.rmin(e.difference(z)).unwrap(), 2);
        assert_eq!(run.trace.last().unwrap().kind, StepKind::Exhausted);
    }

    #[test]
    fn rejects_dependent_start() {
        let o = crossed();
        let bad = ElementSet::from_elements([0, 1]);
        assert_eq!(
            augment_min_rank(&o, bad),
            Err(SolveError::NotCommonIndependent(bad))
        );
    }

    #[test]
    fn uniform_pair_is_direct() {
        let o = MinRankOracle::new(
            Matroid::uniform(2, 3).unwrap(),
            Matroid::uniform(1, 3).unwrap(),
        )
        .unwrap();
        let run = max_cardinality(&o).unwrap();
        assert_eq!(run.set, ElementSet::singleton(0));
        assert_eq!(run.trace[0].kind, StepKind::Direct);
    }
}
