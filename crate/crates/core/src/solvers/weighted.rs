//! Weight-maximal common independent sets of every size via cheapest paths
//! in inferred exchangeability graphs.

use num_rational::BigRational;

use super::cardinality::{require_common_independent, SolveResult, StepKind, TraceRecord};
use super::cheapest::shortest_cheapest_path;
use super::cost::{CostModel, PathCost, WeightCost};
use super::fpt::fpt_consistent_graph;
use crate::consistency::{almost_consistent_graph, observe};
use crate::error::SolveError;
use crate::exchange::{scan_pairs, ExchangeGraph};
use crate::oracle::{MinRankOracle, QueryCache};
use crate::set::{Element, ElementSet};
use crate::weight::WeightFn;

/// How the exchangeability graph is inferred from observations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Any 2-SAT solution (almost consistent).
    TwoSat,
    /// Exceptional-set guessing; fully consistent.
    Fpt { gamma: usize },
}

#[derive(Clone, Debug)]
pub struct WeightedStep<C> {
    pub result: SolveResult,
    pub kind: StepKind,
    pub path: Vec<Element>,
    pub cost: Option<C>,
    pub graph: Option<ExchangeGraph>,
    pub guesses: usize,
}

/// One cheapest-path step at a common independent `I`.
pub fn weighted_step<M: CostModel>(
    cache: &QueryCache<'_>,
    model: &M,
    i: ElementSet,
    strategy: Strategy,
) -> Result<WeightedStep<M::Cost>, SolveError> {
    let scan = scan_pairs(cache, i);
    if scan.exhausted {
        return Ok(WeightedStep {
            result: SolveResult::Certificate(cache.ground()),
            kind: StepKind::Exhausted,
            path: Vec::new(),
            cost: None,
            graph: None,
            guesses: 0,
        });
    }
    let sp = match scan.star_pairs.first() {
        Some(&sp) => sp,
        None => {
            let x = model
                .heaviest(scan.addable)
                .expect("some extension raises r_min");
            return Ok(WeightedStep {
                result: SolveResult::Augmented(i.with(x)),
                kind: StepKind::Direct,
                path: vec![x],
                cost: Some(model.weight(x).negated()),
                graph: None,
                guesses: 0,
            });
        }
    };
    let (graph, guesses) = match strategy {
        Strategy::TwoSat => (almost_consistent_graph(cache, i, sp)?.graph, 0),
        Strategy::Fpt { gamma } => {
            let (intersected, table) = observe(cache, i, sp)?;
            let out = fpt_consistent_graph(&intersected, &table, gamma)?;
            (out.graph, out.guesses)
        }
    };
    let costs = model.vertex_costs(graph.ground_size(), i);
    match shortest_cheapest_path(&graph, &costs)? {
        Some((path, cost)) => {
            let moved: ElementSet = path.iter().copied().collect();
            Ok(WeightedStep {
                result: SolveResult::Augmented(i.symmetric_difference(moved)),
                kind: StepKind::Path,
                path,
                cost: Some(cost),
                graph: Some(graph),
                guesses,
            })
        }
        None => Ok(WeightedStep {
            result: SolveResult::Certificate(graph.reachability_certificate()?),
            kind: StepKind::Unreachable,
            path: Vec::new(),
            cost: None,
            graph: Some(graph),
            guesses,
        }),
    }
}

/// One step from a caller-supplied `I` with the 2-SAT strategy.
pub fn cheapest_path_augment(
    oracle: &MinRankOracle,
    w: &WeightFn,
    i: ElementSet,
) -> Result<SolveResult, SolveError> {
    require_common_independent(oracle, i)?;
    let cache = QueryCache::new(oracle, oracle.ground());
    Ok(weighted_step(&cache, &WeightCost(w), i, Strategy::TwoSat)?.result)
}

#[derive(Clone, Debug)]
pub struct WeightedRun {
    /// `levels[k]` is the set found at cardinality `k`.
    pub levels: Vec<ElementSet>,
    pub certificate: ElementSet,
    pub queries: u64,
    pub trace: Vec<TraceRecord>,
    /// Most guesses spent on a single step.
    pub max_guesses: usize,
}

impl WeightedRun {
    /// The heaviest level, smallest cardinality on ties.
    pub fn best(&self, w: &WeightFn) -> ElementSet {
        let mut best = self.levels[0];
        for &l in &self.levels[1..] {
            if w.total(l) > w.total(best) {
                best = l;
            }
        }
        best
    }
}

pub fn weighted_levels(
    oracle: &MinRankOracle,
    w: &WeightFn,
    strategy: Strategy,
) -> Result<WeightedRun, SolveError> {
    let start = oracle.query_count();
    let model = WeightCost(w);
    let mut i = ElementSet::EMPTY;
    let mut levels = vec![i];
    let mut trace = Vec::new();
    let mut max_guesses = 0;
    loop {
        let before = oracle.query_count();
        let cache = QueryCache::new(oracle, oracle.ground());
        let step = weighted_step(&cache, &model, i, strategy)?;
        let size = i.len();
        if let SolveResult::Augmented(j) = step.result {
            i = j;
            levels.push(i);
        }
        max_guesses = max_guesses.max(step.guesses);
        trace.push(TraceRecord {
            size,
            kind: step.kind,
            set: i,
            path: step.path,
            cost: step.cost.as_ref().map(BigRational::to_string),
            queries: oracle.query_count() - before,
            guesses: step.guesses,
        });
        if let SolveResult::Certificate(z) = step.result {
            return Ok(WeightedRun {
                levels,
                certificate: z,
                queries: oracle.query_count() - start,
                trace,
                max_guesses,
            });
        }
    }
}

/// Exact when no circuit of one matroid is dependent in the other.
pub fn weighted_no_circuit_inclusion(
    oracle: &MinRankOracle,
    w: &WeightFn,
) -> Result<WeightedRun, SolveError> {
    weighted_levels(oracle, w, Strategy::TwoSat)
}

/// Exact when some matroid has no circuit larger than `gamma`.
pub fn weighted_fpt_circuit(
    oracle: &MinRankOracle,
    w: &WeightFn,
    gamma: usize,
) -> Result<WeightedRun, SolveError> {
    weighted_levels(oracle, w, Strategy::Fpt { gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::crossed;

    #[test]
    fn crossed_partition_levels() {
        let o = crossed();
        let w = WeightFn::from_integers(&[5, 4, 4, 1]);
        for run in [
            weighted_no_circuit_inclusion(&o, &w).unwrap(),
            weighted_fpt_circuit(&o, &w, 2).unwrap(),
        ] {
            assert_eq!(run.levels.len(), 3);
            assert_eq!(run.levels[1], ElementSet::singleton(0));
            assert_eq!(run.levels[2], ElementSet::from_elements([1, 2]));
            assert_eq!(run.best(&w), ElementSet::from_elements([1, 2]));
        }
    }

    #[test]
    fn single_step_from_given_set() {
        let o = crossed();
        let w = WeightFn::from_integers(&[5, 4, 4, 1]);
        let r = cheapest_path_augment(&o, &w, ElementSet::singleton(0)).unwrap();
        assert_eq!(r, SolveResult::Augmented(ElementSet::from_elements([1, 2])));
    }
}
