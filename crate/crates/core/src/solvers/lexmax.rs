//! Lexicographically maximal common independent sets, and the approximation
//! they give for positive weights.

use num_rational::BigRational;
use num_traits::One;

use super::cardinality::{SolveResult, StepKind, TraceRecord};
use super::cost::{LexModel, PathCost};
use super::weighted::{weighted_step, Strategy};
use crate::error::SolveError;
use crate::oracle::{MinRankOracle, QueryCache};
use crate::set::ElementSet;
use crate::weight::WeightFn;

#[derive(Clone, Debug)]
pub struct LexRun {
    pub set: ElementSet,
    /// Elements of `set` per weight class, heaviest first.
    pub profile: Vec<usize>,
    pub queries: u64,
    pub trace: Vec<TraceRecord>,
}

/// Grows `I` inside the heaviest class while that gains, then inside the two
/// heaviest classes, and so on. An update gains when its cheapest path has
/// negative class-count cost. Only elements of `ground` take part.
pub fn lexicographic_max_in(
    oracle: &MinRankOracle,
    w: &WeightFn,
    ground: ElementSet,
) -> Result<LexRun, SolveError> {
    let start = oracle.query_count();
    let classes = w.distinct_descending(ground);
    let mut i = ElementSet::EMPTY;
    let mut trace = Vec::new();
    let mut prefix = ElementSet::EMPTY;
    for class in &classes {
        prefix = prefix.union(ground.iter().filter(|&e| w.get(e) == class).collect());
        let model = LexModel::new(w, prefix);
        loop {
            let before = oracle.query_count();
            let cache = QueryCache::new(oracle, prefix);
            let step = weighted_step(&cache, &model, i, Strategy::TwoSat)?;
            let size = i.len();
            let gains = step.cost.as_ref().is_none_or(PathCost::is_negative);
            let kind = match step.result {
                SolveResult::Augmented(j) if gains => {
                    i = j;
                    step.kind
                }
                SolveResult::Augmented(_) => StepKind::Stopped,
                SolveResult::Certificate(_) => step.kind,
            };
            trace.push(TraceRecord {
                size,
                kind,
                set: i,
                path: step.path,
                cost: step.cost.as_ref().map(|c| c.to_string()),
                queries: oracle.query_count() - before,
                guesses: 0,
            });
            if kind != StepKind::Direct && kind != StepKind::Path {
                break;
            }
        }
    }
    Ok(LexRun {
        set: i,
        profile: w.class_vector(ground, i),
        queries: oracle.query_count() - start,
        trace,
    })
}

/// Lexicographic maximum over the whole ground set.
pub fn lexicographic_max(oracle: &MinRankOracle, w: &WeightFn) -> Result<LexRun, SolveError> {
    lexicographic_max_in(oracle, w, oracle.ground())
}

/// Smallest ratio `w_i / w_{i+1} > 1` of consecutive distinct positive
/// weights; `None` with fewer than two classes.
pub fn consecutive_ratio(w: &WeightFn) -> Option<BigRational> {
    let d = w.distinct_descending(w.positive_support());
    d.windows(2).map(|p| &p[0] / &p[1]).min()
}

/// The guaranteed fraction `min{1, alpha/2}` of the optimum.
pub fn approximation_guarantee(w: &WeightFn) -> BigRational {
    match consecutive_ratio(w) {
        None => BigRational::one(),
        Some(alpha) => {
            let half = alpha / BigRational::from_integer(2.into());
            half.min(BigRational::one())
        }
    }
}

#[derive(Clone, Debug)]
pub struct ApproxRun {
    pub run: LexRun,
    pub weight: BigRational,
    pub guarantee: BigRational,
}

/// Lexicographic maximum over the positive-weight elements.
pub fn approx_max_weight(oracle: &MinRankOracle, w: &WeightFn) -> Result<ApproxRun, SolveError> {
    let run = lexicographic_max_in(oracle, w, w.positive_support())?;
    let weight = w.total(run.set);
    Ok(ApproxRun {
        run,
        weight,
        guarantee: approximation_guarantee(w),
    })
}
