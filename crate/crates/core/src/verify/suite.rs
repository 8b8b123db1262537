//! Every solver on one instance, each checked against brute force.

use num_rational::BigRational;

use super::audit::{audit_graphs, AuditOptions, BruteReport};
use super::brute::{
    brute_dual, brute_lexmax, brute_max_weight, common_independent_sets, w_maximal_among,
};
use super::circuits::{check_promise_no_circuit_inclusion, max_circuit_size};
use crate::error::SolveError;
use crate::oracle::MinRankOracle;
use crate::set::ElementSet;
use crate::solvers::{
    approx_max_weight, lexicographic_max, max_cardinality, weighted_fpt_circuit,
    weighted_no_circuit_inclusion, WeightedRun,
};
use crate::weight::WeightFn;

/// Largest circuit bound for which the exceptional-set solver is run.
pub const SUITE_GAMMA: usize = 3;

/// Runs the cardinality, weighted, FPT, lexicographic and approximation
/// solvers through `oracle` and compares each against the hidden pair. Graph
/// audits run at every set the cardinality and weighted solvers pass through.
pub fn verify_instance(
    oracle: &MinRankOracle,
    w: &WeightFn,
    name: &str,
) -> Result<Vec<BruteReport>, SolveError> {
    let (m1, m2) = oracle.hidden();
    let ground = oracle.ground();
    let sets = common_independent_sets(m1, m2)?;
    let mut out = Vec::new();

    let run = max_cardinality(oracle)?;
    let r = run.set.len();
    let opt = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    out.push(BruteReport::new(
        name,
        "max common size",
        opt,
        r,
        vec![run.set],
    ));
    out.push(BruteReport::new(
        name,
        "solution common independent",
        true,
        m1.rank_of(run.set) == r && m2.rank_of(run.set) == r,
        vec![run.set],
    ));
    let dual = brute_dual(m1, m2)?;
    out.push(BruteReport::new(
        name,
        "rank-form dual",
        dual.rank_form.0,
        r,
        vec![dual.rank_form.1],
    ));
    out.push(BruteReport::new(
        name,
        "min-form dual",
        dual.min_form.0,
        r,
        vec![dual.min_form.1],
    ));
    let z = run.certificate;
    let rmin = |x: ElementSet| m1.rank_of(x).min(m2.rank_of(x));
    out.push(BruteReport::new(
        name,
        "certificate value",
        r,
        rmin(z) + rmin(ground.difference(z)),
        vec![z],
    ));
    let mut visited = vec![ElementSet::EMPTY];
    visited.extend(run.trace.iter().map(|t| t.set));
    visited.dedup();
    for &i in &visited {
        let label = format!("{name} I={i}");
        out.extend(audit_graphs(m1, m2, i, &label, AuditOptions::default())?);
    }

    if check_promise_no_circuit_inclusion(m1, m2) {
        let run = weighted_no_circuit_inclusion(oracle, w)?;
        out.extend(level_reports(name, "weighted", &sets, w, &run));
        for (k, &i) in run.levels.iter().enumerate() {
            let label = format!("{name} weighted k={k}");
            let options = AuditOptions {
                weights: Some(w),
                ..AuditOptions::default()
            };
            out.extend(audit_graphs(m1, m2, i, &label, options)?);
        }
    }

    let gamma = max_circuit_size(m1).min(max_circuit_size(m2));
    if gamma <= SUITE_GAMMA {
        let run = weighted_fpt_circuit(oracle, w, gamma)?;
        out.extend(level_reports(name, "fpt", &sets, w, &run));
        out.push(BruteReport::new(
            name,
            format!("fpt guesses within 2^{gamma}"),
            true,
            run.max_guesses <= 1 << gamma,
            Vec::new(),
        ));
    }

    let lex = lexicographic_max(oracle, w)?;
    let brute = brute_lexmax(m1, m2, w)?;
    out.push(BruteReport::new(
        name,
        "lexmax profile",
        format!("{:?}", w.class_vector(ground, brute)),
        format!("{:?}", w.class_vector(ground, lex.set)),
        vec![brute, lex.set],
    ));

    if !w.positive_support().is_empty() {
        let approx = approx_max_weight(oracle, w)?;
        let (best, witness) = brute_max_weight(m1, m2, w)?;
        let bound: BigRational = &approx.guarantee * &best;
        out.push(BruteReport::new(
            name,
            format!("approximation within {}", approx.guarantee),
            true,
            approx.weight >= bound,
            vec![witness, approx.run.set],
        ));
    }
    Ok(out)
}

/// Per-cardinality weight comparisons for a weighted run.
fn level_reports(
    name: &str,
    solver: &str,
    sets: &[ElementSet],
    w: &WeightFn,
    run: &WeightedRun,
) -> Vec<BruteReport> {
    let opt = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = vec![BruteReport::new(
        name,
        format!("{solver} levels"),
        opt + 1,
        run.levels.len(),
        Vec::new(),
    )];
    for (k, &level) in run.levels.iter().enumerate() {
        let best = w_maximal_among(sets, w, k);
        let brute = best.weight.map_or("none".to_string(), |q| q.to_string());
        let found = if sets.contains(&level) && level.len() == k {
            w.total(level).to_string()
        } else {
            format!("not common independent of size {k}")
        };
        out.push(BruteReport::new(
            name,
            format!("{solver} weight k={k}"),
            brute,
            found,
            vec![level],
        ));
    }
    out
}
