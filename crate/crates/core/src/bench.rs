//! Oracle-call counts against the `r·n²` and `r³·n²` envelopes.

use std::fmt::Write;
use std::time::{Duration, Instant};

use crate::error::SolveError;
use crate::gen;
use crate::oracle::MinRankOracle;
use crate::solvers::{lexicographic_max, max_cardinality, weighted_no_circuit_inclusion};

/// Largest constant accepted for the cardinality envelope.
pub const CARDINALITY_CONSTANT: f64 = 32.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    Cardinality,
    Weighted,
    Lexmax,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Cardinality => "cardinality",
            Solver::Weighted => "weighted",
            Solver::Lexmax => "lexmax",
        }
    }

    /// Exponent of `r` in the envelope.
    pub fn rank_power(self) -> i32 {
        match self {
            Solver::Cardinality => 1,
            Solver::Weighted | Solver::Lexmax => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub solver: Solver,
    pub n: usize,
    pub instances: usize,
    /// Largest `|I|` reached (at least 1 for the envelope).
    pub r: usize,
    pub max_queries: u64,
    /// Largest `queries / (r^p · n²)` over the instances.
    pub ratio: f64,
    pub elapsed: Duration,
}

fn envelope(solver: Solver, r: usize, n: usize) -> f64 {
    (r.max(1) as f64).powi(solver.rank_power()) * (n * n) as f64
}

fn measure(solver: Solver, n: usize, instances: usize, seed: u64) -> Result<BenchRow, SolveError> {
    let mut rng = gen::rng(seed ^ (n as u64) << 8);
    let start = Instant::now();
    let mut row = BenchRow {
        solver,
        n,
        instances,
        r: 0,
        max_queries: 0,
        ratio: 0.0,
        elapsed: Duration::ZERO,
    };
    for _ in 0..instances {
        let (m1, m2) = match solver {
            Solver::Cardinality => gen::partition_pair(&mut rng, n),
            Solver::Weighted => gen::no_circuit_inclusion_pair(&mut rng, n),
            Solver::Lexmax => gen::mixed_pair(&mut rng, n),
        };
        let o = MinRankOracle::new(m1, m2)?;
        let (r, queries) = match solver {
            Solver::Cardinality => {
                let run = max_cardinality(&o)?;
                (run.set.len(), run.queries)
            }
            Solver::Weighted => {
                let w = gen::weights(&mut rng, n, -3, 9);
                let run = weighted_no_circuit_inclusion(&o, &w)?;
                (run.levels.len() - 1, run.queries)
            }
            Solver::Lexmax => {
                let w = gen::weights(&mut rng, n, 1, 4);
                let run = lexicographic_max(&o, &w)?;
                (run.set.len(), run.queries)
            }
        };
        row.r = row.r.max(r);
        row.max_queries = row.max_queries.max(queries);
        row.ratio = row.ratio.max(queries as f64 / envelope(solver, r, n));
    }
    row.elapsed = start.elapsed();
    Ok(row)
}

/// Cardinality rows on partition pairs, one per size.
pub fn cardinality_rows(
    sizes: &[usize],
    instances: usize,
    seed: u64,
) -> Result<Vec<BenchRow>, SolveError> {
    sizes
        .iter()
        .map(|&n| measure(Solver::Cardinality, n, instances, seed))
        .collect()
}

/// Weighted and lexicographic rows on small mixed instances.
pub fn weighted_rows(
    sizes: &[usize],
    instances: usize,
    seed: u64,
) -> Result<Vec<BenchRow>, SolveError> {
    let mut out = Vec::new();
    for &n in sizes {
        out.push(measure(Solver::Weighted, n, instances, seed)?);
        out.push(measure(Solver::Lexmax, n, instances, seed)?);
    }
    Ok(out)
}

/// The single constant covering every row of one solver.
pub fn fitted_constant(rows: &[BenchRow], solver: Solver) -> f64 {
    rows.iter()
        .filter(|r| r.solver == solver)
        .map(|r| r.ratio)
        .fold(0.0, f64::max)
}

pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<12} {:>4} {:>5} {:>4} {:>12} {:>10} {:>9}",
        "solver", "n", "runs", "r", "max queries", "C", "seconds"
    )
    .unwrap();
    for row in rows {
        writeln!(
            out,
            "{:<12} {:>4} {:>5} {:>4} {:>12} {:>10.4} {:>9.3}",
            row.solver.name(),
            row.n,
            row.instances,
            row.r,
            row.max_queries,
            row.ratio,
            row.elapsed.as_secs_f64()
        )
        .unwrap();
    }
    for solver in [Solver::Cardinality, Solver::Weighted, Solver::Lexmax] {
        if rows.iter().any(|r| r.solver == solver) {
            let envelope = if solver.rank_power() == 1 {
                "r·n²"
            } else {
                "r³·n²"
            };
            writeln!(
                out,
                "{}: queries <= {:.4} · {envelope}",
                solver.name(),
                fitted_constant(rows, solver)
            )
            .unwrap();
        }
    }
    out
}
