//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::Rng;

use minrank::bench;
use minrank::consistency::{solve_clauses, Clause, Lit};
use minrank::gadgets::{
    build_gadget, colorings_from_consistent_graphs, verify_gadget, ColoredGraph, GadgetSpec,
};
use minrank::gen;
use minrank::solvers::{
    approx_max_weight, lexicographic_max, max_cardinality, weighted_fpt_circuit,
    weighted_no_circuit_inclusion, WeightedRun,
};
use minrank::verify::{
    audit_graphs, brute_dual, brute_lexmax, brute_max_common, brute_max_weight,
    check_promise_no_circuit_inclusion, common_independent_sets, w_maximal_among, AuditOptions,
    BruteReport, Fault,
};
use minrank::{ElementSet, Matroid, MinRankOracle, WeightFn};

/// Constant allowed in both oracle-call envelopes.
const ENVELOPE_C: f64 = 32.0;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn oracle(m1: &Matroid, m2: &Matroid) -> MinRankOracle {
    MinRankOracle::new(m1.clone(), m2.clone()).expect("same ground set")
}

/// Sets a cardinality run passes through, the empty set included.
fn visited_sets(o: &MinRankOracle) -> Vec<ElementSet> {
    let run = max_cardinality(o).expect("cardinality run");
    let mut sets = vec![ElementSet::EMPTY];
    sets.extend(run.trace.iter().map(|t| t.set));
    sets.dedup();
    sets
}

fn cardinality_correctness() -> Verdict {
    let mut rng = gen::rng(101);
    let mut bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let (m1, m2) = gen::mixed_pair(&mut rng, n);
        let o = oracle(&m1, &m2);
        let found = max_cardinality(&o).map(|r| r.set.len());
        let (best, _) = brute_max_common(&m1, &m2).unwrap();
        let dual = brute_dual(&m1, &m2).unwrap();
        if found != Ok(best) || dual.rank_form.0 != best || dual.min_form.0 != best {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("500 instances, n<=10, {bad} mismatches"))
}

fn oracle_envelope() -> Verdict {
    let rows = bench::cardinality_rows(&[8, 16, 32, 48, 64], 5, 2026).unwrap();
    let c = bench::fitted_constant(&rows, bench::Solver::Cardinality);
    print!("{}", bench::format_table(&rows));
    verdict(
        c <= ENVELOPE_C,
        format!("n in {{8,16,32,48,64}}, queries <= {c:.4} r n^2 (C <= {ENVELOPE_C})"),
    )
}

/// Audit reports at every common independent set of 200 instances, the sets
/// a cardinality run visits first.
fn cardinality_audits() -> Vec<BruteReport> {
    let mut rng = gen::rng(303);
    let mut out = Vec::new();
    for idx in 0..200 {
        let (m1, m2) = audit_pair(&mut rng, idx, false);
        let mut sets = visited_sets(&oracle(&m1, &m2));
        for s in common_independent_sets(&m1, &m2).unwrap() {
            if !sets.contains(&s) {
                sets.push(s);
            }
        }
        for i in sets {
            match audit_graphs(&m1, &m2, i, &format!("#{idx}"), AuditOptions::default()) {
                Ok(r) => out.extend(r),
                Err(e) => out.push(BruteReport::new(
                    format!("#{idx}"),
                    "audit error",
                    "",
                    e,
                    vec![i],
                )),
            }
        }
    }
    out
}

/// Mixed pairs on even indices, partition pairs (which need longer augmenting
/// paths) on odd ones.
fn audit_pair(rng: &mut gen::InstanceRng, idx: usize, promise: bool) -> (Matroid, Matroid) {
    loop {
        let pair = if idx.is_multiple_of(2) {
            let n = rng.gen_range(1..=8);
            gen::mixed_pair(rng, n)
        } else {
            let n = rng.gen_range(4..=8);
            gen::partition_pair(rng, n)
        };
        if !promise || check_promise_no_circuit_inclusion(&pair.0, &pair.1) {
            return pair;
        }
    }
}

fn count_bad(reports: &[BruteReport], quantities: &[&str]) -> (usize, usize) {
    let chosen: Vec<&BruteReport> = reports
        .iter()
        .filter(|r| quantities.contains(&r.quantity.as_str()) || r.quantity == "audit error")
        .collect();
    (chosen.len(), chosen.iter().filter(|r| !r.agree).count())
}

fn containments(audits: &[BruteReport]) -> Verdict {
    let (checks, bad) = count_bad(
        audits,
        &[
            "terminals",
            "modified contains true",
            "modified fake arcs",
            "intersected contains true",
            "intersected within modified",
            "intersected fake arcs",
            "sure arcs true",
        ],
    );
    verdict(
        bad == 0,
        format!("200 instances, {checks} checks, {bad} violations"),
    )
}

fn shortest_paths(audits: &[BruteReport]) -> Verdict {
    let (checks, bad) = count_bad(audits, &["shortest paths"]);
    verdict(
        bad == 0,
        format!("{checks} graphs compared, {bad} violations"),
    )
}

/// Satisfiability by trying every assignment.
fn truth_table(vars: usize, clauses: &[Clause]) -> bool {
    (0u32..1 << vars).any(|bits| {
        let a: Vec<bool> = (0..vars).map(|v| bits >> v & 1 == 1).collect();
        clauses.iter().all(|&(x, y)| x.holds(&a) || y.holds(&a))
    })
}

fn consistency_machinery(audits: &[BruteReport]) -> Verdict {
    let (checks, bad) = count_bad(audits, &["true graph consistent", "almost consistent"]);
    let mut rng = gen::rng(505);
    let mut sat_bad = 0;
    for _ in 0..1000 {
        let vars = rng.gen_range(1..=16);
        let count = rng.gen_range(0..=3 * vars);
        let lit = |rng: &mut gen::InstanceRng| Lit {
            var: rng.gen_range(0..vars),
            positive: rng.gen_bool(0.5),
        };
        let clauses: Vec<Clause> = (0..count).map(|_| (lit(&mut rng), lit(&mut rng))).collect();
        let solved = solve_clauses(vars, &clauses);
        let valid = solved
            .as_ref()
            .is_none_or(|a| clauses.iter().all(|&(x, y)| x.holds(a) || y.holds(a)));
        if !valid || solved.is_some() != truth_table(vars, &clauses) {
            sat_bad += 1;
        }
    }
    verdict(
        bad == 0 && sat_bad == 0,
        format!("{checks} graph checks, {bad} violations; 1000 CNFs, {sat_bad} 2-SAT mismatches"),
    )
}

fn weighted_audits() -> Verdict {
    let mut rng = gen::rng(606);
    let (mut checks, mut bad, mut skipped) = (0, 0, 0);
    let mut faults = [(0usize, 0usize); 2];
    for idx in 0..200 {
        let (m1, m2) = audit_pair(&mut rng, idx, true);
        let n = m1.ground_size();
        let w = gen::weights(&mut rng, n, -3, 9);
        let sets = common_independent_sets(&m1, &m2).unwrap();
        let run = weighted_no_circuit_inclusion(&oracle(&m1, &m2), &w).unwrap();
        let mut maximal = Vec::new();
        for (k, &i) in run.levels.iter().enumerate() {
            let best = w_maximal_among(&sets, &w, k);
            if !best.contains(i) {
                skipped += 1;
            }
            maximal.extend(best.sets.iter().map(|&s| (k, s)));
        }
        for (k, i) in maximal {
            let name = format!("#{idx} k={k}");
            let options = AuditOptions {
                weights: Some(&w),
                ..AuditOptions::default()
            };
            for r in audit_graphs(&m1, &m2, i, &name, options).unwrap() {
                if [
                    "negative cycle",
                    "cheapest path",
                    "cycle partition",
                    "path partition",
                ]
                .contains(&r.quantity.as_str())
                {
                    checks += 1;
                    bad += usize::from(!r.agree);
                }
            }
            for (slot, fault) in [Fault::DropReferenceArcs, Fault::AddCandidateArcs]
                .into_iter()
                .enumerate()
            {
                let options = AuditOptions {
                    fault: Some(fault),
                    ..AuditOptions::default()
                };
                let reports = audit_graphs(&m1, &m2, i, &name, options).unwrap();
                let Some(state) = reports.iter().find(|r| r.quantity == "fault") else {
                    continue;
                };
                let path = reports
                    .iter()
                    .find(|r| r.quantity == "path partition")
                    .unwrap();
                let applied = state.brute == "applied";
                faults[slot].0 += usize::from(applied);
                // a fault must be flagged; an unapplied fault must not be
                if applied == path.agree {
                    faults[slot].1 += 1;
                }
            }
        }
    }
    let fault_errors = faults[0].1 + faults[1].1;
    verdict(
        bad == 0 && fault_errors == 0 && faults.iter().all(|f| f.0 > 0) && skipped == 0,
        format!(
            "{checks} checks, {bad} violations; faults injected {}+{}, {fault_errors} misjudged; {skipped} non-maximal levels",
            faults[0].0, faults[1].0
        ),
    )
}

/// Levels whose weight differs from the brute-force optimum of their size.
fn level_mismatches(sets: &[ElementSet], w: &WeightFn, run: &WeightedRun) -> usize {
    let opt = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut bad = usize::from(run.levels.len() != opt + 1);
    for (k, &l) in run.levels.iter().enumerate() {
        let best = w_maximal_among(sets, w, k).weight;
        if !sets.contains(&l) || l.len() != k || best != Some(w.total(l)) {
            bad += 1;
        }
    }
    bad
}

fn envelope_ratio(queries: u64, r: usize, n: usize) -> f64 {
    queries as f64 / ((r.max(1) as f64).powi(3) * (n * n) as f64)
}

fn no_circuit_inclusion_regime() -> Verdict {
    let mut rng = gen::rng(707);
    let (mut bad, mut c) = (0, 0.0f64);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let (m1, m2) = gen::no_circuit_inclusion_pair(&mut rng, n);
        let w = gen::weights(&mut rng, n, -3, 9);
        let sets = common_independent_sets(&m1, &m2).unwrap();
        match weighted_no_circuit_inclusion(&oracle(&m1, &m2), &w) {
            Ok(run) => {
                bad += level_mismatches(&sets, &w, &run);
                c = c.max(envelope_ratio(run.queries, run.levels.len() - 1, n));
            }
            Err(_) => bad += 1,
        }
    }
    verdict(
        bad == 0 && c <= ENVELOPE_C,
        format!(
            "300 instances, {bad} level mismatches, queries <= {c:.4} r^3 n^2 (C <= {ENVELOPE_C})"
        ),
    )
}

fn fpt_regime() -> Verdict {
    let mut rng = gen::rng(808);
    let (mut bad, mut over, mut most) = (0, 0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let gamma = rng.gen_range(1..=3);
        let (m1, m2, g) = gen::small_circuit_pair(&mut rng, n, gamma);
        let w = gen::weights(&mut rng, n, -3, 9);
        let sets = common_independent_sets(&m1, &m2).unwrap();
        match weighted_fpt_circuit(&oracle(&m1, &m2), &w, g) {
            Ok(run) => {
                bad += level_mismatches(&sets, &w, &run);
                over += usize::from(run.max_guesses > 1 << g);
                most = most.max(run.max_guesses);
            }
            Err(_) => bad += 1,
        }
    }
    verdict(
        bad == 0 && over == 0,
        format!("200 instances, gamma<=3, {bad} level mismatches, {over} steps over 2^gamma guesses (max {most})"),
    )
}

fn lexmax_and_approximation() -> Verdict {
    let mut rng = gen::rng(909);
    let (mut lex_bad, mut approx_bad) = (0, 0);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let (m1, m2) = gen::mixed_pair(&mut rng, n);
        let o = oracle(&m1, &m2);
        let ground = o.ground();
        let w = gen::weights(&mut rng, n, -2, 6);
        let lex = lexicographic_max(&o, &w).unwrap();
        let brute = brute_lexmax(&m1, &m2, &w).unwrap();
        if w.class_vector(ground, lex.set) != w.class_vector(ground, brute) {
            lex_bad += 1;
        }
        let positive = gen::weights(&mut rng, n, 1, 9);
        let approx = approx_max_weight(&o, &positive).unwrap();
        let (opt, _) = brute_max_weight(&m1, &m2, &positive).unwrap();
        if approx.weight < &approx.guarantee * &opt {
            approx_bad += 1;
        }
    }
    let crossed_ok = {
        let set = |e: &[usize]| ElementSet::from_elements(e.iter().copied());
        let m1 = Matroid::partition(4, vec![set(&[0, 1]), set(&[2, 3])], vec![1, 1]).unwrap();
        let m2 = Matroid::partition(4, vec![set(&[0, 2]), set(&[1, 3])], vec![1, 1]).unwrap();
        let w = WeightFn::from_integers(&[5, 4, 4, 1]);
        let approx = approx_max_weight(&oracle(&m1, &m2), &w).unwrap();
        let (opt, _) = brute_max_weight(&m1, &m2, &w).unwrap();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        approx.weight == q(6, 1) && opt == q(8, 1) && approx.guarantee == q(5, 8)
    };
    verdict(
        lex_bad == 0 && approx_bad == 0 && crossed_ok,
        format!(
            "300 instances, {lex_bad} lexmax mismatches, {approx_bad} bound violations; crossed fixture 6 vs 8 at 5/8: {}",
            if crossed_ok { "yes" } else { "no" }
        ),
    )
}

fn gadget_round_trip() -> Verdict {
    let cases = [
        ("vertex", ColoredGraph::new(1, vec![]).unwrap(), 4),
        ("edge", ColoredGraph::new(2, vec![(0, 1)]).unwrap(), 12),
        ("triangle", ColoredGraph::triangle(), 24),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (label, g, expected) in cases {
        let spec = GadgetSpec::new(&g).unwrap();
        let found = colorings_from_consistent_graphs(&spec).unwrap();
        let proper = g.proper_colorings();
        let counts_ok = found.len() == expected && found == proper && spec.unsettled().is_empty();
        let mut failed = 0;
        for coloring in &proper {
            let gi = build_gadget(&g.clone().with_coloring(coloring.clone()).unwrap()).unwrap();
            if !verify_gadget(&gi).unwrap().iter().all(|r| r.agree) {
                failed += 1;
            }
        }
        pass &= counts_ok && failed == 0;
        notes.push(format!(
            "{label} {}/{expected} situations, {failed}/{} instances failing",
            found.len(),
            proper.len()
        ));
    }
    verdict(pass, notes.join("; "))
}

fn run(number: usize, title: &str, limit: Duration, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let v = f();
    let elapsed = start.elapsed();
    let pass = v.pass && elapsed <= limit;
    println!(
        "criterion {number:>2} {}: {title}: {} [{:.2}s of {}s]",
        if pass { "PASS" } else { "FAIL" },
        v.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut all = true;
    all &= run(
        1,
        "cardinality correctness",
        secs(60),
        cardinality_correctness,
    );
    all &= run(2, "oracle-call envelope", secs(120), oracle_envelope);
    let mut audits = Vec::new();
    all &= run(3, "graph containments", secs(60), || {
        audits = cardinality_audits();
        containments(&audits)
    });
    all &= run(4, "shortest-path preservation", secs(60), || {
        shortest_paths(&audits)
    });
    all &= run(5, "consistency machinery", secs(60), || {
        consistency_machinery(&audits)
    });
    all &= run(6, "underestimation audits", secs(120), weighted_audits);
    all &= run(
        7,
        "no-circuit-inclusion regime",
        secs(120),
        no_circuit_inclusion_regime,
    );
    all &= run(8, "small-circuit regime", secs(120), fpt_regime);
    all &= run(
        9,
        "lexmax and approximation",
        secs(60),
        lexmax_and_approximation,
    );
    all &= run(
        10,
        "hardness gadget round trip",
        secs(60),
        gadget_round_trip,
    );
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILED" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
