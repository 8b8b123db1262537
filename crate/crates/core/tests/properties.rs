use proptest::prelude::*;

use minrank::consistency::{solve_clauses, Clause, Lit};
use minrank::gen;
use minrank::instance::{InstanceFile, MatroidSpec, SCHEMA_VERSION};
use minrank::solvers::{max_cardinality, max_cardinality_with, StarPairChoice};
use minrank::verify::{brute_max_common, has_perfect_matching, perfect_matchings};
use minrank::{ElementSet, MinRankOracle};

fn clauses(vars: usize) -> impl Strategy<Value = Vec<Clause>> {
    let lit = (0..vars, any::<bool>()).prop_map(|(var, positive)| Lit { var, positive });
    prop::collection::vec((lit.clone(), lit), 0..=3 * vars)
}

fn satisfiable(vars: usize, cs: &[Clause]) -> bool {
    (0u32..1 << vars).any(|bits| {
        let a: Vec<bool> = (0..vars).map(|v| bits >> v & 1 == 1).collect();
        cs.iter().all(|&(x, y)| x.holds(&a) || y.holds(&a))
    })
}

/// Perfect matchings counted by a dynamic program over subsets of `right`.
fn matching_count(edge: &[Vec<bool>]) -> usize {
    let k = edge.len();
    let mut ways = vec![0usize; 1 << k];
    ways[0] = 1;
    for mask in 0usize..1 << k {
        let row = mask.count_ones() as usize;
        if row == k || ways[mask] == 0 {
            continue;
        }
        for col in 0..k {
            if mask >> col & 1 == 0 && edge[row][col] {
                ways[mask | 1 << col] += ways[mask];
            }
        }
    }
    ways[(1 << k) - 1]
}

proptest! {
    #[test]
    fn two_sat_matches_truth_table((vars, cs) in (1usize..=10).prop_flat_map(|v| (Just(v), clauses(v)))) {
        let solved = solve_clauses(vars, &cs);
        prop_assert_eq!(solved.is_some(), satisfiable(vars, &cs));
        if let Some(a) = solved {
            prop_assert!(cs.iter().all(|&(x, y)| x.holds(&a) || y.holds(&a)));
        }
    }

    #[test]
    fn perfect_matching_counts(k in 0usize..=5, bits in any::<u32>()) {
        let edge: Vec<Vec<bool>> = (0..k)
            .map(|r| (0..k).map(|c| bits >> (r * 5 + c) & 1 == 1).collect())
            .collect();
        let left: Vec<usize> = (0..k).collect();
        let right: Vec<usize> = (10..10 + k).collect();
        let l = ElementSet::from_elements(left.iter().copied());
        let r = ElementSet::from_elements(right.iter().copied());
        let adj = |a: usize, b: usize| edge[a][b - 10];
        let expected = matching_count(&edge);
        let found = perfect_matchings(l, r, adj);
        prop_assert_eq!(found.len(), expected);
        prop_assert_eq!(has_perfect_matching(l, r, adj), expected > 0);
        for m in &found {
            prop_assert!(m.iter().all(|&(a, b)| adj(a, b)));
        }
    }

    #[test]
    fn star_pair_choice_does_not_change_the_optimum(seed in any::<u64>(), n in 1usize..=8, k in 0usize..6) {
        let mut rng = gen::rng(seed);
        let (m1, m2) = gen::mixed_pair(&mut rng, n);
        let (best, _) = brute_max_common(&m1, &m2).unwrap();
        let o = MinRankOracle::new(m1, m2).unwrap();
        let first = max_cardinality(&o).unwrap();
        let other = max_cardinality_with(&o, StarPairChoice::Nth(k)).unwrap();
        prop_assert_eq!(first.set.len(), best);
        prop_assert_eq!(other.set.len(), best);
        prop_assert!(o.is_common_independent(other.set).unwrap());
        let z = other.certificate;
        let e = o.ground();
        prop_assert_eq!(o.rmin(z).unwrap() + o.rmin(e.difference(z)).unwrap(), best);
    }

    #[test]
    fn rmin_is_monotone_and_one_third_submodular(seed in any::<u64>(), n in 1usize..=7, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let (m1, m2) = gen::mixed_pair(&mut rng, n);
        let o = MinRankOracle::new(m1, m2).unwrap();
        let full = o.ground().bits();
        let (x, y, z) = (
            ElementSet::from_bits(a & full),
            ElementSet::from_bits(b & full),
            ElementSet::from_bits(c & full),
        );
        let r = |s: ElementSet| o.rmin(s).unwrap();
        prop_assert!(r(x.intersection(y)) <= r(x));
        prop_assert!(r(x) <= r(x.union(y)));
        let sub = |p: ElementSet, q: ElementSet| r(p) + r(q) >= r(p.union(q)) + r(p.intersection(q));
        if x != y && y != z && x != z {
            prop_assert!(sub(x, y) || sub(y, z) || sub(x, z));
        }
    }

    #[test]
    fn instance_files_round_trip(seed in any::<u64>(), n in 0usize..=7) {
        let mut rng = gen::rng(seed);
        let (m1, m2) = gen::mixed_pair(&mut rng, n);
        let w = gen::weights(&mut rng, n, -5, 5);
        let file = InstanceFile {
            schema: SCHEMA_VERSION,
            n,
            names: None,
            weights: Some(w.values().iter().map(minrank::weight::format_rational).collect()),
            first: MatroidSpec::describe(&m1),
            second: MatroidSpec::describe(&m2),
        };
        let text = file.emit();
        let parsed = InstanceFile::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(parsed.emit(), text);
        let inst = parsed.load().unwrap();
        for s in ElementSet::full(n).subsets() {
            prop_assert_eq!(inst.first.rank(s), m1.rank(s));
            prop_assert_eq!(inst.second.rank(s), m2.rank(s));
        }
        prop_assert_eq!(inst.weights, w);
    }
}

/// Sources of the solver side, without their unit tests.
const SOLVER_SOURCES: &[(&str, &str)] = &[
    (
        "solvers/cardinality.rs",
        include_str!("../src/solvers/cardinality.rs"),
    ),
    (
        "solvers/cheapest.rs",
        include_str!("../src/solvers/cheapest.rs"),
    ),
    ("solvers/cost.rs", include_str!("../src/solvers/cost.rs")),
    ("solvers/fpt.rs", include_str!("../src/solvers/fpt.rs")),
    (
        "solvers/lexmax.rs",
        include_str!("../src/solvers/lexmax.rs"),
    ),
    (
        "solvers/weighted.rs",
        include_str!("../src/solvers/weighted.rs"),
    ),
    (
        "consistency/almost.rs",
        include_str!("../src/consistency/almost.rs"),
    ),
    (
        "consistency/cnf.rs",
        include_str!("../src/consistency/cnf.rs"),
    ),
    (
        "consistency/estimate.rs",
        include_str!("../src/consistency/estimate.rs"),
    ),
    (
        "consistency/le_pairs.rs",
        include_str!("../src/consistency/le_pairs.rs"),
    ),
    (
        "consistency/twosat.rs",
        include_str!("../src/consistency/twosat.rs"),
    ),
    (
        "exchange/modified.rs",
        include_str!("../src/exchange/modified.rs"),
    ),
    (
        "exchange/graph.rs",
        include_str!("../src/exchange/graph.rs"),
    ),
];

#[test]
fn solvers_never_see_the_hidden_matroids() {
    let forbidden = [
        "hidden(",
        "rank_of(",
        "is_independent(",
        "Matroid",
        "build_true_graph",
        "matroid::",
    ];
    let mut hits = Vec::new();
    for (path, text) in SOLVER_SOURCES {
        let body = text.split("#[cfg(test)]").next().unwrap();
        for (line, l) in body.lines().enumerate() {
            for word in forbidden {
                if l.contains(word) {
                    hits.push(format!("{path}:{}: {word}", line + 1));
                }
            }
        }
    }
    assert!(hits.is_empty(), "{hits:#?}");
}
