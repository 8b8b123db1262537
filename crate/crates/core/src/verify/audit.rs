//! Checks every inferred graph at one `I` against the true exchangeability
//! graph. Needs both matroids.

use std::fmt;

use num_rational::BigRational;

use super::matching::has_perfect_matching;
use crate::consistency::{almost_consistent_graph, almost_violation, check_all, Estimate};
use crate::error::SolveError;
use crate::exchange::{
    build_modified_graph, build_true_graph, intersect_modified, scan_pairs, star_terminals,
    ArcLabel, ExchangeGraph,
};
use crate::matroid::Matroid;
use crate::oracle::{MinRankOracle, QueryCache};
use crate::set::{Element, ElementSet};
use crate::solvers::{find_negative_cycle, shortest_cheapest_path, CostModel, WeightCost};
use crate::weight::WeightFn;

/// One brute-force comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteReport {
    pub instance: String,
    pub quantity: String,
    pub brute: String,
    pub solver: String,
    pub agree: bool,
    pub witness: Vec<ElementSet>,
}

impl BruteReport {
    pub fn new(
        instance: impl Into<String>,
        quantity: impl Into<String>,
        brute: impl ToString,
        solver: impl ToString,
        witness: Vec<ElementSet>,
    ) -> Self {
        let (brute, solver) = (brute.to_string(), solver.to_string());
        BruteReport {
            instance: instance.into(),
            quantity: quantity.into(),
            agree: brute == solver,
            brute,
            solver,
            witness,
        }
    }

    /// Expects zero violations; the witnesses are the violations.
    fn violations(instance: &str, quantity: &str, witness: Vec<ElementSet>) -> Self {
        BruteReport::new(instance, quantity, 0, witness.len(), witness)
    }
}

impl fmt::Display for BruteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.agree { "ok" } else { "MISMATCH" };
        write!(
            f,
            "{} {}: brute={} solver={} {verdict}",
            self.instance, self.quantity, self.brute, self.solver
        )?;
        for w in &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Deliberate corruption used to confirm that the path check can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Remove the reference arcs leaving `I` inside each audited path.
    DropReferenceArcs,
    /// Add `(s, y)` and `(y, t)` to the candidate graph for the first triple
    /// where one of them is not a true arc.
    AddCandidateArcs,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AuditOptions<'w> {
    /// Enables the cost checks; meant for `w`-maximal `I`.
    pub weights: Option<&'w WeightFn>,
    pub fault: Option<Fault>,
    /// Cap on enumerated cycles and paths.
    pub limit: usize,
}

pub const DEFAULT_LIMIT: usize = 4096;

/// Simple directed cycles, each reported once from its smallest vertex.
pub fn simple_cycles(g: &ExchangeGraph, limit: usize) -> Vec<Vec<Element>> {
    let mut out = Vec::new();
    for start in 0..g.ground_size() {
        let mut path = vec![start];
        cycles_from(g, start, &mut path, &mut out, limit);
    }
    out
}

fn cycles_from(
    g: &ExchangeGraph,
    start: Element,
    path: &mut Vec<Element>,
    out: &mut Vec<Vec<Element>>,
    limit: usize,
) {
    let u = *path.last().unwrap();
    for v in g.successors(u) {
        if out.len() >= limit {
            return;
        }
        if v == start {
            out.push(path.clone());
        } else if v > start && !path.contains(&v) {
            path.push(v);
            cycles_from(g, start, path, out, limit);
            path.pop();
        }
    }
}

/// Simple source-sink paths, including single vertices in both.
pub fn simple_paths(g: &ExchangeGraph, limit: usize) -> Vec<Vec<Element>> {
    let mut out = Vec::new();
    for s in g.sources() {
        let mut path = vec![s];
        paths_from(g, &mut path, &mut out, limit);
    }
    out
}

fn paths_from(
    g: &ExchangeGraph,
    path: &mut Vec<Element>,
    out: &mut Vec<Vec<Element>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let u = *path.last().unwrap();
    if g.sinks().contains(u) {
        out.push(path.clone());
    }
    for v in g.successors(u) {
        if !path.contains(&v) {
            path.push(v);
            paths_from(g, path, out, limit);
            path.pop();
        }
    }
}

/// Whether `vertices` splits into cycles of `reference`: perfect matchings of
/// its `I` part against its outside part in both layers.
pub fn partitions_into_cycles(reference: &ExchangeGraph, vertices: ElementSet) -> bool {
    let i = reference.independent();
    let (inside, outside) = (vertices.intersection(i), vertices.difference(i));
    has_perfect_matching(inside, outside, |y, x| reference.has_arc(y, x))
        && has_perfect_matching(inside, outside, |y, x| reference.has_arc(x, y))
}

/// Whether an `s`-`t` path's vertex set splits into an `s`-`t` path and
/// cycles of `reference`: first-layer matching on `P - s`, second-layer
/// matching on `P - t`.
pub fn partitions_into_path_and_cycles(reference: &ExchangeGraph, path: &[Element]) -> bool {
    let i = reference.independent();
    let vertices: ElementSet = path.iter().copied().collect();
    let (s, t) = (path[0], *path.last().unwrap());
    let inside = vertices.intersection(i);
    let outside = vertices.difference(i);
    has_perfect_matching(inside, outside.without(s), |y, x| reference.has_arc(y, x))
        && has_perfect_matching(inside, outside.without(t), |y, x| reference.has_arc(x, y))
}

/// The true graph oriented so its sources are `sources`, if either
/// orientation does.
fn oriented_true_graph(
    m1: &Matroid,
    m2: &Matroid,
    i: ElementSet,
    sources: ElementSet,
) -> Result<ExchangeGraph, SolveError> {
    let g = build_true_graph(m1, m2, i)?;
    if g.sources() == sources {
        return Ok(g);
    }
    Ok(build_true_graph(m2, m1, i)?)
}

fn missing_arcs(sub: &ExchangeGraph, sup: &ExchangeGraph) -> Vec<ElementSet> {
    sub.arcs()
        .filter(|&(u, v)| !sup.has_arc(u, v))
        .map(|(u, v)| ElementSet::from_elements([u, v]))
        .collect()
}

/// Fake arcs touching a terminal, or lacking the shortcut arcs that make
/// them harmless. `all_terminals` demands the shortcut to every sink/source
/// rather than to the probe pair only.
fn fake_arc_violations(
    g: &ExchangeGraph,
    truth: &ExchangeGraph,
    probe: (Element, Element),
    all_terminals: bool,
) -> Vec<ElementSet> {
    let i = truth.independent();
    let terminals = truth.sources().union(truth.sinks());
    let (sinks, sources) = if all_terminals {
        (truth.sinks(), truth.sources())
    } else {
        (
            ElementSet::singleton(probe.1),
            ElementSet::singleton(probe.0),
        )
    };
    g.arcs()
        .filter(|&(u, v)| !truth.has_arc(u, v))
        .filter(|&(u, v)| {
            if terminals.contains(u) || terminals.contains(v) {
                return true;
            }
            if i.contains(u) {
                !sinks.iter().all(|t| truth.has_arc(u, t))
            } else {
                !sources.iter().all(|s| truth.has_arc(s, v))
            }
        })
        .map(|(u, v)| ElementSet::from_elements([u, v]))
        .collect()
}

fn path_string(paths: &[Vec<Element>]) -> String {
    let mut p: Vec<String> = paths
        .iter()
        .map(|p| {
            p.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("-")
        })
        .collect();
    p.sort();
    format!("[{}]", p.join(" "))
}

/// All graph checks at a common independent `I`. Returns a single
/// `star pair` report when `I` has no admissible probe pair.
pub fn audit_graphs(
    m1: &Matroid,
    m2: &Matroid,
    i: ElementSet,
    instance: &str,
    options: AuditOptions<'_>,
) -> Result<Vec<BruteReport>, SolveError> {
    let limit = if options.limit == 0 {
        DEFAULT_LIMIT
    } else {
        options.limit
    };
    let oracle = MinRankOracle::new(m1.clone(), m2.clone())?;
    if !oracle.is_common_independent(i)? {
        return Err(SolveError::NotCommonIndependent(i));
    }
    let cache = QueryCache::new(&oracle, oracle.ground());
    let scan = scan_pairs(&cache, i);
    let Some(&sp) = scan.star_pairs.first() else {
        return Ok(vec![BruteReport::new(
            instance,
            "star pair",
            "none",
            "none",
            Vec::new(),
        )]);
    };
    let mut reports = Vec::new();
    let (sources, sinks) = star_terminals(&cache, i, sp);
    let truth = oriented_true_graph(m1, m2, i, sources)?;
    reports.push(BruteReport::new(
        instance,
        "terminals",
        format!("{} {}", truth.sources(), truth.sinks()),
        format!("{sources} {sinks}"),
        Vec::new(),
    ));

    let modified = build_modified_graph(&cache, i, sp);
    let intersected = intersect_modified(&cache, i, sp);
    reports.push(BruteReport::violations(
        instance,
        "modified contains true",
        missing_arcs(&truth, &modified),
    ));
    reports.push(BruteReport::violations(
        instance,
        "modified fake arcs",
        fake_arc_violations(&modified, &truth, (sp.s, sp.t), false),
    ));
    reports.push(BruteReport::violations(
        instance,
        "intersected contains true",
        missing_arcs(&truth, &intersected),
    ));
    reports.push(BruteReport::violations(
        instance,
        "intersected within modified",
        missing_arcs(&intersected, &modified),
    ));
    reports.push(BruteReport::violations(
        instance,
        "intersected fake arcs",
        fake_arc_violations(&intersected, &truth, (sp.s, sp.t), true),
    ));
    let false_sure: Vec<ElementSet> = intersected
        .arcs()
        .filter(|&(u, v)| intersected.label(u, v) == Some(ArcLabel::Sure) && !truth.has_arc(u, v))
        .map(|(u, v)| ElementSet::from_elements([u, v]))
        .collect();
    reports.push(BruteReport::violations(
        instance,
        "sure arcs true",
        false_sure,
    ));
    reports.push(BruteReport::new(
        instance,
        "shortest paths",
        path_string(&truth.all_shortest_paths()),
        path_string(&modified.all_shortest_paths()),
        Vec::new(),
    ));

    let almost = almost_consistent_graph(&cache, i, sp)?;
    let truth_estimate = check_all(&truth, &almost.table);
    reports.push(BruteReport::new(
        instance,
        "true graph consistent",
        format!("{:?}", Estimate::Consistent),
        format!("{truth_estimate:?}"),
        Vec::new(),
    ));
    let violation = almost_violation(&almost.graph, &almost.intersected, &almost.table)?;
    reports.push(BruteReport::new(
        instance,
        "almost consistent",
        "none",
        violation.map_or("none".to_string(), |v| v.to_string()),
        Vec::new(),
    ));

    let mut candidate = almost.graph.clone();
    if let Some(fault) = options.fault {
        let applied = match fault {
            Fault::AddCandidateArcs => {
                let triple = candidate.sources().iter().find_map(|s| {
                    candidate.sinks().iter().filter(|&t| t != s).find_map(|t| {
                        i.iter()
                            .find(|&y| !truth.has_arc(s, y) || !truth.has_arc(y, t))
                            .map(|y| (s, y, t))
                    })
                });
                if let Some((s, y, t)) = triple {
                    candidate.add_arc(s, y, ArcLabel::Suspicious);
                    candidate.add_arc(y, t, ArcLabel::Suspicious);
                }
                triple.is_some()
            }
            Fault::DropReferenceArcs => simple_paths(&candidate, limit)
                .iter()
                .any(|p| p.iter().any(|&e| i.contains(e))),
        };
        let state = if applied { "applied" } else { "skipped" };
        reports.push(BruteReport::new(
            instance,
            "fault",
            state,
            state,
            Vec::new(),
        ));
    }

    let bad_cycles: Vec<ElementSet> = simple_cycles(&candidate, limit)
        .into_iter()
        .map(|c| c.into_iter().collect::<ElementSet>())
        .filter(|&c| !partitions_into_cycles(&truth, c))
        .collect();
    reports.push(BruteReport::violations(
        instance,
        "cycle partition",
        bad_cycles,
    ));

    let bad_paths: Vec<ElementSet> = simple_paths(&candidate, limit)
        .into_iter()
        .filter(|p| {
            let mut reference = truth.clone();
            if options.fault == Some(Fault::DropReferenceArcs) {
                let vertices: ElementSet = p.iter().copied().collect();
                for y in vertices.intersection(i) {
                    for x in vertices.difference(i) {
                        reference.remove_arc(y, x);
                    }
                }
            }
            !partitions_into_path_and_cycles(&reference, p)
        })
        .map(|p| p.into_iter().collect())
        .collect();
    reports.push(BruteReport::violations(
        instance,
        "path partition",
        bad_paths,
    ));

    if let Some(w) = options.weights {
        let costs = WeightCost(w).vertex_costs(oracle.ground_size(), i);
        let cycle = find_negative_cycle(&almost.graph, &costs);
        reports.push(BruteReport::new(
            instance,
            "negative cycle",
            "none",
            cycle.map_or("none".to_string(), |v| v.to_string()),
            Vec::new(),
        ));
        if cycle.is_none() {
            let show = |r: Option<(Vec<Element>, BigRational)>| match r {
                Some((p, c)) => format!("{} {}", c, p.len()),
                None => "none".to_string(),
            };
            reports.push(BruteReport::new(
                instance,
                "cheapest path",
                show(shortest_cheapest_path(&truth, &costs)?),
                show(shortest_cheapest_path(&almost.graph, &costs)?),
                Vec::new(),
            ));
        }
    }
    Ok(reports)
}
