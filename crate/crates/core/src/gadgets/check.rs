//! Exact-rank checks of a realized gadget instance.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::prescribe::Origin;
use super::realize::GadgetInstance;
use crate::consistency::inconsistent_pairs;
use crate::error::MatroidError;
use crate::exchange::build_true_graph;
use crate::matroid::RationalMatrix;
use crate::set::ElementSet;
use crate::verify::BruteReport;

/// Recomputes every prescribed value from the two matrices, one report per
/// origin class, then checks the prime minors and the true graph.
pub fn verify_gadget(gi: &GadgetInstance) -> Result<Vec<BruteReport>, MatroidError> {
    let name = gadget_name(gi);
    let (m1, m2) = gi.matroids()?;
    let rmin = |x: ElementSet| m1.rank_of(x).min(m2.rank_of(x));
    let mut classes: BTreeMap<String, (usize, Vec<ElementSet>)> = BTreeMap::new();
    for p in gi.spec().prescriptions() {
        let class = match p.origin {
            Origin::Vertex(_) => "vertex",
            Origin::Edge(_) => "edge",
            Origin::Crossing(_) => "crossing",
            Origin::Terminal => "terminal",
            Origin::Default => "default",
        };
        let entry = classes.entry(class.to_string()).or_default();
        entry.0 += 1;
        if rmin(p.set) != p.value {
            entry.1.push(p.set);
        }
    }
    let mut out: Vec<BruteReport> = classes
        .into_iter()
        .map(|(class, (count, bad))| {
            BruteReport::new(
                name.clone(),
                format!("{class} values ({count})"),
                0,
                bad.len(),
                bad,
            )
        })
        .collect();
    let singular = singular_prime_minors(gi.first_matrix())
        .into_iter()
        .chain(singular_prime_minors(gi.second_matrix()))
        .collect::<Vec<_>>();
    out.push(BruteReport::new(
        name.clone(),
        "singular prime minors",
        0,
        singular.len(),
        singular,
    ));
    let i = gi.spec().independent();
    let g = build_true_graph(&m1, &m2, i)?;
    let l = gi.spec().layout();
    let terminals_ok = g.sources() == ElementSet::singleton(l.source())
        && g.sinks() == ElementSet::singleton(l.sink());
    out.push(BruteReport::new(
        name.clone(),
        "terminals are {s} and {t}",
        true,
        terminals_ok,
        vec![g.sources(), g.sinks()],
    ));
    let bad: Vec<ElementSet> = inconsistent_pairs(&g, gi.spec().table())
        .into_iter()
        .flat_map(|obs| [obs.x, obs.y])
        .collect();
    out.push(BruteReport::new(
        name,
        "true graph inconsistencies",
        0,
        bad.len() / 2,
        bad,
    ));
    Ok(out)
}

fn gadget_name(gi: &GadgetInstance) -> String {
    let colors: Vec<String> = gi.coloring().iter().map(|c| c.to_string()).collect();
    format!(
        "gadget[V={},F={},colors={}]",
        gi.spec().graph().vertices(),
        gi.spec().graph().edges().len(),
        colors.join("")
    )
}

/// 2x2 minors with a nonzero diagonal or antidiagonal pair that vanish,
/// each reported as the row-index set and the column set.
pub fn singular_prime_minors(z: &RationalMatrix) -> Vec<ElementSet> {
    let mut out = Vec::new();
    let rows = z.row_count();
    let cols = z.column_count();
    for r1 in 0..rows {
        for r2 in r1 + 1..rows {
            for c1 in 0..cols {
                for c2 in c1 + 1..cols {
                    let (a, b) = (z.entry(r1, c1), z.entry(r1, c2));
                    let (c, d) = (z.entry(r2, c1), z.entry(r2, c2));
                    let diagonal = !a.is_zero() && !d.is_zero();
                    let anti = !b.is_zero() && !c.is_zero();
                    if (diagonal || anti) && (a * d - b * c).is_zero() {
                        out.push(ElementSet::from_elements([r1, r2]));
                        out.push(ElementSet::from_elements([c1, c2]));
                    }
                }
            }
        }
    }
    out
}
