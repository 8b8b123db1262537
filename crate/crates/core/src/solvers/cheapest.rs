//! Bellman-Ford over vertex costs: negative-cycle scan and shortest cheapest paths.

use super::cost::PathCost;
use crate::error::SolveError;
use crate::exchange::ExchangeGraph;
use crate::set::Element;

/// A vertex on a negative-cost cycle, if any. Arc `(u, v)` costs `c(v)`.
pub fn find_negative_cycle<C: PathCost>(g: &ExchangeGraph, costs: &[C]) -> Option<Element> {
    let n = g.ground_size();
    let arcs: Vec<(Element, Element)> = g.arcs().collect();
    let mut dist = vec![C::zero(); n];
    for _ in 0..n {
        let mut changed = false;
        for &(u, v) in &arcs {
            let cand = dist[u].plus(&costs[v]);
            if cand < dist[v] {
                dist[v] = cand;
                changed = true;
            }
        }
        if !changed {
            return None;
        }
    }
    // probe round
    arcs.iter()
        .find(|&&(u, v)| dist[u].plus(&costs[v]) < dist[v])
        .map(|&(_, v)| v)
}

/// Minimum-cost source-sink path, then fewest vertices, then lexicographically
/// smallest vertex sequence. Costs include both endpoints.
pub fn shortest_cheapest_path<C: PathCost>(
    g: &ExchangeGraph,
    costs: &[C],
) -> Result<Option<(Vec<Element>, C)>, SolveError> {
    if let Some(v) = find_negative_cycle(g, costs) {
        return Err(SolveError::NegativeCycle(v));
    }
    let n = g.ground_size();
    // label[v] = best (cost, vertex count) of a path from v to some sink
    let mut label: Vec<Option<(C, usize)>> = vec![None; n];
    for t in g.sinks() {
        label[t] = Some((costs[t].clone(), 1));
    }
    let arcs: Vec<(Element, Element)> = g.arcs().collect();
    for _ in 0..=n {
        let mut changed = false;
        for &(u, v) in &arcs {
            let cand = match &label[v] {
                Some((c, len)) => (costs[u].plus(c), len + 1),
                None => continue,
            };
            if label[u].as_ref().is_none_or(|cur| cand < *cur) {
                label[u] = Some(cand);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let start = g.sources().iter().filter(|&s| label[s].is_some()).fold(
        None,
        |best: Option<Element>, s| match best {
            Some(b) if label[b] <= label[s] => Some(b),
            _ => Some(s),
        },
    );
    let mut u = match start {
        Some(s) => s,
        None => return Ok(None),
    };
    let total = label[u].clone().unwrap().0;
    let mut path = vec![u];
    loop {
        let here = label[u].clone().unwrap();
        if g.sinks().contains(u) && here == (costs[u].clone(), 1) {
            break;
        }
        u = g
            .successors(u)
            .iter()
            .find(|&v| {
                label[v]
                    .as_ref()
                    .is_some_and(|(c, len)| (costs[u].plus(c), len + 1) == here)
            })
            .expect("labels are realized by some successor");
        path.push(u);
    }
    Ok(Some((path, total)))
}
