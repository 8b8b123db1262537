//! Graphs computable from `r_min` alone: the modified graph for a fixed
//! probe pair and the intersection over all admissible probes.

use super::graph::{ArcLabel, ExchangeGraph};
use crate::oracle::QueryCache;
use crate::set::{Element, ElementSet};

/// Probe pair with `r_min(I+s) = r_min(I+t) = |I|` and `r_min(I+s+t) = |I|+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarPair {
    pub s: Element,
    pub t: Element,
}

/// Outcome of the opening pair scan of an augmentation step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarStep {
    /// `r_min(I+s+t) = |I|` for all `s, t`: `I` is maximum and `Z = E` certifies it.
    Exhausted,
    /// `I + x` is common independent.
    DirectAugment(Element),
    Pair(StarPair),
}

/// All single and pair extensions of `I` evaluated once.
#[derive(Clone, Debug)]
pub struct PairScan {
    pub independent: ElementSet,
    /// Elements `x` with `r_min(I+x) = |I|+1`.
    pub addable: ElementSet,
    /// Every admissible probe pair with `s < t`, lexicographically sorted.
    pub star_pairs: Vec<StarPair>,
    /// True when no pair (or single element) raises `r_min` above `|I|`.
    pub exhausted: bool,
}

pub fn scan_pairs(cache: &QueryCache<'_>, i: ElementSet) -> PairScan {
    let k = i.len();
    let outside = cache.ground().difference(i);
    let mut addable = ElementSet::EMPTY;
    let mut exhausted = true;
    for x in outside {
        if cache.rmin(i.with(x)) > k {
            addable = addable.with(x);
            exhausted = false;
        }
    }
    let mut star_pairs = Vec::new();
    for s in outside {
        for t in outside.iter().filter(|&t| t > s) {
            if cache.rmin(i.with(s).with(t)) > k {
                exhausted = false;
                if !addable.contains(s) && !addable.contains(t) {
                    star_pairs.push(StarPair { s, t });
                }
            }
        }
    }
    PairScan {
        independent: i,
        addable,
        star_pairs,
        exhausted,
    }
}

impl PairScan {
    /// The cardinality algorithm's branch order: exhausted, addable, pair.
    pub fn step(&self) -> StarStep {
        if self.exhausted {
            StarStep::Exhausted
        } else if let Some(x) = self.addable.first() {
            StarStep::DirectAugment(x)
        } else {
            StarStep::Pair(self.star_pairs[0])
        }
    }
}

pub fn find_star_pair(cache: &QueryCache<'_>, i: ElementSet) -> StarStep {
    scan_pairs(cache, i).step()
}

/// `S* = { s : r_min(I+s+t*) = |I|+1 }` and `T* = { t : r_min(I+s*+t) = |I|+1 }`.
pub fn star_terminals(
    cache: &QueryCache<'_>,
    i: ElementSet,
    sp: StarPair,
) -> (ElementSet, ElementSet) {
    let k = i.len();
    let outside = cache.ground().difference(i);
    let sources = outside
        .iter()
        .filter(|&s| cache.rmin(i.with(s).with(sp.t)) == k + 1)
        .collect();
    let sinks = outside
        .iter()
        .filter(|&t| cache.rmin(i.with(sp.s).with(t)) == k + 1)
        .collect();
    (sources, sinks)
}

/// Arcs shared by every modified graph: those touching `S*` or `T*`.
fn terminal_arcs(cache: &QueryCache<'_>, g: &mut ExchangeGraph) {
    let i = g.independent();
    let k = i.len();
    let (sources, sinks) = (g.sources(), g.sinks());
    for y in i {
        for s in sources {
            g.add_arc(y, s, ArcLabel::Sure);
        }
        for t in sinks {
            g.add_arc(t, y, ArcLabel::Sure);
        }
        for t in sinks.difference(sources) {
            if cache.rmin(i.with(t).without(y)) == k {
                g.add_arc(y, t, ArcLabel::Sure);
            }
        }
        for s in sources.difference(sinks) {
            if cache.rmin(i.with(s).without(y)) == k {
                g.add_arc(s, y, ArcLabel::Sure);
            }
        }
    }
}

/// The modified exchangeability graph for one probe pair.
pub fn build_modified_graph(cache: &QueryCache<'_>, i: ElementSet, sp: StarPair) -> ExchangeGraph {
    let (sources, sinks) = star_terminals(cache, i, sp);
    let mut g = ExchangeGraph::new(cache.ground_size_hint(), i, sources, sinks);
    terminal_arcs(cache, &mut g);
    let k = i.len();
    let rest = g.rest(cache.ground());
    for y in i {
        for x in rest {
            if cache.rmin(i.with(sp.t).with(x).without(y)) == k {
                g.add_arc(y, x, ArcLabel::Suspicious);
            }
            if cache.rmin(i.with(sp.s).with(x).without(y)) == k {
                g.add_arc(x, y, ArcLabel::Suspicious);
            }
        }
    }
    g
}

/// Intersection of the modified graphs over all sinks (first layer) and all
/// sources (second layer), with sure/suspicious labels.
pub fn intersect_modified(cache: &QueryCache<'_>, i: ElementSet, sp: StarPair) -> ExchangeGraph {
    let (sources, sinks) = star_terminals(cache, i, sp);
    let mut g = ExchangeGraph::new(cache.ground_size_hint(), i, sources, sinks);
    terminal_arcs(cache, &mut g);
    let k = i.len();
    let rest = g.rest(cache.ground());
    let only_sinks = sinks.difference(sources);
    let only_sources = sources.difference(sinks);
    for y in i {
        // (y, t) missing for some sink makes every surviving (y, x) certain
        let first_sure = only_sinks.iter().any(|t| !g.has_arc(y, t));
        let second_sure = only_sources.iter().any(|s| !g.has_arc(s, y));
        for x in rest {
            if only_sinks
                .iter()
                .all(|t| cache.rmin(i.with(t).with(x).without(y)) == k)
            {
                g.add_arc(y, x, label(first_sure));
            }
            if only_sources
                .iter()
                .all(|s| cache.rmin(i.with(s).with(x).without(y)) == k)
            {
                g.add_arc(x, y, label(second_sure));
            }
        }
    }
    g
}

fn label(sure: bool) -> ArcLabel {
    if sure {
        ArcLabel::Sure
    } else {
        ArcLabel::Suspicious
    }
}

impl QueryCache<'_> {
    /// Width of the vertex arrays (the oracle's full ground set).
    pub(crate) fn ground_size_hint(&self) -> usize {
        self.oracle().ground_size()
    }
}
