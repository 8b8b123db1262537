use std::collections::VecDeque;

use crate::error::SolveError;
use crate::set::{Element, ElementSet};

/// Directed bipartite graph on `(E \ I, I)`.
///
/// Arcs leaving `I` (`(y, x)`, `y` in `I`) form the first layer; arcs entering
/// `I` (`(x, y)`) the second. Each arc carries a sure/suspicious flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeGraph {
    n: usize,
    independent: ElementSet,
    sources: ElementSet,
    sinks: ElementSet,
    out: Vec<ElementSet>,
    sure: Vec<ElementSet>,
}

/// Whether an arc's membership in the true graph is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcLabel {
    Sure,
    Suspicious,
}

impl ExchangeGraph {
    pub fn new(n: usize, independent: ElementSet, sources: ElementSet, sinks: ElementSet) -> Self {
        debug_assert!(sources.is_disjoint(independent) && sinks.is_disjoint(independent));
        ExchangeGraph {
            n,
            independent,
            sources,
            sinks,
            out: vec![ElementSet::EMPTY; n],
            sure: vec![ElementSet::EMPTY; n],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn independent(&self) -> ElementSet {
        self.independent
    }

    pub fn sources(&self) -> ElementSet {
        self.sources
    }

    pub fn sinks(&self) -> ElementSet {
        self.sinks
    }

    /// Elements outside `I`, sources and sinks.
    pub fn rest(&self, ground: ElementSet) -> ElementSet {
        ground
            .difference(self.independent)
            .difference(self.sources)
            .difference(self.sinks)
    }

    /// Adds arc `(u, v)`; exactly one endpoint must lie in `I`.
    pub fn add_arc(&mut self, u: Element, v: Element, label: ArcLabel) {
        debug_assert!(self.independent.contains(u) != self.independent.contains(v));
        self.out[u] = self.out[u].with(v);
        self.sure[u] = match label {
            ArcLabel::Sure => self.sure[u].with(v),
            ArcLabel::Suspicious => self.sure[u].without(v),
        };
    }

    pub fn remove_arc(&mut self, u: Element, v: Element) {
        self.out[u] = self.out[u].without(v);
        self.sure[u] = self.sure[u].without(v);
    }

    pub fn has_arc(&self, u: Element, v: Element) -> bool {
        self.out[u].contains(v)
    }

    pub fn label(&self, u: Element, v: Element) -> Option<ArcLabel> {
        if !self.has_arc(u, v) {
            None
        } else if self.sure[u].contains(v) {
            Some(ArcLabel::Sure)
        } else {
            Some(ArcLabel::Suspicious)
        }
    }

    pub fn successors(&self, u: Element) -> ElementSet {
        self.out[u]
    }

    pub fn predecessors(&self, v: Element) -> ElementSet {
        (0..self.n).filter(|&u| self.out[u].contains(v)).collect()
    }

    /// All arcs in `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    /// Arcs `(y, x)` leaving `I`.
    pub fn first_layer(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.arcs()
            .filter(move |&(u, _)| self.independent.contains(u))
    }

    /// Arcs `(x, y)` entering `I`.
    pub fn second_layer(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.arcs()
            .filter(move |&(u, _)| !self.independent.contains(u))
    }

    pub fn suspicious_arcs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.arcs().filter(move |&(u, v)| !self.sure[u].contains(v))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Same vertex partition, no arcs.
    pub fn without_arcs(&self) -> Self {
        ExchangeGraph::new(self.n, self.independent, self.sources, self.sinks)
    }

    /// Arc sets compared irrespective of labels.
    pub fn same_arcs(&self, other: &ExchangeGraph) -> bool {
        self.out == other.out
    }

    /// Every arc of `self` is an arc of `other`.
    pub fn arcs_subset_of(&self, other: &ExchangeGraph) -> bool {
        self.out
            .iter()
            .zip(&other.out)
            .all(|(a, b)| a.is_subset(*b))
    }

    /// Arc-wise distance to the nearest sink (`None` when unreachable).
    pub fn distances_to_sinks(&self) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for t in self.sinks {
            dist[t] = Some(0);
            queue.push_back(t);
        }
        let preds: Vec<ElementSet> = (0..self.n).map(|v| self.predecessors(v)).collect();
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in preds[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Elements that can reach some sink.
    pub fn reaching_sinks(&self) -> ElementSet {
        self.distances_to_sinks()
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some())
            .map(|(e, _)| e)
            .collect()
    }

    /// A minimum-length source-sink path; among those, the lexicographically
    /// smallest vertex sequence.
    pub fn shortest_augmenting_path(&self) -> Option<Vec<Element>> {
        let dist = self.distances_to_sinks();
        let best = self.sources.iter().filter_map(|s| dist[s]).min()?;
        let mut u = self.sources.iter().find(|&s| dist[s] == Some(best))?;
        let mut path = vec![u];
        let mut remaining = best;
        while remaining > 0 {
            u = self.out[u]
                .iter()
                .find(|&v| dist[v] == Some(remaining - 1))
                .expect("distance labels are consistent");
            path.push(u);
            remaining -= 1;
        }
        Some(path)
    }

    /// Every minimum-length source-sink path, in lexicographic order.
    pub fn all_shortest_paths(&self) -> Vec<Vec<Element>> {
        let dist = self.distances_to_sinks();
        let best = match self.sources.iter().filter_map(|s| dist[s]).min() {
            Some(b) => b,
            None => return Vec::new(),
        };
        let mut paths = Vec::new();
        let mut stack = Vec::new();
        for s in self.sources.iter().filter(|&s| dist[s] == Some(best)) {
            stack.push(s);
            self.extend_shortest(&dist, best, &mut stack, &mut paths);
            stack.pop();
        }
        paths
    }

    fn extend_shortest(
        &self,
        dist: &[Option<usize>],
        remaining: usize,
        stack: &mut Vec<Element>,
        paths: &mut Vec<Vec<Element>>,
    ) {
        if remaining == 0 {
            paths.push(stack.clone());
            return;
        }
        let u = *stack.last().unwrap();
        for v in self.out[u]
            .iter()
            .filter(|&v| dist[v] == Some(remaining - 1))
        {
            stack.push(v);
            self.extend_shortest(dist, remaining - 1, stack, paths);
            stack.pop();
        }
    }

    /// `{ e : e can reach a sink }`, valid only when no source reaches a sink.
    pub fn reachability_certificate(&self) -> Result<ElementSet, SolveError> {
        let z = self.reaching_sinks();
        if z.intersection(self.sources).is_empty() {
            Ok(z)
        } else {
            Err(SolveError::PathExists)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    #[test]
    fn source_that_is_a_sink_gives_single_vertex_path() {
        let g = ExchangeGraph::new(3, set(&[0]), set(&[1]), set(&[1, 2]));
        assert_eq!(g.shortest_augmenting_path(), Some(vec![1]));
    }

    #[test]
    fn lexicographic_tie_break() {
        // sources {3,4}, I = {0,1}, sinks {5}
        let mut g = ExchangeGraph::new(6, set(&[0, 1]), set(&[3, 4]), set(&[5]));
        for (u, v) in [(4, 0), (3, 1), (0, 5), (1, 5)] {
            g.add_arc(u, v, ArcLabel::Sure);
        }
        assert_eq!(g.shortest_augmenting_path(), Some(vec![3, 1, 5]));
        assert_eq!(g.all_shortest_paths(), vec![vec![3, 1, 5], vec![4, 0, 5]]);
    }

    #[test]
    fn unreachable_sink_yields_certificate() {
        let mut g = ExchangeGraph::new(4, set(&[0]), set(&[1]), set(&[2]));
        g.add_arc(3, 0, ArcLabel::Sure);
        g.add_arc(0, 2, ArcLabel::Sure);
        assert_eq!(g.shortest_augmenting_path(), None);
        assert_eq!(g.reachability_certificate(), Ok(set(&[0, 2, 3])));
        let empty = ExchangeGraph::new(2, ElementSet::EMPTY, set(&[0]), ElementSet::EMPTY);
        assert_eq!(empty.reachability_certificate(), Ok(ElementSet::EMPTY));
        g.add_arc(0, 1, ArcLabel::Sure);
        g.add_arc(1, 0, ArcLabel::Sure);
        assert_eq!(g.reachability_certificate(), Err(SolveError::PathExists));
    }

    #[test]
    fn labels_and_layers() {
        let mut g = ExchangeGraph::new(3, set(&[0]), ElementSet::EMPTY, ElementSet::EMPTY);
        g.add_arc(0, 1, ArcLabel::Suspicious);
        g.add_arc(2, 0, ArcLabel::Sure);
        assert_eq!(g.label(0, 1), Some(ArcLabel::Suspicious));
        assert_eq!(g.label(2, 0), Some(ArcLabel::Sure));
        assert_eq!(g.label(1, 0), None);
        assert_eq!(g.first_layer().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g.second_layer().collect::<Vec<_>>(), vec![(2, 0)]);
        assert_eq!(g.suspicious_arcs().count(), 1);
    }
}
