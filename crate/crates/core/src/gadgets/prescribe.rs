//! The prescribed `r_min` values of a gadget instance. They depend on the
//! graph only, never on the coloring.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::layout::{link_for, Color, ColoredGraph, Layout, Link, Role};
use crate::consistency::{small_subsets, LeObservation, LeTable};
use crate::error::GadgetError;
use crate::set::{Element, ElementSet};

/// Why a value was prescribed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    /// The evil pair of a vertex and its proper subpairs.
    Vertex(usize),
    /// `(X_i^e, {y_i^e})` and its singletons.
    Edge(usize),
    /// The crossing pairs `(X_i^{e,v}, Y_i^{e,v})` and their subpairs.
    Crossing(usize),
    /// Rules making `s` the only source and `t` the only sink.
    Terminal,
    /// Any pair the gadgets do not designate.
    Default,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Vertex(v) => write!(f, "vertex v{v}"),
            Origin::Edge(e) => write!(f, "edge e{e}"),
            Origin::Crossing(e) => write!(f, "crossing e{e}"),
            Origin::Terminal => write!(f, "terminal"),
            Origin::Default => write!(f, "default"),
        }
    }
}

/// `r_min(set) = value`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prescription {
    pub set: ElementSet,
    pub value: usize,
    pub origin: Origin,
}

/// A default value that differs between gadget situations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unsettled {
    pub x: ElementSet,
    pub y: ElementSet,
    pub low: usize,
    pub high: usize,
}

/// Everything about a reduction instance that is fixed before a coloring is
/// chosen.
#[derive(Clone, Debug)]
pub struct GadgetSpec {
    graph: ColoredGraph,
    layout: Layout,
    table: LeTable,
    origins: HashMap<(ElementSet, ElementSet), Origin>,
    terminal: Vec<Prescription>,
    unsettled: Vec<Unsettled>,
}

impl GadgetSpec {
    pub fn new(graph: &ColoredGraph) -> Result<Self, GadgetError> {
        let layout = Layout::new(graph)?;
        let i = layout.independent();
        let k = i.len();
        let rest = layout.rest();
        let designated = designate(&layout, k);
        let mut observations = Vec::new();
        let mut origins = HashMap::new();
        let mut unsettled = Vec::new();
        for x in small_subsets(rest) {
            for y in small_subsets(i) {
                let (value, origin) = match designated.get(&(x, y)) {
                    Some(&(value, origin)) => (value, origin),
                    None => {
                        let (low, high) = default_range(&layout, x, y);
                        if low != high {
                            unsettled.push(Unsettled { x, y, low, high });
                        }
                        (low, Origin::Default)
                    }
                };
                observations.push(LeObservation { x, y, value });
                origins.insert((x, y), origin);
            }
        }
        let table = LeTable::from_observations(i, rest, observations)?;
        let terminal = terminal_rules(&layout);
        Ok(GadgetSpec {
            graph: ColoredGraph::new(graph.vertices(), graph.edges().to_vec())?,
            layout,
            table,
            origins,
            terminal,
            unsettled,
        })
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn independent(&self) -> ElementSet {
        self.table.independent()
    }

    /// Observations on every pair `X` outside `I + s + t`, `Y` inside `I`.
    pub fn table(&self) -> &LeTable {
        &self.table
    }

    pub fn origin(&self, x: ElementSet, y: ElementSet) -> Option<Origin> {
        self.origins.get(&(x, y)).copied()
    }

    /// The source and sink rules.
    pub fn terminal(&self) -> &[Prescription] {
        &self.terminal
    }

    /// Every prescription as a set and a value, pairs first.
    pub fn prescriptions(&self) -> Vec<Prescription> {
        let i = self.independent();
        self.table
            .iter()
            .map(|obs| Prescription {
                set: i.union(obs.x).difference(obs.y),
                value: obs.value,
                origin: self.origins[&(obs.x, obs.y)],
            })
            .chain(self.terminal.iter().copied())
            .collect()
    }

    /// Undesignated pairs whose value depends on the gadget situations.
    /// Empty for every graph: the default rule is coloring-free.
    pub fn unsettled(&self) -> &[Unsettled] {
        &self.unsettled
    }

    /// Pairs where the literal two-case default rule disagrees with the
    /// adopted default, as `(X, Y, literal, adopted)`.
    pub fn literal_default_conflicts(&self) -> Vec<(ElementSet, ElementSet, usize, usize)> {
        let k = self.independent().len();
        let designated_floor = |x: ElementSet, y: ElementSet| {
            self.origin(x, y).is_some_and(|o| o != Origin::Default)
                && self.table.value(x, y) == Some(k - y.len())
        };
        self.table
            .iter()
            .filter(|obs| self.origins[&(obs.x, obs.y)] == Origin::Default)
            .filter_map(|obs| {
                let literal = if obs.x.len() == 1 || obs.y.len() == 1 {
                    k - obs.y.len() + 1
                } else {
                    let forced = three_element_subpairs(obs.x, obs.y)
                        .into_iter()
                        .any(|(x, y)| designated_floor(x, y));
                    if forced {
                        k - 1
                    } else {
                        k
                    }
                };
                (literal != obs.value).then_some((obs.x, obs.y, literal, obs.value))
            })
            .collect()
    }
}

fn three_element_subpairs(x: ElementSet, y: ElementSet) -> Vec<(ElementSet, ElementSet)> {
    let mut out = Vec::new();
    for a in x {
        out.push((ElementSet::singleton(a), y));
    }
    for b in y {
        out.push((x, ElementSet::singleton(b)));
    }
    out
}

/// Every nonempty `(X', Y')` with `X'` in `x`, `Y'` in `y`.
fn subpairs(x: ElementSet, y: ElementSet) -> impl Iterator<Item = (ElementSet, ElementSet)> {
    let ys = small_subsets(y);
    small_subsets(x)
        .into_iter()
        .flat_map(move |a| ys.clone().into_iter().map(move |b| (a, b)))
}

fn designate(layout: &Layout, k: usize) -> HashMap<(ElementSet, ElementSet), (usize, Origin)> {
    let mut out = HashMap::new();
    for v in 0..layout.vertices() {
        let xs = ElementSet::from_elements([layout.vertex_x(v, 1), layout.vertex_x(v, 2)]);
        let ys = ElementSet::from_elements([layout.vertex_y(v, 1), layout.vertex_y(v, 2)]);
        for (x, y) in subpairs(xs, ys) {
            let value = if x == xs && y == ys {
                k - 1
            } else {
                k - y.len()
            };
            out.insert((x, y), (value, Origin::Vertex(v)));
        }
    }
    for (e, &(u, w)) in layout.edges().iter().enumerate() {
        for i in [1, 2] {
            let y = ElementSet::singleton(layout.edge_y(e, i));
            let pair = [layout.edge_x(e, i, 0), layout.edge_x(e, i, 1)];
            out.insert((ElementSet::from_elements(pair), y), (k, Origin::Edge(e)));
            for x in pair {
                out.insert((ElementSet::singleton(x), y), (k - 1, Origin::Edge(e)));
            }
            for (side, v) in [(0, u), (1, w)] {
                let xs =
                    ElementSet::from_elements([layout.edge_x(e, i, side), layout.vertex_x(v, 1)]);
                let ys = ElementSet::from_elements([layout.edge_y(e, i), layout.vertex_y(v, i)]);
                for (x, y) in subpairs(xs, ys) {
                    out.insert((x, y), (k - y.len(), Origin::Crossing(e)));
                }
            }
        }
    }
    out
}

/// `s` and `t` extend `I` separately but not together, and every exchange
/// through `s` or `t` keeps `|I|`.
fn terminal_rules(layout: &Layout) -> Vec<Prescription> {
    let i = layout.independent();
    let k = i.len();
    let (s, t) = (layout.source(), layout.sink());
    let rule = |set: ElementSet, value: usize| Prescription {
        set,
        value,
        origin: Origin::Terminal,
    };
    let mut out = vec![
        rule(i.with(s), k),
        rule(i.with(t), k),
        rule(i.with(s).with(t), k + 1),
    ];
    for z in [s, t] {
        for y in i {
            out.push(rule(i.with(z).without(y), k));
        }
        for x in layout.rest() {
            for y in i {
                out.push(rule(i.with(z).with(x).without(y), k));
            }
        }
    }
    out
}

/// Smallest and largest value of an undesignated pair over all situations of
/// the gadgets it touches. The value in one situation is `|I| - |Y|` plus the
/// smaller of the two layers' matching numbers on `X x Y`.
fn default_range(layout: &Layout, x: ElementSet, y: ElementSet) -> (usize, usize) {
    let k = layout.independent().len();
    let pairs: Vec<(Element, Element, Role)> = x
        .iter()
        .flat_map(|a| y.iter().map(move |b| (a, b, layout.role(a, b))))
        .collect();
    let mut vertices = BTreeSet::new();
    let mut sides = BTreeSet::new();
    for &(_, _, role) in &pairs {
        match role {
            Role::Vertex { v, .. } => {
                vertices.insert(v);
            }
            Role::Edge { e, i, .. } => {
                sides.insert((e, usize::from(i) - 1));
            }
            _ => {}
        }
    }
    let vertices: Vec<usize> = vertices.into_iter().collect();
    let sides: Vec<(usize, usize)> = sides.into_iter().collect();
    let mut low = usize::MAX;
    let mut high = 0;
    for colors in 0..4usize.pow(vertices.len() as u32) {
        for orient in 0..1usize << sides.len() {
            let color = |v: usize| {
                let p = vertices.iter().position(|&u| u == v).unwrap();
                Color::ALL[colors / 4usize.pow(p as u32) % 4]
            };
            let side = |e: usize, i: usize| {
                let p = sides.iter().position(|&q| q == (e, i)).unwrap();
                orient >> p & 1
            };
            let links: Vec<(Element, Element, Link)> = pairs
                .iter()
                .map(|&(a, b, role)| (a, b, link_for(role, color, side)))
                .collect();
            let first = matching_number(&links, Link::has_first);
            let second = matching_number(&links, Link::has_second);
            let value = k - y.len() + first.min(second);
            low = low.min(value);
            high = high.max(value);
        }
    }
    (low, high)
}

/// Matching number of a bipartite graph with at most two vertices per side.
fn matching_number(links: &[(Element, Element, Link)], layer: fn(Link) -> bool) -> usize {
    let edges: Vec<(Element, Element)> = links
        .iter()
        .filter(|l| layer(l.2))
        .map(|&(a, b, _)| (a, b))
        .collect();
    let disjoint_pair = edges
        .iter()
        .any(|&(a, b)| edges.iter().any(|&(c, d)| a != c && b != d));
    if disjoint_pair {
        2
    } else {
        usize::from(!edges.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    #[test]
    fn single_vertex_values() {
        let spec = GadgetSpec::new(&ColoredGraph::new(1, vec![]).unwrap()).unwrap();
        let t = spec.table();
        assert_eq!(t.value(set(&[0, 1]), set(&[2, 3])), Some(1));
        assert_eq!(t.value(set(&[0]), set(&[2, 3])), Some(0));
        assert_eq!(t.value(set(&[0]), set(&[2])), Some(1));
        let evil = t.iter().find(|o| o.x.len() == 2 && o.y.len() == 2).unwrap();
        assert_eq!(t.is_evil(evil), Ok(true));
        assert!(spec.unsettled().is_empty());
        assert!(spec.literal_default_conflicts().is_empty());
        assert_eq!(spec.terminal()[2].value, 3);
    }

    #[test]
    fn edge_values() {
        let g = ColoredGraph::new(2, vec![(0, 1)]).unwrap();
        let spec = GadgetSpec::new(&g).unwrap();
        let l = spec.layout();
        let k = 6;
        let y1 = ElementSet::singleton(l.edge_y(0, 1));
        let pair = set(&[l.edge_x(0, 1, 0), l.edge_x(0, 1, 1)]);
        assert_eq!(spec.table().value(pair, y1), Some(k));
        assert_eq!(
            spec.table().value(set(&[l.edge_x(0, 1, 0)]), y1),
            Some(k - 1)
        );
        let cross_x = set(&[l.edge_x(0, 2, 1), l.vertex_x(1, 1)]);
        let cross_y = set(&[l.edge_y(0, 2), l.vertex_y(1, 2)]);
        assert_eq!(spec.table().value(cross_x, cross_y), Some(k - 2));
        assert_eq!(spec.origin(cross_x, cross_y), Some(Origin::Crossing(0)));
        // free singletons are exchangeable both ways
        let free = spec
            .table()
            .value(set(&[l.vertex_x(0, 2)]), set(&[l.vertex_y(1, 1)]));
        assert_eq!(free, Some(k));
        assert!(spec.unsettled().is_empty());
    }

    #[test]
    fn literal_rule_disagrees_off_the_gadgets() {
        let g = ColoredGraph::new(2, vec![(0, 1)]).unwrap();
        let spec = GadgetSpec::new(&g).unwrap();
        let l = spec.layout();
        let k = 6;
        let x = set(&[l.vertex_x(0, 1)]);
        let y = set(&[l.edge_y(0, 1), l.vertex_y(0, 2)]);
        assert_eq!(spec.origin(x, y), Some(Origin::Default));
        assert_eq!(spec.table().value(x, y), Some(k - 2));
        let conflicts = spec.literal_default_conflicts();
        assert!(conflicts.contains(&(x, y, k - 1, k - 2)));
        // a pair of x^1 elements sharing both edge y's has no arc at all
        let both = set(&[l.vertex_x(0, 1), l.vertex_x(1, 1)]);
        let edge_ys = set(&[l.edge_y(0, 1), l.edge_y(0, 2)]);
        assert_eq!(spec.table().value(both, edge_ys), Some(k - 2));
    }

    #[test]
    fn defaults_are_coloring_free() {
        for g in [
            ColoredGraph::new(2, vec![(0, 1)]).unwrap(),
            ColoredGraph::triangle(),
            ColoredGraph::new(3, vec![(0, 1), (1, 2)]).unwrap(),
        ] {
            assert!(GadgetSpec::new(&g).unwrap().unsettled().is_empty());
        }
    }

    #[test]
    fn empty_graph() {
        let spec = GadgetSpec::new(&ColoredGraph::empty()).unwrap();
        assert!(spec.table().is_empty());
        assert_eq!(spec.independent(), ElementSet::EMPTY);
        assert_eq!(spec.terminal().len(), 3);
    }
}
