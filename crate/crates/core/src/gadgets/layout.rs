//! Graphs, colors, and the element layout of a gadget instance.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GadgetError;
use crate::set::{Element, ElementSet, MAX_ELEMENTS};

/// One of the four colors `(i, j)`, `i, j` in `{1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct Color {
    i: u8,
    j: u8,
}

impl Color {
    pub const ALL: [Color; 4] = [
        Color { i: 1, j: 1 },
        Color { i: 1, j: 2 },
        Color { i: 2, j: 1 },
        Color { i: 2, j: 2 },
    ];

    pub fn new(i: u8, j: u8) -> Result<Self, GadgetError> {
        if matches!(i, 1 | 2) && matches!(j, 1 | 2) {
            Ok(Color { i, j })
        } else {
            Err(GadgetError::BadColor(i, j))
        }
    }

    pub fn i(self) -> u8 {
        self.i
    }

    pub fn j(self) -> u8 {
        self.j
    }

    /// `(3 - i, 3 - j)`
    pub fn opposite(self) -> Color {
        Color {
            i: 3 - self.i,
            j: 3 - self.j,
        }
    }
}

impl TryFrom<[u8; 2]> for Color {
    type Error = GadgetError;

    fn try_from(v: [u8; 2]) -> Result<Self, Self::Error> {
        Color::new(v[0], v[1])
    }
}

impl From<Color> for [u8; 2] {
    fn from(c: Color) -> Self {
        [c.i, c.j]
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Simple undirected graph with an optional 4-coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<Color>>,
}

impl ColoredGraph {
    /// Edges are stored with the smaller endpoint first, in input order.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, GadgetError> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= vertices || b >= vertices {
                return Err(GadgetError::VertexOutOfRange {
                    u: a,
                    w: b,
                    vertices,
                });
            }
            if a == b {
                return Err(GadgetError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GadgetError::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        Ok(ColoredGraph {
            vertices,
            edges: normalized,
            coloring: None,
        })
    }

    pub fn empty() -> Self {
        ColoredGraph {
            vertices: 0,
            edges: Vec::new(),
            coloring: None,
        }
    }

    pub fn triangle() -> Self {
        ColoredGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// Attaches a coloring; properness is checked when the gadget is built.
    pub fn with_coloring(mut self, coloring: Vec<Color>) -> Result<Self, GadgetError> {
        if coloring.len() != self.vertices {
            return Err(GadgetError::ColoringLength {
                got: coloring.len(),
                expected: self.vertices,
            });
        }
        self.coloring = Some(coloring);
        Ok(self)
    }

    /// Re-runs the checks of [`ColoredGraph::new`] and the coloring length,
    /// for graphs that came from deserialization.
    pub fn validated(self) -> Result<Self, GadgetError> {
        let g = ColoredGraph::new(self.vertices, self.edges)?;
        match self.coloring {
            Some(c) => g.with_coloring(c),
            None => Ok(g),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn coloring(&self) -> Option<&[Color]> {
        self.coloring.as_deref()
    }

    /// First edge whose endpoints share a color.
    pub fn color_clash(&self, coloring: &[Color]) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, w)| coloring[u] == coloring[w])
    }

    /// All proper 4-colorings, by brute force.
    pub fn proper_colorings(&self) -> BTreeSet<Vec<Color>> {
        let mut out = BTreeSet::new();
        let mut current = Vec::with_capacity(self.vertices);
        self.extend_colorings(&mut current, &mut out);
        out
    }

    fn extend_colorings(&self, current: &mut Vec<Color>, out: &mut BTreeSet<Vec<Color>>) {
        let v = current.len();
        if v == self.vertices {
            out.insert(current.clone());
            return;
        }
        for c in Color::ALL {
            let clash = self
                .edges
                .iter()
                .any(|&(a, b)| b == v && a < v && current[a] == c);
            if !clash {
                current.push(c);
                self.extend_colorings(current, out);
                current.pop();
            }
        }
    }
}

/// What a ground-set element stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `x_i^v`
    VertexX {
        v: usize,
        i: u8,
    },
    /// `y_j^v`
    VertexY {
        v: usize,
        j: u8,
    },
    /// `x_i^{e,v}` where `v` is endpoint `side` (0 smaller, 1 larger) of `e`
    EdgeX {
        e: usize,
        i: u8,
        side: usize,
    },
    /// `y_i^e`
    EdgeY {
        e: usize,
        i: u8,
    },
    Source,
    Sink,
}

/// How a pair `(x, y)` with `x` outside `I` and `y` in `I` takes part in the
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// `x_i^v`, `y_j^v`: arcs set by the color of `v`.
    Vertex { v: usize, i: u8, j: u8 },
    /// `x_i^{e,side}`, `y_i^e`: arcs set by the orientation of `(e, i)`.
    Edge { e: usize, i: u8, side: usize },
    /// The two remaining pairs of a crossing pair; never an arc.
    Cross,
    /// Exchangeable in both matroids.
    Free,
}

/// Arcs present between `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Link {
    Dead,
    /// `(y, x)` only
    First,
    /// `(x, y)` only
    Second,
    Both,
}

impl Link {
    pub fn has_first(self) -> bool {
        matches!(self, Link::First | Link::Both)
    }

    pub fn has_second(self) -> bool {
        matches!(self, Link::Second | Link::Both)
    }
}

/// Element numbering: four per vertex (`x1, x2, y1, y2`), six per edge
/// (`x1^u, x1^w, x2^u, x2^w, y1, y2`), then `s` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    atoms: Vec<Atom>,
}

impl Layout {
    pub fn new(g: &ColoredGraph) -> Result<Self, GadgetError> {
        let n = 4 * g.vertices() + 6 * g.edges().len() + 2;
        if n > MAX_ELEMENTS {
            return Err(GadgetError::TooLarge(n));
        }
        let mut atoms = Vec::with_capacity(n);
        for v in 0..g.vertices() {
            atoms.extend([
                Atom::VertexX { v, i: 1 },
                Atom::VertexX { v, i: 2 },
                Atom::VertexY { v, j: 1 },
                Atom::VertexY { v, j: 2 },
            ]);
        }
        for e in 0..g.edges().len() {
            atoms.extend([
                Atom::EdgeX { e, i: 1, side: 0 },
                Atom::EdgeX { e, i: 1, side: 1 },
                Atom::EdgeX { e, i: 2, side: 0 },
                Atom::EdgeX { e, i: 2, side: 1 },
                Atom::EdgeY { e, i: 1 },
                Atom::EdgeY { e, i: 2 },
            ]);
        }
        atoms.extend([Atom::Source, Atom::Sink]);
        Ok(Layout {
            vertices: g.vertices(),
            edges: g.edges().to_vec(),
            atoms,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.atoms.len()
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.atoms.len())
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn atom(&self, e: Element) -> Atom {
        self.atoms[e]
    }

    pub fn vertex_x(&self, v: usize, i: u8) -> Element {
        4 * v + usize::from(i) - 1
    }

    pub fn vertex_y(&self, v: usize, j: u8) -> Element {
        4 * v + 1 + usize::from(j)
    }

    pub fn edge_x(&self, e: usize, i: u8, side: usize) -> Element {
        4 * self.vertices + 6 * e + 2 * (usize::from(i) - 1) + side
    }

    pub fn edge_y(&self, e: usize, i: u8) -> Element {
        4 * self.vertices + 6 * e + 3 + usize::from(i)
    }

    pub fn source(&self) -> Element {
        self.atoms.len() - 2
    }

    pub fn sink(&self) -> Element {
        self.atoms.len() - 1
    }

    /// All `y` elements.
    pub fn independent(&self) -> ElementSet {
        self.elements(|a| matches!(a, Atom::VertexY { .. } | Atom::EdgeY { .. }))
    }

    /// The `x` elements: outside `I`, not a source or sink.
    pub fn rest(&self) -> ElementSet {
        self.elements(|a| matches!(a, Atom::VertexX { .. } | Atom::EdgeX { .. }))
    }

    fn elements(&self, keep: impl Fn(Atom) -> bool) -> ElementSet {
        (0..self.atoms.len())
            .filter(|&e| keep(self.atoms[e]))
            .collect()
    }

    /// Endpoint `side` of edge `e`.
    pub fn endpoint(&self, e: usize, side: usize) -> usize {
        if side == 0 {
            self.edges[e].0
        } else {
            self.edges[e].1
        }
    }

    pub fn role(&self, x: Element, y: Element) -> Role {
        match (self.atoms[x], self.atoms[y]) {
            (Atom::VertexX { v, i }, Atom::VertexY { v: w, j }) if v == w => {
                Role::Vertex { v, i, j }
            }
            (Atom::EdgeX { e, i, side }, Atom::EdgeY { e: f, i: k }) if e == f && i == k => {
                Role::Edge { e, i, side }
            }
            (Atom::EdgeX { e, i, side }, Atom::VertexY { v, j })
                if j == i && self.endpoint(e, side) == v =>
            {
                Role::Cross
            }
            (Atom::VertexX { v, i: 1 }, Atom::EdgeY { e, .. })
                if self.edges[e].0 == v || self.edges[e].1 == v =>
            {
                Role::Cross
            }
            _ => Role::Free,
        }
    }

    /// Human-readable element names such as `x1^v0`, `y2^e1`, `x1^e0,v2`.
    pub fn names(&self) -> Vec<String> {
        self.atoms
            .iter()
            .map(|&a| match a {
                Atom::VertexX { v, i } => format!("x{i}^v{v}"),
                Atom::VertexY { v, j } => format!("y{j}^v{v}"),
                Atom::EdgeX { e, i, side } => format!("x{i}^e{e},v{}", self.endpoint(e, side)),
                Atom::EdgeY { e, i } => format!("y{i}^e{e}"),
                Atom::Source => "s".to_string(),
                Atom::Sink => "t".to_string(),
            })
            .collect()
    }
}

/// Which side of each `(edge, i)` carries the arc `(x_i^{e,side}, y_i^e)`;
/// the other side carries `(y_i^e, x_i^{e,other})`.
pub type Orientation = Vec<[usize; 2]>;

/// One situation of every gadget.
#[derive(Clone, Copy, Debug)]
pub struct Situation<'a> {
    pub colors: &'a [Color],
    pub orientation: &'a [[usize; 2]],
}

impl Situation<'_> {
    pub fn link(&self, layout: &Layout, x: Element, y: Element) -> Link {
        link_for(
            layout.role(x, y),
            |v| self.colors[v],
            |e, i| self.orientation[e][i],
        )
    }
}

/// Arcs of a pair given its role and the situations of the gadgets around it.
pub fn link_for(
    role: Role,
    color: impl Fn(usize) -> Color,
    side: impl Fn(usize, usize) -> usize,
) -> Link {
    match role {
        Role::Vertex { v, i, j } => {
            let c = color(v);
            if (i, j) == (c.i, c.j) {
                Link::Second
            } else if (i, j) == (3 - c.i, 3 - c.j) {
                Link::First
            } else {
                Link::Dead
            }
        }
        Role::Edge { e, i, side: s } => {
            if side(e, usize::from(i) - 1) == s {
                Link::Second
            } else {
                Link::First
            }
        }
        Role::Cross => Link::Dead,
        Role::Free => Link::Both,
    }
}

/// Arcs of `x_1^v` to `y_i^v`: the vertex's share of the `i`-th crossing pairs.
fn crossing_link(c: Color, i: u8) -> Link {
    link_for(Role::Vertex { v: 0, i: 1, j: i }, |_| c, |_, _| 0)
}

/// Orientations of `(e, i)` that keep both crossing pairs free of opposite
/// arcs, smaller side first.
pub fn legal_sides(colors: &[Color], edge: (usize, usize), i: u8) -> Vec<usize> {
    let ends = [edge.0, edge.1];
    (0..2)
        .filter(|&side| {
            crossing_link(colors[ends[side]], i) != Link::First
                && crossing_link(colors[ends[1 - side]], i) != Link::Second
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbering_is_dense() {
        let g = ColoredGraph::new(2, vec![(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        let l = Layout::new(&g).unwrap();
        assert_eq!(l.ground_size(), 16);
        assert_eq!(l.vertex_x(1, 2), 5);
        assert_eq!(l.vertex_y(1, 1), 6);
        assert_eq!(l.edge_x(0, 2, 1), 11);
        assert_eq!(l.edge_y(0, 2), 13);
        assert_eq!((l.source(), l.sink()), (14, 15));
        assert_eq!(l.independent().len(), 6);
        assert_eq!(l.rest().len(), 8);
        assert_eq!(l.names()[11], "x2^e0,v1");
        for e in 0..16 {
            let back = match l.atom(e) {
                Atom::VertexX { v, i } => l.vertex_x(v, i),
                Atom::VertexY { v, j } => l.vertex_y(v, j),
                Atom::EdgeX { e, i, side } => l.edge_x(e, i, side),
                Atom::EdgeY { e, i } => l.edge_y(e, i),
                Atom::Source => l.source(),
                Atom::Sink => l.sink(),
            };
            assert_eq!(back, e);
        }
    }

    #[test]
    fn roles_of_crossing_pairs() {
        let g = ColoredGraph::new(2, vec![(0, 1)]).unwrap();
        let l = Layout::new(&g).unwrap();
        assert_eq!(l.role(l.edge_x(0, 1, 0), l.vertex_y(0, 1)), Role::Cross);
        assert_eq!(l.role(l.edge_x(0, 2, 1), l.vertex_y(1, 2)), Role::Cross);
        assert_eq!(l.role(l.vertex_x(1, 1), l.edge_y(0, 2)), Role::Cross);
        assert_eq!(l.role(l.vertex_x(1, 2), l.edge_y(0, 2)), Role::Free);
        assert_eq!(l.role(l.edge_x(0, 1, 0), l.vertex_y(0, 2)), Role::Free);
        assert_eq!(l.role(l.vertex_x(0, 1), l.vertex_y(1, 1)), Role::Free);
    }

    #[test]
    fn each_color_picks_two_opposite_arcs() {
        for c in Color::ALL {
            let links: Vec<Link> = [(1, 1), (1, 2), (2, 1), (2, 2)]
                .into_iter()
                .map(|(i, j)| link_for(Role::Vertex { v: 0, i, j }, |_| c, |_, _| 0))
                .collect();
            assert_eq!(links.iter().filter(|&&l| l == Link::Second).count(), 1);
            assert_eq!(links.iter().filter(|&&l| l == Link::First).count(), 1);
            let second = [(1, 1), (1, 2), (2, 1), (2, 2)]
                [links.iter().position(|&l| l == Link::Second).unwrap()];
            assert_eq!(second, (c.i(), c.j()));
        }
    }

    #[test]
    fn equal_colors_leave_no_legal_side() {
        for c in Color::ALL {
            let i = if c.i() == c.j() { 1 } else { 2 };
            assert!(legal_sides(&[c, c], (0, 1), i).is_empty());
        }
        let colors = [Color::new(1, 1).unwrap(), Color::new(1, 2).unwrap()];
        assert_eq!(legal_sides(&colors, (0, 1), 1), vec![0]);
        assert_eq!(legal_sides(&colors, (0, 1), 2), vec![1]);
    }

    #[test]
    fn proper_coloring_counts() {
        assert_eq!(
            ColoredGraph::new(1, vec![])
                .unwrap()
                .proper_colorings()
                .len(),
            4
        );
        assert_eq!(
            ColoredGraph::new(2, vec![(0, 1)])
                .unwrap()
                .proper_colorings()
                .len(),
            12
        );
        assert_eq!(ColoredGraph::triangle().proper_colorings().len(), 24);
        assert_eq!(ColoredGraph::empty().proper_colorings().len(), 1);
    }

    #[test]
    fn bad_graphs_rejected() {
        assert_eq!(
            ColoredGraph::new(2, vec![(1, 1)]),
            Err(GadgetError::SelfLoop(1))
        );
        assert!(ColoredGraph::new(2, vec![(0, 2)]).is_err());
        assert_eq!(
            ColoredGraph::new(2, vec![(0, 1), (1, 0)]),
            Err(GadgetError::DuplicateEdge(0, 1))
        );
        assert!(Color::new(0, 1).is_err());
        let json = r#"{"vertices":2,"edges":[[0,1]],"coloring":[[1,1],[2,2]]}"#;
        let g: ColoredGraph = serde_json::from_str(json).unwrap();
        assert_eq!(g.coloring().unwrap()[1], Color::new(2, 2).unwrap());
        assert!(serde_json::from_str::<ColoredGraph>(
            r#"{"vertices":1,"edges":[],"coloring":[[3,1]]}"#
        )
        .is_err());
    }
}
