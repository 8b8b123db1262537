//! Consistent arc assignments of a gadget instance, read back as colorings.

use std::collections::BTreeSet;

use super::layout::{Color, Link, Role};
use super::prescribe::GadgetSpec;
use crate::error::GadgetError;
use crate::set::Element;

const CHOICES: [Link; 3] = [Link::Dead, Link::First, Link::Second];

/// One observation restated over the pairs it covers.
struct Constraint {
    /// Free pairs contribute both layers.
    free: bool,
    vars: Vec<usize>,
    high: bool,
}

impl Constraint {
    fn holds(&self, state: &[Link]) -> bool {
        let first = self.free || self.vars.iter().any(|&v| state[v].has_first());
        let second = self.free || self.vars.iter().any(|&v| state[v].has_second());
        self.high == (first && second)
    }
}

struct Search {
    /// `(x, y)` pairs whose singleton sits at its floor: at most one arc.
    vars: Vec<(Element, Element)>,
    /// Constraints checked once their last variable is assigned.
    at: Vec<Vec<Constraint>>,
    vertex_vars: usize,
}

/// Every vertex-color situation that extends to an arc set consistent with all
/// prescribed pair values.
///
/// Pairs at a high singleton value must carry both arcs; pairs at the floor
/// carry none or one. Assignments are searched depth first with vertex-gadget
/// pairs first; once a vertex situation has one consistent completion its
/// remaining completions are skipped, since they project to the same colors.
pub fn colorings_from_consistent_graphs(
    spec: &GadgetSpec,
) -> Result<BTreeSet<Vec<Color>>, GadgetError> {
    let search = Search::new(spec);
    let mut state = vec![Link::Dead; search.vars.len()];
    let mut out = BTreeSet::new();
    search.vertices(spec, 0, &mut state, &mut out)?;
    Ok(out)
}

impl Search {
    fn new(spec: &GadgetSpec) -> Self {
        let layout = spec.layout();
        let table = spec.table();
        let k = table.independent().len();
        let floor_singleton = |x: Element, y: Element| {
            table.value(
                crate::set::ElementSet::singleton(x),
                crate::set::ElementSet::singleton(y),
            ) == Some(k - 1)
        };
        let mut vars: Vec<(Element, Element, (usize, usize))> = Vec::new();
        for x in table.rest() {
            for y in table.independent() {
                if floor_singleton(x, y) {
                    let rank = match layout.role(x, y) {
                        Role::Vertex { v, .. } => (0, v),
                        Role::Edge { e, .. } => (1, e),
                        _ => (1, edge_of(spec, x, y)),
                    };
                    vars.push((x, y, rank));
                }
            }
        }
        vars.sort_by_key(|&(x, y, rank)| (rank, x, y));
        let vertex_vars = vars.iter().filter(|v| v.2 .0 == 0).count();
        let vars: Vec<(Element, Element)> = vars.into_iter().map(|(x, y, _)| (x, y)).collect();
        let index = |x: Element, y: Element| vars.iter().position(|&p| p == (x, y));
        let mut at: Vec<Vec<Constraint>> = (0..vars.len()).map(|_| Vec::new()).collect();
        for obs in table.iter() {
            let mut free = false;
            let mut covered = Vec::new();
            for x in obs.x {
                for y in obs.y {
                    match index(x, y) {
                        Some(v) => covered.push(v),
                        None => free = true,
                    }
                }
            }
            let high = obs.is_high(k);
            let Some(&last) = covered.iter().max() else {
                // no variable: must already hold
                debug_assert_eq!(high, free);
                continue;
            };
            at[last].push(Constraint {
                free,
                vars: covered,
                high,
            });
        }
        Search {
            vars,
            at,
            vertex_vars,
        }
    }

    fn assign_ok(&self, pos: usize, state: &[Link]) -> bool {
        self.at[pos].iter().all(|c| c.holds(state))
    }

    fn vertices(
        &self,
        spec: &GadgetSpec,
        pos: usize,
        state: &mut [Link],
        out: &mut BTreeSet<Vec<Color>>,
    ) -> Result<(), GadgetError> {
        if pos == self.vertex_vars {
            if self.complete(pos, state) {
                out.insert(self.project(spec, state)?);
            }
            return Ok(());
        }
        for link in CHOICES {
            state[pos] = link;
            if self.assign_ok(pos, state) {
                self.vertices(spec, pos + 1, state, out)?;
            }
        }
        Ok(())
    }

    fn complete(&self, pos: usize, state: &mut [Link]) -> bool {
        if pos == self.vars.len() {
            return true;
        }
        CHOICES.iter().any(|&link| {
            state[pos] = link;
            self.assign_ok(pos, state) && self.complete(pos + 1, state)
        })
    }

    /// Reads the color of every vertex off its gadget's arcs.
    fn project(&self, spec: &GadgetSpec, state: &[Link]) -> Result<Vec<Color>, GadgetError> {
        let layout = spec.layout();
        let link = |x: Element, y: Element| {
            self.vars[..self.vertex_vars]
                .iter()
                .position(|&p| p == (x, y))
                .map_or(Link::Both, |v| state[v])
        };
        (0..layout.vertices())
            .map(|v| {
                Color::ALL
                    .into_iter()
                    .find(|&c| {
                        [(1, 1), (1, 2), (2, 1), (2, 2)].into_iter().all(|(i, j)| {
                            let expected = if (i, j) == (c.i(), c.j()) {
                                Link::Second
                            } else if (i, j) == (c.opposite().i(), c.opposite().j()) {
                                Link::First
                            } else {
                                Link::Dead
                            };
                            link(layout.vertex_x(v, i), layout.vertex_y(v, j)) == expected
                        })
                    })
                    .ok_or(GadgetError::UnexpectedSituation(v))
            })
            .collect()
    }
}

/// Edge whose gadgets a floor pair outside the vertex gadgets belongs to.
fn edge_of(spec: &GadgetSpec, x: Element, y: Element) -> usize {
    use super::layout::Atom;
    let l = spec.layout();
    match (l.atom(x), l.atom(y)) {
        (Atom::EdgeX { e, .. }, _) | (_, Atom::EdgeY { e, .. }) => e,
        _ => l.edges().len(),
    }
}
