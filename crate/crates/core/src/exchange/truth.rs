//! The true exchangeability graph, built with direct access to both matroids.
//! Verification only: solvers never see this.

use super::graph::{ArcLabel, ExchangeGraph};
use crate::error::MatroidError;
use crate::matroid::Matroid;
use crate::set::ElementSet;

pub fn build_true_graph(
    first: &Matroid,
    second: &Matroid,
    i: ElementSet,
) -> Result<ExchangeGraph, MatroidError> {
    build_true_graph_in(first, second, i, first.ground())
}

/// Same as [`build_true_graph`] restricted to the elements of `ground`.
pub fn build_true_graph_in(
    first: &Matroid,
    second: &Matroid,
    i: ElementSet,
    ground: ElementSet,
) -> Result<ExchangeGraph, MatroidError> {
    for m in [first, second] {
        if !m.is_independent(i)? {
            return Err(MatroidError::NotIndependent(i));
        }
    }
    let outside = ground.difference(i);
    let independent_in = |m: &Matroid, x: ElementSet| m.rank_of(x) == x.len();
    let sources = outside
        .iter()
        .filter(|&s| independent_in(first, i.with(s)))
        .collect();
    let sinks = outside
        .iter()
        .filter(|&t| independent_in(second, i.with(t)))
        .collect();
    let mut g = ExchangeGraph::new(first.ground_size(), i, sources, sinks);
    for x in outside {
        for y in i {
            let swapped = i.with(x).without(y);
            if independent_in(first, swapped) {
                g.add_arc(y, x, ArcLabel::Sure);
            }
            if independent_in(second, swapped) {
                g.add_arc(x, y, ArcLabel::Sure);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    #[test]
    fn empty_independent_set() {
        let u = Matroid::uniform(2, 3).unwrap();
        let g = build_true_graph(&u, &u, ElementSet::EMPTY).unwrap();
        assert_eq!(g.sources(), ElementSet::full(3));
        assert_eq!(g.sinks(), ElementSet::full(3));
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn triangle_against_uniform() {
        let tri = Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let u = Matroid::uniform(2, 3).unwrap();
        let g = build_true_graph(&tri, &u, set(&[0, 1])).unwrap();
        let first: Vec<_> = g.first_layer().collect();
        let second: Vec<_> = g.second_layer().collect();
        assert_eq!(first, vec![(0, 2), (1, 2)]);
        assert_eq!(second, vec![(2, 0), (2, 1)]);
    }

    #[test]
    fn rejects_dependent_set() {
        let u = Matroid::uniform(1, 3).unwrap();
        assert!(build_true_graph(&u, &u, set(&[0, 1])).is_err());
    }
}
