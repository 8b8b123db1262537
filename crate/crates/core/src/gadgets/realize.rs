//! Rational representations of a colored gadget instance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::layout::{legal_sides, Color, ColoredGraph, Link, Orientation, Situation};
use super::prescribe::GadgetSpec;
use crate::error::{GadgetError, MatroidError};
use crate::matroid::{Matroid, RationalMatrix};
use crate::oracle::MinRankOracle;
use crate::set::{Element, ElementSet};

/// A gadget instance together with one situation and its two matrices.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    spec: GadgetSpec,
    coloring: Vec<Color>,
    orientation: Orientation,
    rows: Vec<Element>,
    first: RationalMatrix,
    second: RationalMatrix,
}

/// Builds the instance for a properly colored graph, orienting every edge
/// gadget by its first legal side.
pub fn build_gadget(g: &ColoredGraph) -> Result<GadgetInstance, GadgetError> {
    let coloring = g.coloring().ok_or(GadgetError::MissingColoring)?.to_vec();
    if let Some((u, w)) = g.color_clash(&coloring) {
        return Err(GadgetError::ImproperColoring { u, w });
    }
    let orientation = g
        .edges()
        .iter()
        .map(|&edge| {
            [
                legal_sides(&coloring, edge, 1)[0],
                legal_sides(&coloring, edge, 2)[0],
            ]
        })
        .collect();
    realize(GadgetSpec::new(g)?, coloring, orientation)
}

/// Builds the matrices for any situation, legal or not.
pub fn realize(
    spec: GadgetSpec,
    coloring: Vec<Color>,
    orientation: Orientation,
) -> Result<GadgetInstance, GadgetError> {
    let layout = spec.layout();
    if coloring.len() != layout.vertices() {
        return Err(GadgetError::ColoringLength {
            got: coloring.len(),
            expected: layout.vertices(),
        });
    }
    assert_eq!(
        orientation.len(),
        layout.edges().len(),
        "one orientation per edge"
    );
    let i = layout.independent();
    let (s, t) = (layout.source(), layout.sink());
    let mut rows: Vec<Element> = i.to_vec();
    rows.extend([s, t]);
    let n = layout.ground_size();
    let row_of = |e: Element| rows.iter().position(|&r| r == e).unwrap();
    let mut first = vec![vec![BigRational::zero(); n]; rows.len()];
    let mut second = first.clone();
    for y in i {
        first[row_of(y)][y] = BigRational::one();
        second[row_of(y)][y] = BigRational::one();
        first[row_of(y)][t] = BigRational::one();
        second[row_of(y)][s] = BigRational::one();
    }
    first[row_of(s)][s] = BigRational::one();
    second[row_of(t)][t] = BigRational::one();
    let situation = Situation {
        colors: &coloring,
        orientation: &orientation,
    };
    let primes = primes(layout.rest().len() * i.len());
    for (pos, (x, y)) in pair_order(layout.rest(), i).enumerate() {
        let p = BigRational::from_integer(BigInt::from(primes[pos]));
        let link = situation.link(layout, x, y);
        if link.has_first() {
            first[row_of(y)][x] = p.clone();
        }
        if link.has_second() {
            second[row_of(y)][x] = p;
        }
    }
    let first = RationalMatrix::from_rows(first, n).expect("rows have width n");
    let second = RationalMatrix::from_rows(second, n).expect("rows have width n");
    Ok(GadgetInstance {
        spec,
        coloring,
        orientation,
        rows,
        first,
        second,
    })
}

/// `(x, y)` pairs in the order primes are handed out: by `x`, then by `y`.
pub fn pair_order(rest: ElementSet, i: ElementSet) -> impl Iterator<Item = (Element, Element)> {
    rest.iter().flat_map(move |x| i.iter().map(move |y| (x, y)))
}

/// The first `count` primes.
pub fn primes(count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if out
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| !candidate.is_multiple_of(p))
        {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

impl GadgetInstance {
    pub fn spec(&self) -> &GadgetSpec {
        &self.spec
    }

    pub fn coloring(&self) -> &[Color] {
        &self.coloring
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// Ground-set element of each matrix row: `I` in order, then `s`, `t`.
    pub fn row_elements(&self) -> &[Element] {
        &self.rows
    }

    pub fn first_matrix(&self) -> &RationalMatrix {
        &self.first
    }

    pub fn second_matrix(&self) -> &RationalMatrix {
        &self.second
    }

    pub fn matroids(&self) -> Result<(Matroid, Matroid), MatroidError> {
        Ok((
            Matroid::linear(self.first.clone())?,
            Matroid::linear(self.second.clone())?,
        ))
    }

    pub fn oracle(&self) -> Result<MinRankOracle, MatroidError> {
        let (m1, m2) = self.matroids()?;
        MinRankOracle::new(m1, m2)
    }

    /// The arcs this situation places between `x` and `y`.
    pub fn link(&self, x: Element, y: Element) -> Link {
        Situation {
            colors: &self.coloring,
            orientation: &self.orientation,
        }
        .link(self.spec.layout(), x, y)
    }
}
