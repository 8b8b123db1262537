//! Matroid presentations, all reduced to a rank function on `ElementSet`s.

mod explicit;
mod graphic;
mod linear;
mod validate;

pub use explicit::{Explicit, RANK_TABLE_LIMIT};
pub use graphic::{DisjointSets, Graphic};
pub use linear::RationalMatrix;
pub use validate::Violation;

use crate::error::MatroidError;
use crate::set::{Element, ElementSet, MAX_ELEMENTS};

/// Partition matroid: at most `capacities[i]` elements from `blocks[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<ElementSet>,
    capacities: Vec<usize>,
}

impl Partition {
    pub fn new(
        n: usize,
        blocks: Vec<ElementSet>,
        capacities: Vec<usize>,
    ) -> Result<Self, MatroidError> {
        if blocks.len() != capacities.len() {
            return Err(MatroidError::Malformed(format!(
                "{} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        let mut seen = ElementSet::EMPTY;
        for b in &blocks {
            if let Some(e) = b.difference(ElementSet::full(n)).first() {
                return Err(MatroidError::OutOfRange { element: e, n });
            }
            if let Some(e) = b.intersection(seen).first() {
                return Err(MatroidError::Malformed(format!(
                    "element {e} lies in more than one block"
                )));
            }
            seen = seen.union(*b);
        }
        if let Some(e) = ElementSet::full(n).difference(seen).first() {
            return Err(MatroidError::Malformed(format!(
                "element {e} lies in no block"
            )));
        }
        Ok(Partition {
            n,
            blocks,
            capacities,
        })
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }

    fn rank(&self, x: ElementSet) -> usize {
        self.blocks
            .iter()
            .zip(&self.capacities)
            .map(|(b, &c)| b.intersection(x).len().min(c))
            .sum()
    }
}

/// One matroid on the ground set `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matroid {
    Uniform { n: usize, rank: usize },
    Partition(Partition),
    Graphic(Graphic),
    Linear(RationalMatrix),
    Explicit(Explicit),
}

impl Matroid {
    pub fn uniform(rank: usize, n: usize) -> Result<Self, MatroidError> {
        check_width(n)?;
        Ok(Matroid::Uniform { n, rank })
    }

    pub fn partition(
        n: usize,
        blocks: Vec<ElementSet>,
        capacities: Vec<usize>,
    ) -> Result<Self, MatroidError> {
        check_width(n)?;
        Partition::new(n, blocks, capacities).map(Matroid::Partition)
    }

    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        check_width(edges.len())?;
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(MatroidError::Malformed(format!(
                "edge ({u}, {v}) uses a vertex outside 0..{vertices}"
            )));
        }
        Ok(Matroid::Graphic(Graphic { vertices, edges }))
    }

    pub fn linear(matrix: RationalMatrix) -> Result<Self, MatroidError> {
        check_width(matrix.column_count())?;
        Ok(Matroid::Linear(matrix))
    }

    /// Explicit matroid from its bases (maximal independent sets).
    pub fn from_bases(
        n: usize,
        bases: impl IntoIterator<Item = ElementSet>,
    ) -> Result<Self, MatroidError> {
        check_width(n)?;
        let bases: Vec<ElementSet> = bases.into_iter().collect();
        check_sets(n, &bases)?;
        Ok(Matroid::Explicit(Explicit::from_bases(n, bases)))
    }

    /// Explicit matroid whose independent sets are exactly `family`.
    pub fn from_family(
        n: usize,
        family: impl IntoIterator<Item = ElementSet>,
    ) -> Result<Self, MatroidError> {
        check_width(n)?;
        let family: Vec<ElementSet> = family.into_iter().collect();
        check_sets(n, &family)?;
        Ok(Matroid::Explicit(Explicit::from_family(n, family)))
    }

    pub fn ground_size(&self) -> usize {
        match self {
            Matroid::Uniform { n, .. } => *n,
            Matroid::Partition(p) => p.n,
            Matroid::Graphic(g) => g.edges.len(),
            Matroid::Linear(m) => m.column_count(),
            Matroid::Explicit(m) => m.ground_size(),
        }
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Matroid::Uniform { .. } => "uniform",
            Matroid::Partition(_) => "partition",
            Matroid::Graphic(_) => "graphic",
            Matroid::Linear(_) => "linear",
            Matroid::Explicit(_) => "explicit",
        }
    }

    pub fn check_subset(&self, x: ElementSet) -> Result<(), MatroidError> {
        let n = self.ground_size();
        match x.difference(ElementSet::full(n)).first() {
            Some(element) => Err(MatroidError::OutOfRange { element, n }),
            None => Ok(()),
        }
    }

    pub fn rank(&self, x: ElementSet) -> Result<usize, MatroidError> {
        self.check_subset(x)?;
        Ok(self.rank_of(x))
    }

    /// Rank of a set already known to lie in the ground set.
    pub(crate) fn rank_of(&self, x: ElementSet) -> usize {
        match self {
            Matroid::Uniform { rank, .. } => x.len().min(*rank),
            Matroid::Partition(p) => p.rank(x),
            Matroid::Graphic(g) => g.rank(x),
            Matroid::Linear(m) => m.column_rank(x),
            Matroid::Explicit(m) => m.rank(x),
        }
    }

    pub fn is_independent(&self, x: ElementSet) -> Result<bool, MatroidError> {
        Ok(self.rank(x)? == x.len())
    }

    /// `{ y in I : I + x - y independent }` for independent `I` with `I + x` dependent.
    pub fn fundamental_circuit(
        &self,
        i: ElementSet,
        x: Element,
    ) -> Result<ElementSet, MatroidError> {
        self.check_subset(i.with(x))?;
        if !self.is_independent(i)? {
            return Err(MatroidError::NotIndependent(i));
        }
        let with_x = i.with(x);
        if i.contains(x) || self.rank_of(with_x) == with_x.len() {
            return Err(MatroidError::NoCircuit { set: i, element: x });
        }
        Ok(i.iter()
            .filter(|&y| {
                let swapped = with_x.without(y);
                self.rank_of(swapped) == swapped.len()
            })
            .collect())
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank_of(self.ground())
    }

    /// Checks the rank axioms and the loopless assumption; see [`Violation`].
    pub fn validate(&self) -> Result<(), Violation> {
        validate::validate(self)
    }
}

fn check_width(n: usize) -> Result<(), MatroidError> {
    if n > MAX_ELEMENTS {
        Err(MatroidError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn check_sets(n: usize, sets: &[ElementSet]) -> Result<(), MatroidError> {
    for s in sets {
        if let Some(element) = s.difference(ElementSet::full(n)).first() {
            return Err(MatroidError::OutOfRange { element, n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    fn crossed_first() -> Matroid {
        Matroid::partition(4, vec![set(&[0, 1]), set(&[2, 3])], vec![1, 1]).unwrap()
    }

    fn triangle() -> Matroid {
        Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rank_examples() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.rank(set(&[0, 1, 2])), Ok(2));
        assert_eq!(u.rank(ElementSet::EMPTY), Ok(0));
        assert_eq!(triangle().rank(set(&[0, 1, 2])), Ok(2));
        assert_eq!(
            u.rank(set(&[5])),
            Err(MatroidError::OutOfRange { element: 5, n: 4 })
        );
    }

    #[test]
    fn independence_examples() {
        let p = crossed_first();
        assert_eq!(p.is_independent(set(&[0, 3])), Ok(true));
        assert_eq!(p.is_independent(set(&[0, 1])), Ok(false));
        assert_eq!(p.is_independent(ElementSet::EMPTY), Ok(true));
    }

    #[test]
    fn fundamental_circuit_examples() {
        assert_eq!(
            crossed_first().fundamental_circuit(set(&[0, 3]), 1),
            Ok(set(&[0]))
        );
        assert_eq!(
            triangle().fundamental_circuit(set(&[0, 1]), 2),
            Ok(set(&[0, 1]))
        );
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert_eq!(u13.fundamental_circuit(set(&[0]), 2), Ok(set(&[0])));
        assert_eq!(
            Matroid::uniform(2, 3)
                .unwrap()
                .fundamental_circuit(set(&[0]), 2),
            Err(MatroidError::NoCircuit {
                set: set(&[0]),
                element: 2
            })
        );
    }

    #[test]
    fn partition_must_cover_each_element_once() {
        assert!(Matroid::partition(3, vec![set(&[0, 1])], vec![1]).is_err());
        assert!(Matroid::partition(2, vec![set(&[0, 1]), set(&[1])], vec![1, 1]).is_err());
    }
}
