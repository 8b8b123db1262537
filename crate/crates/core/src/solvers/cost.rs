//! Vertex costs: `w(e)` inside `I`, `-w(e)` outside.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::set::{Element, ElementSet};
use crate::weight::WeightFn;

/// Totally ordered additive path cost.
pub trait PathCost: Clone + Ord + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl PathCost for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Signed element counts per weight class, heaviest class first, compared
/// lexicographically. Stands in for weights `(n+1)^(l-i)` without computing them.
#[derive(Clone, Debug, Default)]
pub struct LexCost(Vec<i64>);

impl LexCost {
    pub fn unit(class: usize) -> Self {
        let mut v = vec![0; class + 1];
        v[class] = 1;
        LexCost(v)
    }

    pub fn counts(&self) -> &[i64] {
        &self.0
    }

    fn at(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl Ord for LexCost {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|i| self.at(i).cmp(&other.at(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialEq for LexCost {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other).is_eq()
    }
}

impl Eq for LexCost {}

impl PartialOrd for LexCost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LexCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl PathCost for LexCost {
    fn zero() -> Self {
        LexCost(Vec::new())
    }

    fn plus(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        LexCost((0..len).map(|i| self.at(i) + other.at(i)).collect())
    }

    fn negated(&self) -> Self {
        LexCost(self.0.iter().map(|c| -c).collect())
    }
}

/// Assigns every element a weight in some cost domain.
pub trait CostModel {
    type Cost: PathCost;

    fn weight(&self, e: Element) -> Self::Cost;

    /// `c(e) = w(e)` for `e` in `I`, `-w(e)` otherwise.
    fn vertex_costs(&self, n: usize, i: ElementSet) -> Vec<Self::Cost> {
        (0..n)
            .map(|e| {
                let w = self.weight(e);
                if i.contains(e) {
                    w
                } else {
                    w.negated()
                }
            })
            .collect()
    }

    /// Heaviest element of `candidates`, smallest index on ties.
    fn heaviest(&self, candidates: ElementSet) -> Option<Element> {
        candidates
            .iter()
            .fold(None, |best: Option<Element>, e| match best {
                Some(b) if self.weight(b) >= self.weight(e) => Some(b),
                _ => Some(e),
            })
    }
}

/// Ordinary rational weights.
pub struct WeightCost<'w>(pub &'w WeightFn);

impl CostModel for WeightCost<'_> {
    type Cost = BigRational;

    fn weight(&self, e: Element) -> BigRational {
        self.0.get(e).clone()
    }
}

/// Weight classes of a ground subset; elements outside weigh nothing.
pub struct LexModel {
    class: Vec<Option<usize>>,
    classes: usize,
}

impl LexModel {
    pub fn new(w: &WeightFn, ground: ElementSet) -> Self {
        let (classes, class) = w.classes(ground);
        LexModel { class, classes }
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    /// Class-count vector of a set.
    pub fn profile(&self, x: ElementSet) -> LexCost {
        x.iter()
            .fold(LexCost::zero(), |acc, e| acc.plus(&self.weight(e)))
    }
}

impl CostModel for LexModel {
    type Cost = LexCost;

    fn weight(&self, e: Element) -> LexCost {
        match self.class[e] {
            Some(c) => LexCost::unit(c),
            None => LexCost::zero(),
        }
    }
}
