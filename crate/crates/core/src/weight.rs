//! Exact rational weights on ground-set elements.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::set::{Element, ElementSet};

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"2.5"` as an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let whole = BigInt::from_str(if int.is_empty() || int == "-" {
            "0"
        } else {
            int
        })
        .ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let part = BigRational::new(BigInt::from_str(frac).ok()?, scale);
        let whole = BigRational::from_integer(whole);
        return Some(if negative { whole - part } else { whole + part });
    }
    BigRational::from_str(text).ok()
}

/// Formats as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFn {
    values: Vec<BigRational>,
}

impl WeightFn {
    pub fn new(values: Vec<BigRational>) -> Self {
        WeightFn { values }
    }

    pub fn ones(n: usize) -> Self {
        WeightFn::new(vec![BigRational::one(); n])
    }

    pub fn from_integers(values: &[i64]) -> Self {
        WeightFn::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, e: Element) -> &BigRational {
        &self.values[e]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn total(&self, x: ElementSet) -> BigRational {
        x.iter()
            .fold(BigRational::zero(), |acc, e| acc + &self.values[e])
    }

    /// Elements with strictly positive weight.
    pub fn positive_support(&self) -> ElementSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_positive())
            .map(|(e, _)| e)
            .collect()
    }

    /// Distinct weight values of elements in `ground`, heaviest first.
    pub fn distinct_descending(&self, ground: ElementSet) -> Vec<BigRational> {
        let mut distinct: Vec<BigRational> =
            ground.iter().map(|e| self.values[e].clone()).collect();
        distinct.sort_by(|a, b| b.cmp(a));
        distinct.dedup();
        distinct
    }

    /// Class index of every element of `ground` (0 = heaviest); `None` outside.
    pub fn classes(&self, ground: ElementSet) -> (usize, Vec<Option<usize>>) {
        let distinct = self.distinct_descending(ground);
        let class = (0..self.values.len())
            .map(|e| {
                ground
                    .contains(e)
                    .then(|| distinct.iter().position(|w| *w == self.values[e]).unwrap())
            })
            .collect();
        (distinct.len(), class)
    }

    /// Per-class element counts of `x`, heaviest class first.
    pub fn class_vector(&self, ground: ElementSet, x: ElementSet) -> Vec<usize> {
        let (count, class) = self.classes(ground);
        let mut v = vec![0; count];
        for e in x {
            if let Some(c) = class[e] {
                v[c] += 1;
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(parse_rational("1/2"), Some(half.clone()));
        assert_eq!(parse_rational("0.5"), Some(half.clone()));
        assert_eq!(parse_rational("-0.5"), Some(-half));
        assert_eq!(
            parse_rational("7"),
            Some(BigRational::from_integer(7.into()))
        );
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
    }

    #[test]
    fn class_vectors() {
        let w = WeightFn::from_integers(&[5, 4, 4, 1]);
        let all = ElementSet::full(4);
        assert_eq!(
            w.class_vector(all, ElementSet::from_elements([0, 3])),
            vec![1, 0, 1]
        );
        assert_eq!(
            w.class_vector(all, ElementSet::from_elements([1, 2])),
            vec![0, 2, 0]
        );
        assert_eq!(
            w.total(ElementSet::from_elements([1, 2])),
            BigRational::from_integer(8.into())
        );
    }
}
