//! Shared unit-test instances.

use crate::matroid::Matroid;
use crate::oracle::MinRankOracle;
use crate::set::ElementSet;

pub(crate) fn set(e: &[usize]) -> ElementSet {
    ElementSet::from_elements(e.iter().copied())
}

/// Blocks `{0,1},{2,3}` against `{0,2},{1,3}`, all capacities 1.
pub(crate) fn crossed() -> MinRankOracle {
    let m1 = Matroid::partition(4, vec![set(&[0, 1]), set(&[2, 3])], vec![1, 1]).unwrap();
    let m2 = Matroid::partition(4, vec![set(&[0, 2]), set(&[1, 3])], vec![1, 1]).unwrap();
    MinRankOracle::new(m1, m2).unwrap()
}
