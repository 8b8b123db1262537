//! The minimum-rank oracle: the only view of a matroid pair that solvers get.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use crate::error::MatroidError;
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Answers `r_min(X) = min(r1(X), r2(X))` and counts every answer.
#[derive(Debug)]
pub struct MinRankOracle {
    first: Matroid,
    second: Matroid,
    n: usize,
    queries: Cell<u64>,
}

impl Clone for MinRankOracle {
    /// The clone starts with a fresh ledger.
    fn clone(&self) -> Self {
        MinRankOracle {
            first: self.first.clone(),
            second: self.second.clone(),
            n: self.n,
            queries: Cell::new(0),
        }
    }
}

impl MinRankOracle {
    pub fn new(first: Matroid, second: Matroid) -> Result<Self, MatroidError> {
        let n = first.ground_size();
        if second.ground_size() != n {
            return Err(MatroidError::Malformed(format!(
                "ground sets differ: {} vs {}",
                n,
                second.ground_size()
            )));
        }
        Ok(MinRankOracle {
            first,
            second,
            n,
            queries: Cell::new(0),
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn rmin(&self, x: ElementSet) -> Result<usize, MatroidError> {
        self.first.check_subset(x)?;
        Ok(self.query(x))
    }

    pub fn is_common_independent(&self, i: ElementSet) -> Result<bool, MatroidError> {
        Ok(self.rmin(i)? == i.len())
    }

    pub fn query_count(&self) -> u64 {
        self.queries.get()
    }

    pub(crate) fn query(&self, x: ElementSet) -> usize {
        debug_assert!(x.is_subset(self.ground()));
        self.queries.set(self.queries.get() + 1);
        self.first.rank_of(x).min(self.second.rank_of(x))
    }

    /// The hidden pair. Reserved for brute-force verification.
    pub(crate) fn hidden(&self) -> (&Matroid, &Matroid) {
        (&self.first, &self.second)
    }
}

/// Memoizes oracle answers for the duration of one augmentation step, so that
/// overlapping local-exchange observations cost a single query each.
pub struct QueryCache<'o> {
    oracle: &'o MinRankOracle,
    ground: ElementSet,
    answers: RefCell<HashMap<ElementSet, usize>>,
}

impl<'o> QueryCache<'o> {
    pub fn new(oracle: &'o MinRankOracle, ground: ElementSet) -> Self {
        debug_assert!(ground.is_subset(oracle.ground()));
        QueryCache {
            oracle,
            ground,
            answers: RefCell::new(HashMap::new()),
        }
    }

    /// Ground set the solver works in (a subset of the oracle's).
    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn oracle(&self) -> &'o MinRankOracle {
        self.oracle
    }

    pub fn rmin(&self, x: ElementSet) -> usize {
        if let Some(&v) = self.answers.borrow().get(&x) {
            return v;
        }
        let v = self.oracle.query(x);
        self.answers.borrow_mut().insert(x, v);
        v
    }

    /// Drops memoized answers (start of a new augmentation step).
    pub fn clear(&self) {
        self.answers.borrow_mut().clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    fn crossed() -> MinRankOracle {
        MinRankOracle::new(
            Matroid::partition(4, vec![set(&[0, 1]), set(&[2, 3])], vec![1, 1]).unwrap(),
            Matroid::partition(4, vec![set(&[0, 2]), set(&[1, 3])], vec![1, 1]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rmin_is_pointwise_minimum() {
        let o = MinRankOracle::new(
            Matroid::uniform(1, 3).unwrap(),
            Matroid::uniform(2, 3).unwrap(),
        )
        .unwrap();
        assert_eq!(o.rmin(set(&[0, 1])), Ok(1));
        assert_eq!(o.rmin(ElementSet::EMPTY), Ok(0));
        assert_eq!(crossed().rmin(set(&[0, 3])), Ok(2));
    }

    #[test]
    fn common_independence() {
        let o = crossed();
        assert_eq!(o.is_common_independent(set(&[0, 3])), Ok(true));
        assert_eq!(o.is_common_independent(set(&[0, 1])), Ok(false));
        assert_eq!(o.is_common_independent(ElementSet::EMPTY), Ok(true));
    }

    #[test]
    fn ledger_counts_each_call() {
        let o = crossed();
        assert_eq!(o.query_count(), 0);
        o.rmin(set(&[1])).unwrap();
        assert_eq!(o.query_count(), 1);
        for _ in 0..4 {
            o.rmin(set(&[2])).unwrap();
        }
        assert_eq!(o.query_count(), 5);
        assert!(o.rmin(set(&[9])).is_err());
        assert_eq!(o.query_count(), 5);
        assert_eq!(o.clone().query_count(), 0);
    }

    #[test]
    fn cache_answers_repeats_for_free() {
        let o = crossed();
        let cache = QueryCache::new(&o, o.ground());
        assert_eq!(cache.rmin(set(&[0, 1])), 1);
        assert_eq!(cache.rmin(set(&[0, 1])), 1);
        assert_eq!(o.query_count(), 1);
        cache.clear();
        cache.rmin(set(&[0, 1]));
        assert_eq!(o.query_count(), 2);
    }
}
