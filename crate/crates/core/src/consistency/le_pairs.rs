//! Local-exchange observations `r_min((I ∪ X) \ Y)`.

use std::collections::HashMap;

use crate::error::ConsistencyError;
use crate::oracle::QueryCache;
use crate::set::ElementSet;

/// One observed local exchange: `X` outside `I ∪ S ∪ T`, `Y` inside `I`,
/// both of size one or two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeObservation {
    pub x: ElementSet,
    pub y: ElementSet,
    pub value: usize,
}

impl LeObservation {
    /// Lowest value the rank axioms allow, `|I| - |Y|`.
    pub fn floor(&self, k: usize) -> usize {
        k - self.y.len()
    }

    /// The observation shows an exchangeable pair in each matroid.
    pub fn is_high(&self, k: usize) -> bool {
        self.value > self.floor(k)
    }
}

/// Nonempty subsets of size at most two, singletons first.
pub fn small_subsets(s: ElementSet) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = s.iter().map(ElementSet::singleton).collect();
    for a in s {
        for b in s.iter().filter(|&b| b > a) {
            out.push(ElementSet::from_elements([a, b]));
        }
    }
    out
}

/// All observations for one independent set, indexed by `(X, Y)`.
#[derive(Clone, Debug)]
pub struct LeTable {
    independent: ElementSet,
    rest: ElementSet,
    observations: Vec<LeObservation>,
    index: HashMap<(ElementSet, ElementSet), usize>,
}

impl LeTable {
    /// Queries every pair shape once (through the step cache).
    pub fn observe(
        cache: &QueryCache<'_>,
        i: ElementSet,
        rest: ElementSet,
    ) -> Result<Self, ConsistencyError> {
        let mut observations = Vec::new();
        let ys = small_subsets(i);
        for x in small_subsets(rest) {
            for &y in &ys {
                let value = cache.rmin(i.union(x).difference(y));
                observations.push(LeObservation { x, y, value });
            }
        }
        LeTable::from_observations(i, rest, observations)
    }

    /// Builds a table from externally supplied values, checking their range.
    pub fn from_observations(
        i: ElementSet,
        rest: ElementSet,
        observations: Vec<LeObservation>,
    ) -> Result<Self, ConsistencyError> {
        let k = i.len();
        let mut index = HashMap::new();
        for (pos, obs) in observations.iter().enumerate() {
            let low = k - obs.y.len();
            let high = low + obs.x.len().min(obs.y.len());
            if obs.value < low || obs.value > high {
                return Err(ConsistencyError::ValueOutOfRange {
                    x: obs.x,
                    y: obs.y,
                    value: obs.value,
                    low,
                    high,
                });
            }
            index.insert((obs.x, obs.y), pos);
        }
        Ok(LeTable {
            independent: i,
            rest,
            observations,
            index,
        })
    }

    pub fn independent(&self) -> ElementSet {
        self.independent
    }

    pub fn rest(&self) -> ElementSet {
        self.rest
    }

    pub fn len(&self) -> usize {
        self.observations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.observations.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LeObservation> {
        self.observations.iter()
    }

    pub fn value(&self, x: ElementSet, y: ElementSet) -> Option<usize> {
        self.index.get(&(x, y)).map(|&p| self.observations[p].value)
    }

    pub fn is_evil(&self, obs: &LeObservation) -> Result<bool, ConsistencyError> {
        is_evil(obs, self.independent.len(), |x, y| self.value(x, y))
    }
}

/// A 2x2 pair at value `|I| - 1` whose proper subpairs all sit at their floor.
pub fn is_evil(
    obs: &LeObservation,
    k: usize,
    subpair: impl Fn(ElementSet, ElementSet) -> Option<usize>,
) -> Result<bool, ConsistencyError> {
    if obs.x.len() != 2 || obs.y.len() != 2 || obs.value + 1 != k {
        return Ok(false);
    }
    for x in small_subsets(obs.x) {
        for y in small_subsets(obs.y) {
            if x == obs.x && y == obs.y {
                continue;
            }
            let value = subpair(x, y).ok_or(ConsistencyError::MissingSubpair { x, y })?;
            if value != k - y.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
