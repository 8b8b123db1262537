use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Explicit, Matroid};
use crate::set::{Element, ElementSet};

/// Exhaustive axiom checks up to this ground-set size, sampling above it.
const EXHAUSTIVE_LIMIT: usize = 12;
const SAMPLES: usize = 4096;
const SAMPLE_SEED: u64 = 0x006d_6174_726f_6964;

/// The first axiom a matroid description fails, with witness sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotDownwardClosed {
        set: ElementSet,
        missing: ElementSet,
    },
    ExchangeFails {
        smaller: ElementSet,
        larger: ElementSet,
    },
    EmptySetRank(usize),
    NotUnitMonotone {
        set: ElementSet,
        element: Element,
    },
    NotSubmodular {
        a: ElementSet,
        b: ElementSet,
    },
    Loop(Element),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotDownwardClosed { set, missing } => {
                write!(
                    f,
                    "family is not downward closed: {set} listed but {missing} is not"
                )
            }
            Violation::ExchangeFails { smaller, larger } => write!(
                f,
                "exchange axiom fails: no element of {larger} extends {smaller}"
            ),
            Violation::EmptySetRank(r) => write!(f, "rank of the empty set is {r}"),
            Violation::NotUnitMonotone { set, element } => write!(
                f,
                "rank is not unit-monotone when adding {element} to {set}"
            ),
            Violation::NotSubmodular { a, b } => write!(f, "submodularity fails on {a} and {b}"),
            Violation::Loop(e) => write!(f, "element {e} is a loop"),
        }
    }
}

impl std::error::Error for Violation {}

pub(super) fn validate(m: &Matroid) -> Result<(), Violation> {
    if let Matroid::Explicit(explicit) = m {
        check_family(explicit)?;
    }
    let n = m.ground_size();
    let empty = m.rank_of(ElementSet::EMPTY);
    if empty != 0 {
        return Err(Violation::EmptySetRank(empty));
    }
    for_each_local(n, |x, e, _| {
        let (base, grown) = (m.rank_of(x), m.rank_of(x.with(e)));
        if grown < base || grown > base + 1 {
            Err(Violation::NotUnitMonotone { set: x, element: e })
        } else {
            Ok(())
        }
    })?;
    for_each_local(n, |x, e, f| match f {
        Some(f) => {
            let (a, b) = (x.with(e), x.with(f));
            if m.rank_of(a) + m.rank_of(b) < m.rank_of(a.union(b)) + m.rank_of(x) {
                Err(Violation::NotSubmodular { a, b })
            } else {
                Ok(())
            }
        }
        None => Ok(()),
    })?;
    match (0..n).find(|&e| m.rank_of(ElementSet::singleton(e)) == 0) {
        Some(e) => Err(Violation::Loop(e)),
        None => Ok(()),
    }
}

/// Visits `(X, e, Some(f))` with `e < f` outside `X`, plus `(X, e, None)`.
/// Exhaustive for small ground sets, a fixed pseudo-random sample otherwise.
fn for_each_local(
    n: usize,
    mut visit: impl FnMut(ElementSet, Element, Option<Element>) -> Result<(), Violation>,
) -> Result<(), Violation> {
    if n == 0 {
        return Ok(());
    }
    if n <= EXHAUSTIVE_LIMIT {
        for x in ElementSet::full(n).subsets() {
            let rest = ElementSet::full(n).difference(x);
            for e in rest {
                visit(x, e, None)?;
                for f in rest.iter().filter(|&f| f > e) {
                    visit(x, e, Some(f))?;
                }
            }
        }
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let full = ElementSet::full(n).bits();
    for _ in 0..SAMPLES {
        let x = ElementSet::from_bits(rng.gen::<u64>() & full);
        let rest = ElementSet::full(n).difference(x).to_vec();
        if rest.is_empty() {
            continue;
        }
        let e = rest[rng.gen_range(0..rest.len())];
        visit(x, e, None)?;
        if rest.len() > 1 {
            let f = rest[rng.gen_range(0..rest.len())];
            if f != e {
                visit(x, e.min(f), Some(e.max(f)))?;
            }
        }
    }
    Ok(())
}

fn check_family(m: &Explicit) -> Result<(), Violation> {
    if !m.contains(ElementSet::EMPTY) {
        return Err(Violation::NotDownwardClosed {
            set: m.family().first().copied().unwrap_or_default(),
            missing: ElementSet::EMPTY,
        });
    }
    for &a in m.family() {
        for e in a {
            if !m.contains(a.without(e)) {
                return Err(Violation::NotDownwardClosed {
                    set: a,
                    missing: a.without(e),
                });
            }
        }
    }
    let ground = ElementSet::full(m.ground_size());
    for &a in m.family() {
        // A is maximal inside A + (everything that cannot extend A); the
        // exchange axiom holds iff no listed set there is larger.
        let blocked: ElementSet = ground
            .difference(a)
            .iter()
            .filter(|&e| !m.contains(a.with(e)))
            .collect();
        let span = a.union(blocked);
        if m.rank(span) > a.len() {
            let larger = *m
                .family()
                .iter()
                .find(|s| s.is_subset(span) && s.len() > a.len())
                .expect("rank witness exists");
            return Err(Violation::ExchangeFails { smaller: a, larger });
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

    #[test]
    fn loop_in_explicit_family() {
        let m = Matroid::from_family(3, [set(&[]), set(&[0]), set(&[1])]).unwrap();
        assert_eq!(m.validate(), Err(Violation::Loop(2)));
    }

    #[test]
    fn uniform_is_valid() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().validate(), Ok(()));
    }

    #[test]
    fn not_downward_closed() {
        let m = Matroid::from_family(2, [set(&[]), set(&[0, 1])]).unwrap();
        assert!(matches!(
            m.validate(),
            Err(Violation::NotDownwardClosed { .. })
        ));
    }

    #[test]
    fn exchange_failure_is_reported() {
        // bases {0} and {1,2}: {0} cannot be extended from {1,2}
        let m = Matroid::from_bases(3, [set(&[0]), set(&[1, 2])]).unwrap();
        assert_eq!(
            m.validate(),
            Err(Violation::ExchangeFails {
                smaller: set(&[0]),
                larger: set(&[1, 2])
            })
        );
    }

    #[test]
    fn sampled_validation_on_wide_ground_set() {
        assert_eq!(Matroid::uniform(5, 40).unwrap().validate(), Ok(()));
    }
}
