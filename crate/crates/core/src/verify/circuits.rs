//! Circuit enumeration and the circuit-inclusion promise.

use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Minimal dependent sets in increasing mask order.
pub fn circuits(m: &Matroid) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for x in m.ground().subsets() {
        if m.rank_of(x) == x.len() {
            continue;
        }
        // dependent with every one-smaller subset independent
        if m.rank_of(x) == x.len() - 1 && x.iter().all(|e| m.rank_of(x.without(e)) == x.len() - 1) {
            out.push(x);
        }
    }
    out
}

pub fn max_circuit_size(m: &Matroid) -> usize {
    circuits(m).iter().map(|c| c.len()).max().unwrap_or(0)
}

/// Whether some circuit of `inner` lies inside some circuit of `outer`.
pub fn has_circuit_inclusion(inner: &[ElementSet], outer: &[ElementSet]) -> bool {
    inner.iter().any(|&c| outer.iter().any(|&d| c.is_subset(d)))
}

/// True when no circuit of one matroid lies inside a circuit of the other,
/// for at least one of the two directions.
pub fn check_promise_no_circuit_inclusion(m1: &Matroid, m2: &Matroid) -> bool {
    let (c1, c2) = (circuits(m1), circuits(m2));
    !has_circuit_inclusion(&c2, &c1) || !has_circuit_inclusion(&c1, &c2)
}
