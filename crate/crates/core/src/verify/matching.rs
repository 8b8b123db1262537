//! Perfect matchings between two small element sets by explicit enumeration.

use crate::set::{Element, ElementSet};

pub type Matching = Vec<(Element, Element)>;

/// Every perfect matching between `left` and `right`, each listed as
/// `(l, r)` pairs in increasing `l`.
pub fn perfect_matchings(
    left: ElementSet,
    right: ElementSet,
    edge: impl Fn(Element, Element) -> bool,
) -> Vec<Matching> {
    let mut out = Vec::new();
    if left.len() == right.len() {
        extend(
            &left.to_vec(),
            right,
            &edge,
            &mut Vec::new(),
            &mut out,
            usize::MAX,
        );
    }
    out
}

pub fn has_perfect_matching(
    left: ElementSet,
    right: ElementSet,
    edge: impl Fn(Element, Element) -> bool,
) -> bool {
    if left.len() != right.len() {
        return false;
    }
    let mut out = Vec::new();
    extend(&left.to_vec(), right, &edge, &mut Vec::new(), &mut out, 1);
    !out.is_empty()
}

fn extend(
    left: &[Element],
    free: ElementSet,
    edge: &impl Fn(Element, Element) -> bool,
    current: &mut Matching,
    out: &mut Vec<Matching>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let Some((&l, rest)) = left.split_first() else {
        out.push(current.clone());
        return;
    };
    for r in free.iter().filter(|&r| edge(l, r)) {
        current.push((l, r));
        extend(rest, free.without(r), edge, current, out, limit);
        current.pop();
    }
}
