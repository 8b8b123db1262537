//! Exhaustive answers computed with full access to both matroids.

use num_rational::BigRational;

use crate::error::MatroidError;
use crate::matroid::Matroid;
use crate::set::ElementSet;
use crate::weight::WeightFn;

fn same_ground(m1: &Matroid, m2: &Matroid) -> Result<usize, MatroidError> {
    let n = m1.ground_size();
    if m2.ground_size() != n {
        return Err(MatroidError::Malformed(format!(
            "ground sizes differ: {n} and {}",
            m2.ground_size()
        )));
    }
    Ok(n)
}

fn common(m1: &Matroid, m2: &Matroid, x: ElementSet) -> bool {
    m1.rank_of(x) == x.len() && m2.rank_of(x) == x.len()
}

/// Every common independent set, in increasing mask order. Branches are cut
/// as soon as a prefix is dependent.
pub fn common_independent_sets(
    m1: &Matroid,
    m2: &Matroid,
) -> Result<Vec<ElementSet>, MatroidError> {
    let n = same_ground(m1, m2)?;
    let mut out = Vec::new();
    let mut stack = vec![(ElementSet::EMPTY, 0)];
    while let Some((set, next)) = stack.pop() {
        out.push(set);
        for e in (next..n).rev() {
            let bigger = set.with(e);
            if common(m1, m2, bigger) {
                stack.push((bigger, e + 1));
            }
        }
    }
    out.sort_by_key(|s| s.bits());
    Ok(out)
}

/// Largest common independent set; the smallest mask among the largest.
pub fn brute_max_common(m1: &Matroid, m2: &Matroid) -> Result<(usize, ElementSet), MatroidError> {
    let sets = common_independent_sets(m1, m2)?;
    let best = sets.iter().copied().fold(
        ElementSet::EMPTY,
        |b, s| if s.len() > b.len() { s } else { b },
    );
    Ok((best.len(), best))
}

/// Both minimax forms with the smallest minimizing mask of each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualReport {
    /// `min_Z r1(Z) + r2(E - Z)`.
    pub rank_form: (usize, ElementSet),
    /// `min_Z r_min(Z) + r_min(E - Z)`.
    pub min_form: (usize, ElementSet),
}

pub fn brute_dual(m1: &Matroid, m2: &Matroid) -> Result<DualReport, MatroidError> {
    let n = same_ground(m1, m2)?;
    let e = ElementSet::full(n);
    let rmin = |x: ElementSet| m1.rank_of(x).min(m2.rank_of(x));
    let mut rank_form = (usize::MAX, ElementSet::EMPTY);
    let mut min_form = (usize::MAX, ElementSet::EMPTY);
    for z in e.subsets() {
        let a = m1.rank_of(z) + m2.rank_of(e.difference(z));
        if a < rank_form.0 {
            rank_form = (a, z);
        }
        let b = rmin(z) + rmin(e.difference(z));
        if b < min_form.0 {
            min_form = (b, z);
        }
    }
    Ok(DualReport {
        rank_form,
        min_form,
    })
}

/// Heaviest common independent sets of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMaximal {
    /// `None` when no common independent set has the size.
    pub weight: Option<BigRational>,
    pub sets: Vec<ElementSet>,
}

impl WMaximal {
    pub fn contains(&self, x: ElementSet) -> bool {
        self.sets.contains(&x)
    }
}

pub fn brute_w_maximal(
    m1: &Matroid,
    m2: &Matroid,
    w: &WeightFn,
    k: usize,
) -> Result<WMaximal, MatroidError> {
    let sets = common_independent_sets(m1, m2)?;
    Ok(w_maximal_among(&sets, w, k))
}

/// The same computation over a precomputed family.
pub fn w_maximal_among(sets: &[ElementSet], w: &WeightFn, k: usize) -> WMaximal {
    let mut weight: Option<BigRational> = None;
    let mut best = Vec::new();
    for &s in sets.iter().filter(|s| s.len() == k) {
        let ws = w.total(s);
        match &weight {
            Some(cur) if ws < *cur => {}
            Some(cur) if ws == *cur => best.push(s),
            _ => {
                weight = Some(ws);
                best = vec![s];
            }
        }
    }
    WMaximal { weight, sets: best }
}

/// Maximum weight over all common independent sets of any size.
pub fn brute_max_weight(
    m1: &Matroid,
    m2: &Matroid,
    w: &WeightFn,
) -> Result<(BigRational, ElementSet), MatroidError> {
    let sets = common_independent_sets(m1, m2)?;
    let mut best = ElementSet::EMPTY;
    let mut value = w.total(best);
    for &s in &sets {
        let ws = w.total(s);
        if ws > value {
            value = ws;
            best = s;
        }
    }
    Ok((value, best))
}

/// A common independent set maximizing its count of heaviest elements, then
/// of second heaviest, and so on; smallest mask on ties.
pub fn brute_lexmax(m1: &Matroid, m2: &Matroid, w: &WeightFn) -> Result<ElementSet, MatroidError> {
    let ground = m1.ground();
    let sets = common_independent_sets(m1, m2)?;
    let mut best = ElementSet::EMPTY;
    let mut profile = w.class_vector(ground, best);
    for &s in &sets {
        let p = w.class_vector(ground, s);
        if p > profile {
            profile = p;
            best = s;
        }
    }
    Ok(best)
}
