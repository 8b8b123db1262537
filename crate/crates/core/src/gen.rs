//! Seeded random instances for tests and benchmarks.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matroid::{Matroid, RationalMatrix};
use crate::set::ElementSet;
use crate::verify::{check_promise_no_circuit_inclusion, max_circuit_size};
use crate::weight::WeightFn;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random loopless uniform matroid.
pub fn uniform(rng: &mut impl Rng, n: usize) -> Matroid {
    let rank = if n == 0 { 0 } else { rng.gen_range(1..=n) };
    Matroid::uniform(rank, n).unwrap()
}

/// Random partition matroid with at most `max_capacity` per block.
pub fn partition(rng: &mut impl Rng, n: usize, max_capacity: usize) -> Matroid {
    let blocks = rng.gen_range(1..=n.clamp(1, 4));
    let mut assigned: Vec<usize> = (0..n).map(|e| e % blocks).collect();
    assigned.shuffle(rng);
    let mut sets = vec![ElementSet::EMPTY; blocks];
    for (e, &b) in assigned.iter().enumerate() {
        sets[b] = sets[b].with(e);
    }
    sets.retain(|s| !s.is_empty());
    let caps = sets
        .iter()
        .map(|s| rng.gen_range(1..=s.len().min(max_capacity).max(1)))
        .collect();
    Matroid::partition(n, sets, caps).unwrap()
}

/// Random multigraph without self-loops on 2 to 5 vertices.
pub fn graphic(rng: &mut impl Rng, n: usize) -> Matroid {
    let vertices = rng.gen_range(2..=5);
    let edges = (0..n)
        .map(|_| {
            let u = rng.gen_range(0..vertices);
            let mut v = rng.gen_range(0..vertices - 1);
            if v >= u {
                v += 1;
            }
            (u.min(v), u.max(v))
        })
        .collect();
    Matroid::graphic(vertices, edges).unwrap()
}

/// Random small-integer matrix with 2 to 4 rows and no zero column.
pub fn linear(rng: &mut impl Rng, n: usize) -> Matroid {
    let rows = rng.gen_range(2..=4);
    let mut columns: Vec<Vec<i64>> = Vec::with_capacity(n);
    while columns.len() < n {
        let c: Vec<i64> = (0..rows).map(|_| rng.gen_range(-2..=2)).collect();
        if c.iter().any(|&v| v != 0) {
            columns.push(c);
        }
    }
    let matrix = (0..rows)
        .map(|r| {
            columns
                .iter()
                .map(|c| BigRational::from_integer(c[r].into()))
                .collect()
        })
        .collect();
    Matroid::linear(RationalMatrix::from_rows(matrix, n).unwrap()).unwrap()
}

/// Any of the four generated kinds.
pub fn any_matroid(rng: &mut impl Rng, n: usize) -> Matroid {
    match rng.gen_range(0..4) {
        0 => uniform(rng, n),
        1 => partition(rng, n, n),
        2 => graphic(rng, n),
        _ => linear(rng, n),
    }
}

pub fn mixed_pair(rng: &mut impl Rng, n: usize) -> (Matroid, Matroid) {
    (any_matroid(rng, n), any_matroid(rng, n))
}

/// A pair where, in one direction, no circuit lies inside a circuit of the
/// other matroid. Rejection sampling over mixed pairs.
pub fn no_circuit_inclusion_pair(rng: &mut impl Rng, n: usize) -> (Matroid, Matroid) {
    loop {
        let (m1, m2) = mixed_pair(rng, n);
        if check_promise_no_circuit_inclusion(&m1, &m2) {
            return (m1, m2);
        }
    }
}

/// A pair whose smaller maximum circuit size is at most `gamma` (at least 1),
/// returned with that size.
pub fn small_circuit_pair(rng: &mut impl Rng, n: usize, gamma: usize) -> (Matroid, Matroid, usize) {
    loop {
        let small = if rng.gen_bool(0.5) {
            partition(rng, n, gamma.saturating_sub(1).max(1))
        } else {
            Matroid::uniform(
                rng.gen_range(1..=gamma.saturating_sub(1).clamp(1, n.max(1))),
                n,
            )
            .unwrap()
        };
        let other = any_matroid(rng, n);
        let g = max_circuit_size(&small).min(max_circuit_size(&other));
        if g <= gamma {
            return if rng.gen_bool(0.5) {
                (small, other, g)
            } else {
                (other, small, g)
            };
        }
    }
}

/// Partition pair with blocks of size about 4 and capacity 1 or 2.
pub fn partition_pair(rng: &mut impl Rng, n: usize) -> (Matroid, Matroid) {
    let blocks = n.div_ceil(4).max(1);
    let make = |rng: &mut dyn rand::RngCore| {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut sets = vec![ElementSet::EMPTY; blocks];
        for (pos, &e) in order.iter().enumerate() {
            sets[pos % blocks] = sets[pos % blocks].with(e);
        }
        sets.retain(|s| !s.is_empty());
        let caps = sets
            .iter()
            .map(|s| rng.gen_range(1..=2.min(s.len())))
            .collect();
        Matroid::partition(n, sets, caps).unwrap()
    };
    (make(rng), make(rng))
}

/// Integer weights drawn from `low..=high`.
pub fn weights(rng: &mut impl Rng, n: usize, low: i64, high: i64) -> WeightFn {
    let v: Vec<i64> = (0..n).map(|_| rng.gen_range(low..=high)).collect();
    WeightFn::from_integers(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_matroids_are_loopless_and_valid() {
        let mut r = rng(7);
        for n in 0..=7 {
            for _ in 0..20 {
                let m = any_matroid(&mut r, n);
                assert_eq!(m.ground_size(), n);
                m.validate().unwrap();
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = mixed_pair(&mut rng(3), 6);
        let b = mixed_pair(&mut rng(3), 6);
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn regimes_hold() {
        let mut r = rng(11);
        for _ in 0..10 {
            let (m1, m2) = no_circuit_inclusion_pair(&mut r, 6);
            assert!(check_promise_no_circuit_inclusion(&m1, &m2));
            let (m1, m2, g) = small_circuit_pair(&mut r, 6, 3);
            assert!(g <= 3);
            assert_eq!(g, max_circuit_size(&m1).min(max_circuit_size(&m2)));
        }
    }
}
