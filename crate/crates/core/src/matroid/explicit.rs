//! Matroids given by an explicit list of independent sets.

use std::collections::HashSet;

use crate::set::ElementSet;

/// Above this ground-set size the rank table is not materialized.
pub const RANK_TABLE_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct Explicit {
    n: usize,
    family: Vec<ElementSet>,
    members: HashSet<ElementSet>,
    rank_table: Option<Vec<u8>>,
}

impl PartialEq for Explicit {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.family == other.family
    }
}

impl Eq for Explicit {}

impl Explicit {
    /// Uses `family` verbatim as the independent sets (sorted, deduplicated).
    /// Validation decides whether it is actually a matroid.
    pub fn from_family(n: usize, family: impl IntoIterator<Item = ElementSet>) -> Self {
        let mut family: Vec<ElementSet> = family.into_iter().collect();
        family.sort();
        family.dedup();
        let members: HashSet<ElementSet> = family.iter().copied().collect();
        let rank_table = (n <= RANK_TABLE_LIMIT).then(|| build_rank_table(n, &members));
        Explicit {
            n,
            family,
            members,
            rank_table,
        }
    }

    /// Closes a list of bases (or any generating sets) downward.
    pub fn from_bases(n: usize, bases: impl IntoIterator<Item = ElementSet>) -> Self {
        let mut closed = HashSet::new();
        for b in bases {
            for s in b.subsets() {
                closed.insert(s);
            }
        }
        Explicit::from_family(n, closed)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &[ElementSet] {
        &self.family
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.members.contains(&s)
    }

    /// Maximal members of the family, in mask order.
    pub fn maximal_sets(&self) -> Vec<ElementSet> {
        self.family
            .iter()
            .copied()
            .filter(|&s| !self.family.iter().any(|&t| t != s && s.is_subset(t)))
            .collect()
    }

    /// Size of the largest listed set inside `x`.
    pub fn rank(&self, x: ElementSet) -> usize {
        match &self.rank_table {
            Some(table) => table[x.bits() as usize] as usize,
            None => self
                .family
                .iter()
                .filter(|s| s.is_subset(x))
                .map(|s| s.len())
                .max()
                .unwrap_or(0),
        }
    }
}

fn build_rank_table(n: usize, members: &HashSet<ElementSet>) -> Vec<u8> {
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for mask in 1..size {
        let x = ElementSet::from_bits(mask as u64);
        table[mask] = if members.contains(&x) {
            x.len() as u8
        } else {
            x.iter()
                .map(|e| table[x.without(e).bits() as usize])
                .max()
                .unwrap_or(0)
        };
    }
    table
}
