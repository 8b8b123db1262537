//! Cycle matroid of a multigraph; rank is the size of a spanning forest.

use crate::set::ElementSet;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Graph whose edges (indexed in order) are the ground-set elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graphic {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graphic {
    pub fn rank(&self, x: ElementSet) -> usize {
        let mut forest = DisjointSets::new(self.vertices);
        x.iter()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                forest.union(u, v)
            })
            .count()
    }
}
