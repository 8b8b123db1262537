//! Fixed-width subsets of a ground set of at most 64 elements.

use std::fmt;

/// Largest ground set the bitset representation supports.
pub const MAX_ELEMENTS: usize = 64;

/// Index of a ground-set element, dense in `0..n`.
pub type Element = usize;

/// A subset of the ground set stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of {n} elements exceeds bitset width"
        );
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: Element) -> Self {
        assert!(e < MAX_ELEMENTS);
        ElementSet(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(ElementSet::EMPTY, |acc, e| acc.with(e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: Element) -> bool {
        e < MAX_ELEMENTS && self.0 & (1u64 << e) != 0
    }

    /// `self + e`
    #[must_use]
    pub fn with(self, e: Element) -> Self {
        ElementSet(self.0 | (1u64 << e))
    }

    /// `self - e`
    #[must_use]
    pub fn without(self, e: Element) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[must_use]
    pub fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<Element> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Element)
    }

    /// Largest element, if any.
    pub fn last(self) -> Option<Element> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as Element)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<Element> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of their masks.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `self` with exactly `k` elements.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<T: IntoIterator<Item = Element>>(iter: T) -> Self {
        ElementSet::from_elements(iter)
    }
}

impl IntoIterator for ElementSet {
    type Item = Element;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Iterator over the elements of an [`ElementSet`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as Element;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over all submasks of a fixed mask.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let current = self.next?;
        // standard submask walk in increasing order: (x - u) & u
        let following = current.wrapping_sub(self.universe) & self.universe;
        self.next = (following != 0).then_some(following);
        Some(ElementSet(current))
    }
}
