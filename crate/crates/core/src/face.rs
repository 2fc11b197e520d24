use std::cmp::Ordering;
use std::fmt;

/// A set of vertex indices stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FaceSet(u64);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);
    pub const CAPACITY: usize = 64;

    pub fn from_bits(bits: u64) -> Self {
        FaceSet(bits)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == 64 {
            FaceSet(u64::MAX)
        } else {
            FaceSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        FaceSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: FaceSet) -> Self {
        FaceSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FaceSet) -> Self {
        FaceSet(self.0 & other.0)
    }

    pub fn difference(self, other: FaceSet) -> Self {
        FaceSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Self {
        FaceSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        FaceSet(self.0 & !(1u64 << v))
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending vertex indices.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending index sequences.
    pub fn lex_cmp(self, other: FaceSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Canonical facet order: larger sets first, then lexicographic.
    pub fn canonical_cmp(self, other: FaceSet) -> Ordering {
        other.len().cmp(&self.len()).then_with(|| self.lex_cmp(other))
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = FaceSet> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(FaceSet(cur))
        })
    }

    /// Render with a name table, e.g. `{x1,x3}`.
    pub fn display_with<'a>(self, names: &'a [String]) -> FaceDisplay<'a> {
        FaceDisplay { face: self, names }
    }
}

impl FromIterator<usize> for FaceSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(FaceSet::EMPTY, |f, v| f.with(v))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

pub struct FaceDisplay<'a> {
    face: FaceSet,
    names: &'a [String],
}

impl fmt::Display for FaceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.face.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match self.names.get(v) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "#{v}")?,
            }
        }
        write!(f, "}}")
    }
}

/// Keep only the inclusion-maximal sets, sorted canonically and deduplicated.
pub fn maximal_sets(mut sets: Vec<FaceSet>) -> Vec<FaceSet> {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
    let mut kept: Vec<FaceSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // canonical order puts larger sets first, so any superset is already kept
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept
}

/// Keep only the inclusion-minimal sets, sorted by size then lexicographically.
pub fn minimal_sets(mut sets: Vec<FaceSet>) -> Vec<FaceSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b)));
    sets.dedup();
    let mut kept: Vec<FaceSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}
