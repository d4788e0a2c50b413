use std::fmt;

/// A fixed-capacity bitset over the vertices `1..=capacity`.
///
/// Vertex `v` lives in bit `v - 1`. All binary operations require both
/// operands to have been created with the same capacity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

#[inline]
fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(64)
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; word_count(capacity)],
            capacity,
        }
    }

    /// The set `{1, ..., capacity}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (capacity - lo).min(64);
            *w = if bits == 64 { !0 } else { (1u64 << bits) - 1 };
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Self {
        let mut s = Self::new(capacity);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v >= 1 && v <= self.capacity, "vertex {v} outside 1..={}", self.capacity);
        let i = v - 1;
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v >= 1 && v <= self.capacity);
        let i = v - 1;
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        if v == 0 || v > self.capacity {
            return false;
        }
        let i = v - 1;
        self.words[i >> 6] & (1u64 << (i & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Least vertex in the set.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize + 1)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Overwrite `self` with `other`, reusing the allocation when possible.
    #[inline]
    pub fn copy_from(&mut self, other: &VertexSet) {
        self.capacity = other.capacity;
        self.words.clear();
        self.words.extend_from_slice(&other.words);
    }

    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `|self ∩ other|` without materialising the intersection.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Ascending iteration over the members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit + 1);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_set_respects_capacity() {
        for cap in [0, 1, 63, 64, 65, 128, 130] {
            let s = VertexSet::full(cap);
            assert_eq!(s.len(), cap);
            assert_eq!(s.iter().last(), if cap == 0 { None } else { Some(cap) });
        }
    }

    #[test]
    fn first_and_remove() {
        let mut s = VertexSet::from_vertices(200, [70, 3, 199]);
        assert_eq!(s.first(), Some(3));
        s.remove(3);
        assert_eq!(s.first(), Some(70));
        assert_eq!(s.to_vec(), vec![70, 199]);
        assert!(!s.contains(0));
        assert!(!s.contains(201));
    }

    proptest! {
        #[test]
        fn popcount_matches_distinct_members(vs in proptest::collection::vec(1usize..=150, 0..60)) {
            let s = VertexSet::from_vertices(150, vs.iter().copied());
            let mut distinct = vs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            prop_assert_eq!(s.len(), distinct.len());
            prop_assert_eq!(s.to_vec(), distinct);
        }
    }
}
