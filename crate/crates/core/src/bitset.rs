//! Fixed-capacity vertex bitsets.

use std::fmt;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A set of flat vertex ids in `[0, len)`, stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn empty(len: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert_range(0, len);
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(len: usize, ids: I) -> Self {
        let mut s = Self::empty(len);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Capacity (the vertex count of the universe), not the cardinality.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.len && self.words[id / WORD] >> (id % WORD) & 1 == 1
    }

    /// Returns true if `id` was newly inserted.
    #[inline]
    pub fn insert(&mut self, id: usize) -> bool {
        assert!(id < self.len, "vertex {id} outside universe {}", self.len);
        let w = &mut self.words[id / WORD];
        let bit = 1u64 << (id % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    /// Returns true if `id` was present.
    #[inline]
    pub fn remove(&mut self, id: usize) -> bool {
        if id >= self.len {
            return false;
        }
        let w = &mut self.words[id / WORD];
        let bit = 1u64 << (id % WORD);
        let was = *w & bit != 0;
        *w &= !bit;
        was
    }

    /// Inserts every id in `[start, end)`.
    pub fn insert_range(&mut self, start: usize, end: usize) {
        assert!(start <= end && end <= self.len);
        for id in start..end {
            self.words[id / WORD] |= 1u64 << (id % WORD);
        }
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.len, other.len);
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_count() {
        let mut s = VertexSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.count(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert!(s.remove(64));
        assert!(!s.remove(64));
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(129));
    }

    #[test]
    fn full_and_ranges() {
        let s = VertexSet::full(70);
        assert_eq!(s.count(), 70);
        assert!(!s.contains(70));
        let mut r = VertexSet::empty(70);
        r.insert_range(60, 68);
        assert_eq!(r.iter().collect::<Vec<_>>(), (60..68).collect::<Vec<_>>());
        assert!(r.is_subset(&s));
        assert!(r.intersects(&s));
        assert_eq!(r.intersection(&s), r);
    }

    #[test]
    fn empty_universe() {
        let s = VertexSet::empty(0);
        assert!(s.is_empty());
        assert_eq!(s.first(), None);
        assert_eq!(s.iter().count(), 0);
    }
}
