//! Dense vertex sets over a fixed universe `{0, …, n-1}`, one bit per vertex.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

const BITS: usize = u64::BITS as usize;

/// A subset of the vertices of a graph on `n` vertices.
///
/// Words beyond bit `n - 1` are kept zero, so popcounts and word-wise set
/// operations never need masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

#[inline]
fn word_index(v: usize) -> (usize, u64) {
    (v / BITS, 1u64 << (v % BITS))
}

impl VertexSet {
    /// Empty set over `{0, …, n-1}`.
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(BITS)],
        }
    }

    /// The full set `{0, …, n-1}`.
    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, word) in set.words.iter_mut().enumerate() {
            let bits_here = (universe - i * BITS).min(BITS);
            *word = if bits_here == BITS {
                u64::MAX
            } else {
                (1u64 << bits_here) - 1
            };
        }
        set
    }

    /// Builds a set from vertex indices, rejecting anything outside the universe.
    pub fn from_indices(
        universe: usize,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, crate::graph::GraphError> {
        let mut set = Self::empty(universe);
        for v in indices {
            if v >= universe {
                return Err(crate::graph::GraphError::InvalidVertex { vertex: v, n: universe });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of members, by popcount over the words.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inserts `v`; returns whether it was newly added. Panics outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, bit) = word_index(v);
        let added = self.words[w] & bit == 0;
        self.words[w] |= bit;
        added
    }

    /// Removes `v`; returns whether it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, bit) = word_index(v);
        let present = self.words[w] & bit != 0;
        self.words[w] &= !bit;
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, bit) = word_index(v);
        self.words[w] & bit != 0
    }

    /// In-place union. Both sets must share a universe.
    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `|other \ self|`: how many members of `other` are missing from `self`.
    #[inline]
    pub fn missing_from(&self, other: &Self) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (b & !a).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * BITS + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{:?}", self.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_has_no_stray_bits() {
        for n in 0..200 {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            let mut built = VertexSet::empty(n);
            for v in 0..n {
                built.insert(v);
            }
            assert_eq!(full, built);
        }
    }

    #[test]
    fn union_and_missing_count() {
        let mut a = VertexSet::from_indices(130, [0, 64, 129]).unwrap();
        let b = VertexSet::from_indices(130, [64, 65, 128]).unwrap();
        assert_eq!(a.missing_from(&b), 2);
        a.union_with(&b);
        assert_eq!(a.to_vec(), vec![0, 64, 65, 128, 129]);
        assert_eq!(a.missing_from(&b), 0);
    }

    #[test]
    fn iter_is_ascending() {
        let s = VertexSet::from_indices(70, [69, 3, 0, 63, 64]).unwrap();
        assert_eq!(s.to_vec(), vec![0, 3, 63, 64, 69]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(VertexSet::from_indices(4, [4]).is_err());
    }
}
