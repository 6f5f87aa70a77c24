//! Bitset over dense vertex indices.
//!
//! Storage is a little-endian vector of 64-bit words with trailing zero words
//! trimmed, so two sets with the same members are always structurally equal
//! regardless of the universe they were built for. Two inline words cover
//! universes of up to 128 vertices without allocating.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use smallvec::SmallVec;

const WORD_BITS: usize = 64;

type Words = SmallVec<[u64; 2]>;

/// A finite set of vertex indices.
///
/// The total order is lexicographic on the ascending member sequence, so
/// `{0,1} < {0,1,2} < {0,2} < {1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Words,
}

/// Edges are vertex sets; the alias keeps signatures readable.
pub type Edge = VertexSet;

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: Words = SmallVec::from_elem(u64::MAX, n / WORD_BITS);
        let rem = n % WORD_BITS;
        if rem > 0 {
            words.push((1u64 << rem) - 1);
        }
        Self { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        self.words.get(w).is_some_and(|x| x & (1 << b) != 0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - last.leading_zeros() as usize))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        out.trim();
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        Self { words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        let mut out = Self { words };
        out.trim();
        out
    }

    /// `self ⊆ other`.
    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `self ⊊ other`.
    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

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

    /// Image of the set under `map`, where `map[v]` is the new index of `v`
    /// or `None` if `v` is dropped.
    pub fn remap(&self, map: &[Option<usize>]) -> Self {
        self.iter().filter_map(|v| map[v]).collect()
    }

    /// Members shifted up by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        self.iter().map(|v| v + offset).collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // Locate the lowest vertex in the symmetric difference. Below it the
        // sequences agree; the set holding it is larger iff the other set
        // still has members above it.
        let n = self.words.len().max(other.words.len());
        for i in 0..n {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            let diff = a ^ b;
            if diff == 0 {
                continue;
            }
            let bit = diff.trailing_zeros() as usize;
            let d = i * WORD_BITS + bit;
            let (holder_is_self, rest) = if a & (1 << bit) != 0 {
                (true, other)
            } else {
                (false, self)
            };
            let rest_has_larger = rest.last().is_some_and(|m| m > d);
            return match (holder_is_self, rest_has_larger) {
                (true, true) => Ordering::Less,
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Greater,
                (false, false) => Ordering::Less,
            };
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(members: &[usize]) -> Self {
        members.iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
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
