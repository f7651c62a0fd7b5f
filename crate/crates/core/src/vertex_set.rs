//! Fixed-width vertex subsets over a universe of at most 64 vertices.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex universe a [`VertexSet`] can address.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `{0, .., universe - 1}` stored as one machine word.
///
/// Bits at positions `>= universe` are always zero. Sets over different
/// universes never compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

#[inline]
pub(crate) fn universe_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe {universe} exceeds 64");
        VertexSet {
            bits: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = universe_mask(universe);
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        assert!(v < universe, "vertex {v} outside universe {universe}");
        let mut s = Self::empty(universe);
        s.bits = 1 << v;
        s
    }

    /// Builds a set from raw bits, rejecting bits outside the universe.
    pub fn from_bits(universe: usize, bits: u64) -> Result<Self> {
        if universe > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe));
        }
        if bits & !universe_mask(universe) != 0 {
            let v = (bits & !universe_mask(universe)).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: v, n: universe });
        }
        Ok(VertexSet {
            bits,
            universe: universe as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(universe: usize, bits: u64) -> Self {
        debug_assert!(bits & !universe_mask(universe) == 0);
        VertexSet {
            bits,
            universe: universe as u8,
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Result<Self> {
        if universe > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe));
        }
        let mut bits = 0u64;
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet {
            bits,
            universe: universe as u8,
        })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.bits &= !(1 << v);
        }
    }

    #[inline]
    fn check(self, other: VertexSet) {
        debug_assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        self.check(other);
        VertexSet {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        self.check(other);
        VertexSet {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        self.check(other);
        VertexSet {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    #[inline]
    pub fn complement(self) -> VertexSet {
        VertexSet {
            bits: !self.bits & universe_mask(self.universe()),
            universe: self.universe,
        }
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.check(other);
        self.bits & other.bits != 0
    }

    /// Least member.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Same members, reinterpreted over a different universe.
    pub fn with_universe(self, universe: usize) -> Result<VertexSet> {
        VertexSet::from_bits(universe, self.bits)
    }
}

/// Canonical order: by size, then lexicographically by sorted member list.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| {
                let diff = self.bits ^ other.bits;
                if diff == 0 {
                    Ordering::Equal
                } else if self.bits & (diff & diff.wrapping_neg()) != 0 {
                    // lowest differing element belongs to self
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}
