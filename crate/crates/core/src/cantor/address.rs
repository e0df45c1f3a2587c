use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use super::word::Word;
use crate::error::{Error, Result};

/// An n-tuple of words, indexing the basic open set Γ(α) of Cantor^n.
///
/// The arity is the number of coordinates. Coordinates are numbered from 1 in
/// the public API (`coord(1)` is the first), matching the dimension indices
/// used by the generator builders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Address {
    coords: SmallVec<[Word; 3]>,
}

/// Weight (m, k): the maximum coordinate length and how many coordinates attain it.
///
/// Ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub m: usize,
    pub k: usize,
}

/// An exact dyadic measure 2^-exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    pub exponent: u64,
}

impl Dyadic {
    pub fn one() -> Self {
        Dyadic { exponent: 0 }
    }

}

impl std::ops::Mul for Dyadic {
    type Output = Dyadic;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: Dyadic) -> Dyadic {
        Dyadic { exponent: self.exponent + other.exponent }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => f.write_str("1"),
            e if e < 128 => write!(f, "1/{}", 1u128 << e),
            e => write!(f, "2^-{e}"),
        }
    }
}

pub(crate) fn check_arity(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ArityMismatch { left: a, right: b })
    }
}

impl Address {
    pub fn new(coords: Vec<Word>) -> Self {
        Address { coords: coords.into() }
    }

    /// The address (ε, …, ε).
    pub fn root(n: usize) -> Self {
        Address { coords: (0..n).map(|_| Word::empty()).collect() }
    }

    /// The address whose only nonempty coordinate is `d` (1-based), holding `word`.
    pub fn unit(n: usize, d: usize, word: Word) -> Self {
        assert!((1..=n).contains(&d), "dimension {d} out of range for arity {n}");
        let mut a = Address::root(n);
        a.coords[d - 1] = word;
        a
    }

    /// The address with a single bit `b` in coordinate `d`, written b_d.
    pub fn bit(n: usize, d: usize, b: bool) -> Self {
        Address::unit(n, d, Word::from_bits([b]))
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Word] {
        &self.coords
    }

    /// Coordinate `d`, 1-based.
    pub fn coord(&self, d: usize) -> &Word {
        &self.coords[d - 1]
    }

    pub fn total_len(&self) -> usize {
        self.coords.iter().map(Word::len).sum()
    }

    /// Coordinate-wise prefix test, assuming equal arity.
    #[inline]
    pub(crate) fn prefix_of(&self, other: &Address) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a.is_prefix_of(b))
    }

    /// Incomparable in some coordinate, assuming equal arity.
    #[inline]
    pub(crate) fn disjoint_from(&self, other: &Address) -> bool {
        self.coords.iter().zip(&other.coords).any(|(a, b)| a.is_incomparable(b))
    }

    /// `self ⪯ other` coordinate-wise.
    pub fn is_prefix_of(&self, other: &Address) -> Result<bool> {
        check_arity(self.arity(), other.arity())?;
        Ok(self.prefix_of(other))
    }

    /// Γ(self) ∩ Γ(other) = ∅.
    pub fn is_incomparable(&self, other: &Address) -> Result<bool> {
        check_arity(self.arity(), other.arity())?;
        Ok(self.disjoint_from(other))
    }

    /// Coordinate-wise concatenation `self.other`.
    pub fn concat(&self, other: &Address) -> Result<Address> {
        check_arity(self.arity(), other.arity())?;
        Ok(self.concat_unchecked(other))
    }

    #[inline]
    pub(crate) fn concat_unchecked(&self, other: &Address) -> Address {
        Address { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.concat(b)).collect() }
    }

    /// The suffix η with `prefix.η == self`, or `None` when `prefix` is not a prefix.
    pub fn strip_prefix(&self, prefix: &Address) -> Option<Address> {
        if self.arity() != prefix.arity() || !prefix.prefix_of(self) {
            return None;
        }
        Some(Address {
            coords: self.coords.iter().zip(&prefix.coords).map(|(w, p)| w.suffix_from(p.len())).collect(),
        })
    }

    /// Append bit `b` to coordinate `d` (1-based): `self.b_d`.
    pub fn child(&self, d: usize, b: bool) -> Address {
        let mut a = self.clone();
        a.coords[d - 1].push(b);
        a
    }

    /// Append a word to coordinate `d` (1-based).
    pub fn extend(&self, d: usize, word: &Word) -> Address {
        let mut a = self.clone();
        a.coords[d - 1] = a.coords[d - 1].concat(word);
        a
    }

    /// Replace coordinate `d` (1-based).
    pub fn with_coord(&self, d: usize, word: Word) -> Address {
        let mut a = self.clone();
        a.coords[d - 1] = word;
        a
    }

    /// Remove the last bit of coordinate `d`, if any.
    pub fn parent_in(&self, d: usize) -> Option<Address> {
        let p = self.coords[d - 1].parent()?;
        Some(self.with_coord(d, p))
    }

    pub fn weight(&self) -> Weight {
        let m = self.coords.iter().map(Word::len).max().unwrap_or(0);
        let k = self.coords.iter().filter(|w| w.len() == m).count();
        Weight { m, k }
    }

    pub fn measure(&self) -> Dyadic {
        Dyadic { exponent: self.total_len() as u64 }
    }

    /// `self.(meet(from, other) − from)` for intersecting `from` and `other`.
    ///
    /// This is the image of Γ(from) ∩ Γ(other) under the prefix replacement
    /// `from ↦ self`.
    #[inline]
    pub(crate) fn graft(&self, from: &Address, other: &Address) -> Address {
        let mut coords = SmallVec::new();
        for ((p, f), o) in self.coords.iter().zip(&from.coords).zip(&other.coords) {
            coords.push(if o.len() > f.len() { p.concat_tail(o, f.len()) } else { p.clone() });
        }
        Address { coords }
    }

    /// `self.graft(from, other) == x.graft(xfrom, xother)` without building either side.
    #[inline]
    pub(crate) fn graft_eq(&self, from: &Address, other: &Address, x: &Address, xfrom: &Address, xother: &Address) -> bool {
        (0..self.coords.len()).all(|i| {
            self.coords[i].concat_tail_eq(&other.coords[i], from.coords[i].len(), &x.coords[i], &xother.coords[i], xfrom.coords[i].len())
        })
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Address {
    type Err = Error;

    /// Parses `(w1,w2,...,wn)` with each word a binary string or `-`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("address must be parenthesized: {s:?}") })?;
        let coords = inner.split(',').map(|w| w.trim().parse()).collect::<Result<Vec<Word>>>()?;
        if coords.len() < 2 {
            return Err(Error::BadArity(coords.len()));
        }
        Ok(Address::new(coords))
    }
}

impl PartialOrd for Address {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the coordinate tuple; arbitrary but total, used for sorting.
impl Ord for Address {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.iter().cmp(other.coords.iter())
    }
}
