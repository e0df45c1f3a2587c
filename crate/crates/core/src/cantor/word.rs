use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite binary word, one coordinate of an address.
///
/// Bits are packed most-significant-first into 64-bit chunks. The first chunk
/// is stored inline and later chunks only exist for words longer than 64 bits.
/// Bits past `len` are always zero, so derived equality and hashing agree with
/// word equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    len: u32,
    head: u64,
    tail: Option<Box<[u64]>>,
}

#[inline]
fn top_mask(r: u32) -> u64 {
    if r == 0 {
        0
    } else if r >= 64 {
        u64::MAX
    } else {
        !(u64::MAX >> r)
    }
}

impl Word {
    /// The empty word ε.
    pub const fn empty() -> Self {
        Word { len: 0, head: 0, tail: None }
    }

    #[inline]
    fn short(len: u32, head: u64) -> Self {
        debug_assert!(len <= 64);
        Word { len, head: head & top_mask(len), tail: None }
    }

    fn from_chunks(len: u32, mut chunks: Vec<u64>) -> Self {
        let used = (len as usize).div_ceil(64).max(1);
        chunks.resize(used, 0);
        let r = len % 64;
        if r != 0 {
            chunks[used - 1] &= top_mask(r);
        }
        let head = chunks[0];
        let tail = (used > 1).then(|| chunks[1..].to_vec().into_boxed_slice());
        Word { len, head, tail }
    }

    #[inline]
    fn chunk(&self, i: usize) -> u64 {
        if i == 0 {
            self.head
        } else {
            self.tail.as_ref().map_or(0, |t| t[i - 1])
        }
    }

    fn chunks(&self) -> Vec<u64> {
        let mut v = vec![self.head];
        if let Some(t) = &self.tail {
            v.extend_from_slice(t);
        }
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut chunks = vec![0u64];
        let mut len = 0u32;
        for b in bits {
            let i = len as usize;
            if i / 64 == chunks.len() {
                chunks.push(0);
            }
            if b {
                chunks[i / 64] |= 1u64 << (63 - (i % 64));
            }
            len += 1;
        }
        Word::from_chunks(len, chunks)
    }

    /// A word of length `len` whose bits are the low `len` bits of `value`, most significant first.
    pub fn from_u64(value: u64, len: u32) -> Self {
        assert!(len <= 64);
        if len == 0 {
            return Word::empty();
        }
        Word::short(len, value << (64 - len))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len());
        (self.chunk(i / 64) >> (63 - (i % 64))) & 1 == 1
    }

    pub fn last(&self) -> Option<bool> {
        (self.len > 0).then(|| self.bit(self.len() - 1))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    pub fn push(&mut self, b: bool) {
        *self = self.pushed(b);
    }

    /// The word with one bit appended.
    pub fn pushed(&self, b: bool) -> Word {
        let i = self.len;
        if i < 64 {
            let v = if b { self.head | (1u64 << (63 - i)) } else { self.head };
            return Word::short(i + 1, v);
        }
        let mut chunks = self.chunks();
        if i.is_multiple_of(64) {
            chunks.push(0);
        }
        if b {
            chunks[i as usize / 64] |= 1u64 << (63 - (i % 64));
        }
        Word::from_chunks(i + 1, chunks)
    }

    /// The word with its last bit removed.
    pub fn parent(&self) -> Option<Word> {
        if self.len == 0 {
            return None;
        }
        Some(self.prefix(self.len() - 1))
    }

    /// The first `k` bits.
    pub fn prefix(&self, k: usize) -> Word {
        assert!(k <= self.len());
        if k <= 64 {
            return Word::short(k as u32, self.head);
        }
        Word::from_chunks(k as u32, self.chunks())
    }

    /// The bits from position `k` on.
    pub fn suffix_from(&self, k: usize) -> Word {
        assert!(k <= self.len());
        if k == 0 {
            return self.clone();
        }
        if self.len <= 64 {
            return Word::short(self.len - k as u32, if k == 64 { 0 } else { self.head << k });
        }
        Word::from_bits((k..self.len()).map(|i| self.bit(i)))
    }

    /// Concatenation `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        self.concat_tail(other, 0)
    }

    /// `self` followed by the bits of `src` from position `k` on.
    #[inline]
    pub fn concat_tail(&self, src: &Word, k: usize) -> Word {
        let src_len = src.len();
        debug_assert!(k <= src_len);
        if k == src_len {
            return self.clone();
        }
        let total = self.len() + src_len - k;
        if total <= 64 && src_len <= 64 {
            let tail = (src.head << k) >> self.len;
            return Word { len: total as u32, head: self.head | tail, tail: None };
        }
        Word::from_bits(self.iter().chain((k..src_len).map(|i| src.bit(i))))
    }

    /// `self.concat_tail(src, k) == other.concat_tail(osrc, ok)`, where a start
    /// past the end of the source appends nothing.
    #[inline]
    pub(crate) fn concat_tail_eq(&self, src: &Word, k: usize, other: &Word, osrc: &Word, ok: usize) -> bool {
        let (k, ok) = (k.min(src.len()), ok.min(osrc.len()));
        let total = self.len() + src.len() - k;
        if total != other.len() + osrc.len() - ok {
            return false;
        }
        if total <= 64 && src.len <= 64 && osrc.len <= 64 {
            let left = self.head | src.head.checked_shl(k as u32).unwrap_or(0).checked_shr(self.len).unwrap_or(0);
            let right = other.head | osrc.head.checked_shl(ok as u32).unwrap_or(0).checked_shr(other.len).unwrap_or(0);
            return left == right;
        }
        self.concat_tail(src, k) == other.concat_tail(osrc, ok)
    }

    /// `self ⪯ other`.
    #[inline]
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        if self.len > other.len {
            return false;
        }
        if self.len <= 64 {
            return (self.head ^ other.head) & top_mask(self.len) == 0;
        }
        self.long_prefix_of(other)
    }

    #[cold]
    fn long_prefix_of(&self, other: &Word) -> bool {
        let full = (self.len / 64) as usize;
        if (0..full).any(|i| self.chunk(i) != other.chunk(i)) {
            return false;
        }
        let r = self.len % 64;
        r == 0 || (self.chunk(full) ^ other.chunk(full)) & top_mask(r) == 0
    }

    /// Neither word is a prefix of the other.
    #[inline]
    pub fn is_incomparable(&self, other: &Word) -> bool {
        let (short, long) = if self.len <= other.len { (self, other) } else { (other, self) };
        !short.is_prefix_of(long)
    }

    /// Per-bit complement.
    pub fn complement(&self) -> Word {
        Word::from_bits(self.iter().map(|b| !b))
    }

    /// Words of length `len` in lexicographic order.
    pub fn all_of_length(len: u32) -> impl Iterator<Item = Word> {
        assert!(len < 64, "enumerating words of length {len}");
        (0..(1u64 << len)).map(move |v| Word::from_u64(v, len))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty word must be written as '-'".into() });
        }
        let mut w = Word::empty();
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => w.push(false),
                '1' => w.push(true),
                _ => return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?} in word") }),
            }
        }
        Ok(w)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on bit strings (a proper prefix sorts first).
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self.tail.is_none() && other.tail.is_none() {
            return self.head.cmp(&other.head).then(self.len.cmp(&other.len));
        }
        self.iter().cmp(other.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn prefix_examples() {
        assert!(w("-").is_prefix_of(&w("01")));
        assert!(!w("01").is_prefix_of(&w("0")));
        assert!(w("01").is_prefix_of(&w("011")));
    }

    #[test]
    fn incomparable_examples() {
        assert!(w("0").is_incomparable(&w("1")));
        assert!(!w("0").is_incomparable(&w("01")));
        assert!(w("01").is_incomparable(&w("00")));
    }

    #[test]
    fn long_words_cross_chunk_boundaries() {
        let a = Word::from_bits((0..70).map(|i| i % 3 == 0));
        let b = a.concat(&w("101"));
        assert_eq!(b.len(), 73);
        assert!(a.is_prefix_of(&b));
        assert_eq!(b.suffix_from(70), w("101"));
        assert_eq!(b.prefix(70), a);
        assert!(!b.is_prefix_of(&a));
        let mut c = a.clone();
        c.push(false);
        assert!(c.is_incomparable(&b));
        assert_eq!(a.suffix_from(3).len(), 67);
        assert_eq!(a.suffix_from(3), Word::from_bits((3..70).map(|i| i % 3 == 0)));
    }

    #[test]
    fn concat_tail_matches_concat_of_suffix() {
        let long = Word::from_bits((0..90).map(|i| i % 5 == 1));
        for (p, s, k) in [("-", "0110", 1), ("10", "0110", 0), ("1", "01", 2), ("-", "-", 0)] {
            assert_eq!(w(p).concat_tail(&w(s), k), w(p).concat(&w(s).suffix_from(k)));
        }
        assert_eq!(w("1").concat_tail(&long, 30), w("1").concat(&long.suffix_from(30)));
        assert_eq!(long.concat_tail(&w("101"), 1), long.concat(&w("01")));
    }

    #[test]
    fn display_round_trip() {
        for s in ["-", "0", "1", "0110", "111111"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert!("".parse::<Word>().is_err());
        assert!("012".parse::<Word>().is_err());
    }

    #[test]
    fn complement_flips_bits() {
        assert_eq!(w("0110").complement(), w("1001"));
        assert_eq!(w("-").complement(), w("-"));
    }
}
