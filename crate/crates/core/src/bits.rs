//! Fixed-width bit vectors.
//!
//! A [`SubsetElement`] is a subset of a ground set `{0, .., width - 1}`,
//! stored as little-endian 64-bit words. The same type doubles as an index
//! set over a carrier (down-sets, contact rows, selector profiles).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetElement {
    width: usize,
    words: Vec<u64>,
}

fn word_count(width: usize) -> usize {
    width.div_ceil(WORD)
}

impl SubsetElement {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            words: vec![0; word_count(width)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self {
            width,
            words: vec![u64::MAX; word_count(width)],
        };
        s.trim();
        s
    }

    pub fn singleton(width: usize, point: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(point);
        s
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(width: usize, points: I) -> Self {
        let mut s = Self::empty(width);
        for p in points {
            s.insert(p);
        }
        s
    }

    /// Builds an element from the low `width` bits of `bits`. Panics if a
    /// bit at or above `width` is set.
    pub fn from_u64(width: usize, bits: u64) -> Self {
        assert!(
            width >= WORD || bits >> width == 0,
            "bit pattern {bits:#x} exceeds width {width}"
        );
        let mut s = Self::empty(width);
        if !s.words.is_empty() {
            s.words[0] = bits;
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low word of the bit pattern; exact for widths up to 64.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.width && self.words[point / WORD] >> (point % WORD) & 1 == 1
    }

    pub fn insert(&mut self, point: usize) {
        assert!(point < self.width, "point {point} out of width {}", self.width);
        self.words[point / WORD] |= 1u64 << (point % WORD);
    }

    pub fn remove(&mut self, point: usize) {
        assert!(point < self.width, "point {point} out of width {}", self.width);
        self.words[point / WORD] &= !(1u64 << (point % WORD));
    }

    pub fn set(&mut self, point: usize, value: bool) {
        if value {
            self.insert(point)
        } else {
            self.remove(point)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.width)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn same_width(&self, other: &Self) -> bool {
        self.width == other.width
    }

    fn check_width(&self, other: &Self) {
        assert_eq!(self.width, other.width, "width mismatch");
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// True iff `self AND other` has a point other than `point`.
    pub fn intersects_beyond(&self, other: &Self, point: usize) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).enumerate().any(|(i, (a, b))| {
            let mut w = a & b;
            if i == point / WORD {
                w &= !(1u64 << (point % WORD));
            }
            w != 0
        })
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = Self {
            width: self.width,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Lowercase hexadecimal of the bit pattern without leading zeros
    /// (`"0"` for the empty set).
    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        for w in self.words.iter().rev() {
            if out.is_empty() {
                if *w != 0 {
                    out = format!("{w:x}");
                }
            } else {
                out.push_str(&format!("{w:016x}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the output of [`to_hex`](Self::to_hex). Returns `None` on a
    /// malformed string or a set bit at or above `width`.
    pub fn from_hex(width: usize, text: &str) -> Option<Self> {
        let digits = text.strip_prefix("0x").unwrap_or(text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_hexdigit()) {
            return None;
        }
        let mut s = Self::empty(width);
        for (pos, ch) in digits.bytes().rev().enumerate() {
            let nibble = (ch as char).to_digit(16).unwrap() as u64;
            for bit in 0..4 {
                if nibble >> bit & 1 == 1 {
                    let point = pos * 4 + bit;
                    if point >= width {
                        return None;
                    }
                    s.insert(point);
                }
            }
        }
        Some(s)
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + tz);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Numeric order of the bit patterns (most significant word first); widths
/// are compared first.
impl Ord for SubsetElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for SubsetElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}/{}", self.width)
    }
}

impl BitOr for &SubsetElement {
    type Output = SubsetElement;

    fn bitor(self, rhs: Self) -> SubsetElement {
        self.union(rhs)
    }
}

impl BitAnd for &SubsetElement {
    type Output = SubsetElement;

    fn bitand(self, rhs: Self) -> SubsetElement {
        self.intersection(rhs)
    }
}

impl Not for &SubsetElement {
    type Output = SubsetElement;

    fn not(self) -> SubsetElement {
        self.complement()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement_respect_width() {
        let full = SubsetElement::full(70);
        assert_eq!(full.count(), 70);
        assert!(full.complement().is_empty());
        assert!(SubsetElement::empty(0).is_empty());
        assert!(SubsetElement::full(0).is_full());
    }

    #[test]
    fn order_is_numeric() {
        let a = SubsetElement::from_points(130, [129]);
        let b = SubsetElement::from_points(130, [0, 1, 2, 64]);
        assert!(b < a);
        assert!(SubsetElement::empty(130) < b);
    }

    #[test]
    fn hex_rejects_overflow_and_garbage() {
        assert_eq!(SubsetElement::from_hex(3, "8"), None);
        assert_eq!(SubsetElement::from_hex(3, "zz"), None);
        assert_eq!(SubsetElement::from_hex(3, ""), None);
        assert_eq!(
            SubsetElement::from_hex(4, "0x9"),
            Some(SubsetElement::from_points(4, [0, 3]))
        );
        assert_eq!(SubsetElement::empty(100).to_hex(), "0");
    }

    fn element(width: usize) -> impl Strategy<Value = SubsetElement> {
        proptest::collection::vec(any::<bool>(), width).prop_map(move |bits| {
            SubsetElement::from_points(width, bits.iter().enumerate().filter(|b| *b.1).map(|b| b.0))
        })
    }

    proptest! {
        #[test]
        fn hex_round_trip(x in element(150)) {
            prop_assert_eq!(SubsetElement::from_hex(150, &x.to_hex()), Some(x));
        }

        #[test]
        fn subset_iff_union_absorbs(x in element(90), y in element(90)) {
            prop_assert_eq!(x.is_subset(&y), x.union(&y) == y);
            prop_assert_eq!(x.intersects(&y), !x.intersection(&y).is_empty());
            let ones: Vec<_> = x.iter().collect();
            prop_assert_eq!(ones.len(), x.count());
            prop_assert_eq!(SubsetElement::from_points(90, ones), x);
        }
    }
}
