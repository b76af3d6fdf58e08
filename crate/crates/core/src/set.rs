//! Finite subsets of the nonnegative integers and the sumset operation.
//!
//! A [`FiniteSet`] is stored as a packed bit vector indexed by value, so the
//! sumset `B + C` is the OR of copies of `B` shifted by each element of `C`.
//! The packed form is authoritative; [`FiniteSet::iter`] gives the ascending
//! element sequence.
//!
//! ```
//! use power_monoid::{sumset, FiniteSet};
//!
//! let b: FiniteSet = "{0,2}".parse().unwrap();
//! let c: FiniteSet = "{0,3}".parse().unwrap();
//! assert_eq!(sumset(&b, &c).unwrap().to_string(), "{0,2,3,5}");
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, Ones};
use crate::error::{Error, Result};

/// Largest representable element unless a different cap is requested.
pub const DEFAULT_CAP: usize = 4096;

/// A nonempty finite subset of ℕ₀ whose elements are bounded by `cap`.
///
/// Equality, hashing and ordering only look at the elements. Sets are ordered
/// by their packed integer value `Σ 2^x`, which is the order used for every
/// enumeration in this crate.
#[derive(Clone)]
pub struct FiniteSet {
    words: Vec<u64>,
    cap: usize,
}

impl FiniteSet {
    /// Builds a set from arbitrary (unsorted, possibly repeated) elements.
    pub fn new<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        Self::with_cap(elements, DEFAULT_CAP)
    }

    pub fn with_cap<I: IntoIterator<Item = usize>>(elements: I, cap: usize) -> Result<Self> {
        let mut words = Vec::new();
        for v in elements {
            if v > cap {
                return Err(Error::Capacity { value: v, cap });
            }
            let need = bits::words_for(v);
            if words.len() < need {
                words.resize(need, 0);
            }
            bits::set_bit(&mut words, v);
        }
        if words.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(FiniteSet { words, cap })
    }

    pub fn singleton(value: usize) -> Result<Self> {
        Self::new([value])
    }

    /// Builds a set from a packed mask (bit `v` set means `v` is present).
    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptySet);
        }
        Ok(FiniteSet {
            words: vec![mask],
            cap: DEFAULT_CAP,
        })
    }

    /// Packed mask, available when every element is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        (self.words.len() == 1).then(|| self.words[0])
    }

    /// Takes ownership of raw words; `None` if no bit is set.
    pub(crate) fn from_words(mut words: Vec<u64>, cap: usize) -> Option<Self> {
        bits::trim(&mut words);
        if words.is_empty() {
            None
        } else {
            Some(FiniteSet { words, cap })
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn min(&self) -> usize {
        bits::lowest_bit(&self.words).expect("nonempty")
    }

    pub fn max(&self) -> usize {
        bits::highest_bit(&self.words).expect("nonempty")
    }

    pub fn len(&self) -> usize {
        bits::count_ones(&self.words)
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, value: usize) -> bool {
        bits::test_bit(&self.words, value)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `{s + by : s ∈ self}`.
    pub fn shift_up(&self, by: usize) -> Result<FiniteSet> {
        let max = self.max() + by;
        if max > self.cap {
            return Err(Error::Capacity {
                value: max,
                cap: self.cap,
            });
        }
        let mut words = vec![0; bits::words_for(max)];
        bits::or_shifted_left(&mut words, &self.words, by);
        Ok(FiniteSet {
            words,
            cap: self.cap,
        })
    }

    /// `{s - by : s ∈ self}`; requires `by <= min(self)`.
    pub fn shift_down(&self, by: usize) -> FiniteSet {
        assert!(by <= self.min(), "shift below zero");
        let mut words = vec![u64::MAX; self.words.len()];
        bits::and_shifted_right(&mut words, &self.words, by);
        FiniteSet::from_words(words, self.cap).expect("nonempty")
    }

    /// `{c·s : s ∈ self}` for `c >= 1`.
    pub fn dilate(&self, c: usize) -> Result<FiniteSet> {
        assert!(c >= 1);
        FiniteSet::with_cap(self.iter().map(|x| x * c), self.cap)
    }

    /// Elements of `self` not equal to `value`; `None` when nothing remains.
    pub fn without(&self, value: usize) -> Option<FiniteSet> {
        let mut words = self.words.clone();
        if bits::test_bit(&words, value) {
            words[value / bits::WORD] &= !(1 << (value % bits::WORD));
        }
        FiniteSet::from_words(words, self.cap)
    }

    pub fn is_normalized(&self) -> bool {
        self.contains(0)
    }

    /// Order of the packed integers `Σ 2^x`. `FiniteSet` deliberately has no
    /// `Ord` impl, so that `s.max()` always means the largest element.
    pub fn packed_cmp(&self, other: &FiniteSet) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialEq for FiniteSet {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for FiniteSet {}

impl Hash for FiniteSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `{0,2,5}` or the bare list `0,2,5`; whitespace is ignored.
impl FromStr for FiniteSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let body = match (trimmed.strip_prefix('{'), trimmed.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => trimmed,
            _ => return Err(parse_err("unbalanced braces")),
        };
        if body.trim().is_empty() {
            return Err(Error::EmptySet);
        }
        let elements = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(&format!("bad element {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteSet::new(elements)
    }
}

impl Serialize for FiniteSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FiniteSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite set containing 0: an element of the restricted power monoid.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NormalizedSet(FiniteSet);

impl NormalizedSet {
    /// The identity `{0}`.
    pub fn zero() -> Self {
        NormalizedSet(FiniteSet::singleton(0).expect("0 fits"))
    }

    pub fn new<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        FiniteSet::new(elements)?.try_into()
    }

    pub fn from_mask(mask: u64) -> Result<Self> {
        FiniteSet::from_mask(mask)?.try_into()
    }

    pub fn as_set(&self) -> &FiniteSet {
        &self.0
    }

    pub fn into_set(self) -> FiniteSet {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.words.len() == 1 && self.0.words[0] == 1
    }
}

impl Deref for NormalizedSet {
    type Target = FiniteSet;

    fn deref(&self) -> &FiniteSet {
        &self.0
    }
}

impl TryFrom<FiniteSet> for NormalizedSet {
    type Error = Error;

    fn try_from(set: FiniteSet) -> Result<Self> {
        if set.contains(0) {
            Ok(NormalizedSet(set))
        } else {
            Err(Error::NotNormalized(set.to_string()))
        }
    }
}

impl From<NormalizedSet> for FiniteSet {
    fn from(n: NormalizedSet) -> FiniteSet {
        n.0
    }
}

impl FromStr for NormalizedSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<FiniteSet>()?.try_into()
    }
}

impl<'de> Deserialize<'de> for NormalizedSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let set = FiniteSet::deserialize(deserializer)?;
        set.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for NormalizedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for NormalizedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `B + C = {b + c : b ∈ B, c ∈ C}`.
///
/// The result carries the smaller of the two caps and fails rather than
/// truncate when `max B + max C` exceeds it.
pub fn sumset(b: &FiniteSet, c: &FiniteSet) -> Result<FiniteSet> {
    let cap = b.cap.min(c.cap);
    let max = b.max() + c.max();
    if max > cap {
        return Err(Error::Capacity { value: max, cap });
    }
    // shift the larger operand by each element of the smaller one
    let (wide, narrow) = if b.len() >= c.len() { (b, c) } else { (c, b) };
    let mut words = vec![0; bits::words_for(max)];
    for x in narrow.iter() {
        bits::or_shifted_left(&mut words, &wide.words, x);
    }
    Ok(FiniteSet { words, cap })
}

/// Sumset of two normalized sets, which is again normalized.
pub fn sumset0(b: &NormalizedSet, c: &NormalizedSet) -> Result<NormalizedSet> {
    sumset(b, c).map(NormalizedSet)
}

/// Splits `S` as `{min S} + N` with `0 ∈ N`.
pub fn normalize(s: &FiniteSet) -> (usize, NormalizedSet) {
    let shift = s.min();
    (shift, NormalizedSet(s.shift_down(shift)))
}

/// The discrete interval `[lo, hi]`.
pub fn interval(lo: usize, hi: usize) -> Result<FiniteSet> {
    interval_with_cap(lo, hi, DEFAULT_CAP)
}

pub fn interval_with_cap(lo: usize, hi: usize, cap: usize) -> Result<FiniteSet> {
    if lo > hi {
        return Err(Error::EmptyInterval { lo, hi });
    }
    if hi > cap {
        return Err(Error::Capacity { value: hi, cap });
    }
    let mut words = vec![u64::MAX; bits::words_for(hi)];
    bits::truncate_above(&mut words, hi);
    let mut low = vec![u64::MAX; bits::words_for(hi)];
    if lo > 0 {
        bits::truncate_above(&mut low, lo - 1);
        low.resize(words.len(), 0);
        for (w, l) in words.iter_mut().zip(&low) {
            *w &= !l;
        }
    }
    Ok(FiniteSet::from_words(words, cap).expect("lo <= hi"))
}

/// Common difference `c` when `S - min S = c·[0, |S| - 1]`.
///
/// Returns `Ok(None)` when the set is not an arithmetic progression and an
/// error for sets with fewer than two elements.
pub fn is_arithmetic_progression(s: &FiniteSet) -> Result<Option<usize>> {
    let len = s.len();
    if len < 2 {
        return Err(Error::TooSmall { len, min: 2 });
    }
    let mut it = s.iter();
    let first = it.next().expect("len >= 2");
    let second = it.next().expect("len >= 2");
    let gap = second - first;
    let mut prev = second;
    for x in it {
        if x - prev != gap {
            return Ok(None);
        }
        prev = x;
    }
    Ok(Some(gap))
}
