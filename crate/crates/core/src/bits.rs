//! Word-level helpers for little-endian packed bit vectors.
//!
//! Bit `v` of a vector lives in word `v / 64` at position `v % 64`.

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(max_value: usize) -> usize {
    max_value / WORD + 1
}

/// `dst |= src << shift`, dropping bits that fall beyond `dst`.
pub(crate) fn or_shifted_left(dst: &mut [u64], src: &[u64], shift: usize) {
    let (word_shift, bit_shift) = (shift / WORD, shift % WORD);
    if word_shift >= dst.len() {
        return;
    }
    for (i, &w) in src.iter().enumerate() {
        let lo = i + word_shift;
        if lo >= dst.len() {
            break;
        }
        if bit_shift == 0 {
            dst[lo] |= w;
        } else {
            dst[lo] |= w << bit_shift;
            if lo + 1 < dst.len() {
                dst[lo + 1] |= w >> (WORD - bit_shift);
            }
        }
    }
}

/// `dst &= src >> shift`, treating bits shifted in from above as zero.
pub(crate) fn and_shifted_right(dst: &mut [u64], src: &[u64], shift: usize) {
    let (word_shift, bit_shift) = (shift / WORD, shift % WORD);
    for (i, d) in dst.iter_mut().enumerate() {
        let lo = i + word_shift;
        let mut w = src.get(lo).copied().unwrap_or(0);
        if bit_shift != 0 {
            w >>= bit_shift;
            w |= src.get(lo + 1).copied().unwrap_or(0) << (WORD - bit_shift);
        }
        *d &= w;
    }
}

/// Clears every bit above `max_value`.
pub(crate) fn truncate_above(words: &mut Vec<u64>, max_value: usize) {
    let keep = words_for(max_value);
    words.truncate(keep);
    if let Some(last) = words.last_mut() {
        let top = max_value % WORD;
        if top != WORD - 1 {
            *last &= (1u64 << (top + 1)) - 1;
        }
    }
}

/// Drops trailing zero words.
pub(crate) fn trim(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

pub(crate) fn highest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
}

pub(crate) fn lowest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * WORD + w.trailing_zeros() as usize)
}

pub(crate) fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn test_bit(words: &[u64], v: usize) -> bool {
    words
        .get(v / WORD)
        .is_some_and(|w| (w >> (v % WORD)) & 1 == 1)
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], v: usize) {
    words[v / WORD] |= 1 << (v % WORD);
}

/// Iterator over set bit positions in ascending order.
#[derive(Clone, Debug)]
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts_cross_word_boundaries() {
        let src = [1u64 << 63, 1];
        let mut dst = [0u64; 3];
        or_shifted_left(&mut dst, &src, 1);
        assert_eq!(dst, [0, 0b11, 0]);

        let mut dst = [u64::MAX; 2];
        and_shifted_right(&mut dst, &src, 63);
        assert_eq!(dst, [0b11, 0]);
    }

    #[test]
    fn truncation_and_extremes() {
        let mut w = vec![u64::MAX, u64::MAX];
        truncate_above(&mut w, 65);
        assert_eq!(w, vec![u64::MAX, 0b11]);
        assert_eq!(highest_bit(&w), Some(65));
        assert_eq!(lowest_bit(&w), Some(0));
        assert_eq!(Ones::new(&[0b101, 0, 1]).collect::<Vec<_>>(), vec![0, 2, 128]);
    }
}
