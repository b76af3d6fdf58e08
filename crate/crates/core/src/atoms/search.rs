//! Decomposition search behind the atom test.
//!
//! Let `S = B + C` with `0 ∈ B ∩ C` and `|B|, |C| >= 2`, and let `m` be the
//! least nonzero element of `S`. Then `m` lies in `B` or `C`; call that factor
//! `B`. Writing `n = max S`, `max B = b` and `max C = n - b`, both `b` and
//! `n - b` lie in `S` and are at least `m`, and `B + (n - b) ⊆ S`, so
//!
//! ```text
//! {0, m, b} ⊆ B ⊆ S ∩ (S - (n - b)) ∩ [0, b].
//! ```
//!
//! For every such candidate `B` the maximal quotient `Q(B, S)` contains `C`,
//! hence `B + Q(B, S) = S`. Scanning `b` and the subsets of that window is
//! therefore complete, and each candidate costs one quotient and one sumset.
//! Before that, each `{0, a}` is tried with the local neighbour test, which
//! disposes of most non-atoms.

use crate::bits::{self, WORD};
use crate::set::{sumset, FiniteSet, NormalizedSet};

/// Ascending submasks of `mask`, starting with 0.
#[inline]
fn next_submask(sub: u64, mask: u64) -> Option<u64> {
    if sub == mask {
        None
    } else {
        Some(sub.wrapping_sub(mask) & mask)
    }
}

#[inline]
fn low_mask(top: u32) -> u64 {
    if top >= 63 {
        u64::MAX
    } else {
        (1u64 << (top + 1)) - 1
    }
}

/// Finds `(B, C)` with `B + C = s`, both nontrivial, for a normalized set
/// packed into one word. `None` means `s` is an atom (or `s = {0}`).
pub(crate) fn split_mask(s: u64) -> Option<(u64, u64)> {
    debug_assert!(s & 1 == 1);
    if s.count_ones() < 3 {
        // {0} and {0, a} cannot be sums of two nontrivial sets
        return None;
    }
    let n = 63 - s.leading_zeros();
    let m = (s & !1).trailing_zeros();

    // {0, a} divides s iff every element has a neighbour at distance a
    let mut cand = s & low_mask(n - m) & !low_mask(m - 1);
    while cand != 0 {
        let a = cand.trailing_zeros();
        cand &= cand - 1;
        if s & !((s << a) | (s >> a)) == 0 {
            return Some((1 | 1 << a, s & (s >> a)));
        }
    }

    let mut tops = s & low_mask(n - m) & !low_mask(m - 1);
    while tops != 0 {
        let b = tops.trailing_zeros();
        tops &= tops - 1;
        let cmax = n - b;
        if (s >> cmax) & 1 == 0 {
            continue;
        }
        let window = s & (s >> cmax) & low_mask(b);
        let forced = 1 | 1u64 << m | 1u64 << b;
        if window & forced != forced {
            continue;
        }
        let free = window & !forced;
        let qmask = low_mask(cmax);
        let mut sub = 0u64;
        loop {
            let bset = forced | sub;
            if let Some(q) = quotient_mask(bset, s, qmask, cmax) {
                if q != 1 && sum_mask(bset, q) == s {
                    return Some((bset, q));
                }
            }
            match next_submask(sub, free) {
                Some(next) => sub = next,
                None => break,
            }
        }
    }
    None
}

#[inline]
fn quotient_mask(b: u64, s: u64, qmask: u64, cmax: u32) -> Option<u64> {
    let mut q = qmask;
    let mut rest = b;
    while rest != 0 {
        let x = rest.trailing_zeros();
        rest &= rest - 1;
        q &= s >> x;
        if (q >> cmax) & 1 == 0 {
            return None;
        }
    }
    Some(q)
}

#[inline]
fn sum_mask(b: u64, q: u64) -> u64 {
    let (wide, mut narrow) = if b.count_ones() >= q.count_ones() {
        (b, q)
    } else {
        (q, b)
    };
    let mut out = 0;
    while narrow != 0 {
        let x = narrow.trailing_zeros();
        narrow &= narrow - 1;
        out |= wide << x;
    }
    out
}

/// The same search on multi-word sets. Windows with more than 63 free
/// positions are not enumerable and cause a panic.
pub(crate) fn split_set(s: &NormalizedSet) -> Option<(NormalizedSet, NormalizedSet)> {
    if let Some(mask) = s.to_mask() {
        return split_mask(mask).map(|(b, c)| {
            (
                NormalizedSet::from_mask(b).expect("contains 0"),
                NormalizedSet::from_mask(c).expect("contains 0"),
            )
        });
    }
    split_words(s)
}

pub(crate) fn split_words(s: &NormalizedSet) -> Option<(NormalizedSet, NormalizedSet)> {
    if s.len() < 3 {
        return None;
    }
    let words = s.words();
    let cap = s.cap();
    let n = s.max();
    let m = s.iter().nth(1).expect("len >= 3");
    let nonzero_middle = || s.iter().filter(move |&x| x >= m && x + m <= n);

    for a in nonzero_middle() {
        let pair = NormalizedSet::new([0, a]).expect("a <= cap");
        if crate::divisibility::divides_by_simple_atom(a, s) {
            let q = crate::divisibility::max_quotient(&pair, s).expect("pair divides");
            return Some((pair, q));
        }
    }

    for b in nonzero_middle() {
        let cmax = n - b;
        if !s.contains(cmax) {
            continue;
        }
        let mut window = vec![u64::MAX; bits::words_for(b)];
        bits::truncate_above(&mut window, b);
        bits::and_shifted_right(&mut window, words, 0);
        bits::and_shifted_right(&mut window, words, cmax);
        let forced = [0, m, b];
        if !forced.iter().all(|&x| bits::test_bit(&window, x)) {
            continue;
        }
        let free: Vec<usize> = bits::Ones::new(&window)
            .filter(|x| !forced.contains(x))
            .collect();
        assert!(free.len() < WORD, "decomposition window too wide to scan");
        for pick in 0u64..1 << free.len() {
            let elems = forced.iter().copied().chain(
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| (pick >> i) & 1 == 1)
                    .map(|(_, &x)| x),
            );
            let bset: NormalizedSet = FiniteSet::with_cap(elems, cap)
                .expect("window lies inside s")
                .try_into()
                .expect("contains 0");
            let Some(q) = crate::divisibility::max_quotient(&bset, s) else {
                continue;
            };
            if q.max() != cmax || q.is_zero() {
                continue;
            }
            if sumset(&bset, &q).is_ok_and(|sum| sum == *s.as_set()) {
                return Some((bset, q));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn small_examples() {
        assert_eq!(split_mask(0b11), None);
        assert_eq!(split_mask(0b111), Some((0b11, 0b11)));
        assert_eq!(split_mask(0b1011), None);
    }

    #[test]
    fn witnesses_reproduce_the_set() {
        for x in 0u64..1 << 13 {
            let s = x << 1 | 1;
            if let Some((b, c)) = split_mask(s) {
                assert!(b != 1 && c != 1);
                assert_eq!(oracle::naive_sum_mask(b, c), s);
            }
        }
    }

    #[test]
    fn word_and_multiword_paths_agree() {
        for x in 0u64..1 << 11 {
            let s = NormalizedSet::from_mask(x << 1 | 1).unwrap();
            let word = split_mask(s.to_mask().unwrap()).is_some();
            assert_eq!(split_words(&s).is_some(), word, "{s}");
        }
    }

    #[test]
    fn multiword_sets() {
        // {0,1} + {0,100}
        let s = NormalizedSet::new([0, 1, 100, 101]).unwrap();
        let (b, c) = split_set(&s).unwrap();
        assert_eq!(sumset(&b, &c).unwrap(), *s.as_set());
        // {0,1,3} + {0,70,72}
        let s = NormalizedSet::new([0, 1, 3, 70, 71, 72, 73, 75]).unwrap();
        let (b, c) = split_set(&s).unwrap();
        assert_eq!(sumset(&b, &c).unwrap(), *s.as_set());
        assert!(split_set(&NormalizedSet::new([0, 1, 3, 200]).unwrap()).is_none());
    }
}
