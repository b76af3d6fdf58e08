//! Brute-force reference implementations.
//!
//! Nothing here uses maximal quotients or the pruned atom search: sums are
//! formed pairwise and quotients are found by trying every candidate. Only
//! compiled for tests or with the `oracle` feature.

use crate::set::{FiniteSet, NormalizedSet};

/// Pairwise sum of two packed sets; `max b + max c` must stay below 64.
pub fn naive_sum_mask(b: u64, c: u64) -> u64 {
    let mut out = 0u64;
    let mut bs = b;
    while bs != 0 {
        let i = bs.trailing_zeros();
        bs &= bs - 1;
        let mut cs = c;
        while cs != 0 {
            let j = cs.trailing_zeros();
            cs &= cs - 1;
            out |= 1 << (i + j);
        }
    }
    out
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Tries every `Q ⊆ S` with `0 ∈ Q` and checks `T + Q = S` pairwise.
pub fn brute_force_divides(t: &NormalizedSet, s: &NormalizedSet) -> bool {
    let (t, s) = (
        t.to_mask().expect("small sets only"),
        s.to_mask().expect("small sets only"),
    );
    submasks(s & !1).any(|q| naive_sum_mask(t, q | 1) == s)
}

/// Every ordered pair `(B, C)` of normalized sets with `B + C = S`.
pub fn all_decompositions(s: &NormalizedSet) -> Vec<(NormalizedSet, NormalizedSet)> {
    let s = s.to_mask().expect("small sets only");
    let mut out = Vec::new();
    for b in submasks(s & !1) {
        for c in submasks(s & !1) {
            if naive_sum_mask(b | 1, c | 1) == s {
                out.push((
                    NormalizedSet::from_mask(b | 1).unwrap(),
                    NormalizedSet::from_mask(c | 1).unwrap(),
                ));
            }
        }
    }
    out
}

/// Atom test by looking at every decomposition of `S`.
pub fn naive_is_atom(s: &NormalizedSet) -> bool {
    s.len() >= 2
        && all_decompositions(s)
            .iter()
            .all(|(b, c)| b.is_zero() || c.is_zero())
}

/// Marks every sum `B + C` of nontrivial normalized sets with
/// `max B + max C <= n`. Index `x` stands for the set with mask `2x + 1`.
pub fn non_atom_sieve(n: usize) -> Vec<bool> {
    assert!(n <= 24);
    let mut hit = vec![false; 1 << n];
    for bmax in 1..n {
        for cmax in 1..=n - bmax {
            if cmax < bmax {
                continue;
            }
            for b_mid in 0u64..1 << (bmax - 1) {
                let b = 1 | b_mid << 1 | 1 << bmax;
                for c_mid in 0u64..1 << (cmax - 1) {
                    let c = 1 | c_mid << 1 | 1 << cmax;
                    hit[(naive_sum_mask(b, c) >> 1) as usize] = true;
                }
            }
        }
    }
    hit
}

/// Nonempty subsets of `[0, bound]` in ascending packed order.
pub fn all_sets_up_to(bound: usize, restricted: bool) -> Vec<FiniteSet> {
    (1u64..1 << (bound + 1))
        .filter(|m| !restricted || m & 1 == 1)
        .map(|m| FiniteSet::from_mask(m).unwrap())
        .collect()
}
