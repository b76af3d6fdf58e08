//! Divisibility in the restricted and unrestricted power monoids of ℕ₀.
//!
//! `T` divides `S` when `S = T + Q` for some `Q`. For fixed `T` and `S` the
//! set `Q(T, S) = {x : x + T ⊆ S}` contains every possible quotient, and
//! `T + Q(T, S) ⊆ S` always holds, so `T | S` exactly when `T + Q(T, S) = S`.
//! This turns an exponential quotient search into one sumset.

use serde::Serialize;

use crate::bits;
use crate::error::Result;
use crate::set::{interval, normalize, sumset, FiniteSet, NormalizedSet};

/// Certificate that `divisor + quotient = product`.
///
/// The quotient is always the maximal one, `Q(divisor, product)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionWitness {
    pub divisor: NormalizedSet,
    pub quotient: NormalizedSet,
    pub product: NormalizedSet,
}

impl DivisionWitness {
    pub fn verify(&self) -> bool {
        sumset(&self.divisor, &self.quotient).is_ok_and(|s| s == *self.product.as_set())
    }
}

/// Division in the unrestricted power monoid: `S = T + ({shift} + quotient)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedDivisionWitness {
    pub shift: usize,
    pub normalized: DivisionWitness,
}

impl ShiftedDivisionWitness {
    /// The full quotient `{shift} + quotient`.
    pub fn quotient(&self) -> FiniteSet {
        self.normalized
            .quotient
            .shift_up(self.shift)
            .expect("quotient fits below the product")
    }
}

/// `{x ∈ [0, max S − max T] : x + T ⊆ S}`, or `None` when it is empty.
///
/// Unlike [`max_quotient`] this does not require `0` in the result, which is
/// what division in the unrestricted monoid needs.
pub fn quotient_candidates(t: &FiniteSet, s: &FiniteSet) -> Option<FiniteSet> {
    let (tmax, smax) = (t.max(), s.max());
    if tmax > smax {
        return None;
    }
    let limit = smax - tmax;
    let mut q = vec![u64::MAX; bits::words_for(limit)];
    bits::truncate_above(&mut q, limit);
    for x in t.iter() {
        bits::and_shifted_right(&mut q, s.words(), x);
    }
    FiniteSet::from_words(q, s.cap())
}

/// The maximal quotient `Q(T, S)` when it contains 0.
///
/// `T | S` in the restricted power monoid iff this is `Some(q)` and
/// `T + q = S`. Returns `None` when `max T > max S` or `T ⊄ S`.
pub fn max_quotient(t: &NormalizedSet, s: &NormalizedSet) -> Option<NormalizedSet> {
    quotient_candidates(t, s).and_then(|q| q.try_into().ok())
}

/// Decides `T | S` in the restricted power monoid.
///
/// ```
/// use power_monoid::{divides, NormalizedSet};
///
/// let t: NormalizedSet = "{0,2}".parse().unwrap();
/// let s: NormalizedSet = "{0,1,2,3}".parse().unwrap();
/// let w = divides(&t, &s).unwrap();
/// assert_eq!(w.quotient.to_string(), "{0,1}");
/// assert!(divides(&t, &"{0,1,2}".parse().unwrap()).is_none());
/// ```
pub fn divides(t: &NormalizedSet, s: &NormalizedSet) -> Option<DivisionWitness> {
    let q = max_quotient(t, s)?;
    let product = sumset(t, &q).ok()?;
    (product == *s.as_set()).then(|| DivisionWitness {
        divisor: t.clone(),
        quotient: q,
        product: s.clone(),
    })
}

/// Decides `T | S` in the unrestricted power monoid through the splitting
/// `P_fin(ℕ₀) = {{n}} ⊕ P_fin,0(ℕ₀)`.
pub fn divides_unrestricted(t: &FiniteSet, s: &FiniteSet) -> Option<ShiftedDivisionWitness> {
    if t.min() > s.min() {
        return None;
    }
    let (tshift, t0) = normalize(t);
    let (sshift, s0) = normalize(s);
    divides(&t0, &s0).map(|normalized| ShiftedDivisionWitness {
        shift: sshift - tshift,
        normalized,
    })
}

/// `{0, a} | S`, decided by the local test "every `x ∈ S` has `x − a ∈ S` or
/// `x + a ∈ S`".
pub fn divides_by_simple_atom(a: usize, s: &NormalizedSet) -> bool {
    assert!(a >= 1, "a must be positive");
    let words = s.words();
    let mut up = vec![0u64; words.len()];
    bits::or_shifted_left(&mut up, words, a);
    let mut down = vec![u64::MAX; words.len()];
    bits::and_shifted_right(&mut down, words, a);
    words
        .iter()
        .zip(up.iter().zip(&down))
        .all(|(w, (u, d))| w & !(u | d) == 0)
}

/// Truth values of the three equivalent conditions for `a`, `ℓ` and `S`:
/// `{0,a} | S`; `a·[0,ℓ] | S`; and the local neighbour test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LadderConditions {
    pub pair_divides: bool,
    pub ladder_divides: bool,
    pub neighbour_test: bool,
}

pub fn ladder_divisor_equivalence(
    a: usize,
    ell: usize,
    s: &NormalizedSet,
) -> Result<LadderConditions> {
    assert!(a >= 1 && ell >= 1, "a and ell must be positive");
    let pair = NormalizedSet::new([0, a])?;
    let ladder: NormalizedSet = interval(0, ell)?.dilate(a)?.try_into()?;
    Ok(LadderConditions {
        pair_divides: divides(&pair, s).is_some(),
        ladder_divides: divides(&ladder, s).is_some(),
        neighbour_test: divides_by_simple_atom(a, s),
    })
}
