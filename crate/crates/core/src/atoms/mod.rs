//! Atoms of the restricted power monoid `P_fin,0(ℕ₀)`.
//!
//! A set `S ∋ 0` with at least two elements is an atom when it is not a sum
//! `B + C` of two sets that both contain 0 and have at least two elements.
//! The identity `{0}` is the only unit and is never an atom.

mod cache;
mod enumerate;
mod forms;
mod search;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::NormalizedSet;

pub use cache::{read_tables, write_tables, AlphaCache};
pub use enumerate::{
    alpha_table, alpha_tables, atoms_of_restriction, atoms_of_restriction_by_filter,
    enumerate_atoms, AlphaTable, Enumerator, DEFAULT_ENUMERATION_BOUND,
};
pub use forms::{
    alpha3_closed_form, alpha4_closed_form, binomial, count_good_sets, good_set_lower_bound,
    upper_bound, verify_closed_forms, ClosedFormCheck, ClosedFormReport, GoodSetCount,
};

/// Outcome of an atom test. A non-atom always carries a witness `(B, C)`
/// with `B + C = S` and `|B|, |C| >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomVerdict {
    pub is_atom: bool,
    pub witness: Option<(NormalizedSet, NormalizedSet)>,
}

/// Decides whether `S` is an atom, returning a decomposition when it is not.
///
/// ```
/// use power_monoid::{is_atom, NormalizedSet};
///
/// let s: NormalizedSet = "{0,1,2}".parse().unwrap();
/// let verdict = is_atom(&s).unwrap();
/// assert!(!verdict.is_atom);
/// assert_eq!(format!("{:?}", verdict.witness.unwrap()), "({0,1}, {0,1})");
///
/// assert!(is_atom(&"{0,1,3}".parse().unwrap()).unwrap().is_atom);
/// ```
pub fn is_atom(s: &NormalizedSet) -> Result<AtomVerdict> {
    if s.len() < 2 {
        return Err(Error::TooSmall {
            len: s.len(),
            min: 2,
        });
    }
    let witness = search::split_set(s);
    Ok(AtomVerdict {
        is_atom: witness.is_none(),
        witness,
    })
}

/// Atom test on a packed normalized set with all elements below 64.
/// `{0}` counts as a non-atom here.
pub fn is_atom_mask(mask: u64) -> bool {
    assert!(mask & 1 == 1, "mask must contain 0");
    mask != 1 && search::split_mask(mask).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::set::sumset;

    fn n(s: &str) -> NormalizedSet {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert!(is_atom(&n("{0,1}")).unwrap().is_atom);
        let v = is_atom(&n("{0,1,2}")).unwrap();
        assert_eq!(v.witness, Some((n("{0,1}"), n("{0,1}"))));
        assert!(is_atom(&n("{0,1,3}")).unwrap().is_atom);
        assert!(matches!(
            is_atom(&NormalizedSet::zero()),
            Err(Error::TooSmall { len: 1, min: 2 })
        ));
    }

    #[test]
    fn agrees_with_naive_decomposition_up_to_nine() {
        for x in 1u64..1 << 9 {
            let s = NormalizedSet::from_mask(x << 1 | 1).unwrap();
            let v = is_atom(&s).unwrap();
            assert_eq!(v.is_atom, oracle::naive_is_atom(&s), "{s}");
            if let Some((b, c)) = v.witness {
                assert!(b.len() >= 2 && c.len() >= 2);
                assert_eq!(sumset(&b, &c).unwrap(), *s.as_set());
            }
        }
    }
}
