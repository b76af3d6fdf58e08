//! Sumsets, divisibility, atoms and atom statistics in the power monoids of
//! numerical monoids.

mod bits;
pub mod atoms;
pub mod divisibility;
pub mod error;
pub mod monoid;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod set;
pub mod stats;

pub use atoms::{is_atom, is_atom_mask, AlphaTable, AtomVerdict};
pub use bits::Ones;
pub use divisibility::{divides, divides_unrestricted, DivisionWitness};
pub use error::{Error, Result};
pub use monoid::{
    is_primal_bounded, is_primary_bounded, is_prime_bounded, primal_witness_gap_identity,
    primal_witness_interval_identity, BoundedVerdict, Context, Element, NumericalMonoid,
    PrimalViolation, Violation,
};
pub use set::{interval, normalize, sumset, FiniteSet, NormalizedSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sets.md")]
    mod sets {}
    #[doc = include_str!("../../../book/src/divisibility.md")]
    mod divisibility {}
    #[doc = include_str!("../../../book/src/atoms.md")]
    mod atoms {}
    #[doc = include_str!("../../../book/src/primality.md")]
    mod primality {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
}
