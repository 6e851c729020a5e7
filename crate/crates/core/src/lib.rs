//! Exact eigenvalue-multiplicity spectra of prime-power-order elements of
//! symmetric and alternating groups, in ordinary irreducible representations
//! and in deleted permutation modules over fields of positive characteristic,
//! together with an almost-cyclic classifier and verifiers for the bundled
//! classification table dataset.
//!
//! All arithmetic is exact: eigenvalues are roots of unity indexed by
//! exponent, character values are cyclotomic integers with arbitrary-
//! precision coefficients, and every extracted multiplicity is asserted to be
//! a non-negative rational integer.

pub mod characters;
pub mod classifier;
pub mod cyclotomic;
pub mod error;
pub mod partition;
pub mod perm;
pub mod spectra;

pub use error::{Error, Result};
