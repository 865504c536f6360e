//! Exact computations around Schur functors in symmetric tensor categories:
//! which dimensions allow a non-semisimple object with a semisimple Schur
//! functor image, and machine-checkable certificates for every dimension
//! that does not.
//!
//! Everything is exact: partitions index the combinatorics, symmetric-group
//! characters come from the Murnaghan-Nakayama recursion, trace polynomials
//! are rational polynomials in the object dimension, and a concrete oracle
//! in super vector spaces validates the symbolic identities with signed
//! permutation matrices and fraction-free rank computations.

pub mod certify;
pub mod characters;
pub mod cli;
pub mod error;
pub mod group_algebra;
pub mod lr;
pub mod partition;
pub mod perm;
pub mod polynomial;
pub mod rational;
pub mod superspace;
pub mod trace_poly;

pub use certify::{
    certify as certify_dimension, Certificate, CounterexampleFamily, CounterexampleReport,
    Outcome, Verification, Witness,
};
pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::Permutation;
pub use polynomial::RationalPolynomial;
pub use rational::Q;
