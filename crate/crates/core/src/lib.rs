//! Posets of sign-labeled partitions of `[[n]] = {1, 1̄, …, n, n̄}`.
//!
//! These posets (and their type A/B/C/D subposets) describe the
//! intersection patterns of linear, toric and elliptic arrangements built
//! from root systems: one sign gives the linear case, two the toric case,
//! four the elliptic case. The crate builds them, checks that a fixed edge
//! labeling is an EL-labeling, counts decreasing maximal chains, and
//! cross-checks those counts against closed formulas, tree enumerations,
//! Möbius values and the reduced homology of the order complex.
//!
//! Counting code is generic over a [`Ring`], homology over a [`Field`]. The
//! aliases below fix the arbitrary-precision choices used by default.

pub mod complex;
pub mod el;
pub mod error;
pub mod formulas;
pub mod partition;
pub mod polynomial;
pub mod poset;
pub mod scalar;
pub mod trees;

pub use error::{Error, Result};
pub use scalar::{Field, Ring};

/// Exact integers for counts and Möbius values.
pub type Integer = num_bigint::BigInt;
/// Exact rationals for boundary-matrix ranks.
pub type Rational = num_rational::BigRational;
/// Characteristic polynomials with exact integer coefficients.
pub type IntPolynomial = polynomial::Polynomial<Integer>;
/// Posets whose elements are labeled partitions.
pub type PartitionPoset = poset::Poset<partition::LabeledPartition>;
