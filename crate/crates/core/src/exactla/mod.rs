//! Exact linear algebra over the small prime fields `F_2, F_3, F_5, F_7`
//! and over `Q`.
//!
//! Over `F_2` rows are packed into `u64` words and reduced with XOR; odd
//! fields use one byte per entry. Both paths pick the first nonzero entry as
//! pivot, so echelon forms (and hence [`Subspace`] keys) are canonical.

pub mod bits;
mod field;
mod matrix;
pub mod rational;
mod subspace;

pub use field::PrimeField;
pub use matrix::{rank_in_place, rref_in_place, Matrix, Rref, Solution};
pub use rational::{rational_string, RationalMatrix};
pub use subspace::Subspace;
