//! Matchings of corona graphs and Borel orbits on pairs of complementary
//! subspaces.
//!
//! The crate enumerates matchings, maps them to sets of admissible roots of a
//! star-with-tail quiver, builds and classifies the corresponding quiver
//! representations over small prime fields, and checks the resulting orbit
//! parametrization against a brute-force orbit oracle. A sequence module
//! computes the associated counting sequences and interpolating polynomials.

pub mod cli;
pub mod error;
pub mod exactla;
pub mod matchgraph;
pub mod orbitoracle;
pub mod quiverrep;
pub mod rootcalc;
pub mod seqlab;
pub mod verify;

pub use error::{Error, Result};
pub use quiverrep::VarietyPoint;

/// Serializes big integers and rationals as decimal strings.
pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
