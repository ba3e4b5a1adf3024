use thiserror::Error;

use crate::matchgraph::Variant;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("signed corona requires an even core size, got p = {0}")]
    OddSignedCorona(usize),
    #[error("signed0 corona requires an odd core size, got p = {0}")]
    EvenSigned0Corona(usize),
    #[error("operation needs a {expected} graph, got {got:?}")]
    WrongVariant { expected: &'static str, got: Variant },
    #[error("edge {0} does not exist in the graph")]
    NoSuchEdge(String),
    #[error("edges share vertex {0}")]
    NotAMatching(String),
    #[error("matching is not invariant under the minus involution")]
    NotMinusInvariant,
    #[error("matching contains horizontal edge {0}")]
    HorizontalEdge(String),
    #[error("matching has odd size {0}; expected an even number of edges")]
    OddMatchingSize(usize),
    #[error("matching has {got} edges, expected {expected}")]
    WrongMatchingSize { expected: usize, got: usize },

    #[error("root {0} is not admissible for (m, n) = ({1}, {2})")]
    InadmissibleRoot(String, usize, usize),

    #[error("unsupported field size q = {0}; expected one of 2, 3, 5, 7")]
    UnsupportedField(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("fields differ: F_{0} vs F_{1}")]
    FieldMismatch(u8, u8),
    #[error("operation requires odd characteristic")]
    CharacteristicTwo,

    #[error("subspaces are not complementary")]
    NotComplementary,
    #[error("representations have different shapes")]
    ShapeMismatch,
    #[error("Hom matrix differs between F_{0} and F_{1}")]
    HomFieldDependence(u8, u8),
    #[error("positive-Hom relation has a cycle among admissible roots")]
    HomCycle,
    #[error("multiplicity vector is not a 0/1 decomposition of d_(m,n): {0}")]
    BadMultiplicities(String),
    #[error("jump pattern disagrees with Hom classification: {0}")]
    JumpMismatch(String),
    #[error("representative check failed: {0}")]
    RepresentativeCheck(String),

    #[error("configuration needs {required} points, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("orbit {orbit} carries two different matching tags")]
    TagDisagreement { orbit: usize },
    #[error("form and point dimensions are incompatible: {0}")]
    FormMismatch(String),

    #[error("b({m}, {n}) disagrees: enumeration {enumerated}, identity {identity}")]
    BCountMismatch { m: usize, n: usize, enumerated: String, identity: String },
    #[error("interpolant has degree {got}, expected {expected}")]
    DegreeDefect { expected: usize, got: usize },
    #[error("interpolant predicts {predicted} at m = {m}, enumeration gives {actual}")]
    PredictionMismatch { m: usize, predicted: String, actual: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
