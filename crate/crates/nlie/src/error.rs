//! Crate-wide error type.
//!
//! Errors fall into two groups: data errors raised while constructing
//! fields, matrices or algebras, and precondition errors raised when an
//! operation is asked for something it cannot compute (for example an
//! exhaustive enumeration over the rationals). Mixed-field arithmetic on
//! individual scalars is treated as a programming error and panics
//! instead; the constructors here are the boundary where mixing is
//! supposed to be caught.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NLieError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("vector length mismatch: expected {expected}, got {got}")]
    VectorLength { expected: usize, got: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("arity must be at least 2, got {0}")]
    ArityTooSmall(usize),

    #[error("bracket tuple {0:?} is not strictly increasing within dimension")]
    BadTuple(Vec<usize>),

    #[error("duplicate bracket tuple {0:?}")]
    DuplicateTuple(Vec<usize>),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} has no inverse modulo {1}")]
    NotInvertible(u64, u64),

    #[error("denominator {0} vanishes in GF({1})")]
    DenominatorVanishes(u64, u64),

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("{op} requires a prime field; over the rationals reduce mod p first")]
    RequiresPrimeField { op: &'static str },

    #[error("{op} requires a rational algebra")]
    RequiresRationalField { op: &'static str },

    #[error("{op} over the rationals is only available for {shortcut} algebras; reduce mod p for the general case")]
    RationalShortcutOnly { op: &'static str, shortcut: &'static str },

    #[error("enumeration dimension {dim} exceeds the cap {cap}; raise the cap explicitly to proceed")]
    CapExceeded { dim: usize, cap: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("invalid catalog parameters: {0}")]
    BadCatalogParams(String),
}

pub type Result<T> = std::result::Result<T, NLieError>;
