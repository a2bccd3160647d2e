//! Exact-arithmetic structural invariants of finite-dimensional n-Lie
//! (Filippov) algebras.
//!
//! An n-Lie algebra is a vector space with an n-ary multilinear bracket
//! that is totally antisymmetric and satisfies the fundamental identity
//!
//! ```text
//! [[x1,...,xn], y2,...,yn] = sum_i [x1,...,[xi,y2,...,yn],...,xn]
//! ```
//!
//! Algebras are presented by structure constants on strictly increasing
//! basis tuples; all other argument orders follow by antisymmetry. On top
//! of bracket evaluation the crate computes derived and nilpotency
//! series, normalizers, derivation algebras, and the Frattini-type
//! invariants that require walking the full subalgebra lattice: the
//! Frattini subalgebra and ideal, the Frattini series, elementary and
//! E-algebra predicates, complement searches, and the elementary
//! commutator. Lattice walks are exhaustive subspace enumerations, so
//! they are exact but only available over prime fields; over the
//! rationals the crate confines itself to theorem-backed shortcuts and
//! otherwise asks the caller to reduce mod p.
//!
//! Everything is exact: scalars are arbitrary-precision rationals or
//! GF(p) residues, and no floating point appears anywhere. All outputs
//! are canonical (reduced row-echelon bases, fixed enumeration order), so
//! equal inputs produce byte-equal results.

pub mod algebra;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod format;
pub mod frattini;
pub mod matrix;
pub mod random;
pub mod report;
pub mod structure;
pub mod subspace;

pub use error::{NLieError, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;
