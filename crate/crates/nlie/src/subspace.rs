//! Subspaces of F^d in canonical form.
//!
//! A subspace is stored as its reduced row-echelon basis with zero rows
//! dropped, which is unique per subspace. Equality, hashing and ordering
//! therefore work entry-wise on the basis. The ordering sorts by
//! dimension first and then lexicographically on the flattened basis,
//! matching the enumeration order used everywhere for witnesses.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{NLieError, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vec_is_zero, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // in rref, no zero rows, basis.cols() == ambient
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient, field),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, field),
        }
    }

    /// Span of the given row vectors.
    pub fn span(field: FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient, rows)?;
        Ok(Subspace::from_matrix(&m))
    }

    /// Row space of an arbitrary matrix.
    pub fn from_matrix(m: &Matrix) -> Self {
        Subspace {
            ambient: m.cols(),
            basis: m.rref(),
        }
    }

    /// Wraps a matrix that is already a canonical basis. Debug builds
    /// verify the claim.
    pub(crate) fn from_canonical(basis: Matrix) -> Self {
        debug_assert_eq!(basis.rref(), basis);
        Subspace {
            ambient: basis.cols(),
            basis,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn field(&self) -> &FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis.pivot_cols()
    }

    /// Residual of `v` after eliminating the pivot coordinates against the
    /// basis; zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch in reduce");
        let mut w = v.to_vec();
        for (i, p) in self.pivot_cols().into_iter().enumerate() {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for c in 0..self.ambient {
                    let e = self.basis.at(i, c);
                    if !e.is_zero() {
                        w[c] = w[c].sub(&e.mul(&factor));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        if other.dim() > self.dim() {
            return false;
        }
        (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    /// Coordinates of `v` in the canonical basis, or None if `v` is
    /// outside. Because the basis is in reduced echelon form the
    /// coordinates are just the entries of `v` at the pivot columns.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivot_cols().into_iter().map(|p| v[p].clone()).collect())
    }

    /// Linear combination of the basis rows with the given coefficients.
    pub fn from_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let field = self.field().clone();
        let mut out = vec![field.zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                for j in 0..self.ambient {
                    let e = self.basis.at(i, j);
                    if !e.is_zero() {
                        out[j] = out[j].add(&e.mul(c));
                    }
                }
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_matrix(&self.basis.stack(&other.basis)?))
    }

    /// Intersection via the left null space of the stacked bases: a
    /// relation a*U + b*V = 0 exhibits a*U as a common element, and all of
    /// them arise this way.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient, self.field().clone()));
        }
        let stacked = self.basis.stack(&other.basis)?;
        let relations = stacked.transpose().kernel();
        let mut rows = Vec::with_capacity(relations.rows());
        for rel in relations.row_vecs() {
            let coeffs = &rel[..self.dim()];
            let mut v = vec![self.field().zero(); self.ambient];
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    for j in 0..self.ambient {
                        let e = self.basis.at(i, j);
                        if !e.is_zero() {
                            v[j] = v[j].add(&e.mul(c));
                        }
                    }
                }
            }
            rows.push(v);
        }
        Subspace::span(self.field().clone(), self.ambient, rows)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(NLieError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.field() != other.field() {
            return Err(NLieError::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Subspace) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then_with(|| self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Subspace) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = (0..self.dim())
            .map(|r| {
                let entries: Vec<String> =
                    self.basis.row(r).iter().map(|s| s.to_string()).collect();
                format!("({})", entries.join(","))
            })
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}
