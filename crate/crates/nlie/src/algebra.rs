//! n-Lie algebras presented by structure constants.
//!
//! The bracket is stored only on strictly increasing basis tuples
//! (0-based indices here; the text format uses 1-based ones). All other
//! argument orders follow from total antisymmetry, and evaluation on
//! arbitrary vectors expands multilinearly: the coefficient that a stored
//! tuple contributes is the determinant of the corresponding minor of the
//! argument coordinates, which folds the sign bookkeeping into exact
//! linear algebra.
//!
//! Antisymmetry is therefore structural and cannot be violated by
//! construction. The fundamental identity is not structural; `validate`
//! checks it on all basis tuple pairs, which suffices by multilinearity.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{NLieError, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vec_add, vec_is_zero, vec_scale, vec_sub, Matrix};
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct NLieAlgebra {
    arity: usize,
    dim: usize,
    field: FieldSpec,
    // strictly increasing 0-based tuples -> bracket coordinates; zero
    // values are never stored
    table: BTreeMap<Vec<usize>, Vec<Scalar>>,
    validated: bool,
}

/// Equality is over the mathematical data only; whether validation has
/// run is a cache, not part of the value.
impl PartialEq for NLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && self.dim == other.dim
            && self.field == other.field
            && self.table == other.table
    }
}

impl Eq for NLieAlgebra {}

impl NLieAlgebra {
    pub fn new(
        arity: usize,
        dim: usize,
        field: FieldSpec,
        entries: Vec<(Vec<usize>, Vec<Scalar>)>,
    ) -> Result<Self> {
        if arity < 2 {
            return Err(NLieError::ArityTooSmall(arity));
        }
        let mut table = BTreeMap::new();
        for (tuple, value) in entries {
            if tuple.len() != arity
                || tuple.windows(2).any(|w| w[0] >= w[1])
                || tuple.iter().any(|&i| i >= dim)
            {
                return Err(NLieError::BadTuple(tuple));
            }
            if value.len() != dim {
                return Err(NLieError::VectorLength {
                    expected: dim,
                    got: value.len(),
                });
            }
            for s in &value {
                if s.field() != field {
                    return Err(NLieError::FieldMismatch(
                        field.to_string(),
                        s.field().to_string(),
                    ));
                }
            }
            if vec_is_zero(&value) {
                continue;
            }
            if table.insert(tuple.clone(), value).is_some() {
                return Err(NLieError::DuplicateTuple(tuple));
            }
        }
        Ok(NLieAlgebra {
            arity,
            dim,
            field,
            table,
            validated: false,
        })
    }

    pub fn abelian(arity: usize, dim: usize, field: FieldSpec) -> Result<Self> {
        NLieAlgebra::new(arity, dim, field, Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn table(&self) -> &BTreeMap<Vec<usize>, Vec<Scalar>> {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        assert!(i < self.dim, "basis index out of range");
        let mut v = self.zero_vector();
        v[i] = self.field.one();
        v
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim, self.field.clone())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.dim, self.field.clone())
    }

    /// Bracket of basis vectors in any order: zero on repeated indices,
    /// otherwise the stored value times the sign of the sorting
    /// permutation.
    pub fn basis_bracket(&self, tuple: &[usize]) -> Result<Vec<Scalar>> {
        if tuple.len() != self.arity {
            return Err(NLieError::ArityMismatch {
                expected: self.arity,
                got: tuple.len(),
            });
        }
        if tuple.iter().any(|&i| i >= self.dim) {
            return Err(NLieError::BadTuple(tuple.to_vec()));
        }
        let mut sorted: Vec<usize> = tuple.to_vec();
        // parity of the permutation that sorts the tuple
        let mut sign_flips = 0usize;
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                if sorted[i] > sorted[j] {
                    sign_flips += 1;
                }
            }
        }
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(self.zero_vector());
        }
        let Some(value) = self.table.get(&sorted) else {
            return Ok(self.zero_vector());
        };
        if sign_flips % 2 == 0 {
            Ok(value.clone())
        } else {
            Ok(value.iter().map(|s| s.neg()).collect())
        }
    }

    /// Multilinear evaluation on arbitrary coordinate vectors. Each
    /// stored tuple contributes det(minor) times its value, where the
    /// minor takes the tuple's columns from the argument rows.
    pub fn bracket(&self, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        if args.len() != self.arity {
            return Err(NLieError::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(NLieError::VectorLength {
                    expected: self.dim,
                    got: a.len(),
                });
            }
        }
        let n = self.arity;
        let mut out = self.zero_vector();
        for (tuple, value) in &self.table {
            let mut minor = Vec::with_capacity(n * n);
            for arg in args {
                for &c in tuple {
                    minor.push(arg[c].clone());
                }
            }
            let det = Matrix::new(n, n, self.field.clone(), minor)
                .expect("minor entries share the algebra field")
                .det();
            if !det.is_zero() {
                out = vec_add(&out, &vec_scale(value, &det));
            }
        }
        Ok(out)
    }

    /// Fundamental identity check over all pairs of an increasing outer
    /// n-tuple and an increasing inner (n-1)-tuple; multilinearity and
    /// antisymmetry make this exhaustive.
    pub fn validate(&self) -> ValidationReport {
        let n = self.arity;
        let d = self.dim;
        let mut violations = Vec::new();
        for outer in (0..d).combinations(n) {
            let head = self
                .basis_bracket(&outer)
                .expect("outer tuple is in range");
            for inner in (0..d).combinations(n - 1) {
                let mut args = Vec::with_capacity(n);
                args.push(head.clone());
                for &y in &inner {
                    args.push(self.basis_vector(y));
                }
                let lhs = self.bracket(&args).expect("validated shapes");
                let mut rhs = self.zero_vector();
                for slot in 0..n {
                    let mut inner_args = Vec::with_capacity(n);
                    inner_args.push(self.basis_vector(outer[slot]));
                    for &y in &inner {
                        inner_args.push(self.basis_vector(y));
                    }
                    let moved = self.bracket(&inner_args).expect("validated shapes");
                    let mut outer_args: Vec<Vec<Scalar>> =
                        outer.iter().map(|&x| self.basis_vector(x)).collect();
                    outer_args[slot] = moved;
                    rhs = vec_add(&rhs, &self.bracket(&outer_args).expect("validated shapes"));
                }
                let residual = vec_sub(&lhs, &rhs);
                if !vec_is_zero(&residual) {
                    violations.push(FundamentalIdentityViolation {
                        outer: outer.clone(),
                        inner: inner.clone(),
                        residual,
                    });
                }
            }
        }
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Runs `validate` and marks the algebra on success.
    pub fn with_validation(mut self) -> (Self, ValidationReport) {
        let report = self.validate();
        self.validated = report.ok;
        (self, report)
    }

    /// Smallest subalgebra containing the given vectors: repeatedly close
    /// the span under brackets of its basis tuples.
    pub fn generated_subalgebra(&self, generators: &[Vec<Scalar>]) -> Result<Subspace> {
        let mut span = Subspace::span(self.field.clone(), self.dim, generators.to_vec())?;
        loop {
            if span.is_full() {
                return Ok(span);
            }
            let rows = span.basis_rows();
            let mut new_rows: Vec<Vec<Scalar>> = Vec::new();
            for combo in (0..rows.len()).combinations(self.arity) {
                let args: Vec<Vec<Scalar>> = combo.iter().map(|&i| rows[i].clone()).collect();
                let v = self.bracket(&args)?;
                if !span.contains(&v) {
                    new_rows.push(v);
                }
            }
            if new_rows.is_empty() {
                return Ok(span);
            }
            let extension = Subspace::span(self.field.clone(), self.dim, new_rows)?;
            span = span.sum(&extension)?;
        }
    }

    /// Role of a subspace: subalgebra, ideal, abelian ideal, with a
    /// violating bracket instance as witness on the first failed check.
    /// Checks run on basis tuples, which suffices by multilinearity.
    pub fn classify_subspace(&self, u: &Subspace) -> Result<SubspaceRole> {
        self.check_subspace(u)?;
        let n = self.arity;
        let rows = u.basis_rows();

        // closure under internal brackets
        for combo in (0..rows.len()).combinations(n) {
            let args: Vec<Vec<Scalar>> = combo.iter().map(|&i| rows[i].clone()).collect();
            let value = self.bracket(&args)?;
            if !u.contains(&value) {
                return Ok(SubspaceRole {
                    subalgebra: false,
                    ideal: false,
                    abelian_ideal: false,
                    witness: Some(BracketWitness { args, value }),
                });
            }
        }

        // [u, A, ..., A] ⊆ u on one u-row and an ambient (n-1)-tuple
        for row in &rows {
            for ambient in (0..self.dim).combinations(n - 1) {
                let mut args = Vec::with_capacity(n);
                args.push(row.clone());
                for &j in &ambient {
                    args.push(self.basis_vector(j));
                }
                let value = self.bracket(&args)?;
                if !u.contains(&value) {
                    return Ok(SubspaceRole {
                        subalgebra: true,
                        ideal: false,
                        abelian_ideal: false,
                        witness: Some(BracketWitness { args, value }),
                    });
                }
            }
        }

        // abelian ideal means additionally [u, u, A, ..., A] = 0
        for pair in (0..rows.len()).combinations(2) {
            for ambient in (0..self.dim).combinations(n - 2) {
                let mut args = Vec::with_capacity(n);
                args.push(rows[pair[0]].clone());
                args.push(rows[pair[1]].clone());
                for &j in &ambient {
                    args.push(self.basis_vector(j));
                }
                let value = self.bracket(&args)?;
                if !vec_is_zero(&value) {
                    return Ok(SubspaceRole {
                        subalgebra: true,
                        ideal: true,
                        abelian_ideal: false,
                        witness: Some(BracketWitness { args, value }),
                    });
                }
            }
        }

        Ok(SubspaceRole {
            subalgebra: true,
            ideal: true,
            abelian_ideal: true,
            witness: None,
        })
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        self.check_subspace(u)?;
        let rows = u.basis_rows();
        for combo in (0..rows.len()).combinations(self.arity) {
            let args: Vec<Vec<Scalar>> = combo.iter().map(|&i| rows[i].clone()).collect();
            if !u.contains(&self.bracket(&args)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_subspace(u)?;
        let rows = u.basis_rows();
        for row in &rows {
            for ambient in (0..self.dim).combinations(self.arity - 1) {
                let mut args = Vec::with_capacity(self.arity);
                args.push(row.clone());
                for &j in &ambient {
                    args.push(self.basis_vector(j));
                }
                if !u.contains(&self.bracket(&args)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Quotient by an ideal. Representatives are the standard basis
    /// vectors at the ideal's non-pivot columns, so projection reads
    /// coordinates straight off the reduced form.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(NLieAlgebra, QuotientMap)> {
        if !self.is_ideal(ideal)? {
            return Err(NLieError::NotAnIdeal);
        }
        let map = QuotientMap::new(ideal.clone());
        let q_dim = map.rep_cols.len();
        let mut entries = Vec::new();
        for combo in (0..q_dim).combinations(self.arity) {
            let tuple: Vec<usize> = combo.iter().map(|&i| map.rep_cols[i]).collect();
            let value = self.basis_bracket(&tuple)?;
            let projected = map.project(&value);
            if !vec_is_zero(&projected) {
                entries.push((combo, projected));
            }
        }
        let mut algebra = NLieAlgebra::new(self.arity, q_dim, self.field.clone(), entries)?;
        algebra.validated = self.validated;
        Ok((algebra, map))
    }

    /// Restriction of the bracket to a subalgebra, as an algebra in its
    /// own coordinates, together with the embedding back.
    pub fn restrict(&self, sub: &Subspace) -> Result<(NLieAlgebra, Embedding)> {
        if !self.is_subalgebra(sub)? {
            return Err(NLieError::NotASubalgebra);
        }
        let rows = sub.basis_rows();
        let k = rows.len();
        let mut entries = Vec::new();
        for combo in (0..k).combinations(self.arity) {
            let args: Vec<Vec<Scalar>> = combo.iter().map(|&i| rows[i].clone()).collect();
            let value = self.bracket(&args)?;
            let coords = sub
                .coords(&value)
                .expect("subalgebra is closed under its own brackets");
            if !vec_is_zero(&coords) {
                entries.push((combo, coords));
            }
        }
        let mut algebra = NLieAlgebra::new(self.arity, k, self.field.clone(), entries)?;
        algebra.validated = self.validated;
        Ok((algebra, Embedding { sub: sub.clone() }))
    }

    /// Direct sum with componentwise brackets and no cross terms.
    pub fn direct_sum(&self, other: &NLieAlgebra) -> Result<NLieAlgebra> {
        if self.arity != other.arity {
            return Err(NLieError::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        if self.field != other.field {
            return Err(NLieError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        let d1 = self.dim;
        let dim = d1 + other.dim;
        let mut entries = Vec::new();
        for (tuple, value) in &self.table {
            let mut v = value.clone();
            v.extend(vec![self.field.zero(); other.dim]);
            entries.push((tuple.clone(), v));
        }
        for (tuple, value) in &other.table {
            let shifted: Vec<usize> = tuple.iter().map(|&i| i + d1).collect();
            let mut v = vec![self.field.zero(); d1];
            v.extend(value.iter().cloned());
            entries.push((shifted, v));
        }
        let mut algebra = NLieAlgebra::new(self.arity, dim, self.field.clone(), entries)?;
        algebra.validated = self.validated && other.validated;
        Ok(algebra)
    }

    /// Reinterprets a rational algebra over GF(p): structure constants
    /// are scaled by the common denominator (a bracket rescaling, which
    /// preserves the fundamental identity and every span-level notion)
    /// and then reduced.
    pub fn reduce_mod_prime(&self, p: u64) -> Result<NLieAlgebra> {
        if self.field.is_prime_field() {
            return Err(NLieError::RequiresRationalField {
                op: "mod-p reduction",
            });
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        let mut lcm = BigInt::one();
        for value in self.table.values() {
            for s in value {
                if let Scalar::Rational(r) = s {
                    lcm = lcm.lcm(r.denom());
                }
            }
        }
        let target = FieldSpec::prime_field(p)?;
        let mut entries = Vec::new();
        for (tuple, value) in &self.table {
            let mut v = Vec::with_capacity(self.dim);
            for s in value {
                let Scalar::Rational(r) = s else {
                    unreachable!("rational algebra has rational entries")
                };
                let scaled = r.numer() * &lcm / r.denom();
                v.push(target.from_big_ratio(&scaled, &BigInt::one())?);
            }
            entries.push((tuple.clone(), v));
        }
        NLieAlgebra::new(self.arity, self.dim, target, entries)
    }

    fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.ambient() != self.dim {
            return Err(NLieError::AmbientMismatch {
                expected: self.dim,
                got: u.ambient(),
            });
        }
        if u.field() != &self.field {
            return Err(NLieError::FieldMismatch(
                self.field.to_string(),
                u.field().to_string(),
            ));
        }
        Ok(())
    }
}

/// Outcome of the fundamental identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<FundamentalIdentityViolation>,
}

/// One failing instance: the outer n-tuple and inner (n-1)-tuple of
/// 0-based basis indices, and the nonzero residual LHS - RHS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalIdentityViolation {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceRole {
    pub subalgebra: bool,
    pub ideal: bool,
    pub abelian_ideal: bool,
    /// Bracket instance proving the first negative verdict, if any.
    pub witness: Option<BracketWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketWitness {
    pub args: Vec<Vec<Scalar>>,
    pub value: Vec<Scalar>,
}

/// Projection A -> A/I with the standard-basis section at the ideal's
/// non-pivot columns.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ideal: Subspace,
    rep_cols: Vec<usize>,
}

impl QuotientMap {
    fn new(ideal: Subspace) -> Self {
        let pivots = ideal.pivot_cols();
        let rep_cols = (0..ideal.ambient())
            .filter(|c| !pivots.contains(c))
            .collect();
        QuotientMap { ideal, rep_cols }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Ambient indices of the representative coordinates.
    pub fn rep_cols(&self) -> &[usize] {
        &self.rep_cols
    }

    pub fn quotient_dim(&self) -> usize {
        self.rep_cols.len()
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.ideal.reduce(v);
        self.rep_cols.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// The canonical section: quotient coordinates placed at the
    /// representative columns. project(lift(w)) = w.
    pub fn lift(&self, w: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(w.len(), self.rep_cols.len(), "quotient coordinate length");
        let field = self.ideal.field().clone();
        let mut v = vec![field.zero(); self.ideal.ambient()];
        for (i, &c) in self.rep_cols.iter().enumerate() {
            v[c] = w[i].clone();
        }
        v
    }

    pub fn project_subspace(&self, u: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = u.basis_rows().iter().map(|r| self.project(r)).collect();
        Subspace::span(self.ideal.field().clone(), self.rep_cols.len(), rows)
            .expect("projection stays in one field")
    }

    /// Full preimage of a quotient subspace, always containing the ideal.
    pub fn lift_subspace(&self, w: &Subspace) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = w.basis_rows().iter().map(|r| self.lift(r)).collect();
        rows.extend(self.ideal.basis_rows());
        Subspace::span(self.ideal.field().clone(), self.ideal.ambient(), rows)
            .expect("lift stays in one field")
    }
}

/// Identifies a subalgebra's own coordinates with its ambient copy.
#[derive(Debug, Clone)]
pub struct Embedding {
    sub: Subspace,
}

impl Embedding {
    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn to_ambient(&self, local: &[Scalar]) -> Vec<Scalar> {
        self.sub.from_coords(local)
    }

    pub fn from_ambient(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.sub.coords(v)
    }

    pub fn subspace_to_ambient(&self, local: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = local
            .basis_rows()
            .iter()
            .map(|r| self.to_ambient(r))
            .collect();
        Subspace::span(self.sub.field().clone(), self.sub.ambient(), rows)
            .expect("embedding stays in one field")
    }
}
