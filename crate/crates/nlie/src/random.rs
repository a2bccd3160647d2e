//! Seeded random algebras for property testing and the CLI's `random:`
//! source. Determinism contract: the same (arity, dim, field, seed)
//! always yields the same algebra.
//!
//! Random structure constants rarely satisfy the fundamental identity,
//! so three strategies are mixed. Conjugating a known-valid table by a
//! random invertible matrix always succeeds and hides the standard
//! basis; direct sums of two conjugated blocks add decomposable
//! instances; genuinely free sparse tables are kept only when they
//! validate, with a conjugated fallback after a bounded number of
//! rejections. Every returned algebra has passed validation.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::NLieAlgebra;
use crate::catalog;
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

pub fn random_algebra(
    arity: usize,
    dim: usize,
    field: &FieldSpec,
    seed: u64,
) -> Result<NLieAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebra = match rng.gen_range(0..4u8) {
        0 | 1 => conjugated_base(arity, dim, field, &mut rng)?,
        2 => sparse_or_fallback(arity, dim, field, &mut rng)?,
        _ => split_sum(arity, dim, field, &mut rng)?,
    };
    let (algebra, report) = algebra.with_validation();
    assert!(report.ok, "random generation produced an invalid table");
    Ok(algebra)
}

/// A named base table for (arity, dim), picked at random among the
/// families that fit.
fn base_algebra(
    arity: usize,
    dim: usize,
    field: &FieldSpec,
    rng: &mut impl Rng,
) -> Result<NLieAlgebra> {
    let mut choices: Vec<String> = vec![format!("abelian:{arity}:{dim}")];
    if dim == arity + 1 {
        choices.push(format!("simple:{arity}"));
    }
    if dim >= arity + 1 {
        choices.push(format!("nilpotent:{arity}:{dim}"));
    }
    let name = &choices[rng.gen_range(0..choices.len())];
    Ok(catalog::build(name, field)?.algebra)
}

fn conjugated_base(
    arity: usize,
    dim: usize,
    field: &FieldSpec,
    rng: &mut impl Rng,
) -> Result<NLieAlgebra> {
    let base = base_algebra(arity, dim, field, rng)?;
    conjugate(&base, rng)
}

fn split_sum(
    arity: usize,
    dim: usize,
    field: &FieldSpec,
    rng: &mut impl Rng,
) -> Result<NLieAlgebra> {
    if dim < 2 {
        return conjugated_base(arity, dim, field, rng);
    }
    let d1 = rng.gen_range(1..dim);
    let left = base_algebra(arity, d1, field, rng)?;
    let right = base_algebra(arity, dim - d1, field, rng)?;
    conjugate(&left.direct_sum(&right)?, rng)
}

fn sparse_or_fallback(
    arity: usize,
    dim: usize,
    field: &FieldSpec,
    rng: &mut impl Rng,
) -> Result<NLieAlgebra> {
    for _ in 0..40 {
        let candidate = sparse_candidate(arity, dim, field, rng)?;
        if candidate.validate().ok {
            return Ok(candidate);
        }
    }
    conjugated_base(arity, dim, field, rng)
}

/// A handful of random tuples with sparse random values; no validity
/// guarantee, the caller filters.
fn sparse_candidate(
    arity: usize,
    dim: usize,
    field: &FieldSpec,
    rng: &mut impl Rng,
) -> Result<NLieAlgebra> {
    use itertools::Itertools;
    let tuples: Vec<Vec<usize>> = (0..dim).combinations(arity).collect();
    let mut entries = Vec::new();
    if !tuples.is_empty() {
        let count = rng.gen_range(1..=tuples.len().min(3));
        let mut picked: Vec<usize> = Vec::new();
        while picked.len() < count {
            let i = rng.gen_range(0..tuples.len());
            if !picked.contains(&i) {
                picked.push(i);
            }
        }
        for i in picked {
            let value: Vec<Scalar> = (0..dim)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        field.zero()
                    } else {
                        random_scalar(field, rng)
                    }
                })
                .collect();
            entries.push((tuples[i].clone(), value));
        }
    }
    NLieAlgebra::new(arity, dim, field.clone(), entries)
}

fn random_scalar(field: &FieldSpec, rng: &mut impl Rng) -> Scalar {
    match field.modulus() {
        Some(p) => field.from_integer(rng.gen_range(0..p) as i64),
        None => field.from_integer(rng.gen_range(-2..=2)),
    }
}

/// Rewrites the table in the basis given by the columns of a random
/// invertible matrix. Isomorphic image, so validity is preserved.
fn conjugate(a: &NLieAlgebra, rng: &mut impl Rng) -> Result<NLieAlgebra> {
    use itertools::Itertools;
    let d = a.dim();
    if d == 0 {
        return Ok(a.clone());
    }
    let field = a.field().clone();
    let p = loop {
        let data: Vec<Scalar> = (0..d * d).map(|_| random_scalar(&field, rng)).collect();
        let m = Matrix::new(d, d, field.clone(), data)?;
        if m.inverse().is_some() {
            break m;
        }
    };
    let p_inv = p.inverse().expect("chosen invertible");
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|j| (0..d).map(|i| p.at(i, j).clone()).collect())
        .collect();
    let mut entries = Vec::new();
    for tuple in (0..d).combinations(a.arity()) {
        let args: Vec<Vec<Scalar>> = tuple.iter().map(|&j| cols[j].clone()).collect();
        let value_old = a.bracket(&args)?;
        let value_new = p_inv.apply(&value_old);
        entries.push((tuple, value_new));
    }
    NLieAlgebra::new(a.arity(), d, field, entries)
}

/// Stable auxiliary generator for tests that need raw randomness tied to
/// a seed without touching the algebra stream.
pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
