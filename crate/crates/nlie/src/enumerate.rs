//! Exhaustive subspace enumeration over prime fields.
//!
//! Every subspace of GF(p)^d has exactly one reduced row-echelon basis,
//! so enumerating subspaces means enumerating those bases: choose the
//! pivot columns, then run through every assignment of the free entries.
//! The result is returned sorted by dimension and then lexicographically
//! on the flattened basis; that order is the canonical enumeration order
//! referenced by every witness-producing operation in the crate.
//!
//! Enumeration is exponential in nature (the counts are the Galois
//! numbers), so a dimension cap guards against accidental blowups. The
//! default cap of 7 keeps worst cases at desk scale and can be raised
//! explicitly.

use itertools::Itertools;

use crate::error::{NLieError, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Largest ambient dimension enumerated without an explicit override.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// All subspaces of GF(p)^ambient in canonical order, subject to the
/// default cap.
pub fn enumerate_subspaces(ambient: usize, field: &FieldSpec) -> Result<Vec<Subspace>> {
    enumerate_subspaces_capped(ambient, field, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_subspaces_capped(
    ambient: usize,
    field: &FieldSpec,
    cap: usize,
) -> Result<Vec<Subspace>> {
    let Some(p) = field.modulus() else {
        return Err(NLieError::RequiresPrimeField {
            op: "subspace enumeration",
        });
    };
    if ambient > cap {
        return Err(NLieError::CapExceeded { dim: ambient, cap });
    }
    let mut out = Vec::new();
    for k in 0..=ambient {
        let mut of_dim = Vec::new();
        for pivots in (0..ambient).combinations(k) {
            // free positions, row-major: entries right of the row's pivot
            // that are not themselves pivot columns
            let mut free = Vec::new();
            for (i, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..ambient {
                    if !pivots.contains(&c) {
                        free.push((i, c));
                    }
                }
            }
            let mut digits = vec![0u64; free.len()];
            loop {
                let mut rows = vec![vec![field.zero(); ambient]; k];
                for (i, &pc) in pivots.iter().enumerate() {
                    rows[i][pc] = field.one();
                }
                for (slot, &(r, c)) in free.iter().enumerate() {
                    rows[r][c] = field.from_integer(digits[slot] as i64);
                }
                let basis = Matrix::from_rows(field.clone(), ambient, rows)
                    .expect("generated rows are well formed");
                of_dim.push(Subspace::from_canonical(basis));
                // odometer over base-p digits
                let mut slot = free.len();
                loop {
                    if slot == 0 {
                        break;
                    }
                    slot -= 1;
                    digits[slot] += 1;
                    if digits[slot] < p {
                        break;
                    }
                    digits[slot] = 0;
                    if slot == 0 {
                        break;
                    }
                }
                if digits.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
        of_dim.sort();
        out.extend(of_dim);
    }
    Ok(out)
}

/// All vectors of GF(p)^ambient in lexicographic coordinate order,
/// starting with zero.
pub fn enumerate_vectors(ambient: usize, field: &FieldSpec) -> Result<Vec<Vec<Scalar>>> {
    let Some(p) = field.modulus() else {
        return Err(NLieError::RequiresPrimeField {
            op: "vector enumeration",
        });
    };
    let mut out = Vec::new();
    let mut digits = vec![0u64; ambient];
    loop {
        out.push(digits.iter().map(|&d| field.from_integer(d as i64)).collect());
        let mut slot = ambient;
        loop {
            if slot == 0 {
                return Ok(out);
            }
            slot -= 1;
            digits[slot] += 1;
            if digits[slot] < p {
                break;
            }
            digits[slot] = 0;
            if slot == 0 {
                return Ok(out);
            }
        }
    }
}

/// One representative per line (1-dimensional subspace) of GF(p)^ambient:
/// the vectors whose first nonzero coordinate is 1, in lexicographic
/// order.
pub fn line_representatives(ambient: usize, field: &FieldSpec) -> Result<Vec<Vec<Scalar>>> {
    let vectors = enumerate_vectors(ambient, field)?;
    Ok(vectors
        .into_iter()
        .filter(|v| {
            v.iter()
                .find(|s| !s.is_zero())
                .map(|s| s.is_one())
                .unwrap_or(false)
        })
        .collect())
}

/// Gaussian binomial [d choose k]_p: the number of k-dimensional
/// subspaces of GF(p)^d. Computed by the exact telescoping product.
pub fn gaussian_binomial(d: usize, k: usize, p: u64) -> u128 {
    if k > d {
        return 0;
    }
    let p = p as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = p.pow((d - i) as u32) - 1;
        let den = p.pow((i + 1) as u32) - 1;
        acc = acc * num / den; // partial products are themselves q-binomials
    }
    acc
}

/// Galois number: total count of subspaces of GF(p)^d of every dimension.
pub fn galois_number(d: usize, p: u64) -> u128 {
    (0..=d).map(|k| gaussian_binomial(d, k, p)).sum()
}
