//! Built-in algebra families, addressable by name, each carrying the
//! invariant values traditionally stated for it. The audit recomputes
//! every claim and reports match, mismatch, or characteristic-p
//! deviation, so a claim whose usual justification assumes
//! characteristic zero is never silently asserted over GF(p).
//!
//! Grammar for names:
//!   example_3_1            dim 4, arity 3, [e2,e3,e4] = e1
//!   example_3_2            dim 5, arity 3, [e2,e3,e4] = e1, [e3,e4,e5] = e2
//!   simple:N               arity N, dim N+1, [e1,..,ê_i,..,e_{N+1}] = e_i
//!   abelian:N:D            arity N, dim D, zero bracket
//!   nilpotent:N:D          arity N, dim D ≥ N+1, [e_{D-N+1},..,e_D] = e1
//!   <entry>+<entry>+...    direct sum, claims dropped
//!
//! Indices in names and claim labels are 1-based, matching the text
//! format; the tables themselves are stored 0-based.

use crate::algebra::NLieAlgebra;
use crate::error::{NLieError, Result};
use crate::field::FieldSpec;
use crate::frattini::Analyzer;
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: NLieAlgebra,
    pub claims: Vec<CatalogClaim>,
}

/// One stated invariant value. `char_zero_hypothesis` records that the
/// statement's usual justification assumes characteristic zero; a failed
/// claim with the hypothesis set is a deviation, not a mismatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogClaim {
    pub label: String,
    pub expectation: ClaimExpectation,
    pub char_zero_hypothesis: bool,
}

/// Expected values are stored as 0-based basis index lists and
/// instantiated over the audit field, so one claim serves every field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimExpectation {
    /// F(A) equals the span of these basis vectors.
    FrattiniSubalgebra(Vec<usize>),
    /// phi(A) equals the span of these basis vectors.
    FrattiniIdeal(Vec<usize>),
    /// phi of the subalgebra spanned by `sub` equals the span of
    /// `expected`.
    FrattiniIdealOfSubalgebra {
        sub: Vec<usize>,
        expected: Vec<usize>,
    },
    Elementary(bool),
    EAlgebra(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Match,
    Mismatch,
    CharPDeviation,
}

impl ClaimStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Match => "MATCH",
            ClaimStatus::Mismatch => "MISMATCH",
            ClaimStatus::CharPDeviation => "CHAR-P-DEVIATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimAuditRow {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
}

/// Builds a catalog algebra over the given field. Composite names joined
/// with `+` build the direct sum of their parts and carry no claims.
pub fn build(name: &str, field: &FieldSpec) -> Result<CatalogEntry> {
    let name = name.trim();
    if name.contains('+') {
        let mut parts = name.split('+');
        let first = parts
            .next()
            .ok_or_else(|| NLieError::UnknownCatalogEntry(name.to_string()))?;
        let mut algebra = build_single(first, field)?;
        let mut canonical = vec![first.trim().to_string()];
        for part in parts {
            let next = build_single(part, field)?;
            algebra = algebra.direct_sum(&next)?;
            canonical.push(part.trim().to_string());
        }
        return Ok(CatalogEntry {
            name: canonical.join("+"),
            algebra,
            claims: Vec::new(),
        });
    }
    let algebra = build_single(name, field)?;
    Ok(CatalogEntry {
        name: name.to_string(),
        algebra,
        claims: claims_for(name),
    })
}

fn build_single(name: &str, field: &FieldSpec) -> Result<NLieAlgebra> {
    let name = name.trim();
    let algebra = match name {
        "example_3_1" => one_product(3, 4, field)?,
        "example_3_2" => {
            let e = |i: usize| {
                let mut v = vec![field.zero(); 5];
                v[i] = field.one();
                v
            };
            NLieAlgebra::new(
                3,
                5,
                field.clone(),
                vec![(vec![1, 2, 3], e(0)), (vec![2, 3, 4], e(1))],
            )?
        }
        _ => {
            let mut pieces = name.split(':');
            let family = pieces.next().unwrap_or_default();
            let params: Vec<&str> = pieces.collect();
            match (family, params.as_slice()) {
                ("simple", [n]) => {
                    let n = parse_param(name, n)?;
                    if n < 2 {
                        return Err(NLieError::BadCatalogParams(format!(
                            "simple:{n} needs arity at least 2"
                        )));
                    }
                    simple_algebra(n, field)?
                }
                ("abelian", [n, d]) => {
                    let n = parse_param(name, n)?;
                    let d = parse_param(name, d)?;
                    if n < 2 {
                        return Err(NLieError::BadCatalogParams(format!(
                            "abelian:{n}:{d} needs arity at least 2"
                        )));
                    }
                    NLieAlgebra::abelian(n, d, field.clone())?
                }
                ("nilpotent", [n, d]) => {
                    let n = parse_param(name, n)?;
                    let d = parse_param(name, d)?;
                    if n < 2 || d < n + 1 {
                        return Err(NLieError::BadCatalogParams(format!(
                            "nilpotent:{n}:{d} needs arity at least 2 and dim at least arity + 1"
                        )));
                    }
                    one_product(n, d, field)?
                }
                _ => return Err(NLieError::UnknownCatalogEntry(name.to_string())),
            }
        }
    };
    let (algebra, report) = algebra.with_validation();
    assert!(
        report.ok,
        "catalog table for `{name}` violates the fundamental identity"
    );
    Ok(algebra)
}

fn parse_param(name: &str, raw: &str) -> Result<usize> {
    raw.parse()
        .map_err(|_| NLieError::BadCatalogParams(format!("`{raw}` in `{name}` is not a number")))
}

/// Single product [e_{d-n+1}, ..., e_d] = e1, zero elsewhere. Nilpotent
/// of index 2 because e1 never recurs as an argument of a nonzero
/// bracket.
fn one_product(arity: usize, dim: usize, field: &FieldSpec) -> Result<NLieAlgebra> {
    let mut e1 = vec![field.zero(); dim];
    e1[0] = field.one();
    let tuple: Vec<usize> = (dim - arity..dim).collect();
    NLieAlgebra::new(arity, dim, field.clone(), vec![(tuple, e1)])
}

/// The (n+1)-dimensional algebra [e1, ..., ê_i, ..., e_{n+1}] = e_i.
fn simple_algebra(arity: usize, field: &FieldSpec) -> Result<NLieAlgebra> {
    let dim = arity + 1;
    let mut entries = Vec::with_capacity(dim);
    for i in 0..dim {
        let tuple: Vec<usize> = (0..dim).filter(|&j| j != i).collect();
        let mut value = vec![field.zero(); dim];
        value[i] = field.one();
        entries.push((tuple, value));
    }
    NLieAlgebra::new(arity, dim, field.clone(), entries)
}

fn claims_for(name: &str) -> Vec<CatalogClaim> {
    let claim = |label: &str, expectation, hyp| CatalogClaim {
        label: label.to_string(),
        expectation,
        char_zero_hypothesis: hyp,
    };
    match name {
        "example_3_1" => vec![
            claim(
                "F(A) = span{e1}",
                ClaimExpectation::FrattiniSubalgebra(vec![0]),
                false,
            ),
            claim(
                "phi(A) = span{e1}",
                ClaimExpectation::FrattiniIdeal(vec![0]),
                true,
            ),
            claim("E-algebra: true", ClaimExpectation::EAlgebra(true), false),
            claim(
                "elementary: false",
                ClaimExpectation::Elementary(false),
                false,
            ),
        ],
        "example_3_2" => vec![
            claim(
                "F(A) = 0",
                ClaimExpectation::FrattiniSubalgebra(vec![]),
                false,
            ),
            claim(
                "elementary: false",
                ClaimExpectation::Elementary(false),
                false,
            ),
            claim(
                "phi(span{e1,e2,e3,e4}) = span{e1}",
                ClaimExpectation::FrattiniIdealOfSubalgebra {
                    sub: vec![0, 1, 2, 3],
                    expected: vec![0],
                },
                true,
            ),
        ],
        _ => {
            let family = name.split(':').next().unwrap_or_default();
            match family {
                "simple" => vec![
                    claim(
                        "F(A) = 0",
                        ClaimExpectation::FrattiniSubalgebra(vec![]),
                        true,
                    ),
                    claim(
                        "elementary: true",
                        ClaimExpectation::Elementary(true),
                        true,
                    ),
                ],
                "abelian" => vec![
                    claim(
                        "F(A) = 0",
                        ClaimExpectation::FrattiniSubalgebra(vec![]),
                        false,
                    ),
                    claim(
                        "elementary: true",
                        ClaimExpectation::Elementary(true),
                        false,
                    ),
                ],
                "nilpotent" => vec![
                    claim(
                        "F(A) = span{e1}",
                        ClaimExpectation::FrattiniSubalgebra(vec![0]),
                        false,
                    ),
                    claim(
                        "elementary: false",
                        ClaimExpectation::Elementary(false),
                        false,
                    ),
                ],
                _ => Vec::new(),
            }
        }
    }
}

/// Recomputes every claim through the analyzer (which must hold the
/// entry's algebra) and grades it.
pub fn audit(claims: &[CatalogClaim], analyzer: &Analyzer) -> Result<Vec<ClaimAuditRow>> {
    let a = analyzer.algebra();
    let span_of = |indices: &[usize]| -> Result<Subspace> {
        Subspace::span(
            a.field().clone(),
            a.dim(),
            indices.iter().map(|&i| a.basis_vector(i)).collect(),
        )
    };
    let mut rows = Vec::with_capacity(claims.len());
    for claim in claims {
        let (expected, computed, matched) = match &claim.expectation {
            ClaimExpectation::FrattiniSubalgebra(idx) => {
                let expected = span_of(idx)?;
                let computed = analyzer.frattini()?.f;
                let ok = computed == expected;
                (expected.to_string(), computed.to_string(), ok)
            }
            ClaimExpectation::FrattiniIdeal(idx) => {
                let expected = span_of(idx)?;
                let computed = analyzer.frattini()?.phi;
                let ok = computed == expected;
                (expected.to_string(), computed.to_string(), ok)
            }
            ClaimExpectation::FrattiniIdealOfSubalgebra { sub, expected } => {
                let sub_space = span_of(sub)?;
                let expected = span_of(expected)?;
                let computed = analyzer.phi_of(&sub_space)?;
                let ok = computed == expected;
                (expected.to_string(), computed.to_string(), ok)
            }
            ClaimExpectation::Elementary(want) => {
                let verdict = analyzer.is_elementary()?;
                (
                    want.to_string(),
                    verdict.holds.to_string(),
                    verdict.holds == *want,
                )
            }
            ClaimExpectation::EAlgebra(want) => {
                let verdict = analyzer.is_e_algebra()?;
                (
                    want.to_string(),
                    verdict.holds.to_string(),
                    verdict.holds == *want,
                )
            }
        };
        let status = if matched {
            ClaimStatus::Match
        } else if claim.char_zero_hypothesis {
            ClaimStatus::CharPDeviation
        } else {
            ClaimStatus::Mismatch
        };
        rows.push(ClaimAuditRow {
            label: claim.label.clone(),
            expected,
            computed,
            status,
        });
    }
    Ok(rows)
}

/// Convenience: build, analyze, audit in one call.
pub fn audit_entry(entry: &CatalogEntry, cap: usize) -> Result<Vec<ClaimAuditRow>> {
    let analyzer = Analyzer::new(entry.algebra.clone(), cap);
    audit(&entry.claims, &analyzer)
}
