//! Field-independent structural invariants: derived subalgebra, ideal
//! power series and nilpotency, normalizers, the derivation algebra,
//! simplicity, and strong-semisimple decomposition.
//!
//! Everything here reduces to exact linear algebra on spans built from
//! basis brackets. Multilinearity keeps every span and constraint system
//! finite: a bracket condition that holds on basis tuples holds on the
//! whole space.

use itertools::Itertools;

use crate::algebra::NLieAlgebra;
use crate::enumerate::line_representatives;
use crate::error::{NLieError, Result};
use crate::field::Scalar;
use crate::matrix::{vec_is_zero, vec_sub, Matrix};
use crate::subspace::Subspace;

/// Prime used to reinterpret a rational algebra over a finite field when
/// a simplicity verdict needs exhaustive line closures.
pub const DEFAULT_REDUCTION_PRIME: u64 = 101;

/// Span of all basis brackets, the first term of the lower central
/// series. Equals the whole algebra exactly when the algebra is perfect.
pub fn derived_subalgebra(a: &NLieAlgebra) -> Subspace {
    let rows: Vec<Vec<Scalar>> = a.table().values().cloned().collect();
    Subspace::span(a.field().clone(), a.dim(), rows).expect("table values live in the algebra")
}

/// Descending ideal powers I, [I, I, A, ..., A], ... until the dimension
/// stabilizes. `terms` keeps each distinct power; a trailing zero term
/// certifies nilpotency and `index` counts the nonzero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    pub terms: Vec<Subspace>,
    pub nilpotent: bool,
    pub index: Option<usize>,
}

pub fn ideal_series(a: &NLieAlgebra, ideal: &Subspace) -> Result<SeriesResult> {
    if !a.is_ideal(ideal)? {
        return Err(NLieError::NotAnIdeal);
    }
    let n = a.arity();
    let mut terms = vec![ideal.clone()];
    loop {
        let cur = terms.last().expect("series starts nonempty");
        if cur.is_zero() {
            break;
        }
        let cur_rows = cur.basis_rows();
        let ideal_rows = ideal.basis_rows();
        let mut products: Vec<Vec<Scalar>> = Vec::new();
        for x in &cur_rows {
            for y in &ideal_rows {
                for ambient in (0..a.dim()).combinations(n - 2) {
                    let mut args = Vec::with_capacity(n);
                    args.push(x.clone());
                    args.push(y.clone());
                    for &j in &ambient {
                        args.push(a.basis_vector(j));
                    }
                    products.push(a.bracket(&args)?);
                }
            }
        }
        let next = Subspace::span(a.field().clone(), a.dim(), products)?;
        // each power sits inside the previous one, so equal dimension
        // means the chain has stabilized
        if next.dim() == cur.dim() {
            break;
        }
        terms.push(next);
    }
    let nilpotent = terms.last().map(Subspace::is_zero).unwrap_or(false);
    let index = nilpotent.then(|| terms.len() - 1);
    Ok(SeriesResult {
        terms,
        nilpotent,
        index,
    })
}

/// Nilpotency series of the algebra itself.
pub fn nilpotency_series(a: &NLieAlgebra) -> SeriesResult {
    ideal_series(a, &a.full_space()).expect("the whole space is an ideal")
}

pub fn is_nilpotent(a: &NLieAlgebra) -> bool {
    nilpotency_series(a).nilpotent
}

/// Largest subspace whose brackets against (n-1)-tuples from `h` fall
/// back into `h`. Solved as the kernel of one stacked linear system; the
/// membership condition "v lies in h" is encoded by pairing v against a
/// basis of the annihilator of h, which is the kernel of h's basis
/// matrix.
pub fn normalizer(a: &NLieAlgebra, h: &Subspace) -> Result<Subspace> {
    if !a.is_subalgebra(h)? {
        return Err(NLieError::NotASubalgebra);
    }
    let n = a.arity();
    let d = a.dim();
    let field = a.field().clone();
    if h.dim() + 1 < n {
        // too few arguments to form any constraint
        return Ok(a.full_space());
    }
    let annihilator = h.basis().kernel();
    if annihilator.rows() == 0 {
        return Ok(a.full_space());
    }
    let h_rows = h.basis_rows();
    let mut constraint_rows: Vec<Vec<Scalar>> = Vec::new();
    for combo in (0..h_rows.len()).combinations(n - 1) {
        // column i of the map x -> [x, h_combo]
        let mut columns = Vec::with_capacity(d);
        for i in 0..d {
            let mut args = Vec::with_capacity(n);
            args.push(a.basis_vector(i));
            for &j in &combo {
                args.push(h_rows[j].clone());
            }
            columns.push(a.bracket(&args)?);
        }
        for ann in annihilator.row_vecs() {
            let mut row = Vec::with_capacity(d);
            for col in &columns {
                let mut acc = field.zero();
                for (w, v) in ann.iter().zip(col.iter()) {
                    acc = acc.add(&w.mul(v));
                }
                row.push(acc);
            }
            constraint_rows.push(row);
        }
    }
    if constraint_rows.is_empty() {
        return Ok(a.full_space());
    }
    let system = Matrix::from_rows(field, d, constraint_rows)?;
    Ok(Subspace::from_matrix(&system.kernel()))
}

/// Solution space of the Leibniz condition D[x_1..x_n] = sum of brackets
/// with D applied in one slot, over all increasing basis tuples. Matrices
/// act on column vectors; the basis is echelon-canonical over the d^2
/// coordinates in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub basis: Vec<Matrix>,
    pub dim: usize,
}

pub fn derivation_algebra(a: &NLieAlgebra) -> DerivationSpace {
    let n = a.arity();
    let d = a.dim();
    let field = a.field().clone();
    let unknowns = d * d;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for tuple in (0..d).combinations(n) {
        let bracket_value = a.basis_bracket(&tuple).expect("tuple is in range");
        // residual component i, unknown D_{rc} at r*d + c
        let mut block = vec![vec![field.zero(); unknowns]; d];
        for (i, row) in block.iter_mut().enumerate() {
            for c in 0..d {
                if !bracket_value[c].is_zero() {
                    row[i * d + c] = row[i * d + c].add(&bracket_value[c]);
                }
            }
        }
        for slot in 0..n {
            for r in 0..d {
                let mut replaced = tuple.clone();
                replaced[slot] = r;
                let v = a.basis_bracket(&replaced).expect("tuple is in range");
                let col = tuple[slot];
                for (i, row) in block.iter_mut().enumerate() {
                    if !v[i].is_zero() {
                        row[r * d + col] = row[r * d + col].sub(&v[i]);
                    }
                }
            }
        }
        rows.extend(block);
    }
    if rows.is_empty() {
        // no constraints: every linear map is a derivation
        let mut basis = Vec::with_capacity(unknowns);
        for r in 0..d {
            for c in 0..d {
                let mut m = Matrix::zero(d, d, field.clone());
                m.set(r, c, field.one());
                basis.push(m);
            }
        }
        return DerivationSpace {
            dim: unknowns,
            basis,
        };
    }
    let system = Matrix::from_rows(field.clone(), unknowns, rows)
        .expect("constraint rows share the algebra field");
    let kernel = system.kernel();
    let basis: Vec<Matrix> = kernel
        .row_vecs()
        .into_iter()
        .map(|flat| Matrix::new(d, d, field.clone(), flat).expect("kernel row has d^2 entries"))
        .collect();
    let space = DerivationSpace {
        dim: basis.len(),
        basis,
    };
    debug_assert!(space
        .basis
        .iter()
        .all(|m| is_derivation(a, m).unwrap_or(false)));
    space
}

/// Checks the Leibniz condition directly on all increasing basis tuples.
pub fn is_derivation(a: &NLieAlgebra, m: &Matrix) -> Result<bool> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(NLieError::Shape(format!(
            "derivation candidate must be {0}x{0}",
            a.dim()
        )));
    }
    let n = a.arity();
    for tuple in (0..a.dim()).combinations(n) {
        let lhs = m.apply(&a.basis_bracket(&tuple)?);
        let mut rhs = vec![a.field().zero(); a.dim()];
        for slot in 0..n {
            let mut args: Vec<Vec<Scalar>> =
                tuple.iter().map(|&i| a.basis_vector(i)).collect();
            args[slot] = m.apply(&args[slot]);
            rhs = crate::matrix::vec_add(&rhs, &a.bracket(&args)?);
        }
        if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest ideal containing the given subspace: close the span under
/// brackets against ambient basis (n-1)-tuples until it stops growing.
pub fn ideal_closure(a: &NLieAlgebra, seed: &Subspace) -> Result<Subspace> {
    let n = a.arity();
    let mut span = seed.clone();
    loop {
        if span.is_full() {
            return Ok(span);
        }
        let rows = span.basis_rows();
        let mut new_rows: Vec<Vec<Scalar>> = Vec::new();
        for row in &rows {
            for ambient in (0..a.dim()).combinations(n - 1) {
                let mut args = Vec::with_capacity(n);
                args.push(row.clone());
                for &j in &ambient {
                    args.push(a.basis_vector(j));
                }
                let v = a.bracket(&args)?;
                if !span.contains(&v) {
                    new_rows.push(v);
                }
            }
        }
        if new_rows.is_empty() {
            return Ok(span);
        }
        let ext = Subspace::span(a.field().clone(), a.dim(), new_rows)?;
        span = span.sum(&ext)?;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityMethod {
    /// Ideal closures of every line over the prime field; complete.
    ExhaustiveLines,
    /// Ideal closures of the standard basis lines over the rationals;
    /// sound only for a negative verdict.
    BasisClosures,
    /// Verdict about the algebra reinterpreted over GF(p).
    ReductionMod(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub simple: bool,
    /// A proper nonzero ideal when one exists; canonically the smallest.
    /// Absent on a negative verdict exactly when the derived subalgebra
    /// is zero and no proper nonzero ideal was found.
    pub witness: Option<Subspace>,
    pub method: SimplicityMethod,
}

/// Simplicity: the derived subalgebra is nonzero and the only ideals are
/// zero and the whole space. Over a prime field the closure of every
/// line is examined, which is complete because a proper nonzero ideal
/// contains the closure of each of its lines. Over the rationals only
/// standard basis lines are closed; if none is proper the question is
/// settled over a reduction mod `DEFAULT_REDUCTION_PRIME` instead and the
/// method field says so.
pub fn is_simple(a: &NLieAlgebra) -> Result<SimplicityReport> {
    is_simple_with_prime(a, DEFAULT_REDUCTION_PRIME)
}

pub fn is_simple_with_prime(a: &NLieAlgebra, reduction_prime: u64) -> Result<SimplicityReport> {
    if a.field().is_prime_field() {
        let witness = proper_ideal_from_lines(a)?;
        let simple = witness.is_none() && !derived_subalgebra(a).is_zero() && a.dim() > 0;
        return Ok(SimplicityReport {
            simple,
            witness,
            method: SimplicityMethod::ExhaustiveLines,
        });
    }
    let mut closures: Vec<Subspace> = Vec::new();
    for i in 0..a.dim() {
        let line = Subspace::span(a.field().clone(), a.dim(), vec![a.basis_vector(i)])?;
        let closed = ideal_closure(a, &line)?;
        if !closed.is_full() {
            closures.push(closed);
        }
    }
    if let Some(witness) = closures.into_iter().min() {
        return Ok(SimplicityReport {
            simple: false,
            witness: Some(witness),
            method: SimplicityMethod::BasisClosures,
        });
    }
    if derived_subalgebra(a).is_zero() || a.dim() == 0 {
        return Ok(SimplicityReport {
            simple: false,
            witness: None,
            method: SimplicityMethod::BasisClosures,
        });
    }
    let reduced = a.reduce_mod_prime(reduction_prime)?;
    let mut report = is_simple(&reduced)?;
    report.method = SimplicityMethod::ReductionMod(reduction_prime);
    Ok(report)
}

/// Canonically smallest proper nonzero ideal arising as a line closure,
/// if any. Complete over a prime field: every proper nonzero ideal
/// contains some line, hence that line's closure.
fn proper_ideal_from_lines(a: &NLieAlgebra) -> Result<Option<Subspace>> {
    let mut best: Option<Subspace> = None;
    for rep in line_representatives(a.dim(), a.field())? {
        let line = Subspace::span(a.field().clone(), a.dim(), vec![rep])?;
        let closed = ideal_closure(a, &line)?;
        if !closed.is_full() && best.as_ref().map_or(true, |b| closed < *b) {
            best = Some(closed);
        }
    }
    Ok(best)
}

/// All containment-minimal nonzero ideals, each realized as a line
/// closure, canonically sorted.
pub fn minimal_ideals(a: &NLieAlgebra) -> Result<Vec<Subspace>> {
    if !a.field().is_prime_field() {
        return Err(NLieError::RequiresPrimeField {
            op: "minimal ideal search",
        });
    }
    let mut closures: Vec<Subspace> = Vec::new();
    for rep in line_representatives(a.dim(), a.field())? {
        let line = Subspace::span(a.field().clone(), a.dim(), vec![rep])?;
        closures.push(ideal_closure(a, &line)?);
    }
    closures.sort();
    closures.dedup();
    let minimal: Vec<Subspace> = closures
        .iter()
        .filter(|c| {
            !closures
                .iter()
                .any(|other| other.dim() < c.dim() && c.contains_subspace(other))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SsdOutcome {
    /// Pairwise-intersection-free simple ideals whose sum is the algebra.
    Decomposition(Vec<Subspace>),
    NotStrongSemisimple(SsdFailure),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SsdFailure {
    /// The minimal ideals span only this proper subspace.
    MinimalIdealsSpan(Subspace),
    /// A minimal ideal that is not simple as an algebra.
    SummandNotSimple(Subspace),
}

/// Decomposition into simple ideals, when one exists. Minimal ideals are
/// gathered from line closures; a direct family is extracted greedily
/// (a minimal ideal meets the running sum in 0 or lies inside it), and
/// each summand is checked simple via restriction.
pub fn strong_semisimple_decomposition(a: &NLieAlgebra) -> Result<SsdOutcome> {
    if !a.field().is_prime_field() {
        return Err(NLieError::RequiresPrimeField {
            op: "strong-semisimple decomposition",
        });
    }
    if a.dim() == 0 {
        return Ok(SsdOutcome::Decomposition(Vec::new()));
    }
    let minimal = minimal_ideals(a)?;
    for ideal in &minimal {
        let (restricted, _) = a.restrict(ideal)?;
        if !is_simple(&restricted)?.simple {
            return Ok(SsdOutcome::NotStrongSemisimple(SsdFailure::SummandNotSimple(
                ideal.clone(),
            )));
        }
    }
    let mut family: Vec<Subspace> = Vec::new();
    let mut sum = a.zero_subspace();
    for ideal in &minimal {
        if sum.contains_subspace(ideal) {
            continue;
        }
        family.push(ideal.clone());
        sum = sum.sum(ideal)?;
    }
    if !sum.is_full() {
        return Ok(SsdOutcome::NotStrongSemisimple(SsdFailure::MinimalIdealsSpan(
            sum,
        )));
    }
    Ok(SsdOutcome::Decomposition(family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    fn one_relator(field: &FieldSpec) -> NLieAlgebra {
        let mut e1 = vec![field.zero(); 4];
        e1[0] = field.one();
        NLieAlgebra::new(3, 4, field.clone(), vec![(vec![1, 2, 3], e1)]).unwrap()
    }

    fn cross_like(field: &FieldSpec) -> NLieAlgebra {
        let e = |i: usize| {
            let mut v = vec![field.zero(); 3];
            v[i] = field.one();
            v
        };
        NLieAlgebra::new(
            2,
            3,
            field.clone(),
            vec![
                (vec![1, 2], e(0)),
                (vec![0, 2], e(1)),
                (vec![0, 1], e(2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn derived_subalgebra_of_known_algebras() {
        let f = gf(2);
        let a = one_relator(&f);
        let derived = derived_subalgebra(&a);
        assert_eq!(derived.dim(), 1);
        assert!(derived.contains(&a.basis_vector(0)));
        assert!(derived_subalgebra(&cross_like(&f)).is_full());
        let abelian = NLieAlgebra::abelian(2, 3, f).unwrap();
        assert!(derived_subalgebra(&abelian).is_zero());
    }

    #[test]
    fn nilpotency_series_shapes() {
        let f = gf(3);
        let a = one_relator(&f);
        let s = nilpotency_series(&a);
        assert!(s.nilpotent);
        assert_eq!(s.index, Some(2));
        let dims: Vec<usize> = s.terms.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 1, 0]);

        let simple = cross_like(&gf(5));
        let s = nilpotency_series(&simple);
        assert!(!s.nilpotent);
        assert_eq!(s.index, None);
        assert_eq!(s.terms.len(), 1);

        let abelian = NLieAlgebra::abelian(3, 2, gf(2)).unwrap();
        let s = nilpotency_series(&abelian);
        assert!(s.nilpotent);
        assert_eq!(s.index, Some(1));
    }

    #[test]
    fn series_rejects_non_ideals() {
        let f = gf(2);
        let a = one_relator(&f);
        let not_ideal = Subspace::span(f, 4, vec![a.basis_vector(1)]).unwrap();
        assert!(matches!(
            ideal_series(&a, &not_ideal),
            Err(NLieError::NotAnIdeal)
        ));
    }

    #[test]
    fn normalizer_of_plane_in_one_relator_algebra() {
        let f = gf(2);
        let a = one_relator(&f);
        // [x, e2, e3] = x_4 e1, so the normalizer of span(e2,e3) kills x_4
        let h = Subspace::span(f.clone(), 4, vec![a.basis_vector(1), a.basis_vector(2)]).unwrap();
        let nz = normalizer(&a, &h).unwrap();
        assert_eq!(nz.dim(), 3);
        assert!(nz.contains_subspace(&h));
        assert!(nz.contains(&a.basis_vector(0)));
        assert!(!nz.contains(&a.basis_vector(3)));
        // the whole algebra normalizes itself
        assert!(normalizer(&a, &a.full_space()).unwrap().is_full());
        // too small to bracket: everything normalizes
        let line = Subspace::span(f, 4, vec![a.basis_vector(0)]).unwrap();
        assert!(normalizer(&a, &line).unwrap().is_full());
    }

    #[test]
    fn derivations_of_abelian_algebra_are_all_maps() {
        let d = derivation_algebra(&NLieAlgebra::abelian(2, 3, gf(2)).unwrap());
        assert_eq!(d.dim, 9);
    }

    #[test]
    fn derivations_satisfy_leibniz() {
        let f = gf(5);
        let a = cross_like(&f);
        let ders = derivation_algebra(&a);
        assert_eq!(ders.dim, 3);
        for m in &ders.basis {
            assert!(is_derivation(&a, m).unwrap());
        }
        // a non-derivation is rejected
        let mut m = Matrix::zero(3, 3, f);
        m.set(0, 0, gf(5).one());
        assert!(!is_derivation(&a, &m).unwrap());
    }

    #[test]
    fn ideal_closure_grows_to_an_ideal() {
        let f = gf(2);
        let a = one_relator(&f);
        let line = Subspace::span(f.clone(), 4, vec![a.basis_vector(3)]).unwrap();
        let closed = ideal_closure(&a, &line).unwrap();
        assert!(a.is_ideal(&closed).unwrap());
        assert_eq!(closed.dim(), 2);
        assert!(closed.contains(&a.basis_vector(0)));
    }

    #[test]
    fn simplicity_verdicts() {
        let r = is_simple(&cross_like(&gf(5))).unwrap();
        assert!(r.simple);
        assert_eq!(r.method, SimplicityMethod::ExhaustiveLines);

        let r = is_simple(&one_relator(&gf(2))).unwrap();
        assert!(!r.simple);
        let w = r.witness.unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&one_relator(&gf(2)).basis_vector(0)));

        let r = is_simple(&NLieAlgebra::abelian(2, 2, gf(3)).unwrap()).unwrap();
        assert!(!r.simple);

        // over the rationals the verdict routes through a reduction
        let r = is_simple(&cross_like(&FieldSpec::rationals())).unwrap();
        assert!(r.simple);
        assert_eq!(r.method, SimplicityMethod::ReductionMod(101));

        let q = one_relator(&FieldSpec::rationals());
        let r = is_simple(&q).unwrap();
        assert!(!r.simple);
        assert_eq!(r.method, SimplicityMethod::BasisClosures);
    }

    #[test]
    fn decomposition_of_sum_of_simples() {
        let f = gf(5);
        let a = cross_like(&f).direct_sum(&cross_like(&f)).unwrap();
        match strong_semisimple_decomposition(&a).unwrap() {
            SsdOutcome::Decomposition(parts) => {
                assert_eq!(parts.len(), 2);
                assert!(parts.iter().all(|p| p.dim() == 3));
                let total = parts[0].sum(&parts[1]).unwrap();
                assert!(total.is_full());
                assert!(parts[0].intersect(&parts[1]).unwrap().is_zero());
            }
            other => panic!("expected a decomposition, got {other:?}"),
        }
    }

    #[test]
    fn nilpotent_algebra_fails_decomposition() {
        let outcome = strong_semisimple_decomposition(&one_relator(&gf(5))).unwrap();
        assert!(matches!(outcome, SsdOutcome::NotStrongSemisimple(_)));
        let outcome =
            strong_semisimple_decomposition(&NLieAlgebra::abelian(2, 2, gf(2)).unwrap()).unwrap();
        assert!(matches!(
            outcome,
            SsdOutcome::NotStrongSemisimple(SsdFailure::SummandNotSimple(_))
        ));
    }

    #[test]
    fn decomposition_requires_prime_field() {
        let a = cross_like(&FieldSpec::rationals());
        assert!(matches!(
            strong_semisimple_decomposition(&a),
            Err(NLieError::RequiresPrimeField { .. })
        ));
    }
}
