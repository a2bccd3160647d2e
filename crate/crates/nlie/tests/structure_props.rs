//! Structure-level invariants cross-checked against brute force.
//!
//! The derivation oracle here shares no code with the library's linear
//! solver: structure constants are flattened to raw residues, the
//! Leibniz condition is re-derived from scratch (including the
//! antisymmetric sign normalization), and every one of the p^(d*d)
//! candidate matrices is tested by exhaustion. Normalizers are
//! likewise re-computed by filtering every vector of the space, and
//! ideal closures and simplicity verdicts are compared against the
//! full ideal lattice.

use nlie::algebra::NLieAlgebra;
use nlie::catalog;
use nlie::enumerate::enumerate_vectors;
use nlie::field::{FieldSpec, Scalar};
use nlie::frattini::enumerate_substructures;
use nlie::random::random_algebra;
use nlie::structure::{
    derivation_algebra, derived_subalgebra, ideal_closure, ideal_series, is_derivation, is_simple,
    nilpotency_series, normalizer, strong_semisimple_decomposition, SsdFailure, SsdOutcome,
};
use nlie::subspace::Subspace;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime_field(p).unwrap()
}

fn build(name: &str, p: u64) -> NLieAlgebra {
    catalog::build(name, &gf(p)).unwrap().algebra
}

/// Raw structure constants: for each increasing basis tuple, the
/// bracket value as residues.
struct RawTable {
    arity: usize,
    dim: usize,
    p: u64,
    tuples: Vec<Vec<usize>>,
    values: Vec<Vec<u64>>,
}

fn residue(s: &Scalar) -> u64 {
    match s {
        Scalar::Residue { value, .. } => *value,
        Scalar::Rational(_) => panic!("oracle is for prime fields"),
    }
}

fn raw_table(a: &NLieAlgebra) -> RawTable {
    use itertools::Itertools;
    let p = a.field().modulus().expect("oracle is for prime fields");
    let tuples: Vec<Vec<usize>> = (0..a.dim()).combinations(a.arity()).collect();
    let values = tuples
        .iter()
        .map(|t| {
            a.basis_bracket(t)
                .unwrap()
                .iter()
                .map(residue)
                .collect::<Vec<u64>>()
        })
        .collect();
    RawTable {
        arity: a.arity(),
        dim: a.dim(),
        p,
        tuples,
        values,
    }
}

impl RawTable {
    /// Bracket of an arbitrary basis tuple: zero on repeats, otherwise
    /// the stored value times the sign of the sorting permutation.
    fn bracket_signed(&self, tuple: &[usize]) -> Vec<u64> {
        let mut sorted = tuple.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return vec![0; self.dim];
        }
        let mut inversions = 0usize;
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                if tuple[i] > tuple[j] {
                    inversions += 1;
                }
            }
        }
        let idx = self
            .tuples
            .iter()
            .position(|t| *t == sorted)
            .expect("sorted tuple is enumerated");
        let value = &self.values[idx];
        if inversions % 2 == 0 {
            value.clone()
        } else {
            value.iter().map(|&v| (self.p - v) % self.p).collect()
        }
    }

    /// Leibniz condition for a matrix given column-major action
    /// (Dv)_k = sum_l m[k*dim+l] v_l, checked on all stored tuples.
    fn is_derivation_raw(&self, m: &[u64]) -> bool {
        let d = self.dim;
        let p = self.p;
        for (t, bb) in self.tuples.iter().zip(&self.values) {
            for k in 0..d {
                let mut lhs = 0u64;
                for l in 0..d {
                    lhs = (lhs + m[k * d + l] * bb[l]) % p;
                }
                let mut rhs = 0u64;
                for slot in 0..self.arity {
                    for r in 0..d {
                        let coeff = m[r * d + t[slot]] % p;
                        if coeff == 0 {
                            continue;
                        }
                        let mut replaced = t.clone();
                        replaced[slot] = r;
                        rhs = (rhs + coeff * self.bracket_signed(&replaced)[k]) % p;
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Number of derivations found by trying every matrix.
    fn count_derivations_exhaustively(&self) -> u64 {
        let cells = self.dim * self.dim;
        let mut m = vec![0u64; cells];
        let mut count = 0u64;
        loop {
            if self.is_derivation_raw(&m) {
                count += 1;
            }
            // odometer over GF(p)^(d*d)
            let mut i = 0;
            loop {
                if i == cells {
                    return count;
                }
                m[i] += 1;
                if m[i] < self.p {
                    break;
                }
                m[i] = 0;
                i += 1;
            }
        }
    }
}

fn assert_derivation_dim_by_exhaustion(a: &NLieAlgebra, expected_dim: usize) {
    let table = raw_table(a);
    let count = table.count_derivations_exhaustively();
    assert_eq!(
        count,
        table.p.pow(expected_dim as u32),
        "exhaustive derivation count disagrees for dim {expected_dim}"
    );
    let space = derivation_algebra(a);
    assert_eq!(space.dim, expected_dim);
    for basis_matrix in &space.basis {
        assert!(is_derivation(a, basis_matrix).unwrap());
        let flat: Vec<u64> = (0..a.dim())
            .flat_map(|r| (0..a.dim()).map(move |c| (r, c)))
            .map(|(r, c)| residue(basis_matrix.at(r, c)))
            .collect();
        assert!(table.is_derivation_raw(&flat));
    }
}

#[test]
fn derivation_dimensions_match_exhaustive_counts() {
    // abelian: every linear map is a derivation
    assert_derivation_dim_by_exhaustion(&build("abelian:2:3", 2), 9);
    // one-product algebra on four generators
    assert_derivation_dim_by_exhaustion(&build("example_3_1", 2), 12);
    // smallest simple algebra
    assert_derivation_dim_by_exhaustion(&build("simple:2", 5), 3);
}

#[test]
fn derivation_solver_matches_exhaustion_on_random_algebras() {
    for seed in 0..20u64 {
        let a = random_algebra(2, 3, &gf(2), seed).unwrap();
        let table = raw_table(&a);
        let count = table.count_derivations_exhaustively();
        let dim = derivation_algebra(&a).dim;
        assert_eq!(count, 1u64 << dim, "seed {seed}");
    }
}

/// Normalizer recomputed by testing membership of every vector.
fn normalizer_by_filter(a: &NLieAlgebra, h: &Subspace) -> Vec<Vec<Scalar>> {
    use itertools::Itertools;
    let vectors = enumerate_vectors(a.dim(), a.field()).unwrap();
    let h_vectors: Vec<Vec<Scalar>> = enumerate_vectors(h.dim(), a.field())
        .unwrap()
        .iter()
        .map(|c| h.from_coords(c))
        .collect();
    vectors
        .into_iter()
        .filter(|v| {
            h_vectors
                .iter()
                .combinations(a.arity() - 1)
                .all(|rest| {
                    let mut args = vec![v.clone()];
                    args.extend(rest.into_iter().cloned());
                    h.contains(&a.bracket(&args).unwrap())
                })
        })
        .collect()
}

#[test]
fn normalizer_matches_the_vector_filter() {
    let mut cases: Vec<(NLieAlgebra, Subspace)> = Vec::new();
    let e31 = build("example_3_1", 2);
    let lattice = enumerate_substructures(&e31, 7).unwrap();
    for (i, sub) in lattice.subalgebras().iter().enumerate() {
        if i % 7 == 0 || lattice.is_maximal_at(i) {
            cases.push((e31.clone(), sub.clone()));
        }
    }
    for seed in 0..8u64 {
        let a = random_algebra(2, 4, &gf(2), seed).unwrap();
        let h = derived_subalgebra(&a);
        cases.push((a.clone(), h));
        let gen = a.generated_subalgebra(&[a.basis_vector(0)]).unwrap();
        cases.push((a, gen));
    }
    for (a, h) in cases {
        let computed = normalizer(&a, &h).unwrap();
        let filtered = normalizer_by_filter(&a, &h);
        assert_eq!(
            filtered.len(),
            2usize.pow(computed.dim() as u32),
            "normalizer of {h} has the wrong size"
        );
        for v in filtered {
            assert!(computed.contains(&v));
        }
        // a subalgebra normalizes itself
        assert!(computed.contains_subspace(&h));
    }
}

#[test]
fn normalizer_of_an_ideal_is_everything() {
    let a = build("example_3_2", 3);
    let ideal = derived_subalgebra(&a);
    let n = normalizer(&a, &ideal).unwrap();
    assert!(n.is_full());
}

#[test]
fn series_terms_descend_and_are_ideals() {
    for (name, p) in [
        ("example_3_1", 2u64),
        ("example_3_2", 2),
        ("simple:2", 5),
        ("nilpotent:2:4", 3),
        ("abelian:3:4", 2),
    ] {
        let a = build(name, p);
        let series = nilpotency_series(&a);
        for w in series.terms.windows(2) {
            assert!(w[0].contains_subspace(&w[1]), "{name}: series not descending");
            assert!(w[0].dim() > w[1].dim() || w[0] == w[1], "{name}: no progress");
        }
        for term in &series.terms {
            assert!(a.is_ideal(term).unwrap(), "{name}: series term not an ideal");
        }
        match series.index {
            Some(i) => {
                assert_eq!(series.terms.len(), i + 1);
                assert!(series.terms.last().unwrap().is_zero());
            }
            None => assert!(!series.terms.last().unwrap().is_zero()),
        }
    }
}

#[test]
fn nilpotency_indices_of_known_algebras() {
    assert_eq!(nilpotency_series(&build("example_3_1", 2)).index, Some(2));
    assert_eq!(nilpotency_series(&build("example_3_2", 2)).index, Some(3));
    assert_eq!(nilpotency_series(&build("abelian:2:3", 2)).index, Some(1));
    assert_eq!(nilpotency_series(&build("simple:3", 5)).index, None);
}

#[test]
fn ideal_series_with_the_full_space_is_the_nilpotency_series() {
    let a = build("example_3_2", 2);
    let full = a.full_space();
    let via_ideal = ideal_series(&a, &full).unwrap();
    let direct = nilpotency_series(&a);
    assert_eq!(via_ideal.terms, direct.terms);
    assert_eq!(via_ideal.index, direct.index);
}

#[test]
fn ideal_closure_is_the_smallest_containing_ideal() {
    for (arity, dim, p, seeds) in [(2usize, 4usize, 2u64, 0..10u64), (3, 4, 3, 0..10)] {
        for seed in seeds {
            let a = random_algebra(arity, dim, &gf(p), seed).unwrap();
            let lattice = enumerate_substructures(&a, 7).unwrap();
            for probe in [a.basis_vector(0), a.basis_vector(dim - 1)] {
                let seed_line =
                    Subspace::span(a.field().clone(), dim, vec![probe.clone()]).unwrap();
                let closure = ideal_closure(&a, &seed_line).unwrap();
                assert!(a.is_ideal(&closure).unwrap());
                assert!(closure.contains(&probe));
                let mut smallest: Option<&Subspace> = None;
                for ideal in lattice.ideals() {
                    if ideal.contains(&probe)
                        && smallest.map_or(true, |s| ideal.dim() < s.dim())
                    {
                        smallest = Some(ideal);
                    }
                }
                assert_eq!(closure, *smallest.unwrap(), "seed {seed}");
            }
        }
    }
}

#[test]
fn simplicity_agrees_with_the_ideal_lattice() {
    let mut algebras = vec![
        build("example_3_1", 2),
        build("simple:2", 5),
        build("simple:3", 2),
        build("abelian:2:3", 3),
        build("nilpotent:2:4", 2),
    ];
    for seed in 0..15u64 {
        algebras.push(random_algebra(2, 3, &gf(3), seed).unwrap());
        algebras.push(random_algebra(3, 4, &gf(2), seed).unwrap());
    }
    for a in algebras {
        let report = is_simple(&a).unwrap();
        let lattice = enumerate_substructures(&a, 7).unwrap();
        let proper_nonzero_ideal_exists = lattice
            .ideals()
            .any(|i| !i.is_zero() && i.dim() < a.dim());
        let derived_nonzero = !derived_subalgebra(&a).is_zero();
        let expected = derived_nonzero && a.dim() > 0 && !proper_nonzero_ideal_exists;
        assert_eq!(report.simple, expected);
        if let Some(w) = &report.witness {
            assert!(a.is_ideal(w).unwrap());
            assert!(!w.is_zero() && w.dim() < a.dim());
        }
    }
}

#[test]
fn strong_semisimple_decompositions_are_verified_direct_sums_of_simples() {
    // two simple blocks
    let sum = build("simple:2+simple:2", 5);
    match strong_semisimple_decomposition(&sum).unwrap() {
        SsdOutcome::Decomposition(parts) => {
            assert_eq!(parts.len(), 2);
            let mut running = sum.zero_subspace();
            for part in &parts {
                assert!(sum.is_ideal(part).unwrap());
                assert_eq!(running.intersect(part).unwrap().dim(), 0);
                running = running.sum(part).unwrap();
                let (restricted, _) = sum.restrict(part).unwrap();
                assert!(is_simple(&restricted).unwrap().simple);
            }
            assert!(running.is_full());
        }
        other => panic!("expected a decomposition, got {other:?}"),
    }

    // a single simple algebra decomposes as itself
    let s = build("simple:3", 5);
    match strong_semisimple_decomposition(&s).unwrap() {
        SsdOutcome::Decomposition(parts) => {
            assert_eq!(parts.len(), 1);
            assert!(parts[0].is_full());
        }
        other => panic!("expected a decomposition, got {other:?}"),
    }

    // nilpotent: the unique minimal ideal is not simple
    match strong_semisimple_decomposition(&build("example_3_1", 2)).unwrap() {
        SsdOutcome::NotStrongSemisimple(SsdFailure::SummandNotSimple(w)) => {
            assert_eq!(w.dim(), 1);
        }
        other => panic!("expected a summand failure, got {other:?}"),
    }

    // abelian: minimal ideals are lines, none simple
    assert!(matches!(
        strong_semisimple_decomposition(&build("abelian:2:3", 2)).unwrap(),
        SsdOutcome::NotStrongSemisimple(_)
    ));
}

#[test]
fn derived_subalgebra_is_the_second_series_term() {
    for seed in 0..10u64 {
        let a = random_algebra(3, 4, &gf(3), seed).unwrap();
        let series = nilpotency_series(&a);
        if series.terms.len() > 1 {
            assert_eq!(series.terms[1], derived_subalgebra(&a));
        } else {
            // a one-term series means the chain stabilized immediately,
            // i.e. the algebra is perfect (or zero)
            assert_eq!(derived_subalgebra(&a), series.terms[0]);
        }
    }
}
