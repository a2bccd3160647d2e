//! Frattini theory: maximal subalgebras, the Frattini subalgebra F(A)
//! and Frattini ideal phi(A), the Frattini series, non-generators, the
//! elementary / E-algebra / complemented predicates, complements, and
//! the elementary commutator E(A) with its companion S(A).
//!
//! Over a prime field everything is computed from one exhaustive sweep
//! of the subspace lattice; the sweep is memoized in an [`Analyzer`]
//! together with the Frattini ideals of subalgebras, because the
//! predicates all ask for the same sub-analyses. Over the rationals the
//! lattice is infinite and only the nilpotent shortcut F(A) = A^1 is
//! available; everything else asks for a mod-p reduction first.
//!
//! Negative predicate verdicts always carry the first counterexample in
//! canonical subspace order, so two runs produce identical reports.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use crate::algebra::NLieAlgebra;
use crate::enumerate::{enumerate_subspaces, DEFAULT_ENUMERATION_CAP};
use crate::error::{NLieError, Result};
use crate::field::Scalar;
use crate::structure::{derived_subalgebra, is_nilpotent};
use crate::subspace::Subspace;

/// Every subspace of the ambient space, classified. Lists are in
/// canonical order (dimension, then lexicographic basis), so indices are
/// stable across runs.
#[derive(Debug)]
pub struct LatticeEnumeration {
    algebra: NLieAlgebra,
    total_subspaces: usize,
    subalgebras: Vec<Subspace>,
    ideal_flags: Vec<bool>,
    maximal_flags: Vec<bool>,
    covers: OnceLock<Vec<(usize, usize)>>,
}

impl LatticeEnumeration {
    pub fn algebra(&self) -> &NLieAlgebra {
        &self.algebra
    }

    pub fn total_subspaces(&self) -> usize {
        self.total_subspaces
    }

    pub fn subalgebras(&self) -> &[Subspace] {
        &self.subalgebras
    }

    pub fn subalgebra_count(&self) -> usize {
        self.subalgebras.len()
    }

    pub fn is_ideal_at(&self, i: usize) -> bool {
        self.ideal_flags[i]
    }

    pub fn is_maximal_at(&self, i: usize) -> bool {
        self.maximal_flags[i]
    }

    pub fn ideals(&self) -> impl Iterator<Item = &Subspace> {
        self.subalgebras
            .iter()
            .zip(&self.ideal_flags)
            .filter_map(|(s, &f)| f.then_some(s))
    }

    pub fn maximal_subalgebras(&self) -> impl Iterator<Item = &Subspace> {
        self.subalgebras
            .iter()
            .zip(&self.maximal_flags)
            .filter_map(|(s, &f)| f.then_some(s))
    }

    pub fn ideal_count(&self) -> usize {
        self.ideal_flags.iter().filter(|&&f| f).count()
    }

    pub fn maximal_count(&self) -> usize {
        self.maximal_flags.iter().filter(|&&f| f).count()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.subalgebras.binary_search(s).ok()
    }

    /// Covering pairs (i, j): subalgebra i sits strictly inside j with no
    /// subalgebra strictly between. Quadratic in the lattice size, so it
    /// is computed only on demand.
    pub fn covering_pairs(&self) -> &[(usize, usize)] {
        self.covers.get_or_init(|| {
            let n = self.subalgebras.len();
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let (a, b) = (&self.subalgebras[i], &self.subalgebras[j]);
                    if a.dim() >= b.dim() || !b.contains_subspace(a) {
                        continue;
                    }
                    let skipped = (0..n).any(|k| {
                        k != i
                            && k != j
                            && self.subalgebras[k].dim() > a.dim()
                            && self.subalgebras[k].dim() < b.dim()
                            && self.subalgebras[k].contains_subspace(a)
                            && b.contains_subspace(&self.subalgebras[k])
                    });
                    if !skipped {
                        pairs.push((i, j));
                    }
                }
            }
            pairs
        })
    }
}

/// Sweeps every subspace of the ambient space, keeping the subalgebras
/// with ideal and maximality flags. Maximality is decided against the
/// complete list: a proper subalgebra is maximal exactly when no other
/// proper subalgebra strictly contains it.
pub fn enumerate_substructures(a: &NLieAlgebra, cap: usize) -> Result<LatticeEnumeration> {
    if !a.field().is_prime_field() {
        return Err(NLieError::RequiresPrimeField {
            op: "substructure enumeration",
        });
    }
    if a.dim() > cap {
        return Err(NLieError::CapExceeded {
            dim: a.dim(),
            cap,
        });
    }
    let all = enumerate_subspaces(a.dim(), a.field())?;
    let total_subspaces = all.len();
    let mut subalgebras = Vec::new();
    let mut ideal_flags = Vec::new();
    for s in all {
        if a.is_subalgebra(&s)? {
            ideal_flags.push(a.is_ideal(&s)?);
            subalgebras.push(s);
        }
    }
    let d = a.dim();
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    for (i, s) in subalgebras.iter().enumerate() {
        by_dim[s.dim()].push(i);
    }
    let mut maximal_flags = vec![false; subalgebras.len()];
    for (i, s) in subalgebras.iter().enumerate() {
        if s.dim() == d {
            continue;
        }
        let mut contained = false;
        'scan: for dim in s.dim() + 1..d {
            for &j in &by_dim[dim] {
                if subalgebras[j].contains_subspace(s) {
                    contained = true;
                    break 'scan;
                }
            }
        }
        maximal_flags[i] = !contained;
    }
    Ok(LatticeEnumeration {
        algebra: a.clone(),
        total_subspaces,
        subalgebras,
        ideal_flags,
        maximal_flags,
        covers: OnceLock::new(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrattiniMethod {
    /// Intersection over the enumerated maximal subalgebras.
    Enumeration,
    /// Nilpotent algebras have F(A) = A^1 over any field.
    NilpotentShortcut,
}

impl FrattiniMethod {
    pub fn label(&self) -> &'static str {
        match self {
            FrattiniMethod::Enumeration => "enumeration",
            FrattiniMethod::NilpotentShortcut => "nilpotent-shortcut",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrattiniResult {
    /// Intersection of all maximal subalgebras; the whole algebra when
    /// there are none, which happens only for the zero algebra.
    pub f: Subspace,
    /// Largest ideal inside `f`: the sum of all ideals contained in it.
    pub phi: Subspace,
    pub method: FrattiniMethod,
}

/// Verdict of a universally quantified predicate; `witness` is the first
/// counterexample in canonical order when the predicate fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub holds: bool,
    pub witness: Option<Subspace>,
}

impl PredicateVerdict {
    fn holds() -> Self {
        PredicateVerdict {
            holds: true,
            witness: None,
        }
    }

    fn fails(witness: Subspace) -> Self {
        PredicateVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrattiniSeries {
    /// F_0 = A, F_{i+1} = F(F_i), in ambient coordinates, ending at 0.
    pub terms: Vec<Subspace>,
    /// Least r with F_r = 0.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryCommutator {
    /// Intersection of all ideals with elementary quotient.
    pub e: Subspace,
    /// Intersection of the maximal subalgebras that are ideals; the
    /// whole algebra when there are none.
    pub s: Subspace,
    /// Whether A/E(A) itself came out elementary. Intersection closure
    /// predicts true; a false here is a small-characteristic deviation
    /// worth surfacing, not an internal error.
    pub quotient_by_e_elementary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplementOutcome {
    /// Subalgebra meeting `b` in 0 whose subspace sum with `b` is A.
    Complement(Subspace),
    /// The minimal supplement found still meets `b` nontrivially.
    NoDirectComplement { supplement: Subspace, meet: Subspace },
}

/// One-stop analysis context: owns the algebra, the lattice sweep, and a
/// memo of Frattini ideals of subalgebras (keyed by canonical basis).
/// The predicates below share these, so asking for all of them costs one
/// enumeration plus one sub-analysis per distinct subalgebra.
pub struct Analyzer {
    algebra: NLieAlgebra,
    cap: usize,
    lattice: OnceLock<Result<LatticeEnumeration>>,
    frattini: OnceLock<Result<FrattiniResult>>,
    phi_memo: Mutex<BTreeMap<Subspace, Subspace>>,
}

impl Analyzer {
    pub fn new(algebra: NLieAlgebra, cap: usize) -> Self {
        Analyzer {
            algebra,
            cap,
            lattice: OnceLock::new(),
            frattini: OnceLock::new(),
            phi_memo: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn with_default_cap(algebra: NLieAlgebra) -> Self {
        Analyzer::new(algebra, DEFAULT_ENUMERATION_CAP)
    }

    pub fn algebra(&self) -> &NLieAlgebra {
        &self.algebra
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn lattice(&self) -> Result<&LatticeEnumeration> {
        self.lattice
            .get_or_init(|| enumerate_substructures(&self.algebra, self.cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// F(A) and phi(A). Prime fields intersect the enumerated maximal
    /// subalgebras; the rationals fall back to F = phi = A^1 for
    /// nilpotent algebras and refuse otherwise.
    pub fn frattini(&self) -> Result<FrattiniResult> {
        self.frattini
            .get_or_init(|| self.compute_frattini())
            .clone()
    }

    fn compute_frattini(&self) -> Result<FrattiniResult> {
        if !self.algebra.field().is_prime_field() {
            if is_nilpotent(&self.algebra) {
                let derived = derived_subalgebra(&self.algebra);
                return Ok(FrattiniResult {
                    f: derived.clone(),
                    phi: derived,
                    method: FrattiniMethod::NilpotentShortcut,
                });
            }
            return Err(NLieError::RationalShortcutOnly {
                op: "Frattini computation",
                shortcut: "nilpotent",
            });
        }
        let lattice = self.lattice()?;
        let mut f = self.algebra.full_space();
        for m in lattice.maximal_subalgebras() {
            if f.is_zero() {
                break;
            }
            f = f.intersect(m)?;
        }
        let mut phi = self.algebra.zero_subspace();
        for ideal in lattice.ideals() {
            if f.contains_subspace(ideal) {
                phi = phi.sum(ideal)?;
            }
        }
        debug_assert!(f.contains_subspace(&phi));
        Ok(FrattiniResult {
            f,
            phi,
            method: FrattiniMethod::Enumeration,
        })
    }

    /// Frattini ideal of a subalgebra, in ambient coordinates. Abelian
    /// restrictions short-circuit to 0; everything else is re-analyzed
    /// as an algebra in its own right, once, through the memo.
    pub fn phi_of(&self, sub: &Subspace) -> Result<Subspace> {
        if sub.is_full() {
            return Ok(self.frattini()?.phi);
        }
        if let Some(hit) = self.phi_memo.lock().expect("phi memo poisoned").get(sub) {
            return Ok(hit.clone());
        }
        let (restricted, embedding) = self.algebra.restrict(sub)?;
        let phi_ambient = if restricted.is_abelian() {
            Subspace::zero(self.algebra.dim(), self.algebra.field().clone())
        } else {
            let local = Analyzer::new(restricted, self.cap).frattini()?.phi;
            embedding.subspace_to_ambient(&local)
        };
        self.phi_memo
            .lock()
            .expect("phi memo poisoned")
            .insert(sub.clone(), phi_ambient.clone());
        Ok(phi_ambient)
    }

    /// Elementary: phi(C) = 0 for every subalgebra C, including A.
    pub fn is_elementary(&self) -> Result<PredicateVerdict> {
        let lattice = self.lattice()?;
        for c in lattice.subalgebras() {
            if !self.phi_of(c)?.is_zero() {
                return Ok(PredicateVerdict::fails(c.clone()));
            }
        }
        Ok(PredicateVerdict::holds())
    }

    /// E-algebra: phi(B) ⊆ phi(A) for every subalgebra B.
    pub fn is_e_algebra(&self) -> Result<PredicateVerdict> {
        let phi_a = self.frattini()?.phi;
        let lattice = self.lattice()?;
        for b in lattice.subalgebras() {
            if !phi_a.contains_subspace(&self.phi_of(b)?) {
                return Ok(PredicateVerdict::fails(b.clone()));
            }
        }
        Ok(PredicateVerdict::holds())
    }

    /// Complemented lattice: every subalgebra B admits a subalgebra C
    /// with B ∩ C = 0 generating A together with B.
    pub fn is_complemented(&self) -> Result<PredicateVerdict> {
        let lattice = self.lattice()?;
        for b in lattice.subalgebras() {
            if self.complement_in_lattice(b)?.is_none() {
                return Ok(PredicateVerdict::fails(b.clone()));
            }
        }
        Ok(PredicateVerdict::holds())
    }

    /// First subalgebra C in canonical order with B ∩ C = 0 and
    /// ⟨B ∪ C⟩ = A, if any.
    pub fn complement_in_lattice(&self, b: &Subspace) -> Result<Option<Subspace>> {
        let lattice = self.lattice()?;
        let free_dim = self.algebra.dim() - b.dim();
        for c in lattice.subalgebras() {
            if c.dim() > free_dim || !b.intersect(c)?.is_zero() {
                continue;
            }
            let mut gens = b.basis_rows();
            gens.extend(c.basis_rows());
            if self.algebra.generated_subalgebra(&gens)?.is_full() {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }

    /// Takes the first subalgebra U in canonical order with B + U = A
    /// as subspaces; canonical order makes it inclusion-minimal, because
    /// any smaller supplement would have come first. U is a complement
    /// exactly when it meets B in 0.
    pub fn find_complement(&self, b: &Subspace) -> Result<ComplementOutcome> {
        if !self.algebra.is_ideal(b)? {
            return Err(NLieError::NotAnIdeal);
        }
        let lattice = self.lattice()?;
        for u in lattice.subalgebras() {
            if b.sum(u)?.is_full() {
                let meet = b.intersect(u)?;
                return Ok(if meet.is_zero() {
                    ComplementOutcome::Complement(u.clone())
                } else {
                    ComplementOutcome::NoDirectComplement {
                        supplement: u.clone(),
                        meet,
                    }
                });
            }
        }
        unreachable!("the full space always supplements");
    }

    /// Non-generator: x can be dropped from every generating set.
    /// Decided by membership in all maximal subalgebras; a negative
    /// verdict carries the first subspace S (in canonical order) with
    /// ⟨S ∪ x⟩ = A but ⟨S⟩ ≠ A.
    pub fn is_non_generator(&self, x: &[Scalar]) -> Result<NonGeneratorVerdict> {
        let lattice = self.lattice()?;
        let holds = lattice.maximal_subalgebras().all(|m| m.contains(x));
        if holds {
            return Ok(NonGeneratorVerdict {
                holds: true,
                witness: None,
            });
        }
        for s in enumerate_subspaces(self.algebra.dim(), self.algebra.field())? {
            if self.algebra.generated_subalgebra(&s.basis_rows())?.is_full() {
                continue;
            }
            let mut gens = s.basis_rows();
            gens.push(x.to_vec());
            if self.algebra.generated_subalgebra(&gens)?.is_full() {
                return Ok(NonGeneratorVerdict {
                    holds: false,
                    witness: Some(s),
                });
            }
        }
        unreachable!("a generator has a witness: some maximal subalgebra omits x");
    }

    /// Frattini series F_0 = A ⊃ F_1 = F(A) ⊃ F_2 = F(F_1) ⊃ ... in
    /// ambient coordinates. Each step restricts to the previous term and
    /// analyzes it as an algebra of its own; the chain is strictly
    /// descending, so it reaches 0.
    pub fn frattini_series(&self) -> Result<FrattiniSeries> {
        let mut terms = vec![self.algebra.full_space()];
        loop {
            let cur = terms.last().expect("series starts nonempty");
            if cur.is_zero() {
                break;
            }
            let next = if cur.is_full() {
                self.frattini()?.f
            } else {
                let (restricted, embedding) = self.algebra.restrict(cur)?;
                let local = Analyzer::new(restricted, self.cap).frattini()?.f;
                embedding.subspace_to_ambient(&local)
            };
            assert!(
                next.dim() < cur.dim(),
                "Frattini subalgebra must be proper"
            );
            terms.push(next);
        }
        let index = terms.len() - 1;
        Ok(FrattiniSeries { terms, index })
    }

    /// E(A) = intersection of all ideals with elementary quotient, and
    /// S(A) = intersection of the maximal subalgebras that are ideals.
    pub fn elementary_commutator(&self) -> Result<ElementaryCommutator> {
        let lattice = self.lattice()?;
        let mut qualifying: Vec<Subspace> = Vec::new();
        for (i, b) in lattice.subalgebras().iter().enumerate() {
            if !lattice.is_ideal_at(i) {
                continue;
            }
            let elementary = if b.is_full() {
                true
            } else if b.is_zero() {
                self.is_elementary()?.holds
            } else {
                let (quotient, _) = self.algebra.quotient(b)?;
                Analyzer::new(quotient, self.cap).is_elementary()?.holds
            };
            if elementary {
                qualifying.push(b.clone());
            }
        }
        let mut e = self.algebra.full_space();
        for b in &qualifying {
            e = e.intersect(b)?;
        }
        let quotient_by_e_elementary = qualifying.contains(&e);
        let mut s = self.algebra.full_space();
        for (i, m) in lattice.subalgebras().iter().enumerate() {
            if lattice.is_maximal_at(i) && lattice.is_ideal_at(i) {
                s = s.intersect(m)?;
            }
        }
        Ok(ElementaryCommutator {
            e,
            s,
            quotient_by_e_elementary,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonGeneratorVerdict {
    pub holds: bool,
    /// Subspace S with ⟨S ∪ x⟩ = A yet ⟨S⟩ ≠ A, when x is a generator.
    pub witness: Option<Subspace>,
}

pub fn frattini(a: &NLieAlgebra) -> Result<FrattiniResult> {
    Analyzer::with_default_cap(a.clone()).frattini()
}

pub fn frattini_series(a: &NLieAlgebra) -> Result<FrattiniSeries> {
    Analyzer::with_default_cap(a.clone()).frattini_series()
}

pub fn is_elementary(a: &NLieAlgebra) -> Result<PredicateVerdict> {
    Analyzer::with_default_cap(a.clone()).is_elementary()
}

pub fn is_e_algebra(a: &NLieAlgebra) -> Result<PredicateVerdict> {
    Analyzer::with_default_cap(a.clone()).is_e_algebra()
}

pub fn is_complemented(a: &NLieAlgebra) -> Result<PredicateVerdict> {
    Analyzer::with_default_cap(a.clone()).is_complemented()
}

pub fn find_complement(a: &NLieAlgebra, b: &Subspace) -> Result<ComplementOutcome> {
    Analyzer::with_default_cap(a.clone()).find_complement(b)
}

pub fn is_non_generator(a: &NLieAlgebra, x: &[Scalar]) -> Result<NonGeneratorVerdict> {
    Analyzer::with_default_cap(a.clone()).is_non_generator(x)
}

pub fn elementary_commutator(a: &NLieAlgebra) -> Result<ElementaryCommutator> {
    Analyzer::with_default_cap(a.clone()).elementary_commutator()
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

    fn span_of(a: &NLieAlgebra, idx: &[usize]) -> Subspace {
        Subspace::span(
            a.field().clone(),
            a.dim(),
            idx.iter().map(|&i| a.basis_vector(i)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn lattice_counts_for_one_relator_over_gf2() {
        let a = one_relator(&gf(2));
        let lat = enumerate_substructures(&a, 7).unwrap();
        assert_eq!(lat.total_subspaces(), 67);
        assert_eq!(lat.subalgebra_count(), 59);
        assert_eq!(lat.maximal_count(), 7);
        assert_eq!(lat.ideal_count(), 17);
        // every maximal subalgebra is a hyperplane through e1
        let e1 = a.basis_vector(0);
        for m in lat.maximal_subalgebras() {
            assert_eq!(m.dim(), 3);
            assert!(m.contains(&e1));
        }
    }

    #[test]
    fn lattice_counts_for_small_cases() {
        let abelian = NLieAlgebra::abelian(2, 2, gf(2)).unwrap();
        let lat = enumerate_substructures(&abelian, 7).unwrap();
        assert_eq!(lat.subalgebra_count(), 5);
        assert_eq!(lat.maximal_count(), 3);

        let zero = NLieAlgebra::abelian(2, 0, gf(2)).unwrap();
        let lat = enumerate_substructures(&zero, 7).unwrap();
        assert_eq!(lat.subalgebra_count(), 1);
        assert_eq!(lat.maximal_count(), 0);
    }

    #[test]
    fn enumeration_guards() {
        let a = one_relator(&FieldSpec::rationals());
        assert!(matches!(
            enumerate_substructures(&a, 7),
            Err(NLieError::RequiresPrimeField { .. })
        ));
        let a = one_relator(&gf(2));
        assert!(matches!(
            enumerate_substructures(&a, 3),
            Err(NLieError::CapExceeded { dim: 4, cap: 3 })
        ));
    }

    #[test]
    fn covering_pairs_of_tiny_lattice() {
        let abelian = NLieAlgebra::abelian(2, 2, gf(2)).unwrap();
        let lat = enumerate_substructures(&abelian, 7).unwrap();
        // 0 under each of 3 lines, each line under the plane
        assert_eq!(lat.covering_pairs().len(), 6);
        for &(i, j) in lat.covering_pairs() {
            assert_eq!(
                lat.subalgebras()[i].dim() + 1,
                lat.subalgebras()[j].dim()
            );
        }
    }

    #[test]
    fn frattini_of_one_relator() {
        for p in [2u64, 3, 5] {
            let a = one_relator(&gf(p));
            let r = frattini(&a).unwrap();
            assert_eq!(r.f, span_of(&a, &[0]), "F over GF({p})");
            assert_eq!(r.phi, r.f);
            assert_eq!(r.method, FrattiniMethod::Enumeration);
        }
    }

    #[test]
    fn frattini_of_abelian_and_simple() {
        let abelian = NLieAlgebra::abelian(2, 3, gf(3)).unwrap();
        assert!(frattini(&abelian).unwrap().f.is_zero());

        let simple = cross_like(&gf(5));
        let r = frattini(&simple).unwrap();
        assert!(r.f.is_zero());
        assert!(r.phi.is_zero());
    }

    #[test]
    fn frattini_over_rationals_uses_nilpotent_shortcut() {
        let a = one_relator(&FieldSpec::rationals());
        let r = frattini(&a).unwrap();
        assert_eq!(r.method, FrattiniMethod::NilpotentShortcut);
        assert_eq!(r.f.dim(), 1);
        assert!(r.f.contains(&a.basis_vector(0)));
        assert_eq!(r.phi, r.f);

        let simple = cross_like(&FieldSpec::rationals());
        assert!(matches!(
            frattini(&simple),
            Err(NLieError::RationalShortcutOnly { .. })
        ));
    }

    #[test]
    fn frattini_series_shapes() {
        let a = one_relator(&gf(2));
        let s = frattini_series(&a).unwrap();
        assert_eq!(s.index, 2);
        let dims: Vec<usize> = s.terms.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 1, 0]);

        let abelian = NLieAlgebra::abelian(2, 3, gf(2)).unwrap();
        assert_eq!(frattini_series(&abelian).unwrap().index, 1);

        let zero = NLieAlgebra::abelian(2, 0, gf(3)).unwrap();
        assert_eq!(frattini_series(&zero).unwrap().index, 0);
    }

    #[test]
    fn non_generators_match_frattini_membership() {
        let a = one_relator(&gf(2));
        let v = is_non_generator(&a, &a.basis_vector(0)).unwrap();
        assert!(v.holds);
        let v = is_non_generator(&a, &a.zero_vector()).unwrap();
        assert!(v.holds);
        let v = is_non_generator(&a, &a.basis_vector(1)).unwrap();
        assert!(!v.holds);
        // first witness in canonical order: span(e3,e4) generates A with
        // e2 but not alone
        assert_eq!(v.witness.unwrap(), span_of(&a, &[2, 3]));
    }

    #[test]
    fn elementary_and_e_algebra_verdicts() {
        let a = one_relator(&gf(2));
        let v = is_elementary(&a).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().is_full());
        assert!(is_e_algebra(&a).unwrap().holds);

        let abelian = NLieAlgebra::abelian(3, 4, gf(2)).unwrap();
        assert!(is_elementary(&abelian).unwrap().holds);
        assert!(is_e_algebra(&abelian).unwrap().holds);

        let simple = cross_like(&gf(5));
        assert!(is_elementary(&simple).unwrap().holds);
        assert!(is_e_algebra(&simple).unwrap().holds);
    }

    #[test]
    fn complementation_verdicts() {
        let a = one_relator(&gf(2));
        let v = is_complemented(&a).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap(), span_of(&a, &[0]));

        assert!(is_complemented(&NLieAlgebra::abelian(2, 3, gf(2)).unwrap())
            .unwrap()
            .holds);
        assert!(is_complemented(&cross_like(&gf(5))).unwrap().holds);
    }

    #[test]
    fn complement_search_follows_the_minimal_supplement_recipe() {
        let a = one_relator(&gf(2));
        let b = span_of(&a, &[0]);
        match find_complement(&a, &b).unwrap() {
            ComplementOutcome::NoDirectComplement { supplement, meet } => {
                // every proper subalgebra containing a supplement of
                // span(e1) contains e1 itself, so only A supplements
                assert!(supplement.is_full());
                assert_eq!(meet, b);
            }
            other => panic!("expected failure, got {other:?}"),
        }

        let sum = cross_like(&gf(2)).direct_sum(&cross_like(&gf(2))).unwrap();
        let first = Subspace::span(
            gf(2),
            6,
            (0..3).map(|i| sum.basis_vector(i)).collect(),
        )
        .unwrap();
        match find_complement(&sum, &first).unwrap() {
            ComplementOutcome::Complement(c) => {
                assert_eq!(c.dim(), 3);
                assert!(c.intersect(&first).unwrap().is_zero());
                assert!((3..6).all(|i| c.contains(&sum.basis_vector(i))));
            }
            other => panic!("expected a complement, got {other:?}"),
        }

        let not_ideal = span_of(&a, &[1]);
        assert!(matches!(
            find_complement(&a, &not_ideal),
            Err(NLieError::NotAnIdeal)
        ));
    }

    #[test]
    fn elementary_commutator_values() {
        let a = one_relator(&gf(2));
        let ec = elementary_commutator(&a).unwrap();
        assert_eq!(ec.e, span_of(&a, &[0]));
        assert_eq!(ec.s, span_of(&a, &[0]));
        assert!(ec.quotient_by_e_elementary);

        let abelian = NLieAlgebra::abelian(2, 3, gf(3)).unwrap();
        let ec = elementary_commutator(&abelian).unwrap();
        assert!(ec.e.is_zero());

        let simple = cross_like(&gf(5));
        let ec = elementary_commutator(&simple).unwrap();
        assert!(ec.e.is_zero());
        // no maximal subalgebra of a simple algebra is an ideal
        assert!(ec.s.is_full());
    }

    #[test]
    fn analyzer_memoizes_sub_analyses() {
        let a = one_relator(&gf(2));
        let analyzer = Analyzer::with_default_cap(a.clone());
        assert!(!analyzer.is_elementary().unwrap().holds);
        assert!(analyzer.is_e_algebra().unwrap().holds);
        let memo_size = analyzer.phi_memo.lock().unwrap().len();
        // every proper subalgebra was analyzed exactly once
        assert_eq!(memo_size, 58);
    }
}
