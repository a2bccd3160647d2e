//! The full-analysis driver: one call that runs every invariant the
//! crate knows and bundles the results, reusing a single `Analyzer` so
//! the lattice is enumerated at most once.
//!
//! Over a prime field every field of the report is populated. Over the
//! rationals the lattice-bound parts (elementary, E-algebra,
//! complemented, Frattini series, elementary commutator, lattice
//! counts) are `None` with an explanatory note, the Frattini pair comes
//! from the nilpotent shortcut when it applies, and a non-nilpotent
//! rational algebra is an error the CLI maps to its precondition exit
//! code.

use crate::algebra::{NLieAlgebra, ValidationReport};
use crate::catalog::{audit, CatalogClaim, CatalogEntry, ClaimAuditRow};
use crate::error::Result;
use crate::frattini::{
    Analyzer, ElementaryCommutator, FrattiniResult, FrattiniSeries, PredicateVerdict,
};
use crate::structure::{
    derived_subalgebra, is_simple, nilpotency_series, strong_semisimple_decomposition,
    SeriesResult, SimplicityMethod, SimplicityReport, SsdOutcome, DEFAULT_REDUCTION_PRIME,
};
use crate::field::FieldSpec;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCounts {
    pub total_subspaces: usize,
    pub subalgebras: usize,
    pub ideals: usize,
    pub maximal: usize,
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub field: FieldSpec,
    pub arity: usize,
    pub dim: usize,
    pub validation: ValidationReport,
    pub derived: Subspace,
    pub nilpotency: SeriesResult,
    pub frattini: FrattiniResult,
    pub frattini_series: Option<FrattiniSeries>,
    pub commutator: Option<ElementaryCommutator>,
    pub simplicity: SimplicityReport,
    pub strong_semisimple: Option<SsdOutcome>,
    pub elementary: Option<PredicateVerdict>,
    pub e_algebra: Option<PredicateVerdict>,
    pub complemented: Option<PredicateVerdict>,
    pub lattice: Option<LatticeCounts>,
    pub claim_audit: Vec<ClaimAuditRow>,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn nilpotent(&self) -> bool {
        self.nilpotency.nilpotent
    }

    pub fn simple(&self) -> bool {
        self.simplicity.simple
    }

    pub fn phi_free(&self) -> bool {
        self.frattini.phi.dim() == 0
    }

    pub fn strong_semisimple_holds(&self) -> Option<bool> {
        self.strong_semisimple
            .as_ref()
            .map(|o| matches!(o, SsdOutcome::Decomposition(_)))
    }
}

pub fn analyze(a: &NLieAlgebra, cap: usize) -> Result<AnalysisReport> {
    analyze_with_claims(a, cap, &[])
}

/// Like `analyze` but also audits the given claims against the
/// computed values.
pub fn analyze_with_claims(
    a: &NLieAlgebra,
    cap: usize,
    claims: &[CatalogClaim],
) -> Result<AnalysisReport> {
    let analyzer = Analyzer::new(a.clone(), cap);
    let mut notes = Vec::new();

    let validation = a.validate();
    let derived = derived_subalgebra(a);
    let nilpotency = nilpotency_series(a);
    let frattini = analyzer.frattini()?;

    let simplicity = is_simple(a)?;
    match simplicity.method {
        SimplicityMethod::BasisClosures => notes.push(
            "simplicity refuted by a basis-vector ideal closure; exhaustive line \
             enumeration is unavailable over the rationals"
                .to_string(),
        ),
        SimplicityMethod::ReductionMod(p) => {
            debug_assert_eq!(p, DEFAULT_REDUCTION_PRIME);
            notes.push(format!(
                "simplicity verdict obtained from the reduction modulo {p}; it is \
                 heuristic for the rational algebra"
            ));
        }
        SimplicityMethod::ExhaustiveLines => {}
    }

    let prime_field = a.field().is_prime_field();
    let (frattini_series, commutator, strong_semisimple, elementary, e_algebra, complemented, lattice);
    if prime_field {
        frattini_series = Some(analyzer.frattini_series()?);
        commutator = Some(analyzer.elementary_commutator()?);
        strong_semisimple = Some(strong_semisimple_decomposition(a)?);
        elementary = Some(analyzer.is_elementary()?);
        e_algebra = Some(analyzer.is_e_algebra()?);
        complemented = Some(analyzer.is_complemented()?);
        let l = analyzer.lattice()?;
        lattice = Some(LatticeCounts {
            total_subspaces: l.total_subspaces(),
            subalgebras: l.subalgebra_count(),
            ideals: l.ideal_count(),
            maximal: l.maximal_count(),
        });
        notes.push(
            "strong-semisimple means a direct sum of simple ideals; decided by closing \
             every line to a minimal ideal"
                .to_string(),
        );
    } else {
        frattini_series = None;
        commutator = None;
        strong_semisimple = None;
        elementary = None;
        e_algebra = None;
        complemented = None;
        lattice = None;
        notes.push(
            "lattice-bound invariants (elementary, E-algebra, complemented, Frattini \
             series, elementary commutator) require a prime field; reduce mod p to \
             compute them"
                .to_string(),
        );
    }

    let claim_audit = if claims.is_empty() || !prime_field {
        if !claims.is_empty() {
            notes.push("claim audit requires a prime field and was skipped".to_string());
        }
        Vec::new()
    } else {
        audit(claims, &analyzer)?
    };

    let report = AnalysisReport {
        field: a.field().clone(),
        arity: a.arity(),
        dim: a.dim(),
        validation,
        derived,
        nilpotency,
        frattini,
        frattini_series,
        commutator,
        simplicity,
        strong_semisimple,
        elementary,
        e_algebra,
        complemented,
        lattice,
        claim_audit,
        notes,
    };
    debug_assert_invariants(&report);
    Ok(report)
}

pub fn analyze_entry(entry: &CatalogEntry, cap: usize) -> Result<AnalysisReport> {
    analyze_with_claims(&entry.algebra, cap, &entry.claims)
}

/// Cross-field relations every report satisfies: phi inside F, F inside
/// the derived subalgebra, phi inside E inside S.
fn debug_assert_invariants(r: &AnalysisReport) {
    debug_assert!(r.frattini.f.contains_subspace(&r.frattini.phi));
    debug_assert!(r.derived.contains_subspace(&r.frattini.f));
    if let Some(c) = &r.commutator {
        debug_assert!(c.e.contains_subspace(&r.frattini.phi));
        debug_assert!(c.s.contains_subspace(&c.e));
    }
    debug_assert_eq!(r.phi_free(), r.frattini.phi.dim() == 0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerate::DEFAULT_ENUMERATION_CAP;
    use crate::frattini::FrattiniMethod;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    fn analyze_catalog(name: &str, field: &FieldSpec) -> AnalysisReport {
        let entry = catalog::build(name, field).unwrap();
        analyze_entry(&entry, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn full_report_on_the_one_product_algebra() {
        let r = analyze_catalog("example_3_1", &gf(2));
        assert!(r.validation.ok);
        assert!(r.nilpotent());
        assert_eq!(r.nilpotency.index, Some(2));
        assert!(!r.simple());
        assert_eq!(r.frattini.f.dim(), 1);
        assert_eq!(r.frattini.phi, r.frattini.f);
        assert!(!r.phi_free());
        assert_eq!(r.elementary.as_ref().map(|v| v.holds), Some(false));
        assert_eq!(r.e_algebra.as_ref().map(|v| v.holds), Some(true));
        assert_eq!(r.strong_semisimple_holds(), Some(false));
        let counts = r.lattice.unwrap();
        assert_eq!(counts.subalgebras, 59);
        assert_eq!(counts.maximal, 7);
        assert_eq!(counts.ideals, 17);
        assert_eq!(counts.total_subspaces, 67);
        assert!(r.claim_audit.iter().all(|row| row.status.label() == "MATCH"));
    }

    #[test]
    fn simple_algebra_report() {
        let r = analyze_catalog("simple:2", &gf(5));
        assert!(r.simple());
        assert!(!r.nilpotent());
        assert!(r.phi_free());
        assert_eq!(r.elementary.as_ref().map(|v| v.holds), Some(true));
        assert_eq!(r.strong_semisimple_holds(), Some(true));
        assert_eq!(r.derived.dim(), r.dim);
    }

    #[test]
    fn rational_nilpotent_uses_the_shortcut_and_skips_the_lattice() {
        let q = FieldSpec::rationals();
        let r = analyze_catalog("example_3_1", &q);
        assert_eq!(r.frattini.method, FrattiniMethod::NilpotentShortcut);
        assert_eq!(r.frattini.f.dim(), 1);
        assert!(r.elementary.is_none());
        assert!(r.lattice.is_none());
        assert!(r.notes.iter().any(|n| n.contains("require a prime field")));
    }

    #[test]
    fn rational_non_nilpotent_analysis_is_a_precondition_error() {
        let a = catalog::build("simple:2", &FieldSpec::rationals())
            .unwrap()
            .algebra;
        assert!(analyze(&a, DEFAULT_ENUMERATION_CAP).is_err());
    }

    #[test]
    fn audit_rows_flow_through() {
        let r = analyze_catalog("example_3_2", &gf(2));
        let mismatches: Vec<_> = r
            .claim_audit
            .iter()
            .filter(|row| row.status.label() == "MISMATCH")
            .collect();
        assert_eq!(mismatches.len(), 1);
    }
}
