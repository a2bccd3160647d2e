//! Text and JSON renderings of command results.
//!
//! Both forms are deterministic: JSON maps keep insertion order, lists
//! come out in the library's canonical orders, and every scalar is
//! rendered as an exact integer or `a/b` string. Wall-clock timing is
//! only attached on request because it breaks byte reproducibility.

use std::fmt;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use nlie::algebra::ValidationReport;
use nlie::catalog::ClaimAuditRow;
use nlie::field::Scalar;
use nlie::frattini::{FrattiniResult, LatticeEnumeration, PredicateVerdict};
use nlie::matrix::Matrix;
use nlie::report::AnalysisReport;
use nlie::structure::{
    DerivationSpace, SeriesResult, SimplicityMethod, SimplicityReport, SsdFailure, SsdOutcome,
};
use nlie::subspace::Subspace;

use crate::source::Source;

pub enum Doc {
    Json(Value),
    Text(String),
}

impl fmt::Display for Doc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Doc::Json(v) => write!(f, "{}", serde_json::to_string_pretty(v).expect("valid json")),
            Doc::Text(s) => write!(f, "{}", s.trim_end()),
        }
    }
}

pub fn with_timing(doc: Doc, ms: u128) -> Doc {
    match doc {
        Doc::Json(Value::Object(mut map)) => {
            map.insert("timing_ms".into(), json!(ms as u64));
            Doc::Json(Value::Object(map))
        }
        Doc::Json(v) => Doc::Json(v),
        Doc::Text(mut s) => {
            if !s.ends_with('\n') {
                s.push('\n');
            }
            let _ = writeln!(s, "timing: {ms} ms");
            Doc::Text(s)
        }
    }
}

fn envelope(command: &str, src: &Source) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("command".into(), json!(command));
    map.insert("source".into(), json!(src.label));
    if let Some(seed) = src.seed {
        map.insert("seed".into(), json!(seed));
    }
    map.insert("field".into(), json!(src.algebra.field().to_string()));
    map.insert("arity".into(), json!(src.algebra.arity()));
    map.insert("dim".into(), json!(src.algebra.dim()));
    map
}

fn envelope_text(src: &Source) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "source: {}", src.label);
    if let Some(seed) = src.seed {
        let _ = writeln!(s, "seed: {seed}");
    }
    let _ = writeln!(s, "field: {}", src.algebra.field());
    let _ = writeln!(s, "arity: {}", src.algebra.arity());
    let _ = writeln!(s, "dim: {}", src.algebra.dim());
    s
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| json!(c.to_string())).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": Value::Array(s.basis_rows().iter().map(|r| vector_json(r)).collect()),
    })
}

fn opt_subspace_json(s: &Option<Subspace>) -> Value {
    match s {
        Some(s) => subspace_json(s),
        None => Value::Null,
    }
}

/// 1-based tuple on the wire.
fn tuple_json(t: &[usize]) -> Value {
    Value::Array(t.iter().map(|i| json!(i + 1)).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| json!(m.at(r, c).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn terms_json(terms: &[Subspace]) -> Value {
    Value::Array(terms.iter().map(subspace_json).collect())
}

fn dims_chain(terms: &[Subspace]) -> String {
    terms
        .iter()
        .map(|t| t.dim().to_string())
        .collect::<Vec<_>>()
        .join(" > ")
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn simplicity_method_str(m: &SimplicityMethod) -> String {
    match m {
        SimplicityMethod::ExhaustiveLines => "exhaustive-lines".into(),
        SimplicityMethod::BasisClosures => "basis-closures".into(),
        SimplicityMethod::ReductionMod(p) => format!("reduction-mod-{p}"),
    }
}

fn claim_rows_json(rows: &[ClaimAuditRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "label": row.label,
                    "expected": row.expected,
                    "computed": row.computed,
                    "status": row.status.label(),
                })
            })
            .collect(),
    )
}

fn claim_rows_text(rows: &[ClaimAuditRow]) -> String {
    let mut s = String::new();
    for row in rows {
        let _ = writeln!(
            s,
            "  {:<17} {}: expected {}, computed {}",
            row.status.label(),
            row.label,
            row.expected,
            row.computed
        );
    }
    s
}

pub fn validate_doc(src: &Source, v: &ValidationReport, as_json: bool) -> Doc {
    if as_json {
        let mut map = envelope("validate", src);
        map.insert("ok".into(), json!(v.ok));
        map.insert(
            "violations".into(),
            Value::Array(
                v.violations
                    .iter()
                    .map(|f| {
                        json!({
                            "outer": tuple_json(&f.outer),
                            "inner": tuple_json(&f.inner),
                            "residual": vector_json(&f.residual),
                        })
                    })
                    .collect(),
            ),
        );
        return Doc::Json(Value::Object(map));
    }
    let mut s = envelope_text(src);
    if v.ok {
        s.push_str("validation: ok\n");
    } else {
        let _ = writeln!(s, "validation: FAILED ({} violations)", v.violations.len());
        for f in v.violations.iter().take(10) {
            let _ = writeln!(
                s,
                "violation: outer {:?} inner {:?} residual ({})",
                f.outer.iter().map(|i| i + 1).collect::<Vec<_>>(),
                f.inner.iter().map(|i| i + 1).collect::<Vec<_>>(),
                f.residual
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
        }
        if v.violations.len() > 10 {
            let _ = writeln!(s, "... and {} more", v.violations.len() - 10);
        }
    }
    Doc::Text(s)
}

fn simplicity_json(r: &SimplicityReport) -> Value {
    json!({
        "simple": r.simple,
        "method": simplicity_method_str(&r.method),
        "witness": opt_subspace_json(&r.witness),
    })
}

fn ssd_json(o: &SsdOutcome) -> Value {
    match o {
        SsdOutcome::Decomposition(parts) => json!({
            "holds": true,
            "summands": Value::Array(parts.iter().map(subspace_json).collect()),
        }),
        SsdOutcome::NotStrongSemisimple(f) => {
            let (kind, sub) = match f {
                SsdFailure::MinimalIdealsSpan(s) => ("minimal-ideals-span", s),
                SsdFailure::SummandNotSimple(s) => ("summand-not-simple", s),
            };
            json!({
                "holds": false,
                "failure": {"kind": kind, "subspace": subspace_json(sub)},
            })
        }
    }
}

fn ssd_text(o: &SsdOutcome) -> String {
    match o {
        SsdOutcome::Decomposition(parts) => {
            if parts.is_empty() {
                "yes (zero algebra, empty sum)".to_string()
            } else {
                format!(
                    "yes ({})",
                    parts
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" + ")
                )
            }
        }
        SsdOutcome::NotStrongSemisimple(SsdFailure::MinimalIdealsSpan(s)) => {
            format!("no (minimal ideals span only {s})")
        }
        SsdOutcome::NotStrongSemisimple(SsdFailure::SummandNotSimple(s)) => {
            format!("no (minimal ideal {s} is not simple)")
        }
    }
}

fn verdict_json(v: &Option<PredicateVerdict>) -> Value {
    match v {
        Some(v) => json!(v.holds),
        None => Value::Null,
    }
}

fn verdict_text(name: &str, v: &Option<PredicateVerdict>) -> String {
    match v {
        Some(PredicateVerdict { holds: true, .. }) => format!("{name}: yes\n"),
        Some(PredicateVerdict {
            holds: false,
            witness,
        }) => match witness {
            Some(w) => format!("{name}: no (witness {w})\n"),
            None => format!("{name}: no\n"),
        },
        None => format!("{name}: skipped (prime field required)\n"),
    }
}

pub fn analyze_doc(src: &Source, r: &AnalysisReport, as_json: bool) -> Doc {
    if as_json {
        let mut map = envelope("analyze", src);
        map.insert(
            "validation".into(),
            json!({"ok": r.validation.ok, "violations": r.validation.violations.len()}),
        );
        map.insert("derived".into(), subspace_json(&r.derived));
        map.insert(
            "nilpotency".into(),
            json!({
                "nilpotent": r.nilpotency.nilpotent,
                "index": r.nilpotency.index,
                "terms": terms_json(&r.nilpotency.terms),
            }),
        );
        map.insert(
            "frattini".into(),
            json!({
                "f": subspace_json(&r.frattini.f),
                "phi": subspace_json(&r.frattini.phi),
                "method": r.frattini.method.label(),
            }),
        );
        map.insert(
            "frattini_series".into(),
            match &r.frattini_series {
                Some(fs) => json!({"index": fs.index, "terms": terms_json(&fs.terms)}),
                None => Value::Null,
            },
        );
        map.insert(
            "elementary_commutator".into(),
            match &r.commutator {
                Some(c) => json!({
                    "e": subspace_json(&c.e),
                    "s": subspace_json(&c.s),
                    "quotient_by_e_elementary": c.quotient_by_e_elementary,
                }),
                None => Value::Null,
            },
        );
        map.insert("simplicity".into(), simplicity_json(&r.simplicity));
        map.insert(
            "strong_semisimple".into(),
            match &r.strong_semisimple {
                Some(o) => ssd_json(o),
                None => Value::Null,
            },
        );
        map.insert(
            "verdicts".into(),
            json!({
                "nilpotent": r.nilpotent(),
                "simple": r.simple(),
                "strong_semisimple": r.strong_semisimple_holds(),
                "phi_free": r.phi_free(),
                "elementary": verdict_json(&r.elementary),
                "e_algebra": verdict_json(&r.e_algebra),
                "complemented": verdict_json(&r.complemented),
            }),
        );
        let mut witnesses = Map::new();
        if let Some(w) = &r.simplicity.witness {
            witnesses.insert("simple".into(), subspace_json(w));
        }
        for (name, v) in [
            ("elementary", &r.elementary),
            ("e_algebra", &r.e_algebra),
            ("complemented", &r.complemented),
        ] {
            if let Some(PredicateVerdict {
                witness: Some(w), ..
            }) = v
            {
                witnesses.insert(name.into(), subspace_json(w));
            }
        }
        map.insert("witnesses".into(), Value::Object(witnesses));
        map.insert(
            "lattice".into(),
            match &r.lattice {
                Some(l) => json!({
                    "total_subspaces": l.total_subspaces,
                    "subalgebras": l.subalgebras,
                    "ideals": l.ideals,
                    "maximal": l.maximal,
                }),
                None => Value::Null,
            },
        );
        map.insert("claim_audit".into(), claim_rows_json(&r.claim_audit));
        map.insert("notes".into(), json!(r.notes));
        return Doc::Json(Value::Object(map));
    }

    let mut s = envelope_text(src);
    let _ = writeln!(
        s,
        "validation: {}",
        if r.validation.ok {
            "ok".to_string()
        } else {
            format!("FAILED ({} violations)", r.validation.violations.len())
        }
    );
    let _ = writeln!(s, "derived subalgebra: {} (dim {})", r.derived, r.derived.dim());
    match r.nilpotency.index {
        Some(i) => {
            let _ = writeln!(s, "nilpotent: {} (index {i})", yesno(r.nilpotent()));
        }
        None => {
            let _ = writeln!(s, "nilpotent: {}", yesno(r.nilpotent()));
        }
    }
    let _ = writeln!(s, "nilpotency series dims: {}", dims_chain(&r.nilpotency.terms));
    let _ = writeln!(s, "frattini subalgebra F: {}", r.frattini.f);
    let _ = writeln!(s, "frattini ideal phi: {}", r.frattini.phi);
    let _ = writeln!(s, "frattini method: {}", r.frattini.method.label());
    let _ = writeln!(s, "phi-free: {}", yesno(r.phi_free()));
    match &r.frattini_series {
        Some(fs) => {
            let _ = writeln!(
                s,
                "frattini series dims: {} (index {})",
                dims_chain(&fs.terms),
                fs.index
            );
        }
        None => s.push_str("frattini series: skipped (prime field required)\n"),
    }
    match &r.commutator {
        Some(c) => {
            let _ = writeln!(s, "elementary commutator E: {}", c.e);
            let _ = writeln!(s, "S (maximal ideal intersection): {}", c.s);
            let _ = writeln!(s, "A/E elementary: {}", yesno(c.quotient_by_e_elementary));
        }
        None => s.push_str("elementary commutator: skipped (prime field required)\n"),
    }
    match &r.simplicity.witness {
        Some(w) => {
            let _ = writeln!(
                s,
                "simple: {} (method {}; witness {})",
                yesno(r.simple()),
                simplicity_method_str(&r.simplicity.method),
                w
            );
        }
        None => {
            let _ = writeln!(
                s,
                "simple: {} (method {})",
                yesno(r.simple()),
                simplicity_method_str(&r.simplicity.method)
            );
        }
    }
    match &r.strong_semisimple {
        Some(o) => {
            let _ = writeln!(s, "strong semisimple: {}", ssd_text(o));
        }
        None => s.push_str("strong semisimple: skipped (prime field required)\n"),
    }
    s.push_str(&verdict_text("elementary", &r.elementary));
    s.push_str(&verdict_text("e-algebra", &r.e_algebra));
    s.push_str(&verdict_text("complemented", &r.complemented));
    if let Some(l) = &r.lattice {
        let _ = writeln!(
            s,
            "lattice: {} subspaces, {} subalgebras, {} ideals, {} maximal",
            l.total_subspaces, l.subalgebras, l.ideals, l.maximal
        );
    }
    if !r.claim_audit.is_empty() {
        s.push_str("claim audit:\n");
        s.push_str(&claim_rows_text(&r.claim_audit));
    }
    if !r.notes.is_empty() {
        s.push_str("notes:\n");
        for note in &r.notes {
            let _ = writeln!(s, "  - {note}");
        }
    }
    Doc::Text(s)
}

pub fn frattini_doc(src: &Source, r: &FrattiniResult, as_json: bool) -> Doc {
    if as_json {
        let mut map = envelope("frattini", src);
        map.insert("f".into(), subspace_json(&r.f));
        map.insert("phi".into(), subspace_json(&r.phi));
        map.insert("method".into(), json!(r.method.label()));
        return Doc::Json(Value::Object(map));
    }
    let mut s = envelope_text(src);
    let _ = writeln!(s, "frattini subalgebra F: {}", r.f);
    let _ = writeln!(s, "frattini ideal phi: {}", r.phi);
    let _ = writeln!(s, "method: {}", r.method.label());
    Doc::Text(s)
}

pub fn series_doc(src: &Source, r: &SeriesResult, as_json: bool) -> Doc {
    if as_json {
        let mut map = envelope("series", src);
        map.insert("nilpotent".into(), json!(r.nilpotent));
        map.insert("index".into(), json!(r.index));
        map.insert("terms".into(), terms_json(&r.terms));
        return Doc::Json(Value::Object(map));
    }
    let mut s = envelope_text(src);
    for (i, term) in r.terms.iter().enumerate() {
        let _ = writeln!(s, "term {i}: {term} (dim {})", term.dim());
    }
    match r.index {
        Some(i) => {
            let _ = writeln!(s, "nilpotent: yes (index {i})");
        }
        None => {
            let _ = writeln!(
                s,
                "nilpotent: no (stabilizes at dim {})",
                r.terms.last().map(|t| t.dim()).unwrap_or(0)
            );
        }
    }
    Doc::Text(s)
}

pub fn derivations_doc(src: &Source, d: &DerivationSpace, as_json: bool) -> Doc {
    if as_json {
        let mut map = envelope("derivations", src);
        map.insert("dim".into(), json!(d.dim));
        map.insert(
            "basis".into(),
            Value::Array(d.basis.iter().map(matrix_json).collect()),
        );
        return Doc::Json(Value::Object(map));
    }
    let mut s = envelope_text(src);
    let _ = writeln!(s, "derivation algebra dimension: {}", d.dim);
    for (k, m) in d.basis.iter().enumerate() {
        let _ = writeln!(s, "derivation {}:", k + 1);
        for r in 0..m.rows() {
            let row = (0..m.cols())
                .map(|c| m.at(r, c).to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(s, "  {row}");
        }
    }
    Doc::Text(s)
}

pub fn audit_doc(src: &Source, rows: &[ClaimAuditRow], as_json: bool) -> Doc {
    if as_json {
        let mut map = envelope("audit", src);
        map.insert("claim_audit".into(), claim_rows_json(rows));
        return Doc::Json(Value::Object(map));
    }
    let mut s = envelope_text(src);
    if rows.is_empty() {
        s.push_str("no claims to audit\n");
    } else {
        s.push_str("claim audit:\n");
        s.push_str(&claim_rows_text(rows));
    }
    Doc::Text(s)
}

pub fn enumerate_doc(src: &Source, l: &LatticeEnumeration, as_json: bool) -> Doc {
    const MAXIMAL_LIST_CAP: usize = 1000;
    let maximal: Vec<&Subspace> = l.maximal_subalgebras().collect();
    if as_json {
        let mut map = envelope("enumerate", src);
        map.insert("total_subspaces".into(), json!(l.total_subspaces()));
        map.insert("subalgebras".into(), json!(l.subalgebra_count()));
        map.insert("ideals".into(), json!(l.ideal_count()));
        map.insert("maximal".into(), json!(l.maximal_count()));
        map.insert(
            "maximal_subalgebras".into(),
            Value::Array(
                maximal
                    .iter()
                    .take(MAXIMAL_LIST_CAP)
                    .map(|m| subspace_json(m))
                    .collect(),
            ),
        );
        map.insert(
            "maximal_truncated".into(),
            json!(maximal.len() > MAXIMAL_LIST_CAP),
        );
        return Doc::Json(Value::Object(map));
    }
    let mut s = envelope_text(src);
    let _ = writeln!(s, "total subspaces: {}", l.total_subspaces());
    let _ = writeln!(s, "subalgebras: {}", l.subalgebra_count());
    let _ = writeln!(s, "ideals: {}", l.ideal_count());
    let _ = writeln!(s, "maximal subalgebras: {}", l.maximal_count());
    for m in maximal.iter().take(200) {
        let _ = writeln!(s, "  {m}");
    }
    if maximal.len() > 200 {
        let _ = writeln!(s, "  ... and {} more", maximal.len() - 200);
    }
    Doc::Text(s)
}
