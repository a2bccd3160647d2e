//! Input acquisition: file, catalog entry, or seeded random algebra.

use nlie::algebra::NLieAlgebra;
use nlie::catalog::{self, CatalogClaim};
use nlie::field::FieldSpec;
use nlie::format;
use nlie::random::random_algebra;

use crate::{failure_from, CliFailure, CommonArgs};

pub struct Source {
    /// Display label: `catalog:<name>`, `random:<n>:<d>`, or the file
    /// path as given.
    pub label: String,
    pub algebra: NLieAlgebra,
    pub claims: Vec<CatalogClaim>,
    /// Present only for random sources.
    pub seed: Option<u64>,
}

pub fn load(args: &CommonArgs) -> Result<Source, CliFailure> {
    match (&args.catalog, &args.file) {
        (Some(name), None) => from_catalog(name, args),
        (None, Some(path)) => from_file(path, args),
        (None, None) => Err(CliFailure::usage(
            "provide an input file or --catalog <name>",
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects catalog+file"),
    }
}

fn parse_field(spec: &str) -> Result<FieldSpec, CliFailure> {
    if spec == "q" {
        return Ok(FieldSpec::rationals());
    }
    if let Some(p) = spec.strip_prefix("gf:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliFailure::usage(format!("bad field modulus `{p}`")))?;
        return FieldSpec::prime_field(p).map_err(failure_from);
    }
    Err(CliFailure::usage(format!(
        "unknown field spec `{spec}` (expected gf:<p> or q)"
    )))
}

fn from_catalog(name: &str, args: &CommonArgs) -> Result<Source, CliFailure> {
    let field = match &args.field {
        Some(spec) => parse_field(spec)?,
        None => return Err(CliFailure::usage("--field is required with --catalog")),
    };
    if let Some(params) = name.strip_prefix("random:") {
        let (arity, dim) = match params.split_once(':') {
            Some((a, d)) => match (a.parse::<usize>(), d.parse::<usize>()) {
                (Ok(a), Ok(d)) => (a, d),
                _ => {
                    return Err(CliFailure::usage(format!(
                        "bad random source `{name}` (expected random:<arity>:<dim>)"
                    )))
                }
            },
            None => {
                return Err(CliFailure::usage(format!(
                    "bad random source `{name}` (expected random:<arity>:<dim>)"
                )))
            }
        };
        let seed = args.seed.unwrap_or(0);
        let algebra = random_algebra(arity, dim, &field, seed).map_err(failure_from)?;
        return Ok(Source {
            label: name.to_string(),
            algebra,
            claims: Vec::new(),
            seed: Some(seed),
        });
    }
    let entry = catalog::build(name, &field).map_err(failure_from)?;
    Ok(Source {
        label: format!("catalog:{name}"),
        algebra: entry.algebra,
        claims: entry.claims,
        seed: None,
    })
}

fn from_file(path: &std::path::Path, args: &CommonArgs) -> Result<Source, CliFailure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliFailure::usage(format!("{}: {e}", path.display())))?;
    let algebra = format::parse(&text)
        .map_err(|e| CliFailure::usage(format!("{}: {e}", path.display())))?;
    if let Some(spec) = &args.field {
        let requested = parse_field(spec)?;
        if requested != *algebra.field() {
            return Err(CliFailure::usage(format!(
                "--field {requested} conflicts with the file header ({})",
                algebra.field()
            )));
        }
    }
    Ok(Source {
        label: path.display().to_string(),
        algebra,
        claims: Vec::new(),
        seed: None,
    })
}
