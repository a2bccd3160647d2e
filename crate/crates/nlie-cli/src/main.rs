//! `nlie`: command-line driver for exact structural analysis of n-Lie
//! algebras given by structure constants.
//!
//! Input is either a text file in the `nlie` format or a named catalog
//! entry built over a field given with `--field`. Output goes to
//! standard output as plain text or JSON; identical inputs and flags
//! produce byte-identical output unless `--timing` is requested.
//!
//! Exit codes: 0 completed, 1 parse or usage error, 2 unsupported
//! precondition (for example exhaustive enumeration over the
//! rationals, or a validation failure under `--strict`).

mod render;
mod source;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use nlie::algebra::ValidationReport;
use nlie::catalog;
use nlie::enumerate::DEFAULT_ENUMERATION_CAP;
use nlie::error::NLieError;
use nlie::frattini::Analyzer;
use nlie::report::analyze_with_claims;
use nlie::structure::{derivation_algebra, nilpotency_series};

#[derive(Parser)]
#[command(name = "nlie", version, about = "Structural invariants of n-Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fundamental identity on all basis tuples
    Validate(CommonArgs),
    /// Run the full battery of invariants and predicates
    Analyze(CommonArgs),
    /// Frattini subalgebra F and Frattini ideal phi
    Frattini(CommonArgs),
    /// Nilpotency series with stabilization index
    Series(CommonArgs),
    /// Basis of the derivation algebra
    Derivations(CommonArgs),
    /// Audit catalog claims against computed values
    Audit(CommonArgs),
    /// Enumerate the subalgebra lattice
    Enumerate(CommonArgs),
}

impl Command {
    fn args(&self) -> &CommonArgs {
        match self {
            Command::Validate(a)
            | Command::Analyze(a)
            | Command::Frattini(a)
            | Command::Series(a)
            | Command::Derivations(a)
            | Command::Audit(a)
            | Command::Enumerate(a) => a,
        }
    }

}

#[derive(Args)]
struct CommonArgs {
    /// Input file in the nlie text format
    file: Option<std::path::PathBuf>,

    /// Catalog entry, e.g. example_3_1, simple:3, nilpotent:2:4,
    /// abelian:3:5, sums like simple:2+abelian:2:1, or random:<arity>:<dim>
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,

    /// Coefficient field: gf:p or q (required with --catalog)
    #[arg(long)]
    field: Option<String>,

    /// Emit the report as JSON
    #[arg(long)]
    json: bool,

    /// Emit the report as plain text (the default)
    #[arg(long, conflicts_with = "json")]
    text: bool,

    /// Dimension cap for exhaustive enumeration (or env NLIE_CAP)
    #[arg(long)]
    cap: Option<usize>,

    /// Treat validation failures as errors
    #[arg(long)]
    strict: bool,

    /// Seed for random: catalog sources
    #[arg(long)]
    seed: Option<u64>,

    /// Append wall-clock timing (makes output non-reproducible)
    #[arg(long)]
    timing: bool,
}

/// A failure destined for stderr plus a process exit code.
pub struct CliFailure {
    pub code: u8,
    pub message: String,
}

impl CliFailure {
    pub fn usage(message: impl Into<String>) -> Self {
        CliFailure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliFailure {
            code: 2,
            message: message.into(),
        }
    }
}

/// Bad user input exits 1; valid requests the engine cannot satisfy
/// exit 2.
pub fn failure_from(e: NLieError) -> CliFailure {
    let code = match &e {
        NLieError::NotPrime(_)
        | NLieError::UnknownCatalogEntry(_)
        | NLieError::BadCatalogParams(_) => 1,
        _ => 2,
    };
    CliFailure {
        code,
        message: e.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code: u8 = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: &Command) -> Result<(), CliFailure> {
    let args = command.args();
    let src = source::load(args)?;
    let cap = resolve_cap(args)?;
    let started = Instant::now();

    let (algebra, validation) = src.algebra.clone().with_validation();
    if !validation.ok && !matches!(command, Command::Validate(_)) {
        strict_gate(args, &validation)?;
    }

    let mut doc = match command {
        Command::Validate(_) => render::validate_doc(&src, &validation, args.json),
        Command::Analyze(_) => {
            let report = analyze_with_claims(&algebra, cap, &src.claims).map_err(failure_from)?;
            render::analyze_doc(&src, &report, args.json)
        }
        Command::Frattini(_) => {
            let analyzer = Analyzer::new(algebra.clone(), cap);
            let result = analyzer.frattini().map_err(failure_from)?;
            render::frattini_doc(&src, &result, args.json)
        }
        Command::Series(_) => {
            let series = nilpotency_series(&algebra);
            render::series_doc(&src, &series, args.json)
        }
        Command::Derivations(_) => {
            let der = derivation_algebra(&algebra);
            render::derivations_doc(&src, &der, args.json)
        }
        Command::Audit(_) => {
            let analyzer = Analyzer::new(algebra.clone(), cap);
            let rows = catalog::audit(&src.claims, &analyzer).map_err(failure_from)?;
            render::audit_doc(&src, &rows, args.json)
        }
        Command::Enumerate(_) => {
            let analyzer = Analyzer::new(algebra.clone(), cap);
            let lattice = analyzer.lattice().map_err(failure_from)?;
            render::enumerate_doc(&src, lattice, args.json)
        }
    };

    if args.timing {
        doc = render::with_timing(doc, started.elapsed().as_millis());
    }
    // a closed pipe (e.g. | head) is a normal way for output to end
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{doc}").and_then(|_| stdout.flush()) {
        Ok(()) => {}
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(()),
        Err(e) => return Err(CliFailure::usage(format!("cannot write output: {e}"))),
    }

    if let Command::Validate(_) = command {
        if !validation.ok {
            strict_gate(args, &validation)?;
        }
    }
    Ok(())
}

/// Under --strict a failed validation stops the run; otherwise it is a
/// warning on stderr and the computation proceeds.
fn strict_gate(args: &CommonArgs, validation: &ValidationReport) -> Result<(), CliFailure> {
    let n = validation.violations.len();
    if args.strict {
        Err(CliFailure::precondition(format!(
            "validation failed: {n} fundamental-identity violation(s)"
        )))
    } else {
        eprintln!(
            "warning: fundamental identity fails on {n} tuple pair(s); results assume a valid table"
        );
        Ok(())
    }
}

fn resolve_cap(args: &CommonArgs) -> Result<usize, CliFailure> {
    if let Some(cap) = args.cap {
        return Ok(cap);
    }
    match std::env::var("NLIE_CAP") {
        Ok(s) => s.trim().parse().map_err(|_| {
            CliFailure::usage(format!("NLIE_CAP must be a non-negative integer, got `{s}`"))
        }),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}
