//! The `nlie` text file format: a line-oriented, hand-authorable
//! encoding of structure constants, with a canonical serializer whose
//! output round-trips byte-identically.
//!
//! ```text
//! # any line content after '#' is ignored
//! nlie
//! arity 3
//! dim 4
//! field gf 2          (or: field q)
//! bracket 2 3 4 = 1*1
//! ```
//!
//! Header lines appear in exactly that order. Each `bracket` line gives
//! the value of one strictly increasing basis tuple, 1-based, as a sum
//! `c1*k1 + c2*k2 + ...`; a bare `k` means `1*k`, a right-hand side of
//! `0` means the zero vector, and absent tuples are zero. Coefficients
//! are integers or `a/b` fractions, reduced on load (over GF(p) the
//! fraction is interpreted via the inverse of `b`).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::NLieAlgebra;
use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parses an algebra file. The result is structurally checked (shape,
/// tuple discipline, field consistency) but not validated against the
/// fundamental identity; callers decide how strictly to treat
/// validation failures.
pub fn parse(text: &str) -> Result<NLieAlgebra, ParseError> {
    let mut lines = significant_lines(text);
    let eof = text.lines().count().max(1);

    let (line, content) = take(&mut lines, eof, "header line `nlie`")?;
    if content != "nlie" {
        return err(line, "expected header line `nlie`");
    }

    let (line, content) = take(&mut lines, eof, "`arity <n>`")?;
    let arity = match content.strip_prefix("arity ") {
        Some(rest) => parse_usize(line, rest.trim(), "arity")?,
        None => return err(line, "expected `arity <n>`"),
    };
    if arity < 2 {
        return err(line, format!("arity must be at least 2, got {arity}"));
    }

    let (line, content) = take(&mut lines, eof, "`dim <d>`")?;
    let dim = match content.strip_prefix("dim ") {
        Some(rest) => parse_usize(line, rest.trim(), "dim")?,
        None => return err(line, "expected `dim <d>`"),
    };

    let (line, content) = take(&mut lines, eof, "`field q` or `field gf <p>`")?;
    let field = parse_field(line, content)?;

    let mut entries: Vec<(Vec<usize>, Vec<Scalar>)> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (line, content) in lines {
        let (tuple, value) = parse_bracket_line(line, content, arity, dim, &field)?;
        if !seen.insert(tuple.clone()) {
            return err(line, format!("duplicate bracket tuple {}", render_tuple(&tuple)));
        }
        entries.push((tuple, value));
    }

    NLieAlgebra::new(arity, dim, field, entries).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

/// Canonical rendering: fixed header, tuples in increasing lexicographic
/// order, terms in basis order, reduced coefficients, one trailing
/// newline. `serialize(parse(s)) == serialize(a)` whenever `s`
/// describes `a`.
pub fn serialize(a: &NLieAlgebra) -> String {
    let mut out = String::new();
    out.push_str("nlie\n");
    let _ = writeln!(out, "arity {}", a.arity());
    let _ = writeln!(out, "dim {}", a.dim());
    match a.field().modulus() {
        Some(p) => {
            let _ = writeln!(out, "field gf {p}");
        }
        None => out.push_str("field q\n"),
    }
    for (tuple, value) in a.table() {
        let _ = write!(out, "bracket {} =", render_tuple(tuple));
        let mut first = true;
        for (k, c) in value.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.push_str(if first { " " } else { " + " });
            let _ = write!(out, "{}*{}", c, k + 1);
            first = false;
        }
        out.push('\n');
    }
    out
}

/// 1-based space-joined indices, the same form the parser accepts.
fn render_tuple(tuple: &[usize]) -> String {
    tuple
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Content lines with comments stripped, paired with 1-based line
/// numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            None
        } else {
            Some((i + 1, content))
        }
    })
}

fn take<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    eof: usize,
    what: &str,
) -> Result<(usize, &'a str), ParseError> {
    match lines.next() {
        Some(pair) => Ok(pair),
        None => err(eof, format!("unexpected end of input, expected {what}")),
    }
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    match token.parse::<usize>() {
        Ok(v) => Ok(v),
        Err(_) => err(line, format!("malformed {what} `{token}`")),
    }
}

fn parse_field(line: usize, content: &str) -> Result<FieldSpec, ParseError> {
    let tokens: Vec<&str> = content.split_whitespace().collect();
    match tokens.as_slice() {
        ["field", "q"] => Ok(FieldSpec::rationals()),
        ["field", "gf", p] => {
            let p = parse_usize(line, p, "field modulus")? as u64;
            FieldSpec::prime_field(p)
                .map_err(|_| ParseError {
                    line,
                    message: format!("field modulus {p} is not prime"),
                })
        }
        _ => err(line, format!("unknown field spec `{content}`")),
    }
}

fn parse_bracket_line(
    line: usize,
    content: &str,
    arity: usize,
    dim: usize,
    field: &FieldSpec,
) -> Result<(Vec<usize>, Vec<Scalar>), ParseError> {
    let rest = match content.strip_prefix("bracket") {
        Some(rest) if rest.starts_with(char::is_whitespace) => rest,
        _ => return err(line, format!("expected `bracket ...` line, found `{content}`")),
    };
    let (lhs, rhs) = match rest.split_once('=') {
        Some(pair) => pair,
        None => return err(line, "expected `=` after the index tuple"),
    };

    let index_tokens: Vec<&str> = lhs.split_whitespace().collect();
    if index_tokens.len() != arity {
        return err(
            line,
            format!("expected {arity} indices before `=`, found {}", index_tokens.len()),
        );
    }
    let mut tuple = Vec::with_capacity(arity);
    for tok in index_tokens {
        tuple.push(parse_index(line, tok, dim)?);
    }
    if !tuple.windows(2).all(|w| w[0] < w[1]) {
        return err(line, "indices must be strictly increasing");
    }

    let mut value = vec![field.zero(); dim];
    let rhs = rhs.trim();
    if rhs != "0" {
        for term in rhs.split('+') {
            let term = term.trim();
            let (coeff, k) = match term.rsplit_once('*') {
                Some((c, k)) => (parse_coefficient(line, c.trim(), field)?, k.trim()),
                None => (field.one(), term),
            };
            let k = parse_index(line, k, dim)?;
            value[k] = value[k].add(&coeff);
        }
    }
    Ok((tuple, value))
}

/// 1-based index on the wire, 0-based in memory.
fn parse_index(line: usize, token: &str, dim: usize) -> Result<usize, ParseError> {
    let i = parse_usize(line, token, "basis index")?;
    if i == 0 || i > dim {
        return err(line, format!("index {i} out of range for dim {dim}"));
    }
    Ok(i - 1)
}

fn parse_coefficient(line: usize, token: &str, field: &FieldSpec) -> Result<Scalar, ParseError> {
    let (num_tok, den_tok) = match token.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (token, "1"),
    };
    let num = match BigInt::from_str(num_tok) {
        Ok(n) => n,
        Err(_) => return err(line, format!("malformed coefficient `{token}`")),
    };
    let den = match BigInt::from_str(den_tok) {
        Ok(d) => d,
        Err(_) => return err(line, format!("malformed coefficient `{token}`")),
    };
    field.from_big_ratio(&num, &den).map_err(|e| ParseError {
        line,
        message: e.to_string(),
    })
}
