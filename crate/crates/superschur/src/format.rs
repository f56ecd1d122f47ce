//! The on-disk algebra format.
//!
//! Algebras are stored as TOML: a name, the even and odd basis name lists,
//! and one `[[bracket]]` table per stored pair with a sparse rational value.
//! Missing brackets are zero, and only one orientation per pair should be
//! listed (a redundant opposite orientation is accepted when it agrees with
//! super skew-symmetry).  Emission is hand-formatted so the same algebra
//! always serializes to the same bytes.
//!
//! ```toml
//! name = "H(1,0)"
//! even = ["x1", "x2", "z"]
//! odd = []
//!
//! [[bracket]]
//! left = "x1"
//! right = "x2"
//! value = [{ basis = "z", coeff = "1" }]
//! ```
//!
//! Stem covers add a `kernel = [...]` annotation naming the central basis
//! vectors spanning the multiplier.

use std::collections::HashMap;

use serde::Deserialize;

use crate::linalg::{format_rational, parse_rational, Rational};
use crate::multiplier::StemCover;
use crate::superalgebra::{AlgebraError, LieSuperAlgebra};

/// Hard cap on basis vectors accepted from a file.
pub const MAX_FILE_BASIS: usize = 32;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("TOML syntax: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("too many basis vectors: {0}, the cap is {MAX_FILE_BASIS}")]
    TooManyBasis(usize),
    #[error("unknown basis name `{0}`")]
    UnknownBasis(String),
    #[error("bad coefficient `{text}`: {reason}")]
    BadCoefficient { text: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parsed file: the algebra plus the optional kernel annotation.
#[derive(Debug)]
pub struct AlgebraFile {
    pub algebra: LieSuperAlgebra,
    pub kernel: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebraFile {
    name: String,
    #[serde(default)]
    even: Vec<String>,
    #[serde(default)]
    odd: Vec<String>,
    #[serde(default, rename = "bracket")]
    brackets: Vec<RawBracket>,
    #[serde(default)]
    kernel: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    left: String,
    right: String,
    #[serde(default)]
    value: Vec<RawTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    basis: String,
    coeff: String,
}

/// Parse a file into an algebra, keeping the kernel annotation.  Grading,
/// skew and Jacobi problems are not parse errors; run `validate` on the
/// result to diagnose them.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FormatError> {
    let raw: RawAlgebraFile = toml::from_str(text)?;
    let total = raw.even.len() + raw.odd.len();
    if total > MAX_FILE_BASIS {
        return Err(FormatError::TooManyBasis(total));
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, name) in raw.even.iter().chain(raw.odd.iter()).enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(AlgebraError::DuplicateBasisName(name.clone()).into());
        }
    }
    let resolve = |name: &str| -> Result<usize, FormatError> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| FormatError::UnknownBasis(name.to_string()))
    };

    let mut brackets: Vec<((usize, usize), Vec<(usize, Rational)>)> = Vec::new();
    for raw_bracket in &raw.brackets {
        let left = resolve(&raw_bracket.left)?;
        let right = resolve(&raw_bracket.right)?;
        let mut value = Vec::new();
        for term in &raw_bracket.value {
            let coeff =
                parse_rational(&term.coeff).map_err(|e| FormatError::BadCoefficient {
                    text: term.coeff.clone(),
                    reason: e.to_string(),
                })?;
            value.push((resolve(&term.basis)?, coeff));
        }
        brackets.push(((left, right), value));
    }

    for name in &raw.kernel {
        resolve(name)?;
    }

    let algebra =
        LieSuperAlgebra::new_permissive(raw.name, raw.even.clone(), raw.odd.clone(), brackets)?;
    Ok(AlgebraFile {
        algebra,
        kernel: raw.kernel,
    })
}

/// Parse a file, dropping any kernel annotation.
pub fn parse_algebra(text: &str) -> Result<LieSuperAlgebra, FormatError> {
    Ok(parse_algebra_file(text)?.algebra)
}

fn toml_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn toml_string_list(names: &[&str]) -> String {
    let quoted: Vec<String> = names.iter().map(|n| toml_string(n)).collect();
    format!("[{}]", quoted.join(", "))
}

fn emit_with_kernel(l: &LieSuperAlgebra, kernel: &[&str]) -> String {
    let evens: Vec<&str> = (0..l.even_dim()).map(|i| l.basis_name(i)).collect();
    let odds: Vec<&str> = (l.even_dim()..l.total_dim()).map(|i| l.basis_name(i)).collect();
    let mut out = String::new();
    out.push_str(&format!("name = {}\n", toml_string(l.name())));
    out.push_str(&format!("even = {}\n", toml_string_list(&evens)));
    out.push_str(&format!("odd = {}\n", toml_string_list(&odds)));
    if !kernel.is_empty() {
        out.push_str(&format!("kernel = {}\n", toml_string_list(kernel)));
    }
    for (&(i, j), value) in l.stored_brackets() {
        out.push('\n');
        out.push_str("[[bracket]]\n");
        out.push_str(&format!("left = {}\n", toml_string(l.basis_name(i))));
        out.push_str(&format!("right = {}\n", toml_string(l.basis_name(j))));
        let terms: Vec<String> = value
            .nonzero()
            .map(|(k, c)| {
                format!(
                    "{{ basis = {}, coeff = {} }}",
                    toml_string(l.basis_name(k)),
                    toml_string(&format_rational(c))
                )
            })
            .collect();
        out.push_str(&format!("value = [{}]\n", terms.join(", ")));
    }
    out
}

/// Serialize an algebra; deterministic, bracket tables in stored order.
pub fn emit_algebra(l: &LieSuperAlgebra) -> String {
    emit_with_kernel(l, &[])
}

/// Serialize a stem cover with its kernel annotation.
pub fn emit_cover(cover: &StemCover) -> String {
    let names: Vec<&str> = cover
        .kernel_indices
        .iter()
        .map(|&i| cover.cover.basis_name(i))
        .collect();
    emit_with_kernel(&cover.cover, &names)
}
