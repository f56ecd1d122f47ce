//! Built-in algebra families and the named catalog.
//!
//! Three parametric families (even and odd Heisenberg superalgebras, abelian
//! superalgebras) plus the low-dimensional algebras that appear in the
//! classification tables, each shipped with its published multiplier total
//! and, where the classification states one, an s-value.  `all_entries`
//! returns the fixed list the verification harness walks; `resolve_key`
//! turns CLI key strings like `"H(1,0)+A(0|1)"` or `"L_{2,2}^{a,b}@1/2,1/2"`
//! into algebras.

use std::collections::HashMap;

use crate::linalg::{format_rational, parse_rational, rat, Rational};
use crate::superalgebra::{AlgebraBuilder, GradedDim, LieSuperAlgebra};

/// Hard cap on the total dimension a resolved key may reach.
pub const MAX_KEY_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("Heisenberg parameters must not all be zero")]
    EmptyHeisenberg,
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("key `{key}` takes {expected} parameter(s), got {got}")]
    WrongArity {
        key: String,
        expected: usize,
        got: usize,
    },
    #[error("key `{key}` has total dimension {dim}, above the cap of {MAX_KEY_DIM}")]
    TooLarge { key: String, dim: usize },
    #[error("cannot parse key `{key}`: {reason}")]
    BadKey { key: String, reason: String },
}

/// Published values attached to a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedValues {
    pub multiplier_total: usize,
    /// Only stated in print for the odd Heisenberg covers.
    pub multiplier_graded: Option<GradedDim>,
    /// Present when the entry appears in the s-classification.
    pub s_value: Option<i64>,
    pub citation: String,
    /// Short tag grouping report ids, e.g. "thm4.2".
    pub tag: &'static str,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: String,
    pub params: Vec<Rational>,
    pub algebra: LieSuperAlgebra,
    pub expected: Option<ExpectedValues>,
}

impl CatalogEntry {
    /// Key with the parameter suffix, e.g. `L_{2,2}^{a,b}@1/2,1/2`.
    pub fn display_key(&self) -> String {
        if self.params.is_empty() {
            self.key.clone()
        } else {
            let ps: Vec<String> = self.params.iter().map(format_rational).collect();
            format!("{}@{}", self.key, ps.join(","))
        }
    }
}

/// H(m,n): even basis x1..x2m, z and odd basis y1..yn with
/// [x_i, x_{m+i}] = z and [y_j, y_j] = z.  Dims (2m+1 | n).
pub fn heisenberg_even(m: usize, n: usize) -> Result<LieSuperAlgebra, CatalogError> {
    if m == 0 && n == 0 {
        return Err(CatalogError::EmptyHeisenberg);
    }
    let mut b = AlgebraBuilder::new(format!("H({m},{n})"));
    let xs: Vec<_> = (1..=2 * m).map(|i| b.even(format!("x{i}"))).collect();
    let z = b.even("z");
    let ys: Vec<_> = (1..=n).map(|j| b.odd(format!("y{j}"))).collect();
    for i in 0..m {
        b.bracket(xs[i], xs[m + i], &[(z, rat(1, 1))]);
    }
    for &y in &ys {
        b.bracket(y, y, &[(z, rat(1, 1))]);
    }
    Ok(b.build().expect("Heisenberg tables are consistent"))
}

/// H_n: even basis x1..xn, odd basis y1..yn, z with [x_i, y_i] = z.
/// Dims (n | n+1); the center is the odd line through z.
pub fn heisenberg_odd(n: usize) -> Result<LieSuperAlgebra, CatalogError> {
    if n == 0 {
        return Err(CatalogError::EmptyHeisenberg);
    }
    let mut b = AlgebraBuilder::new(format!("H_{n}"));
    let xs: Vec<_> = (1..=n).map(|i| b.even(format!("x{i}"))).collect();
    let ys: Vec<_> = (1..=n).map(|i| b.odd(format!("y{i}"))).collect();
    let z = b.odd("z");
    for i in 0..n {
        b.bracket(xs[i], ys[i], &[(z, rat(1, 1))]);
    }
    Ok(b.build().expect("Heisenberg tables are consistent"))
}

/// A(m|n): all brackets zero.
pub fn abelian(m: usize, n: usize) -> LieSuperAlgebra {
    let mut b = AlgebraBuilder::new(format!("A({m}|{n})"));
    for i in 1..=m {
        b.even(format!("a{i}"));
    }
    for j in 1..=n {
        b.odd(format!("b{j}"));
    }
    b.build().expect("abelian algebras are consistent")
}

// One row of the named table: even names, odd names, brackets as
// (left, right, [(target, coeff)]) with coefficients resolved against the
// parameter list at construction time.
struct NamedSpec {
    key: &'static str,
    arity: usize,
    even: &'static [&'static str],
    odd: &'static [&'static str],
    brackets: &'static [(&'static str, &'static str, &'static [(&'static str, Coeff)])],
    multiplier_total: usize,
    citation: &'static str,
    tag: &'static str,
}

#[derive(Clone, Copy)]
enum Coeff {
    One,
    Param(usize),
}

const NAMED: &[NamedSpec] = &[
    NamedSpec {
        key: "L_{2,2}^1",
        arity: 0,
        even: &["x0", "y0"],
        odd: &["x1", "y1"],
        brackets: &[
            ("y0", "y1", &[("x1", Coeff::One)]),
            ("y1", "y1", &[("x0", Coeff::One)]),
        ],
        multiplier_total: 2,
        citation: "Theorem 4.2, \"dim M(L_{2,2}^1) = 2\"",
        tag: "thm4.2",
    },
    NamedSpec {
        key: "L_{2,2}^{a,b}",
        arity: 2,
        even: &["x0", "y0"],
        odd: &["x1", "y1"],
        brackets: &[
            ("x1", "x1", &[("x0", Coeff::One)]),
            ("y1", "y1", &[("y0", Coeff::One)]),
            ("x1", "y1", &[("x0", Coeff::Param(0)), ("y0", Coeff::Param(1))]),
        ],
        multiplier_total: 1,
        citation: "Theorem 4.2, \"dim M(L_{2,2}^{a,b}) = 1\" (both the ab = 1/4 and ab != 1/4 regimes)",
        tag: "thm4.2",
    },
    NamedSpec {
        key: "L_{2,2}^2",
        arity: 0,
        even: &["x0", "y0"],
        odd: &["x1", "y1"],
        brackets: &[
            ("y0", "x1", &[("y1", Coeff::One)]),
            ("x1", "x1", &[("x0", Coeff::One)]),
        ],
        multiplier_total: 2,
        citation: "Theorem 4.3, \"dim M(L_{2,2}^2) = 2\"",
        tag: "thm4.3",
    },
    NamedSpec {
        key: "L_{1,3}^1",
        arity: 0,
        even: &["x0"],
        odd: &["x1", "y1", "z1"],
        brackets: &[
            ("x0", "x1", &[("y1", Coeff::One)]),
            ("x0", "y1", &[("z1", Coeff::One)]),
        ],
        multiplier_total: 3,
        citation: "Theorem 4.3, \"dim M(L_{1,3}^1) = 3\"",
        tag: "thm4.3",
    },
    NamedSpec {
        key: "L_{4,0}",
        arity: 0,
        even: &["x0", "y0", "z0", "w0"],
        odd: &[],
        brackets: &[
            ("x0", "y0", &[("z0", Coeff::One)]),
            ("y0", "z0", &[("w0", Coeff::One)]),
        ],
        multiplier_total: 2,
        citation: "Theorem 4.3, \"dim M(L_{4,0}) = 2\"",
        tag: "thm4.3",
    },
    NamedSpec {
        key: "L_{5,0}^1",
        arity: 0,
        even: &["x0", "y0", "z0", "v0", "w0"],
        odd: &[],
        brackets: &[
            ("x0", "y0", &[("z0", Coeff::One)]),
            ("x0", "z0", &[("v0", Coeff::One)]),
            ("y0", "w0", &[("v0", Coeff::One)]),
        ],
        multiplier_total: 4,
        citation: "Theorem 4.5, \"dim M(L_{5,0}^1) = 4\"",
        tag: "thm4.5",
    },
    NamedSpec {
        key: "L_{4,1}^1",
        arity: 0,
        even: &["x0", "y0", "z0", "w0"],
        odd: &["x1"],
        brackets: &[
            ("w0", "z0", &[("y0", Coeff::One)]),
            ("x1", "x1", &[("x0", Coeff::One)]),
            ("y0", "w0", &[("x0", Coeff::One)]),
        ],
        multiplier_total: 4,
        citation: "Theorem 4.5, \"dim M(L_{4,1}^1) = 4\"",
        tag: "thm4.5",
    },
    NamedSpec {
        key: "L_{4,1}^2",
        arity: 0,
        even: &["x0", "y0", "z0", "w0"],
        odd: &["x1"],
        brackets: &[
            ("x0", "y0", &[("z0", Coeff::One)]),
            ("w0", "y0", &[("x0", Coeff::One)]),
            ("x1", "x1", &[("z0", Coeff::One)]),
        ],
        multiplier_total: 4,
        citation: "Theorem 4.5, \"dim M(L_{4,1}^2) = 4\"",
        tag: "thm4.5",
    },
    NamedSpec {
        key: "L_{5,0}^2",
        arity: 0,
        even: &["x0", "y0", "z0", "v0", "w0"],
        odd: &[],
        brackets: &[
            ("x0", "y0", &[("v0", Coeff::One)]),
            ("y0", "z0", &[("w0", Coeff::One)]),
        ],
        multiplier_total: 6,
        citation: "Theorem 4.6, \"dim M(L_{5,0}^2) = 6\"",
        tag: "thm4.6",
    },
    NamedSpec {
        key: "L_{3,2}^1",
        arity: 0,
        even: &["x0", "y0", "z0"],
        odd: &["x1", "y1"],
        brackets: &[
            ("y0", "z0", &[("x0", Coeff::One)]),
            ("y0", "y1", &[("x1", Coeff::One)]),
        ],
        multiplier_total: 6,
        citation: "Theorem 4.6, \"dim M(L_{3,2}^1) = 6\"",
        tag: "thm4.6",
    },
    NamedSpec {
        key: "L_{1,4}^1",
        arity: 0,
        even: &["x0"],
        odd: &["x1", "y1", "z1", "v1"],
        brackets: &[
            ("x0", "y1", &[("x1", Coeff::One)]),
            ("x0", "v1", &[("z1", Coeff::One)]),
        ],
        multiplier_total: 6,
        citation: "Theorem 4.6, \"dim M(L_{1,4}^1) = 6\"",
        tag: "thm4.6",
    },
    NamedSpec {
        key: "L_{2,3}^1",
        arity: 0,
        even: &["x0", "y0"],
        odd: &["x1", "y1", "z1"],
        brackets: &[
            ("x0", "y1", &[("x1", Coeff::One)]),
            ("y1", "y1", &[("y0", Coeff::One)]),
            ("z1", "z1", &[("y0", Coeff::One)]),
        ],
        multiplier_total: 4,
        citation: "Theorem 4.6, \"dim M(L_{2,3}^1) = 4\"",
        tag: "thm4.6",
    },
    NamedSpec {
        key: "L_{2,3}^{a,b}",
        arity: 2,
        even: &["x0", "y0"],
        odd: &["x1", "y1", "z1"],
        brackets: &[
            ("x1", "x1", &[("x0", Coeff::One)]),
            ("y1", "y1", &[("y0", Coeff::One)]),
            ("z1", "z1", &[("x0", Coeff::Param(0)), ("y0", Coeff::Param(1))]),
        ],
        multiplier_total: 4,
        citation: "Theorem 4.6, \"dim M(L_{2,3}^{a,b}) = 4\"",
        tag: "thm4.6",
    },
    NamedSpec {
        key: "L_{2,3}^{d,g}",
        arity: 2,
        even: &["x0", "y0"],
        odd: &["x1", "y1", "z1"],
        brackets: &[
            ("x1", "x1", &[("x0", Coeff::One)]),
            ("y1", "y1", &[("y0", Coeff::One)]),
            ("x1", "z1", &[("x0", Coeff::Param(0)), ("y0", Coeff::Param(1))]),
        ],
        multiplier_total: 4,
        citation: "Theorem 4.6, \"dim M(L_{2,3}^{d,g}) = 4\"",
        tag: "thm4.6",
    },
];

/// Look up one of the fixed low-dimensional algebras by key.  Parameterized
/// families take exactly two rational parameters; all others take none.
pub fn named(key: &str, params: &[Rational]) -> Result<CatalogEntry, CatalogError> {
    let spec = NAMED
        .iter()
        .find(|s| s.key == key)
        .ok_or_else(|| CatalogError::UnknownKey(key.to_string()))?;
    if params.len() != spec.arity {
        return Err(CatalogError::WrongArity {
            key: key.to_string(),
            expected: spec.arity,
            got: params.len(),
        });
    }
    let mut b = AlgebraBuilder::new(key);
    let mut handles = HashMap::new();
    for &name in spec.even {
        handles.insert(name, b.even(name));
    }
    for &name in spec.odd {
        handles.insert(name, b.odd(name));
    }
    for &(left, right, terms) in spec.brackets {
        let value: Vec<_> = terms
            .iter()
            .map(|&(target, coeff)| {
                let c = match coeff {
                    Coeff::One => rat(1, 1),
                    Coeff::Param(i) => params[i].clone(),
                };
                (handles[target], c)
            })
            .collect();
        b.bracket(handles[left], handles[right], &value);
    }
    let mut entry = CatalogEntry {
        key: key.to_string(),
        params: params.to_vec(),
        algebra: b.build().expect("named tables are consistent"),
        expected: Some(ExpectedValues {
            multiplier_total: spec.multiplier_total,
            multiplier_graded: None,
            s_value: None,
            citation: spec.citation.to_string(),
            tag: spec.tag,
        }),
    };
    let display = entry.display_key();
    entry.algebra.set_name(display);
    Ok(entry)
}

fn plain_entry(
    algebra: LieSuperAlgebra,
    multiplier_total: usize,
    multiplier_graded: Option<GradedDim>,
    s_value: Option<i64>,
    citation: &str,
    tag: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        key: algebra.name().to_string(),
        params: Vec::new(),
        algebra,
        expected: Some(ExpectedValues {
            multiplier_total,
            multiplier_graded,
            s_value,
            citation: citation.to_string(),
            tag,
        }),
    }
}

fn named_entry(key: &str, params: &[Rational], s_value: Option<i64>) -> CatalogEntry {
    let mut entry = named(key, params).expect("catalog keys are known");
    if let Some(exp) = entry.expected.as_mut() {
        exp.s_value = s_value;
    }
    entry
}

/// The fixed verification catalog: every algebra with a published multiplier
/// total, in a deterministic order.  Heisenberg instances first, then the
/// direct sums from the multiplier tables, then the named low-dimensional
/// algebras with representative parameters.
pub fn all_entries() -> Vec<CatalogEntry> {
    let h = |m, n| heisenberg_even(m, n).expect("nonzero Heisenberg size");
    let hodd = |n| heisenberg_odd(n).expect("nonzero Heisenberg size");
    let sum = LieSuperAlgebra::direct_sum;
    let g = |e, o| Some(GradedDim::new(e, o));

    let mut entries = vec![
        plain_entry(h(0, 1), 0, None, None, "Theorem 4.1, \"dim M(H(0,1)) = 0\"", "thm4.1"),
        plain_entry(h(1, 0), 2, None, Some(0), "Theorem 4.1, \"dim M(H(1,0)) = 2\"; Section 1, s = 0 iff H(1,0)+A(m-3|n)", "thm4.1"),
        plain_entry(h(0, 2), 2, None, Some(2), "Theorem 4.1, \"dim M(H(0,2)) = 2\"", "thm4.1"),
        plain_entry(h(1, 1), 3, None, Some(2), "Theorem 4.3, \"dim M(H(1,1)) = 3\"", "thm4.3"),
        plain_entry(h(0, 3), 5, None, Some(2), "Theorem 4.3, \"dim M(H(0,3)) = 5\"", "thm4.3"),
        plain_entry(h(2, 0), 5, None, Some(2), "Theorem 3.5, \"2m^2 - m - 1 + 2mn + n(n+1)/2\" at (2,0)", "thm3.5"),
        plain_entry(h(1, 2), 7, None, None, "Theorem 3.5, \"2m^2 - m - 1 + 2mn + n(n+1)/2\" at (1,2)", "thm3.5"),
        plain_entry(hodd(1), 2, g(1, 1), Some(2), "Theorem 4.1, \"dim M(H_1) = 2\"; graded split from Theorem 3.7 proof, \"basis of W is {w, eta}\"", "thm4.1"),
        plain_entry(hodd(2), 7, g(4, 3), None, "Theorem 3.7, \"dim M(H_n) = 2n^2 - 1\"; proof, \"dim W = (n^2 | n^2 - 1)\"", "thm3.7"),
        plain_entry(hodd(3), 17, g(9, 8), None, "Theorem 3.7, \"dim M(H_n) = 2n^2 - 1\"; proof, \"dim W = (n^2 | n^2 - 1)\"", "thm3.7"),
        plain_entry(sum(&h(0, 1), &abelian(1, 0)), 1, None, Some(2), "Theorem 4.1, \"dim M(H(0,1)+A(1|0)) = 1\"", "thm4.1"),
        plain_entry(sum(&h(0, 1), &abelian(0, 1)), 2, None, Some(2), "Theorem 4.1, \"dim M(H(0,1)+A(0|1)) = 2\"", "thm4.1"),
        plain_entry(sum(&h(1, 0), &abelian(1, 0)), 4, None, Some(0), "Theorem 4.2, \"dim M(H(1,0)+A(1|0)) = 4\"; Section 1, s = 0 iff H(1,0)+A(m-3|n)", "thm4.2"),
        plain_entry(sum(&h(1, 0), &abelian(0, 1)), 5, None, Some(0), "Theorem 4.2, \"dim M(H(1,0)+A(0|1)) = 5\"; Section 1, s = 0 iff H(1,0)+A(m-3|n)", "thm4.2"),
        plain_entry(sum(&h(0, 2), &abelian(1, 0)), 4, None, None, "Theorem 4.2, \"dim M(H(0,2)+A(1|0)) = 4\"", "thm4.2"),
        plain_entry(sum(&hodd(1), &abelian(1, 0)), 4, None, Some(2), "Theorem 4.2, \"dim M(H_1+A(1|0)) = 4\"", "thm4.2"),
    ];

    let l502 = named("L_{5,0}^2", &[]).expect("catalog keys are known").algebra;
    entries.push(plain_entry(
        sum(&l502, &abelian(1, 0)),
        9,
        None,
        Some(2),
        "Theorem 3.4 additivity from Theorem 4.6, \"dim M(L_{5,0}^2) = 6\"; s-value from Theorem 4.10 list",
        "thm3.4",
    ));
    entries.push(plain_entry(
        sum(&l502, &abelian(0, 1)),
        10,
        None,
        Some(2),
        "Theorem 3.4 additivity from Theorem 4.6, \"dim M(L_{5,0}^2) = 6\"; s-value from Theorem 4.10 list",
        "thm3.4",
    ));

    let half = rat(1, 2);
    let one = rat(1, 1);
    entries.push(named_entry("L_{2,2}^1", &[], None));
    entries.push(named_entry("L_{2,2}^{a,b}", &[half.clone(), half], None));
    entries.push(named_entry("L_{2,2}^{a,b}", &[one.clone(), one.clone()], None));
    entries.push(named_entry("L_{2,2}^2", &[], None));
    entries.push(named_entry("L_{1,3}^1", &[], None));
    entries.push(named_entry("L_{4,0}", &[], Some(2)));
    entries.push(named_entry("L_{5,0}^1", &[], None));
    entries.push(named_entry("L_{4,1}^1", &[], None));
    entries.push(named_entry("L_{4,1}^2", &[], None));
    entries.push(named_entry("L_{5,0}^2", &[], Some(1)));
    entries.push(named_entry("L_{3,2}^1", &[], None));
    entries.push(named_entry("L_{1,4}^1", &[], None));
    entries.push(named_entry("L_{2,3}^1", &[], None));
    entries.push(named_entry("L_{2,3}^{a,b}", &[one.clone(), one.clone()], None));
    entries.push(named_entry("L_{2,3}^{d,g}", &[one.clone(), one], None));
    entries
}

/// Resolve a CLI key: summands joined by `+` (or the unicode direct-sum
/// sign), each one of `H(m,n)`, `H_n`, `A(m|n)`, or a named key with an
/// optional `@p1,p2` rational parameter suffix (parameterized families
/// default to parameters (1,1)).  Whitespace is ignored.
pub fn resolve_key(text: &str) -> Result<LieSuperAlgebra, CatalogError> {
    let bad = |reason: &str| CatalogError::BadKey {
        key: text.to_string(),
        reason: reason.to_string(),
    };
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(bad("empty key"));
    }
    let mut parts = Vec::new();
    for term in cleaned.split(['+', '\u{2295}']) {
        if term.is_empty() {
            return Err(bad("empty summand"));
        }
        parts.push(resolve_term(term)?);
    }
    let total: usize = parts.iter().map(|a| a.total_dim()).sum();
    if total > MAX_KEY_DIM {
        return Err(CatalogError::TooLarge {
            key: cleaned,
            dim: total,
        });
    }
    let mut iter = parts.into_iter();
    let mut acc = iter.next().expect("at least one summand");
    for b in iter {
        acc = LieSuperAlgebra::direct_sum(&acc, &b);
    }
    Ok(acc)
}

fn resolve_term(term: &str) -> Result<LieSuperAlgebra, CatalogError> {
    let bad = |reason: String| CatalogError::BadKey {
        key: term.to_string(),
        reason,
    };
    let (head, param_text) = match term.split_once('@') {
        Some((h, p)) => (h, Some(p)),
        None => (term, None),
    };
    let params: Vec<Rational> = match param_text {
        Some(p) => p
            .split(',')
            .map(|s| {
                parse_rational(s).map_err(|e| bad(format!("bad parameter `{s}`: {e}")))
            })
            .collect::<Result<_, _>>()?,
        None => Vec::new(),
    };

    let count = |s: &str| -> Result<usize, CatalogError> {
        let v: usize = s
            .parse()
            .map_err(|_| bad(format!("`{s}` is not a count")))?;
        if v > MAX_KEY_DIM {
            return Err(CatalogError::TooLarge {
                key: term.to_string(),
                dim: v,
            });
        }
        Ok(v)
    };
    let no_params = |family: &str| -> Result<(), CatalogError> {
        if params.is_empty() {
            Ok(())
        } else {
            Err(CatalogError::WrongArity {
                key: family.to_string(),
                expected: 0,
                got: params.len(),
            })
        }
    };

    if let Some(rest) = head.strip_prefix("H(") {
        no_params(head)?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| bad("missing `)`".to_string()))?;
        let (ms, ns) = inner
            .split_once(',')
            .ok_or_else(|| bad("expected `H(m,n)`".to_string()))?;
        let (m, n) = (count(ms)?, count(ns)?);
        if 2 * m + 1 + n > MAX_KEY_DIM {
            return Err(CatalogError::TooLarge {
                key: term.to_string(),
                dim: 2 * m + 1 + n,
            });
        }
        return heisenberg_even(m, n);
    }
    if let Some(rest) = head.strip_prefix("H_") {
        no_params(head)?;
        let n = count(rest)?;
        if 2 * n + 1 > MAX_KEY_DIM {
            return Err(CatalogError::TooLarge {
                key: term.to_string(),
                dim: 2 * n + 1,
            });
        }
        return heisenberg_odd(n);
    }
    if let Some(rest) = head.strip_prefix("A(") {
        no_params(head)?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| bad("missing `)`".to_string()))?;
        let (ms, ns) = inner
            .split_once('|')
            .ok_or_else(|| bad("expected `A(m|n)`".to_string()))?;
        let (m, n) = (count(ms)?, count(ns)?);
        if m + n > MAX_KEY_DIM {
            return Err(CatalogError::TooLarge {
                key: term.to_string(),
                dim: m + n,
            });
        }
        return Ok(abelian(m, n));
    }

    let spec = NAMED
        .iter()
        .find(|s| s.key == head)
        .ok_or_else(|| CatalogError::UnknownKey(head.to_string()))?;
    let params = if params.is_empty() && spec.arity == 2 {
        vec![rat(1, 1), rat(1, 1)]
    } else {
        params
    };
    Ok(named(head, &params)?.algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::superalgebra::{Subspace, SuperVector};

    #[test]
    fn heisenberg_even_shapes() {
        let h = heisenberg_even(2, 3).unwrap();
        assert_eq!(h.dims(), GradedDim::new(5, 3));
        assert_eq!(h.name(), "H(2,3)");
        assert_eq!(h.center().dims(), GradedDim::new(1, 0));
        assert_eq!(h.derived_subalgebra().dims(), GradedDim::new(1, 0));
        assert!(h.center().contains(&SuperVector::basis(8, h.basis_index("z").unwrap())));

        let tiny = heisenberg_even(0, 1).unwrap();
        assert_eq!(tiny.dims(), GradedDim::new(1, 1));
        assert!(matches!(heisenberg_even(0, 0), Err(CatalogError::EmptyHeisenberg)));
    }

    #[test]
    fn heisenberg_odd_shapes() {
        let h = heisenberg_odd(3).unwrap();
        assert_eq!(h.dims(), GradedDim::new(3, 4));
        assert_eq!(h.center().dims(), GradedDim::new(0, 1));
        assert_eq!(heisenberg_odd(2).unwrap().derived_subalgebra().dims(), GradedDim::new(0, 1));
        assert!(matches!(heisenberg_odd(0), Err(CatalogError::EmptyHeisenberg)));
    }

    #[test]
    fn abelian_shapes() {
        let a = abelian(5, 5);
        assert_eq!(a.dims(), GradedDim::new(5, 5));
        assert!(a.is_abelian());
        assert_eq!(a.derived_subalgebra().dims(), GradedDim::new(0, 0));
        assert_eq!(abelian(0, 0).total_dim(), 0);
        assert!(abelian(2, 1).is_nilpotent());
    }

    #[test]
    fn named_rejects_bad_requests() {
        assert!(matches!(named("L_{9,9}", &[]), Err(CatalogError::UnknownKey(_))));
        assert!(matches!(
            named("L_{2,2}^{a,b}", &[]),
            Err(CatalogError::WrongArity { expected: 2, got: 0, .. })
        ));
        assert!(matches!(
            named("L_{4,0}", &[rat(1, 1)]),
            Err(CatalogError::WrongArity { expected: 0, got: 1, .. })
        ));
    }

    #[test]
    fn named_display_keys_carry_parameters() {
        let e = named("L_{2,2}^{a,b}", &[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(e.display_key(), "L_{2,2}^{a,b}@1/2,1/2");
        assert_eq!(e.algebra.name(), "L_{2,2}^{a,b}@1/2,1/2");
        assert_eq!(named("L_{4,0}", &[]).unwrap().display_key(), "L_{4,0}");
    }

    #[test]
    fn golden_series_for_named_algebras() {
        let l40 = named("L_{4,0}", &[]).unwrap().algebra;
        let dims: Vec<_> = l40.lower_central_series().iter().map(|s| s.dims()).collect();
        assert_eq!(
            dims,
            vec![
                GradedDim::new(4, 0),
                GradedDim::new(2, 0),
                GradedDim::new(1, 0),
                GradedDim::new(0, 0)
            ]
        );
        assert_eq!(l40.nilpotency_class().unwrap(), 3);

        let l501 = named("L_{5,0}^1", &[]).unwrap().algebra;
        assert_eq!(l501.upper_central_series()[1].dims(), GradedDim::new(1, 0));

        let l502 = named("L_{5,0}^2", &[]).unwrap().algebra;
        assert_eq!(l502.derived_subalgebra().dims(), GradedDim::new(2, 0));

        let l222 = named("L_{2,2}^2", &[]).unwrap().algebra;
        assert_eq!(l222.center().dims(), GradedDim::new(1, 1));
    }

    #[test]
    fn quotient_of_l502_by_its_extra_center_line_is_heisenberg_plus_line() {
        let l502 = named("L_{5,0}^2", &[]).unwrap().algebra;
        let v0 = SuperVector::basis(5, l502.basis_index("v0").unwrap());
        let line = Subspace::span_graded(l502.dims(), &[v0]);
        let q = l502.quotient(&line).unwrap();
        let model = LieSuperAlgebra::direct_sum(&abelian(1, 0), &heisenberg_even(1, 0).unwrap());
        assert!(q.structure_equal(&model));
    }

    #[test]
    fn all_entries_are_valid_nilpotent_and_cited() {
        let entries = all_entries();
        assert_eq!(entries.len(), 33);
        assert_eq!(entries[0].key, "H(0,1)");
        let mut seen = std::collections::BTreeSet::new();
        for e in &entries {
            assert!(e.algebra.validate().is_ok(), "{} fails validation", e.display_key());
            assert!(e.algebra.is_nilpotent(), "{} is not nilpotent", e.display_key());
            let exp = e.expected.as_ref().expect("catalog entries carry expected values");
            assert!(!exp.citation.is_empty());
            assert!(seen.insert(e.display_key()), "duplicate key {}", e.display_key());
        }
        let h01a01 = entries.iter().find(|e| e.key == "H(0,1)+A(0|1)").unwrap();
        assert_eq!(h01a01.expected.as_ref().unwrap().multiplier_total, 2);
        let count_s = entries.iter().filter(|e| e.expected.as_ref().unwrap().s_value.is_some()).count();
        assert_eq!(count_s, 15);
    }

    #[test]
    fn every_entry_key_resolves_back_to_the_same_structure() {
        for e in all_entries() {
            let resolved = resolve_key(&e.display_key()).unwrap();
            assert!(
                resolved.structure_equal(&e.algebra),
                "{} does not round-trip through the resolver",
                e.display_key()
            );
        }
    }

    #[test]
    fn resolver_handles_sums_params_and_aliases() {
        let sum = resolve_key("H(1,0)+A(0|1)").unwrap();
        let model = LieSuperAlgebra::direct_sum(&heisenberg_even(1, 0).unwrap(), &abelian(0, 1));
        assert!(sum.structure_equal(&model));
        assert_eq!(sum.name(), "H(1,0)+A(0|1)");

        let alias = resolve_key("H(1,0) \u{2295} A(0|1)").unwrap();
        assert!(alias.structure_equal(&model));

        let defaulted = resolve_key("L_{2,2}^{a,b}").unwrap();
        let explicit = named("L_{2,2}^{a,b}", &[rat(1, 1), rat(1, 1)]).unwrap().algebra;
        assert!(defaulted.structure_equal(&explicit));

        let custom = resolve_key("L_{2,3}^{d,g}@-2,1/3").unwrap();
        let model = named("L_{2,3}^{d,g}", &[rat(-2, 1), rat(1, 3)]).unwrap().algebra;
        assert!(custom.structure_equal(&model));

        assert_eq!(resolve_key("H_2").unwrap().name(), "H_2");
    }

    #[test]
    fn resolver_rejects_malformed_keys() {
        assert!(matches!(resolve_key("H(0,0)"), Err(CatalogError::EmptyHeisenberg)));
        assert!(matches!(resolve_key("Q(1)"), Err(CatalogError::UnknownKey(_))));
        assert!(matches!(resolve_key("A(100|0)"), Err(CatalogError::TooLarge { .. })));
        assert!(matches!(resolve_key("A(30|0)+A(40|0)"), Err(CatalogError::TooLarge { .. })));
        assert!(matches!(resolve_key("L_{4,0}@1,2"), Err(CatalogError::WrongArity { .. })));
        assert!(matches!(resolve_key("H(1,0)@1"), Err(CatalogError::WrongArity { .. })));
        assert!(matches!(resolve_key(""), Err(CatalogError::BadKey { .. })));
        assert!(matches!(resolve_key("H(1,0)+"), Err(CatalogError::BadKey { .. })));
        assert!(matches!(resolve_key("A(1|0)@"), Err(CatalogError::BadKey { .. })));
        assert!(matches!(resolve_key("H(1;0)"), Err(CatalogError::BadKey { .. })));
        assert!(matches!(resolve_key("A(x|0)"), Err(CatalogError::BadKey { .. })));
        assert!(matches!(resolve_key("H_q"), Err(CatalogError::BadKey { .. })));
    }
}
