//! Exact rational linear algebra: dense matrices over arbitrary-precision
//! rationals with reduced row echelon form, rank, and canonical nullspace
//! bases. Everything here is deterministic; there are no tolerances anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator; zero is 0/1.
pub type Rational = num_rational::BigRational;

/// Shorthand for small constants, mostly in tests and catalog tables.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses "p" or "p/q" with optional signs. Never panics, unlike the
/// `FromStr` impl on `Ratio`, which aborts on a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let t = s.trim();
    let (ns, ds) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let malformed = || RationalParseError::Malformed(s.to_string());
    let n: BigInt = ns.parse().map_err(|_| malformed())?;
    let d: BigInt = ds.parse().map_err(|_| malformed())?;
    if d.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Dense row-major matrix over `Rational`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Matrix product. Skips zero entries of `self`, which keeps the
    /// boundary-map composites cheap; those matrices are very sparse.
    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let cur = out.at(r, c).clone();
                        out.set(r, c, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.at(r, c);
                if !v.is_zero() {
                    out.set(c, r, v.clone());
                }
            }
        }
        out
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RationalMatrix {
        let mut out = RationalMatrix::zero(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                out.set(ri, ci, self.at(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form plus the pivot column list. The result is the
    /// unique RREF: every pivot is 1, pivot columns are otherwise zero, zero
    /// rows sit at the bottom.
    pub fn rref_with_pivots(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let pivot = m.at(row, col).clone();
            if !pivot.is_one() {
                let inv = pivot.recip();
                for c in col..m.cols {
                    if !m.at(row, c).is_zero() {
                        let v = m.at(row, c) * &inv;
                        m.set(row, c, v);
                    }
                }
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone();
                // the pivot row is zero left of `col`, so start there
                for c in col..m.cols {
                    let pv = m.at(row, c);
                    if !pv.is_zero() {
                        let v = m.at(r, c) - &f * pv;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> RationalMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Canonical nullspace basis: one vector per free column, in increasing
    /// free-column order, with a unit entry at that free column, the forced
    /// entries at pivot columns, and zeros elsewhere.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref_with_pivots();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.at(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduces `v` in place modulo the row space of an RREF matrix, using its
/// pivot columns. Afterwards `v` is zero at every pivot column; `v` was in
/// the row space iff the result is the zero vector.
pub fn reduce_mod_rows(rref: &RationalMatrix, pivots: &[usize], v: &mut [Rational]) {
    assert_eq!(rref.cols(), v.len(), "dimension mismatch in reduce_mod_rows");
    for (prow, &pcol) in pivots.iter().enumerate() {
        if v[pcol].is_zero() {
            continue;
        }
        let f = v[pcol].clone();
        for c in 0..rref.cols() {
            let rv = rref.at(prow, c);
            if !rv.is_zero() {
                v[c] = &v[c] - &f * rv;
            }
        }
    }
}

/// Formats a rational using a signed coefficient convention for human
/// output, e.g. "-1/2".
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True if the rational is a negative number. Used by display code to choose
/// between "+ c" and "- c".
pub fn is_negative(q: &Rational) -> bool {
    q.numer().is_negative()
}
