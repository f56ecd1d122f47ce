//! Finite-dimensional Lie superalgebras over the rationals, presented by
//! structure constants on a homogeneous basis.
//!
//! The global basis order is always: all even vectors, then all odd vectors.
//! The structure map stores one orientation per pair (i <= j); the other
//! orientation is derived from graded skew-symmetry [x,y] = -(-1)^{|x||y|}[y,x].
//! For an even basis vector e the bracket [e,e] is forced to zero and is
//! rejected at construction; for odd f the diagonal [f,f] is meaningful data.

use crate::linalg::{reduce_mod_rows, Rational, RationalMatrix};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Parity of a product/bracket of two homogeneous elements.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Sign picked up when flipping a bracket: [x,y] = flip_sign * [y,x].
/// +1 exactly when both arguments are odd.
pub(crate) fn flip_sign(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        1
    } else {
        -1
    }
}

/// Sign (-1)^{|a||b|}: -1 exactly when both are odd.
pub(crate) fn parity_sign(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// Dimension of a graded vector space, printed as "(even | odd)".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub fn new(even: usize, odd: usize) -> Self {
        GradedDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.even, self.odd)
    }
}

/// A named homogeneous basis vector. `index` is its global position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    pub name: String,
    pub parity: Parity,
    pub index: usize,
}

/// A vector in the algebra, as coefficients over the global basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperVector(Vec<Rational>);

impl SuperVector {
    pub fn zero(len: usize) -> Self {
        SuperVector(vec![Rational::zero(); len])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        SuperVector(coeffs)
    }

    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[i] = Rational::from_integer(1.into());
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn set(&mut self, i: usize, v: Rational) {
        self.0[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add_scaled(&mut self, other: &SuperVector, factor: &Rational) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.nonzero() {
            self.0[i] = &self.0[i] + factor * c;
        }
    }

    pub fn scaled(&self, factor: &Rational) -> SuperVector {
        SuperVector(self.0.iter().map(|c| c * factor).collect())
    }

    /// Splits into (even part, odd part) at the given even-block length.
    pub fn split_parity(&self, even_len: usize) -> (SuperVector, SuperVector) {
        let mut even = Self::zero(self.len());
        let mut odd = Self::zero(self.len());
        for (i, c) in self.nonzero() {
            if i < even_len {
                even.0[i] = c.clone();
            } else {
                odd.0[i] = c.clone();
            }
        }
        (even, odd)
    }

    /// The parity of a nonzero homogeneous vector; None if mixed or zero.
    pub fn homogeneous_parity(&self, even_len: usize) -> Option<Parity> {
        let has_even = self.0[..even_len.min(self.len())].iter().any(|c| !c.is_zero());
        let has_odd = self.0[even_len.min(self.len())..].iter().any(|c| !c.is_zero());
        match (has_even, has_odd) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("bracket index {index} out of bounds for dimension {dim}")]
    IndexOutOfBounds { index: usize, dim: usize },
    #[error("coefficient vector for [{left},{right}] has length {got}, expected {expected}")]
    CoefficientLength {
        left: String,
        right: String,
        expected: usize,
        got: usize,
    },
    #[error("nonzero self-bracket [{0},{0}] on an even basis vector")]
    EvenSelfBracket(String),
    #[error("conflicting values given for the bracket [{left},{right}]")]
    InconsistentPair { left: String, right: String },
    #[error("spanning vector {0} mixes parities; subspaces need homogeneous bases")]
    NonHomogeneous(String),
    #[error("subspace is not an ideal: [{member}, {against}] leaves it")]
    NotAnIdeal { member: String, against: String },
    #[error("algebra `{0}` is not nilpotent")]
    NotNilpotent(String),
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Grading,
    Skew,
    Jacobi,
    Format,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Grading => write!(f, "grading"),
            ViolationKind::Skew => write!(f, "skew"),
            ViolationKind::Jacobi => write!(f, "jacobi"),
            ViolationKind::Format => write!(f, "format"),
        }
    }
}

/// One failed axiom, with the basis vectors that witness it and, for Jacobi
/// failures, the nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<String>,
    pub residual: Option<SuperVector>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A Lie superalgebra given by structure constants.
#[derive(Debug, Clone)]
pub struct LieSuperAlgebra {
    name: String,
    basis: Vec<BasisVector>,
    dims: GradedDim,
    // canonical orientation only (i <= j), zero values never stored
    brackets: BTreeMap<(usize, usize), SuperVector>,
}

impl LieSuperAlgebra {
    /// Strict constructor: format checks plus the even-diagonal rule.
    /// Grading and Jacobi are deliberately not checked here; `validate`
    /// reports on them so that broken input files can be diagnosed.
    pub fn new(
        name: impl Into<String>,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        brackets: Vec<((usize, usize), Vec<(usize, Rational)>)>,
    ) -> Result<Self, AlgebraError> {
        Self::build(name, even_names, odd_names, brackets, true)
    }

    /// Permissive constructor for the file parser: keeps nonzero even
    /// self-brackets so `validate` can report them as skew violations.
    pub(crate) fn new_permissive(
        name: impl Into<String>,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        brackets: Vec<((usize, usize), Vec<(usize, Rational)>)>,
    ) -> Result<Self, AlgebraError> {
        Self::build(name, even_names, odd_names, brackets, false)
    }

    fn build(
        name: impl Into<String>,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        brackets: Vec<((usize, usize), Vec<(usize, Rational)>)>,
        reject_even_diagonal: bool,
    ) -> Result<Self, AlgebraError> {
        let dims = GradedDim::new(even_names.len(), odd_names.len());
        let total = dims.total();
        let mut seen = std::collections::HashSet::new();
        let mut basis = Vec::with_capacity(total);
        for (index, (name, parity)) in even_names
            .into_iter()
            .map(|n| (n, Parity::Even))
            .chain(odd_names.into_iter().map(|n| (n, Parity::Odd)))
            .enumerate()
        {
            if !seen.insert(name.clone()) {
                return Err(AlgebraError::DuplicateBasisName(name));
            }
            basis.push(BasisVector { name, parity, index });
        }

        let mut map: BTreeMap<(usize, usize), SuperVector> = BTreeMap::new();
        for ((i, j), sparse) in brackets {
            for &(k, _) in &sparse {
                if k >= total {
                    return Err(AlgebraError::IndexOutOfBounds { index: k, dim: total });
                }
            }
            if i >= total || j >= total {
                return Err(AlgebraError::IndexOutOfBounds {
                    index: i.max(j),
                    dim: total,
                });
            }
            let mut value = SuperVector::zero(total);
            for (k, c) in sparse {
                value.set(k, value.coeff(k) + c);
            }
            // normalize to the stored orientation
            let (key, value) = if i <= j {
                ((i, j), value)
            } else {
                let s = flip_sign(basis[i].parity, basis[j].parity);
                ((j, i), value.scaled(&crate::linalg::rat(s, 1)))
            };
            if reject_even_diagonal
                && key.0 == key.1
                && basis[key.0].parity == Parity::Even
                && !value.is_zero()
            {
                return Err(AlgebraError::EvenSelfBracket(basis[key.0].name.clone()));
            }
            match map.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(value);
                }
                std::collections::btree_map::Entry::Occupied(e) => {
                    if *e.get() != value {
                        return Err(AlgebraError::InconsistentPair {
                            left: basis[key.0].name.clone(),
                            right: basis[key.1].name.clone(),
                        });
                    }
                }
            }
        }
        map.retain(|_, v| !v.is_zero());

        Ok(LieSuperAlgebra {
            name: name.into(),
            basis,
            dims,
            brackets: map,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dims(&self) -> GradedDim {
        self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    pub fn even_dim(&self) -> usize {
        self.dims.even
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Stored structure constants, canonical orientation only.
    pub fn stored_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SuperVector)> {
        self.brackets.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Bracket of two basis vectors, either orientation.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SuperVector {
        let total = self.total_dim();
        if i <= j {
            if i == j && self.parity(i) == Parity::Even {
                return SuperVector::zero(total);
            }
            self.brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| SuperVector::zero(total))
        } else {
            let s = flip_sign(self.parity(i), self.parity(j));
            match self.brackets.get(&(j, i)) {
                Some(v) => v.scaled(&crate::linalg::rat(s, 1)),
                None => SuperVector::zero(total),
            }
        }
    }

    /// Bilinear extension of the bracket to arbitrary vectors.
    pub fn bracket(&self, u: &SuperVector, v: &SuperVector) -> SuperVector {
        assert_eq!(u.len(), self.total_dim(), "left operand dimension");
        assert_eq!(v.len(), self.total_dim(), "right operand dimension");
        let mut out = SuperVector::zero(self.total_dim());
        for (i, a) in u.nonzero() {
            for (j, b) in v.nonzero() {
                let w = self.bracket_basis(i, j);
                if !w.is_zero() {
                    out.add_scaled(&w, &(a * b));
                }
            }
        }
        out
    }

    /// Graded Jacobi residual
    /// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
    /// on basis vectors; zero for every triple iff the algebra is Lie.
    pub fn jacobi_residual(&self, x: usize, y: usize, z: usize) -> SuperVector {
        let (px, py, pz) = (self.parity(x), self.parity(y), self.parity(z));
        let mut out = SuperVector::zero(self.total_dim());
        let terms = [
            (parity_sign(px, pz), x, (y, z)),
            (parity_sign(py, px), y, (z, x)),
            (parity_sign(pz, py), z, (x, y)),
        ];
        for (sign, outer, (a, b)) in terms {
            let inner = self.bracket_basis(a, b);
            for (k, c) in inner.nonzero() {
                let w = self.bracket_basis(outer, k);
                if !w.is_zero() {
                    out.add_scaled(&w, &(c * crate::linalg::rat(sign, 1)));
                }
            }
        }
        out
    }

    /// Checks grading of every stored bracket, vanishing of even
    /// self-brackets, and the graded Jacobi identity on all basis triples.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (&(i, j), v) in &self.brackets {
            let expected = self.parity(i).combine(self.parity(j));
            if v.homogeneous_parity(self.dims.even) != Some(expected) {
                violations.push(Violation {
                    kind: ViolationKind::Grading,
                    witness: vec![self.basis_name(i).into(), self.basis_name(j).into()],
                    residual: None,
                });
            }
            if i == j && self.parity(i) == Parity::Even && !v.is_zero() {
                violations.push(Violation {
                    kind: ViolationKind::Skew,
                    witness: vec![self.basis_name(i).into(), self.basis_name(j).into()],
                    residual: None,
                });
            }
        }
        let d = self.total_dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let r = self.jacobi_residual(x, y, z);
                    if !r.is_zero() {
                        violations.push(Violation {
                            kind: ViolationKind::Jacobi,
                            witness: vec![
                                self.basis_name(x).into(),
                                self.basis_name(y).into(),
                                self.basis_name(z).into(),
                            ],
                            residual: Some(r),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Formats a vector as a linear combination of basis names.
    pub fn format_vector(&self, v: &SuperVector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in v.nonzero() {
            let neg = crate::linalg::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if num_traits::One::is_one(&abs) {
                out.push_str(self.basis_name(i));
            } else {
                out.push_str(&format!(
                    "{}*{}",
                    crate::linalg::format_rational(&abs),
                    self.basis_name(i)
                ));
            }
        }
        out
    }

    /// Span of all brackets. Homogeneous by construction for graded input;
    /// mixed values are split so the result is always a graded subspace.
    pub fn derived_subalgebra(&self) -> Subspace {
        let vs: Vec<SuperVector> = self.brackets.values().cloned().collect();
        Subspace::span_graded(self.dims, &vs)
    }

    /// Elements bracketing to zero with the whole algebra. Computed one
    /// parity block at a time so the basis is homogeneous.
    pub fn center(&self) -> Subspace {
        let d = self.total_dim();
        let mut blocks = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            let cols: Vec<usize> = (0..d).filter(|&i| self.parity(i) == parity).collect();
            // rows: for every basis vector b_j, the coefficients of [b_i, b_j]
            let mut m = RationalMatrix::zero(d * d, cols.len());
            for j in 0..d {
                for (ci, &i) in cols.iter().enumerate() {
                    let v = self.bracket_basis(i, j);
                    for (k, c) in v.nonzero() {
                        m.set(j * d + k, ci, c.clone());
                    }
                }
            }
            let mut vectors = Vec::new();
            for ns in m.nullspace_basis() {
                let mut v = SuperVector::zero(d);
                for (ci, &i) in cols.iter().enumerate() {
                    v.set(i, ns[ci].clone());
                }
                vectors.push(v);
            }
            blocks.push(vectors);
        }
        let all: Vec<SuperVector> = blocks.into_iter().flatten().collect();
        Subspace::span_graded(self.dims, &all)
    }

    /// Span of [S, L].
    fn bracket_with_all(&self, s: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for b in s.basis_vectors() {
            for j in 0..self.total_dim() {
                let w = self.bracket(&b, &SuperVector::basis(self.total_dim(), j));
                if !w.is_zero() {
                    vs.push(w);
                }
            }
        }
        Subspace::span_graded(self.dims, &vs)
    }

    /// Descending series L = C0, C{k+1} = [Ck, L], listed until it
    /// stabilizes. Ends with the zero subspace iff the algebra is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dims)];
        loop {
            let next = self.bracket_with_all(series.last().unwrap());
            if next.dims() == series.last().unwrap().dims() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Ascending series Z0 = 0, Z{i+1} = preimage of the center of L/Zi,
    /// listed until it stabilizes.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::zero(self.dims)];
        loop {
            let current = series.last().unwrap();
            let (q, section) = self
                .quotient_with_section(current)
                .expect("terms of the upper central series are ideals");
            let qc = q.center();
            let mut vectors = current.basis_vectors();
            for c in qc.basis_vectors() {
                let mut lift = SuperVector::zero(self.total_dim());
                for (k, coeff) in c.nonzero() {
                    lift.set(section[k], coeff.clone());
                }
                vectors.push(lift);
            }
            let next = Subspace::span_graded(self.dims, &vectors);
            if next.dims() == current.dims() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .map(|s| s.total_dim() == 0)
            .unwrap_or(false)
    }

    /// Least k with C^k = 0.
    pub fn nilpotency_class(&self) -> Result<usize, AlgebraError> {
        let series = self.lower_central_series();
        if series.last().unwrap().total_dim() != 0 {
            return Err(AlgebraError::NotNilpotent(self.name.clone()));
        }
        Ok(series.len() - 1)
    }

    /// Quotient by a graded ideal. The new basis consists of the original
    /// basis vectors at the non-pivot coordinates of the ideal, names kept.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieSuperAlgebra, AlgebraError> {
        self.quotient_with_section(ideal).map(|(q, _)| q)
    }

    /// Like `quotient`, also returning for each new basis vector the global
    /// index of the original basis vector representing it.
    pub fn quotient_with_section(
        &self,
        ideal: &Subspace,
    ) -> Result<(LieSuperAlgebra, Vec<usize>), AlgebraError> {
        let d = self.total_dim();
        if ideal.ambient_total() != d {
            return Err(AlgebraError::DimensionMismatch {
                expected: d,
                got: ideal.ambient_total(),
            });
        }
        for b in ideal.basis_vectors() {
            for j in 0..d {
                let w = self.bracket(&b, &SuperVector::basis(d, j));
                if !ideal.contains(&w) {
                    return Err(AlgebraError::NotAnIdeal {
                        member: self.format_vector(&b),
                        against: self.basis_name(j).to_string(),
                    });
                }
            }
        }

        let pivot_set = ideal.pivot_columns();
        let section: Vec<usize> = (0..d).filter(|i| !pivot_set.contains(i)).collect();
        let new_index: BTreeMap<usize, usize> = section
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();

        let even_names: Vec<String> = section
            .iter()
            .filter(|&&i| self.parity(i) == Parity::Even)
            .map(|&i| self.basis_name(i).to_string())
            .collect();
        let odd_names: Vec<String> = section
            .iter()
            .filter(|&&i| self.parity(i) == Parity::Odd)
            .map(|&i| self.basis_name(i).to_string())
            .collect();

        let mut brackets = Vec::new();
        for (a, &ia) in section.iter().enumerate() {
            for (b, &ib) in section.iter().enumerate().skip(a) {
                if ia == ib && self.parity(ia) == Parity::Even {
                    continue;
                }
                let mut v = self.bracket_basis(ia, ib);
                ideal.reduce(&mut v);
                if v.is_zero() {
                    continue;
                }
                let sparse: Vec<(usize, Rational)> = v
                    .nonzero()
                    .map(|(k, c)| (new_index[&k], c.clone()))
                    .collect();
                brackets.push(((a, b), sparse));
            }
        }

        let q = LieSuperAlgebra::new(
            format!("{}/({})", self.name, ideal.dims()),
            even_names,
            odd_names,
            brackets,
        )?;
        Ok((q, section))
    }

    /// Block direct sum. Basis names from the right summand are primed until
    /// unique against the left.
    pub fn direct_sum(a: &LieSuperAlgebra, b: &LieSuperAlgebra) -> LieSuperAlgebra {
        let dims = GradedDim::new(a.dims.even + b.dims.even, a.dims.odd + b.dims.odd);
        let mut names = std::collections::HashSet::new();
        let mut even_names = Vec::new();
        let mut odd_names = Vec::new();
        let claim = |base: &str, names: &mut std::collections::HashSet<String>| {
            let mut n = base.to_string();
            while !names.insert(n.clone()) {
                n.push('\'');
            }
            n
        };
        for v in a.basis.iter().chain(b.basis.iter()) {
            let n = claim(&v.name, &mut names);
            match v.parity {
                Parity::Even => even_names.push(n),
                Parity::Odd => odd_names.push(n),
            }
        }

        let remap_a = |i: usize| {
            if i < a.dims.even {
                i
            } else {
                dims.even + (i - a.dims.even)
            }
        };
        let remap_b = |i: usize| {
            if i < b.dims.even {
                a.dims.even + i
            } else {
                dims.even + a.dims.odd + (i - b.dims.even)
            }
        };

        let mut brackets = Vec::new();
        for (&(i, j), v) in &a.brackets {
            let sparse = v.nonzero().map(|(k, c)| (remap_a(k), c.clone())).collect();
            brackets.push(((remap_a(i), remap_a(j)), sparse));
        }
        for (&(i, j), v) in &b.brackets {
            let sparse = v.nonzero().map(|(k, c)| (remap_b(k), c.clone())).collect();
            brackets.push(((remap_b(i), remap_b(j)), sparse));
        }

        LieSuperAlgebra::new(
            format!("{}+{}", a.name, b.name),
            even_names,
            odd_names,
            brackets,
        )
        .expect("direct sum of well-formed algebras is well-formed")
    }

    /// True when both algebras have the same graded dimensions and literally
    /// the same structure-constant map under the given basis orderings.
    /// This is not an isomorphism test; names are ignored.
    pub fn structure_equal(&self, other: &LieSuperAlgebra) -> bool {
        self.dims == other.dims && self.brackets == other.brackets
    }
}

/// A graded subspace of a fixed ambient algebra, stored as one RREF block
/// per parity (rows are full ambient-width vectors). The canonical form
/// makes equality and golden tests order-stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: GradedDim,
    even: RationalMatrix,
    even_pivots: Vec<usize>,
    odd: RationalMatrix,
    odd_pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: GradedDim) -> Self {
        Subspace::span_graded(ambient, &[])
    }

    pub fn full(ambient: GradedDim) -> Self {
        let vs: Vec<SuperVector> = (0..ambient.total())
            .map(|i| SuperVector::basis(ambient.total(), i))
            .collect();
        Subspace::span_graded(ambient, &vs)
    }

    /// Span of arbitrary vectors, split into parity components first; the
    /// result is the smallest graded subspace containing them.
    pub fn span_graded(ambient: GradedDim, vectors: &[SuperVector]) -> Self {
        let mut even_rows = Vec::new();
        let mut odd_rows = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient.total(), "ambient dimension mismatch");
            let (e, o) = v.split_parity(ambient.even);
            if !e.is_zero() {
                even_rows.push(e.coeffs().to_vec());
            }
            if !o.is_zero() {
                odd_rows.push(o.coeffs().to_vec());
            }
        }
        Self::from_blocks(ambient, even_rows, odd_rows)
    }

    /// Span of vectors that must each already be homogeneous.
    pub fn span_homogeneous(
        ambient: GradedDim,
        vectors: &[SuperVector],
    ) -> Result<Self, AlgebraError> {
        for v in vectors {
            if !v.is_zero() && v.homogeneous_parity(ambient.even).is_none() {
                return Err(AlgebraError::NonHomogeneous(format!("{:?}", v.coeffs())));
            }
        }
        Ok(Self::span_graded(ambient, vectors))
    }

    fn from_blocks(
        ambient: GradedDim,
        even_rows: Vec<Vec<Rational>>,
        odd_rows: Vec<Vec<Rational>>,
    ) -> Self {
        let total = ambient.total();
        let pack = |rows: Vec<Vec<Rational>>| {
            if rows.is_empty() {
                (RationalMatrix::zero(0, total), Vec::new())
            } else {
                let (r, pivots) = RationalMatrix::from_rows(rows).rref_with_pivots();
                let kept: Vec<Vec<Rational>> =
                    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
                (RationalMatrix::from_rows_with_cols(kept, total), pivots)
            }
        };
        let (even, even_pivots) = pack(even_rows);
        let (odd, odd_pivots) = pack(odd_rows);
        Subspace {
            ambient,
            even,
            even_pivots,
            odd,
            odd_pivots,
        }
    }

    pub fn ambient_dims(&self) -> GradedDim {
        self.ambient
    }

    pub fn ambient_total(&self) -> usize {
        self.ambient.total()
    }

    pub fn dims(&self) -> GradedDim {
        GradedDim::new(self.even.rows(), self.odd.rows())
    }

    pub fn total_dim(&self) -> usize {
        self.dims().total()
    }

    /// Canonical homogeneous basis: even RREF rows, then odd RREF rows.
    pub fn basis_vectors(&self) -> Vec<SuperVector> {
        let mut out = Vec::new();
        for r in 0..self.even.rows() {
            out.push(SuperVector::from_coeffs(self.even.row(r).to_vec()));
        }
        for r in 0..self.odd.rows() {
            out.push(SuperVector::from_coeffs(self.odd.row(r).to_vec()));
        }
        out
    }

    /// Pivot coordinates of both blocks.
    pub fn pivot_columns(&self) -> std::collections::BTreeSet<usize> {
        self.even_pivots
            .iter()
            .chain(self.odd_pivots.iter())
            .copied()
            .collect()
    }

    /// Reduces a vector modulo the subspace, in place by value.
    pub fn reduce(&self, v: &mut SuperVector) {
        assert_eq!(v.len(), self.ambient_total(), "ambient dimension mismatch");
        let (e, o) = v.split_parity(self.ambient.even);
        let mut ec = e.coeffs().to_vec();
        let mut oc = o.coeffs().to_vec();
        reduce_mod_rows(&self.even, &self.even_pivots, &mut ec);
        reduce_mod_rows(&self.odd, &self.odd_pivots, &mut oc);
        for i in 0..v.len() {
            let val = &ec[i] + &oc[i];
            v.set(i, val);
        }
    }

    pub fn contains(&self, v: &SuperVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }
}

impl RationalMatrix {
    /// Builds from rows that are allowed to be empty, with an explicit
    /// column count for the zero-row case.
    pub(crate) fn from_rows_with_cols(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        if rows.is_empty() {
            RationalMatrix::zero(0, cols)
        } else {
            assert!(rows.iter().all(|r| r.len() == cols));
            RationalMatrix::from_rows(rows)
        }
    }
}

/// Incremental construction helper used by the catalog and tests.
pub struct AlgebraBuilder {
    name: String,
    decls: Vec<(String, Parity)>,
    brackets: Vec<(usize, usize, Vec<(usize, Rational)>)>,
}

/// Handle to a declared basis vector, valid only for the builder it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisHandle(usize);

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        AlgebraBuilder {
            name: name.into(),
            decls: Vec::new(),
            brackets: Vec::new(),
        }
    }

    pub fn even(&mut self, name: impl Into<String>) -> BasisHandle {
        self.decls.push((name.into(), Parity::Even));
        BasisHandle(self.decls.len() - 1)
    }

    pub fn odd(&mut self, name: impl Into<String>) -> BasisHandle {
        self.decls.push((name.into(), Parity::Odd));
        BasisHandle(self.decls.len() - 1)
    }

    pub fn bracket(&mut self, left: BasisHandle, right: BasisHandle, value: &[(BasisHandle, Rational)]) {
        self.brackets.push((
            left.0,
            right.0,
            value.iter().map(|(h, c)| (h.0, c.clone())).collect(),
        ));
    }

    pub fn build(self) -> Result<LieSuperAlgebra, AlgebraError> {
        // global order: evens in declaration order, then odds
        let mut global_of_decl = vec![0usize; self.decls.len()];
        let mut even_names = Vec::new();
        let mut odd_names = Vec::new();
        for (i, (n, p)) in self.decls.iter().enumerate() {
            if *p == Parity::Even {
                global_of_decl[i] = even_names.len();
                even_names.push(n.clone());
            }
        }
        for (i, (n, p)) in self.decls.iter().enumerate() {
            if *p == Parity::Odd {
                global_of_decl[i] = even_names.len() + odd_names.len();
                odd_names.push(n.clone());
            }
        }
        let brackets = self
            .brackets
            .into_iter()
            .map(|(l, r, v)| {
                (
                    (global_of_decl[l], global_of_decl[r]),
                    v.into_iter().map(|(k, c)| (global_of_decl[k], c)).collect(),
                )
            })
            .collect();
        LieSuperAlgebra::new(self.name, even_names, odd_names, brackets)
    }
}
