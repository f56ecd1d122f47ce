//! The Schur multiplier of a Lie superalgebra via the tail of the super
//! Chevalley-Eilenberg chain complex C3 -> C2 -> L, together with the
//! defect invariants t and s and an explicit stem cover construction.
//!
//! C2 is spanned by e_i ^ e_j (i < j, even wedges), e_i (x) f_a (mixed),
//! and f_a v f_b (a <= b, symmetric odd pairs); C3 by the analogous sign-
//! correct triples. The differentials preserve parity, so every rank and
//! kernel computation happens one parity block at a time and the multiplier
//! M(L) = ker d2 / im d3 carries a graded dimension.

use crate::linalg::{rat, Rational, RationalMatrix};
use crate::superalgebra::{
    flip_sign, parity_sign, GradedDim, LieSuperAlgebra, Parity, Subspace, SuperVector,
};
use num_traits::Zero;
use std::collections::{BTreeMap, HashSet};

/// A canonical degree-2 chain basis element: the (unordered) pair of basis
/// vectors at global indices `left <= right`. Even diagonals are excluded;
/// odd diagonals f v f are genuine basis elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairBasisElement {
    pub left: usize,
    pub right: usize,
    pub parity: Parity,
}

/// A canonical degree-3 chain basis element with global indices
/// `i <= j <= k`, repeats allowed only among odd indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleBasisElement {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub parity: Parity,
}

/// Canonical C2 basis: even wedges, then mixed pairs, then symmetric odd
/// pairs, each group in lexicographic order.
pub fn c2_basis(l: &LieSuperAlgebra) -> Vec<PairBasisElement> {
    let m = l.even_dim();
    let d = l.total_dim();
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            out.push(PairBasisElement { left: i, right: j, parity: Parity::Even });
        }
    }
    for i in 0..m {
        for j in m..d {
            out.push(PairBasisElement { left: i, right: j, parity: Parity::Odd });
        }
    }
    for i in m..d {
        for j in i..d {
            out.push(PairBasisElement { left: i, right: j, parity: Parity::Even });
        }
    }
    out
}

/// Canonical C3 basis: e^e^e, then e^e(x)f, then e(x)fvf, then fvfvf,
/// each group in lexicographic order.
pub fn c3_basis(l: &LieSuperAlgebra) -> Vec<TripleBasisElement> {
    let m = l.even_dim();
    let d = l.total_dim();
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                out.push(TripleBasisElement { i, j, k, parity: Parity::Even });
            }
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            for k in m..d {
                out.push(TripleBasisElement { i, j, k, parity: Parity::Odd });
            }
        }
    }
    for i in 0..m {
        for j in m..d {
            for k in j..d {
                out.push(TripleBasisElement { i, j, k, parity: Parity::Even });
            }
        }
    }
    for i in m..d {
        for j in i..d {
            for k in j..d {
                out.push(TripleBasisElement { i, j, k, parity: Parity::Odd });
            }
        }
    }
    out
}

fn pair_positions(pairs: &[PairBasisElement]) -> BTreeMap<(usize, usize), usize> {
    pairs
        .iter()
        .enumerate()
        .map(|(pos, p)| ((p.left, p.right), pos))
        .collect()
}

/// d2: C2 -> L, sending a pair to the bracket of its entries.
pub fn d2_matrix(l: &LieSuperAlgebra) -> RationalMatrix {
    let pairs = c2_basis(l);
    let mut m = RationalMatrix::zero(l.total_dim(), pairs.len());
    for (col, p) in pairs.iter().enumerate() {
        let v = l.bracket_basis(p.left, p.right);
        for (row, c) in v.nonzero() {
            m.set(row, col, c.clone());
        }
    }
    m
}

/// Adds `coeff * (b_p ^ b_w)` to a C2 coordinate column, rewriting onto the
/// canonical pair basis: swapping the factors costs -(-1)^{|p||w|}, an even
/// square vanishes, an odd square stays.
fn add_wedge(
    col: &mut [Rational],
    positions: &BTreeMap<(usize, usize), usize>,
    l: &LieSuperAlgebra,
    p: usize,
    w: usize,
    coeff: &Rational,
) {
    use std::cmp::Ordering;
    match p.cmp(&w) {
        Ordering::Equal => {
            if l.parity(p) == Parity::Odd {
                let r = positions[&(p, p)];
                col[r] = &col[r] + coeff;
            }
        }
        Ordering::Less => {
            let r = positions[&(p, w)];
            col[r] = &col[r] + coeff;
        }
        Ordering::Greater => {
            let r = positions[&(w, p)];
            let s = rat(flip_sign(l.parity(p), l.parity(w)), 1);
            col[r] = &col[r] + coeff * s;
        }
    }
}

/// d3: C3 -> C2,
/// d3(x^y^z) = -[x,y]^z + (-1)^{|y||z|}[x,z]^y - (-1)^{|x|(|y|+|z|)}[y,z]^x.
/// Together with the graded Jacobi identity this gives d2 . d3 = 0.
pub fn d3_matrix(l: &LieSuperAlgebra) -> RationalMatrix {
    let pairs = c2_basis(l);
    let positions = pair_positions(&pairs);
    let triples = c3_basis(l);
    let mut m = RationalMatrix::zero(pairs.len(), triples.len());
    for (ci, t) in triples.iter().enumerate() {
        let (x, y, z) = (t.i, t.j, t.k);
        let (px, py, pz) = (l.parity(x), l.parity(y), l.parity(z));
        let mut col = vec![Rational::zero(); pairs.len()];
        let terms = [
            (-1, (x, y), z),
            (parity_sign(py, pz), (x, z), y),
            (-parity_sign(px, py) * parity_sign(px, pz), (y, z), x),
        ];
        for (sign, (u, v), w) in terms {
            let bracket = l.bracket_basis(u, v);
            for (p, c) in bracket.nonzero() {
                let coeff = c * rat(sign, 1);
                add_wedge(&mut col, &positions, l, p, w, &coeff);
            }
        }
        for (r, c) in col.into_iter().enumerate() {
            if !c.is_zero() {
                m.set(r, ci, c);
            }
        }
    }
    m
}

/// Graded dimensions attached to M(L) = ker d2 / im d3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplierResult {
    /// dim M(L), one entry per parity.
    pub multiplier: GradedDim,
    /// dim ker d2 per parity.
    pub kernel: GradedDim,
    /// rank d3 per parity.
    pub image: GradedDim,
}

impl MultiplierResult {
    pub fn total(&self) -> usize {
        self.multiplier.total()
    }
}

fn parity_columns<T>(items: &[T], parity_of: impl Fn(&T) -> Parity, p: Parity) -> Vec<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(_, t)| parity_of(t) == p)
        .map(|(i, _)| i)
        .collect()
}

/// Computes dim M(L) blockwise: both differentials preserve parity, so the
/// quotient splits as an even and an odd piece.
pub fn multiplier(l: &LieSuperAlgebra) -> MultiplierResult {
    let pairs = c2_basis(l);
    let triples = c3_basis(l);
    let d2 = d2_matrix(l);
    let d3 = d3_matrix(l);
    let all_rows: Vec<usize> = (0..l.total_dim()).collect();

    let mut mult = [0usize; 2];
    let mut ker = [0usize; 2];
    let mut img = [0usize; 2];
    for (slot, p) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
        let pair_cols = parity_columns(&pairs, |e| e.parity, p);
        let triple_cols = parity_columns(&triples, |e| e.parity, p);
        let rank2 = d2.submatrix(&all_rows, &pair_cols).rank();
        let rank3 = d3.submatrix(&pair_cols, &triple_cols).rank();
        ker[slot] = pair_cols.len() - rank2;
        img[slot] = rank3;
        mult[slot] = ker[slot] - rank3;
    }
    MultiplierResult {
        multiplier: GradedDim::new(mult[0], mult[1]),
        kernel: GradedDim::new(ker[0], ker[1]),
        image: GradedDim::new(img[0], img[1]),
    }
}

/// Same number computed without the parity split; used to cross-check the
/// blocked computation.
pub fn multiplier_total_unblocked(l: &LieSuperAlgebra) -> usize {
    let d2 = d2_matrix(l);
    let d3 = d3_matrix(l);
    (d2.cols() - d2.rank()) - d3.rank()
}

/// dim C2 = ((m+n)^2 + n - m) / 2 for graded dimension (m | n).
pub fn c2_dim(dims: GradedDim) -> usize {
    let (m, n) = (dims.even, dims.odd);
    ((m + n) * (m + n) + n - m) / 2
}

/// t(L) = dim C2 - dim M(L); zero exactly for abelian algebras.
pub fn t_from_parts(dims: GradedDim, multiplier_total: usize) -> i64 {
    let (m, n) = (dims.even as i64, dims.odd as i64);
    ((m + n) * (m + n) + n - m) / 2 - multiplier_total as i64
}

/// s(L) = (m+n-2)(m+n-1)/2 + n + 1 - dim M(L); may be negative for small
/// abelian algebras and is nonnegative for non-abelian nilpotent ones.
pub fn s_from_parts(dims: GradedDim, multiplier_total: usize) -> i64 {
    let (m, n) = (dims.even as i64, dims.odd as i64);
    (m + n - 2) * (m + n - 1) / 2 + n + 1 - multiplier_total as i64
}

pub fn t_invariant(l: &LieSuperAlgebra) -> i64 {
    t_from_parts(l.dims(), multiplier(l).total())
}

pub fn s_invariant(l: &LieSuperAlgebra) -> i64 {
    s_from_parts(l.dims(), multiplier(l).total())
}

/// A stem cover K of L: a central extension 0 -> W -> K -> L -> 0 with
/// W inside both the center and the derived subalgebra of K, and
/// dim W = dim M(L) (graded).
#[derive(Debug, Clone)]
pub struct StemCover {
    pub cover: LieSuperAlgebra,
    /// Global cover indices of the adjoined central generators.
    pub kernel_indices: Vec<usize>,
    /// For each cover basis vector, the original basis index it lifts;
    /// None for the kernel generators.
    pub lifts: Vec<Option<usize>>,
}

impl StemCover {
    pub fn kernel_subspace(&self) -> Subspace {
        let d = self.cover.total_dim();
        let vs: Vec<SuperVector> = self
            .kernel_indices
            .iter()
            .map(|&i| SuperVector::basis(d, i))
            .collect();
        Subspace::span_graded(self.cover.dims(), &vs)
    }
}

/// Data for one parity block of the cover construction: how many central
/// generators to adjoin and the projection of each C2 block coordinate
/// onto them.
struct BlockProjection {
    generators: usize,
    /// generators x block_width matrix; column c gives the W-coordinates
    /// of the c-th canonical pair of this parity.
    pi: RationalMatrix,
}

fn block_projection(d2: &RationalMatrix, d3: &RationalMatrix, pair_cols: &[usize], triple_cols: &[usize], l: &LieSuperAlgebra) -> BlockProjection {
    let width = pair_cols.len();
    let all_rows: Vec<usize> = (0..l.total_dim()).collect();
    let d2_block = d2.submatrix(&all_rows, pair_cols);
    let d3_block = d3.submatrix(pair_cols, triple_cols);

    // canonical bases: ker(d2) from the nullspace, im(d3) from the RREF of
    // the transpose
    let ker: Vec<Vec<Rational>> = d2_block.nullspace_basis();
    let (im_rref, im_pivots) = d3_block.transpose().rref_with_pivots();
    let im_rows: Vec<Vec<Rational>> = (0..im_pivots.len()).map(|r| im_rref.row(r).to_vec()).collect();

    // complement W of im(d3) inside ker(d2): greedily keep the kernel
    // vectors that are independent of the image
    let mut span = im_rows.clone();
    let mut w_rows: Vec<Vec<Rational>> = Vec::new();
    for k in &ker {
        let mut cand = span.clone();
        cand.push(k.clone());
        let rank = RationalMatrix::from_rows_with_cols(cand.clone(), width).rank();
        if rank > span.len() {
            span = cand;
            w_rows.push(k.clone());
        }
    }
    let r = im_rows.len();
    let w = w_rows.len();

    if width == 0 || w == 0 {
        return BlockProjection {
            generators: w,
            pi: RationalMatrix::zero(w, width),
        };
    }

    // complete [im | W] to a basis of the whole block with standard vectors
    // at the non-pivot coordinates of ker(d2)
    let (_, ker_pivots) = RationalMatrix::from_rows_with_cols(ker.clone(), width).rref_with_pivots();
    let pivot_set: HashSet<usize> = ker_pivots.iter().copied().collect();

    let mut s = RationalMatrix::zero(width, width);
    let mut col = 0;
    for row in im_rows.iter().chain(w_rows.iter()) {
        for (i, v) in row.iter().enumerate() {
            if !v.is_zero() {
                s.set(i, col, v.clone());
            }
        }
        col += 1;
    }
    for c in 0..width {
        if !pivot_set.contains(&c) {
            s.set(c, col, rat(1, 1));
            col += 1;
        }
    }
    assert_eq!(col, width, "basis completion must fill the block");

    // invert S by reducing [S | I]; pi is the W rows of S^{-1}
    let mut aug = RationalMatrix::zero(width, 2 * width);
    for i in 0..width {
        for j in 0..width {
            let v = s.at(i, j);
            if !v.is_zero() {
                aug.set(i, j, v.clone());
            }
        }
        aug.set(i, width + i, rat(1, 1));
    }
    let (reduced, pivots) = aug.rref_with_pivots();
    assert_eq!(pivots.len(), width, "S is invertible by construction");
    let mut pi = RationalMatrix::zero(w, width);
    for t in 0..w {
        for c in 0..width {
            let v = reduced.at(r + t, width + c);
            if !v.is_zero() {
                pi.set(t, c, v.clone());
            }
        }
    }
    BlockProjection { generators: w, pi }
}

/// Builds a stem cover of a nilpotent Lie superalgebra. The cover keeps the
/// original basis (same names, same order within each parity) and adjoins
/// one central generator per multiplier dimension; quotienting by the span
/// of the generators returns the original structure constants exactly.
pub fn stem_cover(l: &LieSuperAlgebra) -> StemCover {
    let pairs = c2_basis(l);
    let triples = c3_basis(l);
    let d2 = d2_matrix(l);
    let d3 = d3_matrix(l);

    let mut blocks = Vec::new();
    let mut block_pos: Vec<(usize, usize)> = vec![(0, 0); pairs.len()]; // (parity slot, column in block)
    for (slot, p) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
        let pair_cols = parity_columns(&pairs, |e| e.parity, p);
        let triple_cols = parity_columns(&triples, |e| e.parity, p);
        for (pos, &c) in pair_cols.iter().enumerate() {
            block_pos[c] = (slot, pos);
        }
        blocks.push(block_projection(&d2, &d3, &pair_cols, &triple_cols, l));
    }
    let (we, wo) = (blocks[0].generators, blocks[1].generators);
    let m = l.even_dim();
    let n = l.total_dim() - m;

    // cover order: original evens, even generators, original odds, odd
    // generators; generator names m1, m2, ... primed past any collision
    let mut taken: HashSet<String> = l.basis().iter().map(|b| b.name.clone()).collect();
    let mut gen_names = Vec::new();
    for idx in 1..=(we + wo) {
        let mut name = format!("m{}", idx);
        while !taken.insert(name.clone()) {
            name.push('\'');
        }
        gen_names.push(name);
    }
    let even_names: Vec<String> = (0..m)
        .map(|i| l.basis_name(i).to_string())
        .chain(gen_names[..we].iter().cloned())
        .collect();
    let odd_names: Vec<String> = (m..m + n)
        .map(|i| l.basis_name(i).to_string())
        .chain(gen_names[we..].iter().cloned())
        .collect();

    let remap = |i: usize| if i < m { i } else { i + we };
    let even_gen = |t: usize| m + t;
    let odd_gen = |t: usize| m + we + n + t;

    let mut brackets = Vec::new();
    for (c2_idx, p) in pairs.iter().enumerate() {
        let mut sparse: Vec<(usize, Rational)> = l
            .bracket_basis(p.left, p.right)
            .nonzero()
            .map(|(k, v)| (remap(k), v.clone()))
            .collect();
        let (slot, pos) = block_pos[c2_idx];
        let block = &blocks[slot];
        for t in 0..block.generators {
            let coeff = block.pi.at(t, pos);
            if !coeff.is_zero() {
                let g = if slot == 0 { even_gen(t) } else { odd_gen(t) };
                sparse.push((g, coeff.clone()));
            }
        }
        if !sparse.is_empty() {
            brackets.push(((remap(p.left), remap(p.right)), sparse));
        }
    }

    let cover = LieSuperAlgebra::new(
        format!("cover({})", l.name()),
        even_names,
        odd_names,
        brackets,
    )
    .expect("stem cover construction yields a well-formed algebra");

    let kernel_indices: Vec<usize> = (0..we)
        .map(even_gen)
        .chain((0..wo).map(odd_gen))
        .collect();
    let mut lifts = vec![None; cover.total_dim()];
    for i in 0..m {
        lifts[i] = Some(i);
    }
    for i in m..m + n {
        lifts[i + we] = Some(i);
    }

    StemCover {
        cover,
        kernel_indices,
        lifts,
    }
}
