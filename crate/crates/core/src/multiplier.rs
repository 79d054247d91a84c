//! Multiplier dimension via the Chevalley-Eilenberg complex.
//!
//! For a Lie algebra `L` over the rationals, the Schur multiplier `M(L)`
//! (defined through a free presentation `L = F/R` as `(F^2 cap R)/[F,R]`)
//! has the same dimension as the degree-2 homology of the complex
//!
//! ```text
//! Lambda^3 L --d3--> Lambda^2 L --d2--> L
//! ```
//!
//! with trivial coefficients, so `dim M(L) = nullity(d2) - rank(d3)`. Both
//! boundary maps are assembled as sparse matrices over the exterior bases
//! ordered lexicographically:
//!
//! * `d2(e_i ^ e_j) = [e_i, e_j]`
//! * `d3(e_i ^ e_j ^ e_k) = [e_i,e_j]^e_k - [e_i,e_k]^e_j + [e_j,e_k]^e_i`
//!
//! where wedge terms are normalized to increasing index order with the sign
//! of the transposition. For the free nilpotent algebra on `n >= 2`
//! generators of class `c` the dimension also has the closed form
//! `l_n(c+1)`; keeping both routes independent is what lets the tests pin
//! one against the other.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::lie::LieAlgebra;
use crate::linalg::{Rational, SparseMatrix, SparseVec};
use crate::witt::witt_dimension;

/// Lexicographic position of `(i, j)` with `i < j` among the increasing
/// pairs out of `dim` indices.
pub fn pair_position(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

/// All increasing pairs, in position order.
pub fn enumerate_pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
    for i in 0..dim {
        for j in (i + 1)..dim {
            out.push((i, j));
        }
    }
    out
}

/// All increasing triples, in lexicographic (position) order.
pub fn enumerate_triples(dim: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in (j + 1)..dim {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// `d2`: the `dim x C(dim,2)` matrix whose column at `(i,j)` is the
/// coordinate vector of `[e_i, e_j]`.
pub fn ce_boundary_2(l: &LieAlgebra) -> SparseMatrix {
    let dim = l.dim();
    let pairs = enumerate_pairs(dim);
    let mut m = SparseMatrix::zero(dim, pairs.len());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for (k, c) in l.basis_bracket(i, j) {
            m.set(k, col, c);
        }
    }
    m
}

/// `d3`: the `C(dim,2) x C(dim,3)` matrix of the degree-3 boundary.
pub fn ce_boundary_3(l: &LieAlgebra) -> SparseMatrix {
    let dim = l.dim();
    let pairs = enumerate_pairs(dim);
    let triples = enumerate_triples(dim);
    let mut m = SparseMatrix::zero(pairs.len(), triples.len());
    for (col, &(i, j, k)) in triples.iter().enumerate() {
        let mut column: SparseVec = SparseVec::new();
        wedge_into(&mut column, dim, &l.basis_bracket(i, j), k, 1);
        wedge_into(&mut column, dim, &l.basis_bracket(i, k), j, -1);
        wedge_into(&mut column, dim, &l.basis_bracket(j, k), i, 1);
        for (row, c) in column {
            m.set(row, col, c);
        }
    }
    m
}

/// Accumulate `sign * (w ^ e_x)` into `acc`, normalizing each wedge to
/// increasing order; `e_m ^ e_m` vanishes.
fn wedge_into(acc: &mut SparseVec, dim: usize, w: &SparseVec, x: usize, sign: i64) {
    for (&m, c) in w {
        if m == x {
            continue;
        }
        let (row, flip) = if m < x {
            (pair_position(dim, m, x), 1)
        } else {
            (pair_position(dim, x, m), -1)
        };
        let entry = acc.entry(row).or_insert_with(Rational::zero);
        *entry += c * crate::linalg::rat(sign * flip);
        if entry.is_zero() {
            acc.remove(&row);
        }
    }
}

/// `dim M(L) = nullity(d2) - rank(d3)`, exactly.
///
/// The caller is expected to pass a validated algebra; on one that fails
/// the Jacobi identity the two maps no longer form a complex and the
/// subtraction below may panic on underflow.
pub fn multiplier_dimension(l: &LieAlgebra) -> usize {
    let kernel = ce_boundary_2(l).nullity();
    let image = ce_boundary_3(l).rank();
    assert!(
        image <= kernel,
        "boundary image exceeds kernel; the input is not a Lie algebra"
    );
    kernel - image
}

/// Closed form for the free nilpotent algebra on `n` generators of class
/// `c`: with `L = F/F^(c+1)` the relation ideal is `R = F^(c+1)` and
/// `[F,R] = F^(c+2)`, so `M(L) = F^(c+1)/F^(c+2)` has dimension `l_n(c+1)`.
///
/// Panics when `n < 2` (for `n <= 1` the quotients are one-dimensional or
/// trivial and the identification above does not apply) or when `c == 0`.
pub fn multiplier_of_free_nilpotent(n: u64, c: u64) -> BigUint {
    assert!(n >= 2, "closed form needs at least two generators");
    assert!(c >= 1, "class must be at least one");
    witt_dimension(n, c + 1)
}
