//! Exact rational scalars and sparse matrices.
//!
//! Every dimension computed by this crate reduces to an exact rank over the
//! rationals, so this module is deliberately small: a scalar type, a sparse
//! matrix, rank/nullity via fraction-free elimination, and a canonical
//! reduced row-echelon form used to represent subspaces.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// The scalar field: arbitrary-precision rationals, always reduced, with a
/// positive denominator. `num_rational` maintains both invariants.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `p/q`. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Sparse vector: map from coordinate index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

/// `dst += c * src`, dropping entries that cancel to zero.
pub fn vec_add_scaled(dst: &mut SparseVec, src: &SparseVec, c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (idx, v) in src {
        let entry = dst.entry(*idx).or_insert_with(Rational::zero);
        *entry += v * c;
        if entry.is_zero() {
            dst.remove(idx);
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {left_rows}x{left_cols} * {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
}

/// Sparse matrix over the rationals. Only nonzero entries are stored; the
/// entry map is ordered so that iteration, and therefore every canonical
/// form derived from it, is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Dense integer rows, mainly a test convenience.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut m = SparseMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v != 0 {
                    m.set(i, j, rat(*v));
                }
            }
        }
        m
    }

    /// Build from sparse rows over a fixed column count.
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        let mut m = SparseMatrix::zero(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Panics when the indices are out of range. Setting zero removes any
    /// stored entry, preserving the no-explicit-zeros invariant.
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(
            r < self.rows && c < self.cols,
            "entry ({r},{c}) out of range"
        );
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn row(&self, r: usize) -> SparseVec {
        self.entries
            .range((r, 0)..=(r, usize::MAX))
            .map(|(&(_, c), v)| (c, v.clone()))
            .collect()
    }

    fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        rows
    }

    /// Exact product. Errors when the inner dimensions disagree.
    pub fn multiply(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = SparseMatrix::zero(self.rows, rhs.cols);
        for (&(i, j), a) in &self.entries {
            for (&(_, k), b) in rhs.entries.range((j, 0)..=(j, usize::MAX)) {
                let entry = out.entries.entry((i, k)).or_insert_with(Rational::zero);
                *entry += a * b;
            }
        }
        out.entries.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Exact rank over the rationals.
    ///
    /// Rows are first scaled to integers, then eliminated fraction-free:
    /// each update is `row = p * row - a * pivot_row` followed by division
    /// by the row's integer content, which keeps intermediate entries small
    /// without ever leaving the integers. The pivot is chosen by the
    /// Markowitz fill estimate; the returned rank does not depend on that
    /// choice.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = Vec::new();
        for row in self.sparse_rows() {
            if row.is_empty() {
                continue;
            }
            rows.push(integerize(&row));
        }

        let mut rank = 0;
        while !rows.is_empty() {
            // Column occupancy among the remaining rows.
            let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
            for row in &rows {
                for c in row.keys() {
                    *col_count.entry(*c).or_insert(0) += 1;
                }
            }
            // Markowitz: minimize (nnz(row)-1) * (nnz(col)-1).
            let mut best: Option<(usize, usize, usize)> = None; // (cost, row, col)
            for (ri, row) in rows.iter().enumerate() {
                let rcost = row.len() - 1;
                for c in row.keys() {
                    let cost = rcost * (col_count[c] - 1);
                    let cand = (cost, ri, *c);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
            let (_, pr, pc) = best.expect("nonempty rows have entries");
            let pivot_row = rows.swap_remove(pr);
            let p = pivot_row[&pc].clone();
            rank += 1;

            for row in &mut rows {
                let Some(a) = row.get(&pc).cloned() else {
                    continue;
                };
                // row = p*row - a*pivot_row; the pivot column cancels exactly.
                for (c, v) in row.iter_mut() {
                    *v *= &p;
                    if let Some(w) = pivot_row.get(c) {
                        *v -= &a * w;
                    }
                }
                for (c, w) in &pivot_row {
                    if !row.contains_key(c) {
                        let val = -(&a * w);
                        if !val.is_zero() {
                            row.insert(*c, val);
                        }
                    }
                }
                row.retain(|_, v| !v.is_zero());
                divide_by_content(row);
            }
            rows.retain(|row| !row.is_empty());
        }
        rank
    }

    /// `cols - rank`, the kernel dimension.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduced row-echelon form with zero rows dropped.
    ///
    /// Two matrices have the same row space exactly when their canonical
    /// forms are identical, which is what makes [`crate::lie::Subspace`]
    /// comparison structural.
    pub fn row_space_canonical(&self) -> SparseMatrix {
        let reduced = rref_rows(self.sparse_rows());
        SparseMatrix::from_sparse_rows(self.cols, reduced)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Gauss-Jordan over the rationals on a list of sparse rows; returns the
/// RREF rows, sorted by pivot column, zero rows dropped.
pub(crate) fn rref_rows(input: Vec<SparseVec>) -> Vec<SparseVec> {
    // (pivot column, row normalized to a leading 1)
    let mut pivots: Vec<(usize, SparseVec)> = Vec::new();
    for mut row in input {
        // Reduce against the pivots found so far.
        for (pc, prow) in &pivots {
            if let Some(c) = row.get(pc).cloned() {
                let neg = -c;
                vec_add_scaled(&mut row, prow, &neg);
            }
        }
        let Some((&lead, coeff)) = row.iter().next() else {
            continue;
        };
        let inv = coeff.recip();
        let row: SparseVec = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
        // Clear this column from the existing pivot rows.
        for (_, prow) in pivots.iter_mut() {
            if let Some(c) = prow.get(&lead).cloned() {
                let neg = -c;
                vec_add_scaled(prow, &row, &neg);
            }
        }
        pivots.push((lead, row));
    }
    pivots.sort_by_key(|(pc, _)| *pc);
    pivots.into_iter().map(|(_, row)| row).collect()
}

/// Scale a rational row to coprime integers.
fn integerize(row: &SparseVec) -> BTreeMap<usize, BigInt> {
    let mut lcm = BigInt::one();
    for v in row.values() {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: BTreeMap<usize, BigInt> = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    divide_by_content(&mut out);
    out
}

fn divide_by_content(row: &mut BTreeMap<usize, BigInt>) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}
