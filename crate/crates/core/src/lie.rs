//! Finite-dimensional Lie algebras given by structure constants.
//!
//! An algebra is stored as its dimension, printable basis labels, and the
//! sparse coefficients of `[e_i, e_j] = sum_k c_ij^k e_k` for `i < j`; the
//! remaining brackets are implied by antisymmetry. On top of that sit the
//! subspace calculus (products, lower central series) and the quotient by
//! the last nonzero term of the series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{rref_rows, vec_add_scaled, Rational, SparseMatrix, SparseVec};

/// Structural problems detected while building an algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("basis index {index} out of range for dimension {dim} (indices are 1-based)")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket ({i},{j}) is not in canonical i < j order (indices are 1-based)")]
    PairNotCanonical { i: usize, j: usize },
    #[error("duplicate structure constant for ({i},{j}) -> {k} (indices are 1-based)")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("expected {expected} basis labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A basis triple on which the Jacobi identity fails. Indices are 0-based
/// in the fields and printed 1-based to match the file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Jacobi identity fails at basis triple ({},{},{})",
            self.i + 1,
            self.j + 1,
            self.k + 1
        )
    }
}

impl std::error::Error for JacobiViolation {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("subspace ambient dimension {got} does not match algebra dimension {expected}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("the algebra is not nilpotent: its lower central series stabilizes at dimension {stable_dim}")]
    NotNilpotent { stable_dim: usize },
    #[error("nilpotency class {class} is below 2, there is no last term to quotient by")]
    ClassTooSmall { class: usize },
}

/// Subspace of the coordinate space of an algebra, held as a reduced
/// row-echelon basis. Equal subspaces compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: SparseMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: SparseMatrix::zero(0, ambient),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: SparseMatrix::identity(ambient),
        }
    }

    /// Span of arbitrary vectors, canonicalized.
    pub fn from_spanning(ambient: usize, vectors: Vec<SparseVec>) -> Self {
        let reduced = rref_rows(vectors);
        Subspace {
            ambient,
            basis: SparseMatrix::from_sparse_rows(ambient, reduced),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &SparseMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<SparseVec> {
        (0..self.dim()).map(|r| self.basis.row(r)).collect()
    }

    /// Leading column of each echelon row.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                *self
                    .basis
                    .row(r)
                    .keys()
                    .next()
                    .expect("echelon rows are nonzero")
            })
            .collect()
    }

    /// Normal form of `v` modulo this subspace: pivot coordinates are
    /// eliminated, so `v` lies in the subspace exactly when the result is
    /// empty.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for r in 0..self.dim() {
            let row = self.basis.row(r);
            let pivot = *row.keys().next().expect("echelon rows are nonzero");
            if let Some(c) = out.get(&pivot).cloned() {
                let neg = -c;
                vec_add_scaled(&mut out, &row, &neg);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Lie algebra on a labeled basis with sparse rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
}

impl LieAlgebra {
    /// Build from `(i, j, k, c)` meaning `[e_i, e_j]` has coefficient `c`
    /// on `e_k`, all 0-based with `i < j`. Zero coefficients are dropped;
    /// `labels = None` means the default `e1..eN`.
    pub fn new(
        dim: usize,
        labels: Option<Vec<String>>,
        entries: Vec<(usize, usize, usize, Rational)>,
    ) -> Result<Self, StructureError> {
        let labels = match labels {
            Some(l) => {
                if l.len() != dim {
                    return Err(StructureError::LabelCount {
                        expected: dim,
                        got: l.len(),
                    });
                }
                l
            }
            None => (1..=dim).map(|i| format!("e{i}")).collect(),
        };
        let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(StructureError::IndexOutOfRange {
                        index: idx + 1,
                        dim,
                    });
                }
            }
            if i >= j {
                return Err(StructureError::PairNotCanonical { i: i + 1, j: j + 1 });
            }
            if c.is_zero() {
                continue;
            }
            let row = brackets.entry((i, j)).or_default();
            if row.insert(k, c).is_some() {
                return Err(StructureError::DuplicateEntry {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                });
            }
        }
        brackets.retain(|_, row| !row.is_empty());
        Ok(LieAlgebra {
            dim,
            labels,
            brackets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, l)| *l == format!("e{}", i + 1))
    }

    /// Stored constants in `(i, j, k)` order, 0-based.
    pub fn bracket_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.brackets
            .iter()
            .flat_map(|(&(i, j), row)| row.iter().map(move |(&k, c)| (i, j, k, c)))
    }

    /// `[e_i, e_j]` as a coordinate vector; antisymmetry and `[e_i, e_i] = 0`
    /// are applied here rather than stored.
    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => SparseVec::new(),
            Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|row| row.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in u {
            for (j, b) in v {
                let w = self.basis_bracket(*i, *j);
                if !w.is_empty() {
                    vec_add_scaled(&mut out, &w, &(a * b));
                }
            }
        }
        out
    }

    fn bracket_vector_basis(&self, w: &SparseVec, m: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (t, c) in w {
            let ws = self.basis_bracket(*t, m);
            vec_add_scaled(&mut out, &ws, c);
        }
        out
    }

    /// Exhaustive Jacobi check over all basis triples `i < j < k`.
    /// Antisymmetry holds by construction, so this is the whole validity
    /// condition; the first violating triple is reported.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.basis_bracket(i, j);
                for k in (j + 1)..self.dim {
                    let mut defect = self.bracket_vector_basis(&ij, k);
                    let jk = self.basis_bracket(j, k);
                    vec_add_scaled(
                        &mut defect,
                        &self.bracket_vector_basis(&jk, i),
                        &crate::linalg::rat(1),
                    );
                    let ki = self.basis_bracket(k, i);
                    vec_add_scaled(
                        &mut defect,
                        &self.bracket_vector_basis(&ki, j),
                        &crate::linalg::rat(1),
                    );
                    if !defect.is_empty() {
                        return Err(JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn whole_space(&self) -> Subspace {
        Subspace::whole(self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.dim)
    }

    /// Span of `[u, v]` over spanning pairs of the two subspaces.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, LieError> {
        for s in [u, v] {
            if s.ambient_dim() != self.dim {
                return Err(LieError::AmbientMismatch {
                    expected: self.dim,
                    got: s.ambient_dim(),
                });
            }
        }
        let urows = u.basis_rows();
        let vrows = v.basis_rows();
        let mut spanning = Vec::new();
        for a in &urows {
            for b in &vrows {
                let w = self.bracket_vectors(a, b);
                if !w.is_empty() {
                    spanning.push(w);
                }
            }
        }
        Ok(Subspace::from_spanning(self.dim, spanning))
    }

    /// `L^1 = L`, `L^(k+1) = [L, L^k]`, listed until the first repeat
    /// (which is the zero subspace exactly when the algebra is nilpotent).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let whole = self.whole_space();
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self
                .product_space(&whole, last)
                .expect("ambient dimensions agree");
            if next == *last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Dimension of the derived subalgebra `L^2 = [L, L]`; defined for any
    /// algebra, nilpotent or not.
    pub fn derived_dim(&self) -> usize {
        let whole = self.whole_space();
        self.product_space(&whole, &whole)
            .expect("ambient dimensions agree")
            .dim()
    }

    /// Smallest `c` with `L^(c+1) = 0`.
    pub fn nilpotency_class(&self) -> Result<usize, LieError> {
        let series = self.lower_central_series();
        let last = series.last().expect("series is nonempty");
        if last.is_zero() {
            Ok(series.len() - 1)
        } else {
            Err(LieError::NotNilpotent {
                stable_dim: last.dim(),
            })
        }
    }

    /// Minimal number of generators of a nilpotent algebra, which equals
    /// `dim L - dim L^2`.
    pub fn min_generators(&self) -> Result<usize, LieError> {
        let series = self.lower_central_series();
        let last = series.last().expect("series is nonempty");
        if !last.is_zero() {
            return Err(LieError::NotNilpotent {
                stable_dim: last.dim(),
            });
        }
        let derived = series.get(1).map_or(0, Subspace::dim);
        Ok(self.dim - derived)
    }

    /// The quotient `L / L^c` by the last nonzero term of the lower central
    /// series, presented on the standard basis vectors that complete the
    /// echelon basis of `L^c`, in index order. Requires class at least 2.
    pub fn quotient_by_last_term(&self) -> Result<LieAlgebra, LieError> {
        let series = self.lower_central_series();
        let last = series.last().expect("series is nonempty");
        if !last.is_zero() {
            return Err(LieError::NotNilpotent {
                stable_dim: last.dim(),
            });
        }
        let class = series.len() - 1;
        if class < 2 {
            return Err(LieError::ClassTooSmall { class });
        }
        let z = &series[class - 1];
        let pivots: BTreeSet<usize> = z.pivot_columns().into_iter().collect();
        let kept: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let new_pos: BTreeMap<usize, usize> = kept
            .iter()
            .enumerate()
            .map(|(new, old)| (*old, new))
            .collect();
        let mut entries = Vec::new();
        for (new_i, &old_i) in kept.iter().enumerate() {
            for (offset, &old_j) in kept[new_i + 1..].iter().enumerate() {
                let new_j = new_i + 1 + offset;
                let reduced = z.reduce(&self.basis_bracket(old_i, old_j));
                for (old_k, c) in reduced {
                    entries.push((new_i, new_j, new_pos[&old_k], c));
                }
            }
        }
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(LieAlgebra::new(kept.len(), Some(labels), entries)
            .expect("projection of valid constants stays well-formed"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian, heisenberg};
    use crate::free_lie::free_nilpotent;
    use crate::linalg::rat;

    fn series_dims(l: &LieAlgebra) -> Vec<usize> {
        l.lower_central_series().iter().map(Subspace::dim).collect()
    }

    #[test]
    fn heisenberg_validates() {
        heisenberg(1).validate().unwrap();
        heisenberg(3).validate().unwrap();
        abelian(4).validate().unwrap();
    }

    #[test]
    fn corrupted_heisenberg_reports_first_triple() {
        // add [e1,e3] = e1 on top of [e1,e2] = e3
        let l = LieAlgebra::new(3, None, vec![(0, 1, 2, rat(1)), (0, 2, 0, rat(1))]).unwrap();
        assert_eq!(l.validate(), Err(JacobiViolation { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn constructor_rejects_bad_entries() {
        assert_eq!(
            LieAlgebra::new(2, None, vec![(0, 1, 5, rat(1))]),
            Err(StructureError::IndexOutOfRange { index: 6, dim: 2 })
        );
        assert_eq!(
            LieAlgebra::new(3, None, vec![(1, 0, 2, rat(1))]),
            Err(StructureError::PairNotCanonical { i: 2, j: 1 })
        );
        assert_eq!(
            LieAlgebra::new(3, None, vec![(0, 1, 2, rat(1)), (0, 1, 2, rat(2))]),
            Err(StructureError::DuplicateEntry { i: 1, j: 2, k: 3 })
        );
    }

    #[test]
    fn product_space_examples() {
        let ab = abelian(3);
        let whole = ab.whole_space();
        assert!(ab.product_space(&whole, &whole).unwrap().is_zero());

        let h = heisenberg(1);
        let derived = h.product_space(&h.whole_space(), &h.whole_space()).unwrap();
        assert_eq!(derived.dim(), 1);
        assert!(derived.contains(&SparseVec::from([(2, rat(1))])));

        let f = free_nilpotent(2, 3);
        let derived = f.product_space(&f.whole_space(), &f.whole_space()).unwrap();
        assert_eq!(derived.dim(), 3);
    }

    #[test]
    fn product_space_is_symmetric() {
        let f = free_nilpotent(2, 3);
        let series = f.lower_central_series();
        let a = &series[0];
        let b = &series[1];
        assert_eq!(
            f.product_space(a, b).unwrap(),
            f.product_space(b, a).unwrap()
        );
    }

    #[test]
    fn product_space_ambient_mismatch() {
        let h = heisenberg(1);
        let wrong = Subspace::whole(5);
        assert!(matches!(
            h.product_space(&wrong, &h.whole_space()),
            Err(LieError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn series_of_abelian() {
        assert_eq!(series_dims(&abelian(4)), vec![4, 0]);
    }

    #[test]
    fn series_of_free_nilpotent() {
        assert_eq!(series_dims(&free_nilpotent(2, 2)), vec![3, 1, 0]);
        assert_eq!(series_dims(&free_nilpotent(2, 3)), vec![5, 3, 2, 0]);
    }

    #[test]
    fn nilpotency_class_values() {
        assert_eq!(free_nilpotent(2, 2).nilpotency_class().unwrap(), 2);
        assert_eq!(abelian(5).nilpotency_class().unwrap(), 1);
        assert_eq!(heisenberg(2).nilpotency_class().unwrap(), 2);
    }

    #[test]
    fn non_nilpotent_detected() {
        // [e1,e2] = e2 plus a central e3
        let l = LieAlgebra::new(3, None, vec![(0, 1, 1, rat(1))]).unwrap();
        l.validate().unwrap();
        assert_eq!(
            l.nilpotency_class(),
            Err(LieError::NotNilpotent { stable_dim: 1 })
        );
        assert!(l.min_generators().is_err());
    }

    #[test]
    fn min_generators_values() {
        assert_eq!(free_nilpotent(2, 3).min_generators().unwrap(), 2);
        assert_eq!(abelian(4).min_generators().unwrap(), 4);
        assert_eq!(heisenberg(1).min_generators().unwrap(), 2);
    }

    #[test]
    fn quotient_of_free_nilpotent_drops_top_degree() {
        let q = free_nilpotent(2, 3).quotient_by_last_term().unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(series_dims(&q), series_dims(&free_nilpotent(2, 2)));
        q.validate().unwrap();
    }

    #[test]
    fn quotient_of_class_two_is_abelian() {
        let q = free_nilpotent(2, 2).quotient_by_last_term().unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.bracket_entries().count(), 0);

        let q = heisenberg(1).quotient_by_last_term().unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.bracket_entries().count(), 0);
    }

    #[test]
    fn quotient_needs_class_two() {
        assert_eq!(
            abelian(3).quotient_by_last_term(),
            Err(LieError::ClassTooSmall { class: 1 })
        );
    }

    #[test]
    fn quotient_dimension_matches_witt_sums() {
        use crate::witt::witt_dimension_usize as w;
        for (n, c) in [(2u64, 3u64), (2, 4), (3, 3)] {
            let q = free_nilpotent(n, c).quotient_by_last_term().unwrap();
            let expected: usize = (1..c).map(|d| w(n, d)).sum();
            assert_eq!(q.dim(), expected);
        }
    }

    #[test]
    fn generator_chain_for_free_nilpotent() {
        // dim L / L^2 agrees with the generator count at both ends
        for (n, c) in [(2u64, 2u64), (2, 4), (3, 2)] {
            let l = free_nilpotent(n, c);
            let series = l.lower_central_series();
            assert_eq!(l.dim() - series[1].dim(), n as usize);
            assert_eq!(l.min_generators().unwrap(), n as usize);
        }
    }

    #[test]
    fn subspace_reduce_and_contains() {
        let s = Subspace::from_spanning(
            3,
            vec![
                SparseVec::from([(0, rat(1)), (2, rat(2))]),
                SparseVec::from([(1, rat(1))]),
            ],
        );
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&SparseVec::from([(0, rat(2)), (1, rat(3)), (2, rat(4))])));
        assert!(!s.contains(&SparseVec::from([(2, rat(1))])));
        assert_eq!(s.pivot_columns(), vec![0, 1]);
    }
}
