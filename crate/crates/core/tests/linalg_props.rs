//! Property tests for the exact linear algebra layer.

use lieschur::linalg::{frac, SparseMatrix};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct MatrixCase {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64, i64)>,
}

impl MatrixCase {
    fn build(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.rows, self.cols);
        for &(r, c, p, q) in &self.entries {
            // later duplicates overwrite earlier ones, which is fine here
            m.set(r, c, frac(p, q));
        }
        m
    }
}

fn arb_matrix() -> impl Strategy<Value = MatrixCase> {
    (1usize..6, 1usize..6).prop_flat_map(|(rows, cols)| {
        let entry = (0..rows, 0..cols, -6i64..=6, 1i64..=4);
        proptest::collection::vec(entry, 0..=rows * cols).prop_map(move |entries| MatrixCase {
            rows,
            cols,
            entries,
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn rank_bounded_and_nullity_complements(case in arb_matrix()) {
        let m = case.build();
        let rank = m.rank();
        prop_assert!(rank <= m.rows().min(m.cols()));
        prop_assert_eq!(rank + m.nullity(), m.cols());
    }

    #[test]
    fn rank_equals_canonical_row_count(case in arb_matrix()) {
        let m = case.build();
        prop_assert_eq!(m.rank(), m.row_space_canonical().rows());
    }

    #[test]
    fn canonical_form_is_idempotent(case in arb_matrix()) {
        let once = case.build().row_space_canonical();
        prop_assert_eq!(once.row_space_canonical(), once);
    }

    #[test]
    fn rank_invariant_under_permutation(
        case in arb_matrix()
            .prop_flat_map(|c| {
                let rp = permutation(c.rows);
                let cp = permutation(c.cols);
                (Just(c), rp, cp)
            })
    ) {
        let (case, row_perm, col_perm) = case;
        let m = case.build();
        let mut permuted = SparseMatrix::zero(m.rows(), m.cols());
        for (r, c, v) in m.entries() {
            permuted.set(row_perm[r], col_perm[c], v.clone());
        }
        prop_assert_eq!(permuted.rank(), m.rank());
    }

    #[test]
    fn rank_invariant_under_row_scaling(
        case in arb_matrix().prop_flat_map(|c| {
            let scales = proptest::collection::vec(
                ((-5i64..=5).prop_filter("nonzero", |p| *p != 0), 1i64..=4),
                c.rows,
            );
            (Just(c), scales)
        })
    ) {
        let (case, scales) = case;
        let m = case.build();
        let mut scaled = SparseMatrix::zero(m.rows(), m.cols());
        for (r, c, v) in m.entries() {
            let (p, q) = scales[r];
            scaled.set(r, c, v * frac(p, q));
        }
        prop_assert_eq!(scaled.rank(), m.rank());
    }

    #[test]
    fn canonical_form_detects_equal_row_spaces(case in arb_matrix(), scale_p in 1i64..=5) {
        // appending scaled copies of existing rows never changes the row space
        let m = case.build();
        let mut doubled_rows = Vec::new();
        for r in 0..m.rows() {
            doubled_rows.push(m.row(r));
        }
        for r in 0..m.rows() {
            let scaled = m
                .row(r)
                .into_iter()
                .map(|(c, v)| (c, v * frac(scale_p, 1)))
                .collect();
            doubled_rows.push(scaled);
        }
        let stacked = SparseMatrix::from_sparse_rows(m.cols(), doubled_rows);
        prop_assert_eq!(stacked.row_space_canonical(), m.row_space_canonical());
    }
}
