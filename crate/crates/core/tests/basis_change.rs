//! Invariance oracles: a change of basis scrambles the structure constants
//! but must not change validity, the derived dimension, the multiplier, or
//! the chain-complex identity. Running the pipeline on randomly twisted
//! presentations of known algebras checks the whole stack at once.

use lieschur::catalog::{abelian, filiform, heisenberg};
use lieschur::free_lie::free_nilpotent;
use lieschur::lie::LieAlgebra;
use lieschur::linalg::{rat, Rational, SparseVec};
use lieschur::multiplier::{ce_boundary_2, ce_boundary_3, multiplier_dimension};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Conjugate `l` by a random integer matrix of determinant +-1, built as a
/// product of elementary row operations so the inverse is exact and cheap.
fn random_basis_change(l: &LieAlgebra, rng: &mut ChaCha8Rng) -> LieAlgebra {
    let n = l.dim();
    let mut p: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect();
    let mut p_inv = p.clone();
    if n >= 2 {
        for _ in 0..3 * n {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let lambda = rat([-2, -1, 1, 2][rng.random_range(0..4)]);
            // p: row_i += lambda * row_j; p_inv: col_j -= lambda * col_i
            let source_row = p[j].clone();
            for (target, source) in p[i].iter_mut().zip(&source_row) {
                *target += source * &lambda;
            }
            for row in p_inv.iter_mut() {
                let sub = &row[i] * &lambda;
                row[j] -= sub;
            }
        }
    }

    let row = |m: &Vec<Vec<Rational>>, r: usize| -> SparseVec {
        m[r].iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect()
    };

    let mut entries = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let v = l.bracket_vectors(&row(&p, a), &row(&p, b));
            let mut coeffs = vec![Rational::zero(); n];
            for (t, c) in &v {
                for (coeff, pk) in coeffs.iter_mut().zip(&p_inv[*t]) {
                    *coeff += c * pk;
                }
            }
            for (k, coeff) in coeffs.into_iter().enumerate() {
                if !coeff.is_zero() {
                    entries.push((a, b, k, coeff));
                }
            }
        }
    }
    LieAlgebra::new(n, None, entries).expect("transform keeps entries canonical")
}

fn test_set() -> Vec<LieAlgebra> {
    vec![
        abelian(4),
        heisenberg(1),
        heisenberg(2),
        filiform(4),
        filiform(6),
        free_nilpotent(2, 3),
        free_nilpotent(3, 2),
    ]
}

#[test]
fn twisted_presentations_stay_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for l in test_set() {
        for _ in 0..3 {
            let twisted = random_basis_change(&l, &mut rng);
            twisted
                .validate()
                .unwrap_or_else(|e| panic!("dim {}: {e}", l.dim()));
        }
    }
}

#[test]
fn multiplier_is_a_basis_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for l in test_set() {
        let expected = multiplier_dimension(&l);
        for _ in 0..2 {
            let twisted = random_basis_change(&l, &mut rng);
            assert_eq!(
                multiplier_dimension(&twisted),
                expected,
                "multiplier changed under basis change (dim {})",
                l.dim()
            );
            assert_eq!(twisted.derived_dim(), l.derived_dim());
        }
    }
}

#[test]
fn chain_complex_survives_basis_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for l in test_set() {
        let twisted = random_basis_change(&l, &mut rng);
        let product = ce_boundary_2(&twisted)
            .multiply(&ce_boundary_3(&twisted))
            .unwrap();
        assert!(
            product.is_zero(),
            "d2*d3 != 0 after twist (dim {})",
            l.dim()
        );
    }
}

#[test]
fn class_and_generators_are_basis_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for l in test_set() {
        let twisted = random_basis_change(&l, &mut rng);
        assert_eq!(
            twisted.nilpotency_class().unwrap(),
            l.nilpotency_class().unwrap()
        );
        assert_eq!(
            twisted.min_generators().unwrap(),
            l.min_generators().unwrap()
        );
        let twisted_series: Vec<usize> = twisted
            .lower_central_series()
            .iter()
            .map(|s| s.dim())
            .collect();
        let original_series: Vec<usize> =
            l.lower_central_series().iter().map(|s| s.dim()).collect();
        assert_eq!(twisted_series, original_series);
    }
}
