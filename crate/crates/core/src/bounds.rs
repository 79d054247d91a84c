//! Upper bounds on the multiplier dimension and the checks tying them to
//! the exact value.
//!
//! Three classical bounds are evaluated:
//!
//! * the class/generator bound `sum_{j=1..c} l_n(j+1)` for a nilpotent
//!   algebra of class `c` on `n` generators;
//! * Hardy's bound `N(N-1)/2 - dim L^2` with `N = dim L`;
//! * the Moneyhun bound `N(N-1)/2`.
//!
//! Note the two different letters hiding behind the literature's `n`: the
//! first bound uses the generator count, the other two use the dimension.
//! [`BoundReport`] keeps them as separate fields for that reason.
//!
//! Beyond the bounds, this module checks the nontriviality theorem (a
//! nilpotent algebra of dimension greater than one has nonzero multiplier)
//! and the alternating-sum dimension identity of the four-term exact
//! sequence
//!
//! ```text
//! 0 -> F^(c+1)/([F,R] cap F^(c+1)) -> M(L) -> M(L/L^c) -> L^c -> 0
//! ```
//!
//! specialized to free nilpotent algebras, where every term has the closed
//! form given by Witt's formula.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::free_lie::free_nilpotent;
use crate::lie::{LieAlgebra, LieError};
use crate::multiplier::multiplier_dimension;
use crate::witt::{bound_class_generators, witt_dimension, witt_dimension_usize};

/// Which upper bound is strictly smaller for a given algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    ClassGenerators,
    Hardy,
    Tie,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            Winner::ClassGenerators => "class_generators",
            Winner::Hardy => "hardy",
            Winner::Tie => "tie",
        };
        f.write_str(token)
    }
}

/// Everything the `report` command prints for one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub dim: usize,
    pub class: usize,
    pub generators: usize,
    pub derived_dim: usize,
    pub multiplier_dim: usize,
    pub bound_class_generators: BigUint,
    pub bound_hardy: BigInt,
    pub bound_moneyhun: BigUint,
    pub winner: Winner,
    pub nontrivial_ok: bool,
}

/// The class/generator bound for a nilpotent algebra. The zero algebra has
/// an empty bound sum.
pub fn class_generator_bound(l: &LieAlgebra) -> Result<BigUint, LieError> {
    let class = l.nilpotency_class()?;
    let generators = l.min_generators()?;
    if l.dim() == 0 {
        return Ok(BigUint::zero());
    }
    Ok(bound_class_generators(generators as u64, class as u64))
}

/// Hardy's bound `N(N-1)/2 - dim L^2`; defined for any algebra and kept
/// signed rather than clamped.
pub fn bound_hardy(l: &LieAlgebra) -> BigInt {
    let n = BigInt::from(l.dim());
    let pairs = &n * (&n - BigInt::from(1)) / BigInt::from(2);
    pairs - BigInt::from(l.derived_dim())
}

/// The Moneyhun bound `N(N-1)/2` with `N = dim L`.
pub fn bound_moneyhun(l: &LieAlgebra) -> BigUint {
    let n = BigUint::from(l.dim());
    if l.dim() == 0 {
        return BigUint::zero();
    }
    &n * (&n - BigUint::from(1u32)) / BigUint::from(2u32)
}

/// Outcome of checking `dim L > 1 => M(L) != 0` on one algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NontrivialityVerdict {
    /// Hypothesis met and the multiplier is nonzero.
    Pass { multiplier: usize },
    /// Hypothesis met but the multiplier vanished; the theorem would be
    /// falsified, so seeing this means a computation bug.
    Fail { multiplier: usize },
    /// `dim L <= 1`, where the statement says nothing.
    HypothesisNotMet { multiplier: usize },
}

impl NontrivialityVerdict {
    pub fn is_failure(&self) -> bool {
        matches!(self, NontrivialityVerdict::Fail { .. })
    }

    pub fn multiplier(&self) -> usize {
        match *self {
            NontrivialityVerdict::Pass { multiplier }
            | NontrivialityVerdict::Fail { multiplier }
            | NontrivialityVerdict::HypothesisNotMet { multiplier } => multiplier,
        }
    }
}

/// Check the nontriviality theorem on a nilpotent algebra.
pub fn verify_nontriviality(l: &LieAlgebra) -> Result<NontrivialityVerdict, LieError> {
    l.nilpotency_class()?;
    let multiplier = multiplier_dimension(l);
    Ok(if l.dim() <= 1 {
        NontrivialityVerdict::HypothesisNotMet { multiplier }
    } else if multiplier >= 1 {
        NontrivialityVerdict::Pass { multiplier }
    } else {
        NontrivialityVerdict::Fail { multiplier }
    })
}

/// Instances larger than this skip the homological side of the Euler
/// identity check; the closed forms still run. `Lambda^3` grows cubically,
/// and 35 keeps the largest cross-checked instance around five thousand
/// columns.
pub const EULER_HOMOLOGY_DIM_LIMIT: usize = 35;

/// Homological side of the Euler identity check, run when the instance is
/// small enough to materialize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerHomologicalCheck {
    pub dim: usize,
    pub multiplier_full: usize,
    pub multiplier_quotient: usize,
    pub dim_last_term: usize,
    pub matches: bool,
}

/// Result of the exact-sequence dimension identity on `F/F^(c+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerIdentityReport {
    pub n: u64,
    pub c: u64,
    /// `dim F^(c+1)/([F,R] cap F^(c+1)) = l_n(c+1)`.
    pub dim_image: BigUint,
    /// `dim M(L) = l_n(c+1)`.
    pub multiplier_full: BigUint,
    /// `dim M(L/L^c) = l_n(c)`.
    pub multiplier_quotient: BigUint,
    /// `dim L^c = l_n(c)`.
    pub dim_last_term: BigUint,
    /// Alternating sum of the four dimensions vanishes.
    pub closed_form_holds: bool,
    pub homological: Option<EulerHomologicalCheck>,
}

impl EulerIdentityReport {
    pub fn passed(&self) -> bool {
        self.closed_form_holds && self.homological.as_ref().is_none_or(|h| h.matches)
    }
}

/// Check the alternating-sum identity of the exact sequence on the free
/// nilpotent algebra of class `c >= 2` on `n >= 2` generators, with a full
/// homological cross-check whenever the instance dimension is at most
/// [`EULER_HOMOLOGY_DIM_LIMIT`]. Panics on out-of-range `n` or `c`.
pub fn euler_identity_free_nilpotent(n: u64, c: u64) -> EulerIdentityReport {
    assert!(n >= 2, "identity needs at least two generators");
    assert!(c >= 2, "identity needs class at least two");
    let dim_image = witt_dimension(n, c + 1);
    let multiplier_full = witt_dimension(n, c + 1);
    let multiplier_quotient = witt_dimension(n, c);
    let dim_last_term = witt_dimension(n, c);
    let alternating = BigInt::from(dim_image.clone()) - BigInt::from(multiplier_full.clone())
        + BigInt::from(multiplier_quotient.clone())
        - BigInt::from(dim_last_term.clone());
    let closed_form_holds = alternating.is_zero();

    let predicted_dim: usize = (1..=c).map(|d| witt_dimension_usize(n, d)).sum();
    let homological = if predicted_dim <= EULER_HOMOLOGY_DIM_LIMIT {
        let l = free_nilpotent(n, c);
        let series = l.lower_central_series();
        let last_dim = series[(c - 1) as usize].dim();
        let quotient = l
            .quotient_by_last_term()
            .expect("free nilpotent of class >= 2 has a last term");
        let m_full = multiplier_dimension(&l);
        let m_quot = multiplier_dimension(&quotient);
        let matches = l.dim() == predicted_dim
            && BigUint::from(m_full) == multiplier_full
            && BigUint::from(m_quot) == multiplier_quotient
            && BigUint::from(last_dim) == dim_last_term;
        Some(EulerHomologicalCheck {
            dim: l.dim(),
            multiplier_full: m_full,
            multiplier_quotient: m_quot,
            dim_last_term: last_dim,
            matches,
        })
    } else {
        None
    };

    EulerIdentityReport {
        n,
        c,
        dim_image,
        multiplier_full,
        multiplier_quotient,
        dim_last_term,
        closed_form_holds,
        homological,
    }
}

/// Full bound comparison for one nilpotent algebra.
pub fn compare(l: &LieAlgebra, name: &str) -> Result<BoundReport, LieError> {
    let class = l.nilpotency_class()?;
    let generators = l.min_generators()?;
    let derived_dim = l.derived_dim();
    let multiplier_dim = multiplier_dimension(l);
    let cg = class_generator_bound(l)?;
    let hardy = bound_hardy(l);
    let moneyhun = bound_moneyhun(l);
    let winner = match BigInt::from(cg.clone()).cmp(&hardy) {
        std::cmp::Ordering::Less => Winner::ClassGenerators,
        std::cmp::Ordering::Greater => Winner::Hardy,
        std::cmp::Ordering::Equal => Winner::Tie,
    };
    let nontrivial_ok = if l.dim() > 1 {
        multiplier_dim >= 1
    } else {
        true
    };
    Ok(BoundReport {
        name: name.to_owned(),
        dim: l.dim(),
        class,
        generators,
        derived_dim,
        multiplier_dim,
        bound_class_generators: cg,
        bound_hardy: hardy,
        bound_moneyhun: moneyhun,
        winner,
        nontrivial_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian, heisenberg};
    use num_traits::ToPrimitive;

    #[test]
    fn bounds_on_free_class_two() {
        let l = free_nilpotent(2, 2);
        assert_eq!(class_generator_bound(&l).unwrap(), BigUint::from(3u32));
        assert_eq!(bound_hardy(&l), BigInt::from(2));
        assert_eq!(bound_moneyhun(&l), BigUint::from(3u32));
    }

    #[test]
    fn bounds_on_free_class_three() {
        let l = free_nilpotent(2, 3);
        assert_eq!(class_generator_bound(&l).unwrap(), BigUint::from(6u32));
        assert_eq!(bound_hardy(&l), BigInt::from(7));
        assert_eq!(bound_moneyhun(&l), BigUint::from(10u32));
    }

    #[test]
    fn bounds_on_abelian_coincide() {
        for n in 1..=5usize {
            let l = abelian(n);
            let expected = BigUint::from(n * (n - 1) / 2);
            assert_eq!(class_generator_bound(&l).unwrap(), expected);
            assert_eq!(bound_moneyhun(&l), expected);
            assert_eq!(bound_hardy(&l), BigInt::from(n * (n - 1) / 2));
        }
    }

    #[test]
    fn hardy_never_exceeds_moneyhun() {
        for l in [abelian(4), heisenberg(2), free_nilpotent(2, 4)] {
            assert!(bound_hardy(&l) <= BigInt::from(bound_moneyhun(&l)));
        }
    }

    #[test]
    fn class_generator_bound_needs_nilpotency() {
        let l = LieAlgebra::new(2, None, vec![(0, 1, 1, crate::linalg::rat(1))]).unwrap();
        assert!(class_generator_bound(&l).is_err());
    }

    #[test]
    fn nontriviality_verdicts() {
        assert_eq!(
            verify_nontriviality(&heisenberg(1)).unwrap(),
            NontrivialityVerdict::Pass { multiplier: 2 }
        );
        assert_eq!(
            verify_nontriviality(&abelian(1)).unwrap(),
            NontrivialityVerdict::HypothesisNotMet { multiplier: 0 }
        );
        assert_eq!(
            verify_nontriviality(&abelian(5)).unwrap(),
            NontrivialityVerdict::Pass { multiplier: 10 }
        );
    }

    #[test]
    fn euler_identity_small_cases() {
        let r = euler_identity_free_nilpotent(2, 2);
        assert!(r.passed());
        assert_eq!(r.multiplier_full.to_u64(), Some(2));
        assert_eq!(r.dim_last_term.to_u64(), Some(1));
        assert!(r.homological.is_some());

        let r = euler_identity_free_nilpotent(2, 3);
        assert!(r.passed());
        assert_eq!(r.multiplier_full.to_u64(), Some(3));
        assert_eq!(r.multiplier_quotient.to_u64(), Some(2));

        let r = euler_identity_free_nilpotent(3, 2);
        assert!(r.passed());
        assert_eq!(r.multiplier_full.to_u64(), Some(8));
        assert_eq!(r.dim_last_term.to_u64(), Some(3));
    }

    #[test]
    fn euler_identity_skips_homology_when_large() {
        // dim of the class-6 algebra on 4 generators is far above the cap
        let r = euler_identity_free_nilpotent(4, 6);
        assert!(r.closed_form_holds);
        assert!(r.homological.is_none());
        assert!(r.passed());
    }

    #[test]
    fn compare_reproduces_known_reports() {
        let r = compare(&free_nilpotent(2, 2), "free:2,2").unwrap();
        assert_eq!(r.dim, 3);
        assert_eq!(r.multiplier_dim, 2);
        assert_eq!(r.bound_class_generators, BigUint::from(3u32));
        assert_eq!(r.bound_hardy, BigInt::from(2));
        assert_eq!(r.winner, Winner::Hardy);
        assert!(r.nontrivial_ok);

        let r = compare(&free_nilpotent(2, 3), "free:2,3").unwrap();
        assert_eq!(r.dim, 5);
        assert_eq!(r.multiplier_dim, 3);
        assert_eq!(r.bound_class_generators, BigUint::from(6u32));
        assert_eq!(r.bound_hardy, BigInt::from(7));
        assert_eq!(r.winner, Winner::ClassGenerators);

        let r = compare(&abelian(3), "abelian:3").unwrap();
        assert_eq!(r.winner, Winner::Tie);
        assert_eq!(r.multiplier_dim, 3);
    }

    #[test]
    fn compare_handles_zero_algebra() {
        let l = abelian(0);
        let r = compare(&l, "zero").unwrap();
        assert_eq!(r.dim, 0);
        assert_eq!(r.multiplier_dim, 0);
        assert_eq!(r.winner, Winner::Tie);
        assert!(r.nontrivial_ok);
    }

    #[test]
    fn compare_rejects_non_nilpotent() {
        let l = LieAlgebra::new(2, None, vec![(0, 1, 1, crate::linalg::rat(1))]).unwrap();
        assert!(matches!(
            compare(&l, "bad"),
            Err(LieError::NotNilpotent { .. })
        ));
    }
}
