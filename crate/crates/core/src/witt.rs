//! Mobius function and Witt's dimension formula.
//!
//! `witt_dimension(n, d)` is the dimension of the degree-`d` homogeneous
//! component of a free Lie algebra on `n` generators,
//!
//! ```text
//! l_n(d) = (1/d) * sum over m | d of mu(m) * n^(d/m)
//! ```
//!
//! the same count as the number of aperiodic necklaces (equivalently Lyndon
//! words) of length `d` over an `n`-letter alphabet. These numbers drive
//! everything else: Hall basis sizes, free nilpotent dimensions, and the
//! class/generator bound on the multiplier.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Mobius function: `0` when `m` has a squared prime factor, otherwise
/// `(-1)^k` with `k` the number of distinct prime factors.
///
/// Panics when `m == 0`.
pub fn moebius(mut m: u64) -> i8 {
    assert!(m >= 1, "moebius(0) is undefined");
    let mut factors = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors += 1;
    }
    if factors.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All divisors of `d`, ascending.
fn divisors(d: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut m = 1;
    while m * m <= d {
        if d.is_multiple_of(m) {
            small.push(m);
            if m != d / m {
                large.push(d / m);
            }
        }
        m += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Witt's formula `l_n(d)`.
///
/// The divisor sum is accumulated in arbitrary precision and must come out
/// exactly divisible by `d` and nonnegative; either failing is a bug, not
/// an input error, so both are asserted. Panics when `n == 0` or `d == 0`.
pub fn witt_dimension(n: u64, d: u64) -> BigUint {
    assert!(n >= 1, "witt_dimension needs at least one generator");
    assert!(d >= 1, "witt_dimension needs degree >= 1");
    let mut sum = BigInt::zero();
    for m in divisors(d) {
        match moebius(m) {
            0 => {}
            mu => {
                let e = u32::try_from(d / m).expect("degree out of range");
                let term = BigInt::from(n).pow(e);
                if mu > 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(d));
    assert!(r.is_zero(), "Witt sum for l_{n}({d}) not divisible by {d}");
    q.to_biguint()
        .unwrap_or_else(|| panic!("l_{n}({d}) came out negative"))
}

/// `witt_dimension` narrowed to `usize`, for quantities that index a
/// materialized basis. Panics if the value does not fit, which would mean
/// the basis could not be materialized anyway.
pub fn witt_dimension_usize(n: u64, d: u64) -> usize {
    witt_dimension(n, d)
        .to_usize()
        .expect("Witt dimension exceeds addressable size")
}

/// The class/generator bound `sum_{j=1..c} l_n(j+1)`: an upper bound for
/// the multiplier dimension of any nilpotent algebra of class `c` on `n`
/// generators. Panics when `n == 0` or `c == 0`.
pub fn bound_class_generators(n: u64, c: u64) -> BigUint {
    assert!(n >= 1 && c >= 1, "bound needs n >= 1 and c >= 1");
    (1..=c).map(|j| witt_dimension(n, j + 1)).sum()
}

/// Table of `l_n(d)` for `d = 1..=maxdeg`.
#[derive(Debug, Clone)]
pub struct WittTable {
    pub n: u64,
    pub values: Vec<(u64, BigUint)>,
}

impl WittTable {
    pub fn new(n: u64, maxdeg: u64) -> Self {
        let values = (1..=maxdeg).map(|d| (d, witt_dimension(n, d))).collect();
        WittTable { n, values }
    }

    pub fn value(&self, d: u64) -> &BigUint {
        &self.values[(d - 1) as usize].1
    }

    /// Partial sums: entry `d-1` is the dimension of the free nilpotent
    /// algebra of class `d` on `n` generators.
    pub fn cumulative(&self) -> Vec<BigUint> {
        let mut acc = BigUint::zero();
        self.values
            .iter()
            .map(|(_, l)| {
                acc += l;
                acc.clone()
            })
            .collect()
    }

    /// Mobius-inversion identity `sum_{m|d} m * l_n(m) = n^d` for every
    /// degree in the table; the standard independent check on the values.
    pub fn necklace_identity_holds(&self) -> bool {
        self.values.iter().all(|(d, _)| {
            let total: BigUint = divisors(*d)
                .into_iter()
                .map(|m| BigUint::from(m) * self.value(m))
                .sum();
            total == BigUint::from(self.n).pow(u32::try_from(*d).unwrap())
        })
    }
}
