//! Exact computation of Schur multipliers of finite-dimensional Lie algebras.
//!
//! The library constructs free nilpotent Lie algebras on a Hall basis,
//! computes `dim M(L)` for any Lie algebra given by structure constants
//! (as the degree-2 homology of its Chevalley-Eilenberg complex over the
//! rationals), and evaluates the classical dimension bounds so they can be
//! compared against the exact value.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals and
//! every dimension is obtained from an integer rank computation. There is
//! no floating point anywhere in the crate.
//!
//! Module map:
//!
//! * [`linalg`] - rational scalars, sparse matrices, fraction-free rank.
//! * [`witt`] - Mobius function and Witt's dimension formula `l_n(d)`.
//! * [`free_lie`] - Hall bases and free nilpotent quotients `F/F^(c+1)`.
//! * [`lie`] - structure-constant algebras, lower central series, quotients.
//! * [`multiplier`] - Chevalley-Eilenberg boundaries and `dim M(L)`.
//! * [`bounds`] - upper bounds, nontriviality check, comparison reports.
//! * [`catalog`] - built-in algebra families and the text file format.

pub mod bounds;
pub mod catalog;
pub mod free_lie;
pub mod lie;
pub mod linalg;
pub mod multiplier;
pub mod witt;

pub use bounds::{
    bound_hardy, bound_moneyhun, class_generator_bound, compare, euler_identity_free_nilpotent,
    verify_nontriviality, BoundReport, EulerIdentityReport, NontrivialityVerdict, Winner,
};
pub use catalog::{builtin, parse, serialize, CatalogEntry, CatalogError, ParseError};
pub use free_lie::{free_nilpotent, HallBasis, HallTree, LieElement};
pub use lie::{LieAlgebra, LieError, Subspace};
pub use linalg::{Rational, SparseMatrix, SparseVec};
pub use multiplier::{
    ce_boundary_2, ce_boundary_3, multiplier_dimension, multiplier_of_free_nilpotent,
};
pub use witt::{bound_class_generators, moebius, witt_dimension, WittTable};
