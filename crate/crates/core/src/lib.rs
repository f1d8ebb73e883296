//! Exact-arithmetic combinatorics engine for the poset of n-core partitions,
//! starred strong tableaux, affine dual equivalence graphs, and k-Schur /
//! LLT / Macdonald polynomial expansions in the fundamental quasisymmetric
//! basis.
//!
//! Everything is computed over the integers; there is no floating point
//! anywhere. The algebra layer ([`symfun`]) is generic over the coefficient
//! type via [`symfun::Coeff`]; the crate-root aliases fix `i64`.

pub mod affine;
pub mod cores;
pub mod degraphs;
pub mod error;
pub mod involutions;
pub mod llt_mac;
pub mod poset;
pub mod symfun;
pub mod tableaux;

pub use error::CoreError;

/// Default exact coefficient type.
pub type Int = i64;
/// Polynomial in q and t with `i64` coefficients.
pub type Poly = symfun::QtPoly<Int>;
/// Quasisymmetric vector with `i64` polynomial coefficients.
pub type QSym = symfun::QSymVector<Int>;
/// Schur-basis vector with `i64` polynomial coefficients.
pub type Schur = symfun::SchurVector<Int>;
