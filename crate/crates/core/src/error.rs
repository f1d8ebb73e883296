//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("not a partition: parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },

    #[error("{0} is not a {1}-core")]
    NotNCore(String, usize),

    #[error("partition {0} is not {1}-bounded")]
    NotKBounded(String, usize),

    #[error("empty interval: {lower} is not contained in {upper}")]
    EmptyInterval { lower: String, upper: String },

    #[error("interval [{lower}, {upper}] is a chain; no interval swap exists")]
    ChainInterval { lower: String, upper: String },

    #[error("interval [{lower}, {upper}] is not of rank 2 (rank {rank})")]
    NotRank2 {
        lower: String,
        upper: String,
        rank: i64,
    },

    #[error("window {0:?} is not an affine permutation for n={1}: {2}")]
    BadWindow(Vec<i64>, usize, String),

    #[error("affine permutation is not a minimal coset representative (window not increasing)")]
    NotMinCosetRep,

    #[error("invalid transposition sequence at step {step}: {reason}")]
    BadTranspositionSequence { step: usize, reason: String },

    #[error("invalid starred strong tableau: {0}")]
    BadTableau(String),

    #[error("transposition sequence touches rod {0}; flattening undefined")]
    RodTouched(i64),

    #[error("{0} is not a cloneable index for this interval")]
    NotCloneable(i64),

    #[error("cannot squash at {0}: block is not a clone of its neighbor")]
    NotSquashable(i64),

    #[error("cloning does not commute with phi_{i} on this component (counterexample at vertex {vertex})")]
    CloningDoesNotCommute { i: usize, vertex: usize },

    #[error("theta is defined only on 2-core staircase shapes, got {0}")]
    WrongShape(String),

    #[error("quasisymmetric vector is not symmetric: residual at signature {0}")]
    NotSymmetric(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("rank-4 component matches no known isomorphism type ({0})")]
    UnknownType(String),

    #[error("size {size} exceeds configured bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("invalid descent set: {0}")]
    InvalidDescentSet(String),

    #[error("k-Schur expansion failed: {0}")]
    ExpansionFailed(String),

    #[error("phi_{i} hit a configuration not covered by the swap case analysis: {detail}")]
    UncoveredPhiCase { i: usize, detail: String },
}
