//! Crate-wide error type.

use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by construction, validation and search operations.
///
/// Outcomes that are ordinary values for the caller (an unknown Coxeter
/// order, an incomplete group table, a diagram not in the catalog) are not
/// errors; they are encoded in the return types of the operations concerned.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({i},{j}) differs from ({j},{i})")]
    NotSymmetric { i: usize, j: usize },

    #[error("Cartan diagonal entry {index} is {value}, expected 2")]
    BadDiagonal { index: usize, value: BigInt },

    #[error("vector has Cartan norm {norm}, expected 2")]
    NormNotTwo { norm: BigInt },

    #[error("Cartan form is not positive definite")]
    NotPositiveDefinite,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("seed vector {0} is not a real root of the system")]
    SeedNotRoot(String),

    #[error(
        "target roots are not enumerable (not positive definite) and no depth bound was supplied"
    )]
    TargetNotEnumerable,

    #[error("search exhausted without finding an admissible representation")]
    SearchExhausted,

    #[error("unknown catalog name: {0}")]
    NameUnknown(String),

    #[error("root system is reducible")]
    Reducible,

    #[error("rank {0} exceeds the diagram catalog range (max 8)")]
    RankAboveCatalog(usize),

    #[error("internal verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
