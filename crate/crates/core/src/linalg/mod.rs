//! Exact linear algebra over the Gaussian rationals.

mod matrix;
mod modular;
mod rank;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use modular::{rank_fast, RankPath};
pub use rank::{rank, rank_column_order, rank_of_rows};
pub use scalar::Scalar;
pub use subspace::{intersection_dim, kernel, sum_dim, Echelon, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("rows have differing lengths")]
    Ragged,
    #[error("empty input")]
    Empty,
}
