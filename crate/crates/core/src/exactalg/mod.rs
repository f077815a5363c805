//! Exact scalars, matrices and subspaces.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::{
    bareiss_det, det_q, det_sign_q, det_sign_rational, nullspace, Echelon, ExactMatrix,
    ExactVector, Matrix, RationalMatrix, Scalar,
};
pub use scalar::{q, q_frac, q_sign, ExactScalar, Gauss, Q};
pub use subspace::{Subspace, SubspaceSummary};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("incompatible shapes {left:?} and {right:?}")]
    Shape {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("entry is not rational")]
    NonRational,
    #[error("column {column} has no invertible pivot")]
    NonUnitPivot { column: usize },
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}
