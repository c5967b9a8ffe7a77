//! Exact linear algebra over ℚ.
//!
//! Two elimination paths live here. [`QMatrix`] with [`rref`] and
//! [`kernel_basis`] is the dense reference; [`SparseMatrix`] and
//! [`EchelonForm`] do the same job on sparse rows and are what the model
//! engine uses for its cocycle systems. Both produce the unique reduced row
//! echelon form, so their answers can be compared for exact equality.

mod dense;
mod sparse;
mod subspace;

pub use dense::{congruence_diagonalize, determinant, kernel_basis, rref, Diagonalization, QMatrix, Rref};
pub use sparse::{EchelonForm, SparseMatrix, SparseVec};
pub use subspace::{complement_in, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspace is not contained in the enclosing subspace")]
    NotContained,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[cfg(test)]
mod proptests;
