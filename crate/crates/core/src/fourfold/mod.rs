//! Four-manifold layer: intersection forms, their cohomology algebras,
//! closed-form rank formulas, the example catalog and the rational
//! classification by rank and signature.

mod algebra;
mod form;
mod formulas;

use thiserror::Error;

pub use algebra::CohomologyAlgebra;
pub use form::{canonical_connected_sum, make_form, rationally_equivalent, IntersectionForm};
pub use formulas::{closed_form_ranks, complete_intersection_b2, hypersurface_b2, RankTable};

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourfoldError {
    #[error("form matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("form matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("form is not unimodular (determinant {det})")]
    NotUnimodular { det: String },
    #[error("degrees must be a nonempty list of positive integers")]
    InvalidDegrees,
    #[error("invalid cohomology algebra: {0}")]
    InvalidAlgebra(String),
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Named manifolds whose b₂ comes from a formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Example {
    /// Smooth hypersurface S_d ⊂ ℂP³.
    Hypersurface(u64),
    /// Complete intersection S(d_1, …, d_n) ⊂ ℂPⁿ⁺².
    CompleteIntersection(Vec<u64>),
    K3,
    /// #p ℂP² # q ℂP̄².
    ConnectedSum(usize, usize),
}

impl Example {
    pub fn b2(&self) -> Result<u64, FourfoldError> {
        match self {
            Example::Hypersurface(0) => Err(FourfoldError::InvalidDegrees),
            Example::Hypersurface(d) => Ok(hypersurface_b2(*d)),
            Example::CompleteIntersection(ds) => complete_intersection_b2(ds),
            Example::K3 => Ok(hypersurface_b2(4)),
            Example::ConnectedSum(p, q) => Ok((p + q) as u64),
        }
    }

    /// `(b₂⁺, b₂⁻)` when the catalog knows it.
    pub fn split(&self) -> Option<(usize, usize)> {
        match self {
            Example::ConnectedSum(p, q) => Some((*p, *q)),
            Example::K3 => Some((3, 19)),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Example::Hypersurface(d) => format!("S_{d}"),
            Example::CompleteIntersection(ds) => {
                format!("S({})", ds.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            }
            Example::K3 => "K3".to_string(),
            Example::ConnectedSum(p, q) => format!("#{p} CP2 #{q} CP2bar"),
        }
    }
}
