use num_traits::{One, Signed};

use super::FourfoldError;
use crate::linalg::{congruence_diagonalize, determinant, LinalgError, QMatrix};
use crate::Rational;

/// Symmetric unimodular integer form on H² of a closed oriented simply
/// connected four-manifold. The 0x0 form stands for b₂ = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    name: Option<String>,
    matrix: Vec<Vec<i64>>,
    b2plus: usize,
    b2minus: usize,
}

impl IntersectionForm {
    /// Validates symmetry and `|det| = 1`, then reads b₂⁺ and b₂⁻ off a
    /// congruence diagonalization.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, FourfoldError> {
        let n = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(FourfoldError::NotSquare { rows: n, cols: row.len() });
        }
        let q = QMatrix::from_integers(&matrix).map_err(|_| FourfoldError::NotSquare { rows: n, cols: 0 })?;
        let diag = congruence_diagonalize(&q).map_err(|e| match e {
            LinalgError::NotSymmetric { row, col } => FourfoldError::NotSymmetric { row, col },
            other => FourfoldError::Linalg(other),
        })?;
        if n > 0 {
            let det = determinant(&q).map_err(FourfoldError::Linalg)?;
            if !det.abs().is_one() {
                return Err(FourfoldError::NotUnimodular { det: det.to_string() });
            }
        }
        debug_assert_eq!(diag.nullity(), 0);
        Ok(IntersectionForm { name: None, matrix, b2plus: diag.positive(), b2minus: diag.negative() })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// diag(+1 × p, −1 × q), the form of #p ℂP² # q ℂP̄².
    pub fn diagonal(p: usize, q: usize) -> Self {
        let n = p + q;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i != j {
                            0
                        } else if i < p {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        IntersectionForm { name: None, matrix, b2plus: p, b2minus: q }
    }

    pub fn hyperbolic() -> Self {
        Self::new(vec![vec![0, 1], vec![1, 0]]).expect("hyperbolic plane is unimodular").with_name("H")
    }

    /// Cartan matrix of E8: positive definite, even, unimodular.
    pub fn e8() -> Self {
        // chain 0-1-2-3-4-5-6 with node 7 attached to node 4
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        let mut m = vec![vec![0i64; 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            m[a][b] = -1;
            m[b][a] = -1;
        }
        Self::new(m).expect("E8 is unimodular").with_name("E8")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn b2plus(&self) -> usize {
        self.b2plus
    }

    pub fn b2minus(&self) -> usize {
        self.b2minus
    }

    pub fn signature(&self) -> i64 {
        self.b2plus as i64 - self.b2minus as i64
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_integers(&self.matrix).expect("validated square")
    }

    /// `Uᵀ Q U` for an integer change of basis `U`. Fails unless `det U = ±1`.
    pub fn transformed(&self, u: &[Vec<i64>]) -> Result<Self, FourfoldError> {
        let n = self.rank();
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(FourfoldError::NotSquare { rows: u.len(), cols: u.first().map_or(0, Vec::len) });
        }
        let uq = QMatrix::from_integers(u).map_err(FourfoldError::Linalg)?;
        let det = determinant(&uq).map_err(FourfoldError::Linalg)?;
        if !det.abs().is_one() {
            return Err(FourfoldError::NotUnimodular { det: det.to_string() });
        }
        let product = uq.transpose().mul(&self.to_qmatrix()).and_then(|m| m.mul(&uq)).map_err(FourfoldError::Linalg)?;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v: &Rational = product.get(i, j);
                        i64::try_from(v.to_integer()).map_err(|_| FourfoldError::Overflow)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Self::new(matrix)?;
        out.name = self.name.clone();
        Ok(out)
    }
}

/// Validating constructor for a form given as an integer matrix.
pub fn make_form(matrix: Vec<Vec<i64>>) -> Result<IntersectionForm, FourfoldError> {
    IntersectionForm::new(matrix)
}

/// Same rational homotopy type exactly when rank and signature agree.
pub fn rationally_equivalent(a: &IntersectionForm, b: &IntersectionForm) -> bool {
    a.rank() == b.rank() && a.signature() == b.signature()
}

/// `(p, q)` such that the manifold is rationally equivalent to
/// `#p ℂP² # q ℂP̄²`.
pub fn canonical_connected_sum(form: &IntersectionForm) -> (usize, usize) {
    (form.b2plus(), form.b2minus())
}
