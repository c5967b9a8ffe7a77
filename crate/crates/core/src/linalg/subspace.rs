use super::{EchelonForm, LinalgError, SparseVec};
use crate::Rational;

/// Subspace of ℚⁿ held as its reduced row echelon basis, so equal subspaces
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    echelon: EchelonForm,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { echelon: EchelonForm::new(ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_sparse(ambient_dim, (0..ambient_dim).map(SparseVec::unit)).expect("units are in range")
    }

    pub fn from_echelon(echelon: EchelonForm) -> Self {
        Subspace { echelon }
    }

    pub fn from_sparse<I>(ambient_dim: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut echelon = EchelonForm::new(ambient_dim);
        for v in vectors {
            if v.support_bound() > ambient_dim {
                return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.support_bound() });
            }
            echelon.insert(&v);
        }
        Ok(Subspace { echelon })
    }

    pub fn from_dense<I>(ambient_dim: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut sparse = Vec::new();
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
            sparse.push(SparseVec::from_dense(&v));
        }
        Self::from_sparse(ambient_dim, sparse)
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn basis(&self) -> &[SparseVec] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn dense_vector(&self, i: usize) -> Vec<Rational> {
        self.basis()[i].to_dense(self.ambient_dim())
    }

    pub fn echelon(&self) -> &EchelonForm {
        &self.echelon
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim(), found: other.ambient_dim() });
        }
        let mut echelon = self.echelon.clone();
        for v in other.basis() {
            echelon.insert(v);
        }
        Ok(Subspace { echelon })
    }
}

/// A complement of `sub` inside `within`, chosen greedily from `within`'s
/// echelon basis and returned in reduced echelon form.
pub fn complement_in(sub: &Subspace, within: &Subspace) -> Result<Subspace, LinalgError> {
    if sub.ambient_dim() != within.ambient_dim() {
        return Err(LinalgError::DimensionMismatch { expected: within.ambient_dim(), found: sub.ambient_dim() });
    }
    if !sub.is_subspace_of(within) {
        return Err(LinalgError::NotContained);
    }
    let mut acc = sub.echelon.clone();
    let chosen: Vec<SparseVec> = within.basis().iter().filter(|v| acc.insert(v)).cloned().collect();
    Subspace::from_sparse(within.ambient_dim(), chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|&(i, v)| (i, Rational::from_integer(v.into()))).collect())
    }

    #[test]
    fn equal_spans_compare_equal() {
        let a = Subspace::from_sparse(3, [sv(&[(0, 1), (1, 1)]), sv(&[(1, 1)])]).unwrap();
        let b = Subspace::from_sparse(3, [sv(&[(0, 2)]), sv(&[(0, 1), (1, -1)])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn complement_of_self_is_zero() {
        let w = Subspace::from_sparse(3, [sv(&[(0, 1), (2, 1)]), sv(&[(1, 1)])]).unwrap();
        let c = complement_in(&w, &w).unwrap();
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn complement_of_zero_is_within() {
        let full = Subspace::full(2);
        assert_eq!(complement_in(&Subspace::zero(2), &full).unwrap(), full);
    }

    #[test]
    fn complement_of_axis_in_q3() {
        let sub = Subspace::from_sparse(3, [sv(&[(0, 1)])]).unwrap();
        let full = Subspace::full(3);
        let c = complement_in(&sub, &full).unwrap();
        assert_eq!(c.dim(), 2);
        // oracle: stacked bases have full rank and nothing of c lies in sub
        assert_eq!(sub.sum(&c).unwrap().dim(), 3);
        assert!(c.basis().iter().all(|v| !sub.contains(v)));
    }

    #[test]
    fn complement_requires_containment() {
        let sub = Subspace::from_sparse(2, [sv(&[(1, 1)])]).unwrap();
        let within = Subspace::from_sparse(2, [sv(&[(0, 1)])]).unwrap();
        assert_eq!(complement_in(&sub, &within), Err(LinalgError::NotContained));
    }

    #[test]
    fn out_of_range_vector_rejected() {
        assert!(Subspace::from_sparse(2, [sv(&[(2, 1)])]).is_err());
        assert!(Subspace::from_dense(2, [vec![Rational::from_integer(1.into())]]).is_err());
    }
}
