use num_traits::{One, Zero};

use super::{FourfoldError, IntersectionForm};
use crate::linalg::{QMatrix, SparseVec};
use crate::Rational;

/// Finite-dimensional graded-commutative algebra with zero differential,
/// given by a homogeneous basis and structure constants. Basis element 0 is
/// the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyAlgebra {
    names: Vec<String>,
    degrees: Vec<u32>,
    /// `products[i][j]` is `e_i · e_j` in basis coordinates.
    products: Vec<Vec<SparseVec>>,
}

impl CohomologyAlgebra {
    pub fn new(names: Vec<String>, degrees: Vec<u32>, products: Vec<Vec<SparseVec>>) -> Result<Self, FourfoldError> {
        let n = names.len();
        if degrees.len() != n || products.len() != n || products.iter().any(|r| r.len() != n) {
            return Err(FourfoldError::InvalidAlgebra("basis, degrees and product table disagree in size".into()));
        }
        if n == 0 || degrees[0] != 0 {
            return Err(FourfoldError::InvalidAlgebra("basis element 0 must be the degree-0 unit".into()));
        }
        let alg = CohomologyAlgebra { names, degrees, products };
        let unit = SparseVec::unit(0);
        for i in 0..n {
            let e = SparseVec::unit(i);
            if alg.mul(&unit, &e) != e || alg.mul(&e, &unit) != e {
                return Err(FourfoldError::InvalidAlgebra(format!("element 0 is not a unit for {}", alg.names[i])));
            }
            for j in 0..n {
                let want = alg.degrees[i] + alg.degrees[j];
                if alg.products[i][j].iter().any(|(k, _)| k >= n || alg.degrees[k] != want) {
                    return Err(FourfoldError::InvalidAlgebra(format!(
                        "product {} * {} is not homogeneous of degree {want}",
                        alg.names[i], alg.names[j]
                    )));
                }
            }
        }
        Ok(alg)
    }

    /// Cohomology of a four-manifold with the given split of b₂.
    ///
    /// For b₂ ≥ 1 the basis is `1, x1..x_b2, V` with `x_i x_j = 0` for
    /// `i ≠ j`, `x_i² = V` for `i ≤ b₂⁺` and `x_i² = −V` otherwise. For
    /// b₂ = 0 it is `1, x` with `|x| = 4` and `x² = 0`.
    pub fn four_manifold(b2plus: usize, b2minus: usize) -> Self {
        let b2 = b2plus + b2minus;
        if b2 == 0 {
            let names = vec!["1".to_string(), "x".to_string()];
            let products =
                vec![vec![SparseVec::unit(0), SparseVec::unit(1)], vec![SparseVec::unit(1), SparseVec::new()]];
            return Self::new(names, vec![0, 4], products).expect("S4 cohomology is valid");
        }
        let top = b2 + 1;
        let dim = b2 + 2;
        let mut names = vec!["1".to_string()];
        if b2 == 1 {
            names.push("x".to_string());
        } else {
            names.extend((1..=b2).map(|i| format!("x{i}")));
        }
        names.push("V".to_string());
        let mut degrees = vec![0];
        degrees.extend(std::iter::repeat_n(2, b2));
        degrees.push(4);
        let mut products = vec![vec![SparseVec::new(); dim]; dim];
        for (i, row) in products.iter_mut().enumerate() {
            row[0] = SparseVec::unit(i);
        }
        for (j, entry) in products[0].iter_mut().enumerate() {
            *entry = SparseVec::unit(j);
        }
        for (i, row) in products.iter_mut().enumerate().take(b2 + 1).skip(1) {
            let sign = if i <= b2plus { Rational::one() } else { -Rational::one() };
            row[i] = SparseVec::from_entries(vec![(top, sign)]);
        }
        Self::new(names, degrees, products).expect("four-manifold cohomology is valid")
    }

    pub fn of_form(form: &IntersectionForm) -> Self {
        Self::four_manifold(form.b2plus(), form.b2minus())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Indices of basis elements of degree `n`.
    pub fn basis_in_degree(&self, n: u32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == n).collect()
    }

    pub fn dim_in_degree(&self, n: u32) -> usize {
        self.degrees.iter().filter(|&&d| d == n).count()
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    pub fn unit(&self) -> SparseVec {
        SparseVec::unit(0)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let c = x * y;
                terms.extend(self.products[i][j].iter().map(|(k, z)| (k, z * &c)));
            }
        }
        SparseVec::from_entries(terms)
    }

    /// Basis triple `(i, j, k)` where `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&SparseVec::unit(i), &SparseVec::unit(j));
                for k in 0..n {
                    let left = self.mul(&ij, &SparseVec::unit(k));
                    let right = self.mul(&SparseVec::unit(i), &self.products[j][k]);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Basis pair violating `e_i e_j = (−1)^{|e_i||e_j|} e_j e_i`.
    pub fn commutativity_defect(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign =
                    if (self.degrees[i] * self.degrees[j]) % 2 == 1 { -Rational::one() } else { Rational::one() };
                if self.products[i][j] != self.products[j][i].scale(&sign) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Degree-2 pairing `(a, b) ↦` coefficient of the top class in `ab`.
    /// Empty unless the algebra has a unique top-degree basis element.
    pub fn middle_pairing(&self) -> QMatrix {
        let top = self.basis_in_degree(self.top_degree());
        let middle = self.basis_in_degree(2);
        let mut m = QMatrix::zeros(middle.len(), middle.len());
        if top.len() != 1 {
            return m;
        }
        for (r, &i) in middle.iter().enumerate() {
            for (c, &j) in middle.iter().enumerate() {
                let v = self.products[i][j].get(top[0]).cloned().unwrap_or_else(Rational::zero);
                m.set(r, c, v);
            }
        }
        m
    }
}
