use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{LinalgError, Subspace};
use crate::Rational;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows. An empty row list gives a `0 x cols` matrix
    /// only through [`QMatrix::zeros`]; here it yields `0 x 0`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(QMatrix { rows: nrows, cols, entries })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter().map(|r| r.as_ref().iter().map(|&v| Rational::from_integer(v.into())).collect()).collect(),
        )
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// First off-diagonal position where the matrix differs from its transpose.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (r + 1..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != self.get(c, r))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && self.asymmetry().is_none()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &Rational) {
        for c in 0..self.cols {
            let s = self.get(src, c);
            if !s.is_zero() {
                let v = s * factor;
                self.entries[dst * self.cols + c] += v;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &Rational) {
        for r in 0..self.rows {
            let s = self.get(r, src);
            if !s.is_zero() {
                let v = s * factor;
                self.entries[r * self.cols + dst] += v;
            }
        }
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current pivot row.
pub fn rref(m: &QMatrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..a.cols {
        if prow == a.rows {
            break;
        }
        let Some(found) = (prow..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(prow, found);
        let inv = a.get(prow, col).recip();
        for c in col..a.cols {
            let idx = prow * a.cols + c;
            if !a.entries[idx].is_zero() {
                a.entries[idx] *= &inv;
            }
        }
        for r in 0..a.rows {
            if r != prow && !a.get(r, col).is_zero() {
                let factor = -a.get(r, col).clone();
                a.add_row_multiple(r, prow, &factor);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    let rank = pivots.len();
    Rref { matrix: a, pivots, rank }
}

/// Basis of `{v : M v = 0}` read off the dense reduced echelon form.
pub fn kernel_basis(m: &QMatrix) -> Subspace {
    let Rref { matrix: r, pivots, .. } = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols).filter(|&c| !is_pivot[c]).map(|free| {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free).clone();
        }
        v
    });
    Subspace::from_dense(m.cols, vectors).expect("kernel vectors have the ambient length")
}

pub fn determinant(m: &QMatrix) -> Result<Rational, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..a.cols {
        let Some(found) = (col..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            return Ok(Rational::zero());
        };
        if found != col {
            a.swap_rows(col, found);
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        for r in col + 1..a.rows {
            if !a.get(r, col).is_zero() {
                let factor = -(a.get(r, col) / &pivot);
                a.add_row_multiple(r, col, &factor);
            }
        }
        det *= pivot;
    }
    Ok(det)
}

/// Result of a congruence diagonalization: `Pᵀ S P = diag(diagonal)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization {
    pub transform: QMatrix,
    pub diagonal: Vec<Rational>,
}

impl Diagonalization {
    pub fn positive(&self) -> usize {
        self.diagonal.iter().filter(|d| d.is_positive()).count()
    }

    pub fn negative(&self) -> usize {
        self.diagonal.iter().filter(|d| d.is_negative()).count()
    }

    pub fn nullity(&self) -> usize {
        self.diagonal.iter().filter(|d| d.is_zero()).count()
    }
}

/// Symmetric Gaussian elimination: simultaneous row and column operations,
/// tracked in the returned transform.
pub fn congruence_diagonalize(s: &QMatrix) -> Result<Diagonalization, LinalgError> {
    if s.rows != s.cols {
        return Err(LinalgError::NotSquare { rows: s.rows, cols: s.cols });
    }
    if let Some((row, col)) = s.asymmetry() {
        return Err(LinalgError::NotSymmetric { row, col });
    }
    let n = s.rows;
    let mut a = s.clone();
    let mut p = QMatrix::identity(n);
    for i in 0..n {
        if a.get(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                a.swap_rows(i, j);
                a.swap_cols(i, j);
                p.swap_cols(i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a.get(i, j).is_zero()) {
                // a[j][j] = 0 here, so the new a[i][i] is 2 a[i][j].
                let one = Rational::one();
                a.add_col_multiple(i, j, &one);
                a.add_row_multiple(i, j, &one);
                p.add_col_multiple(i, j, &one);
            } else {
                continue;
            }
        }
        let pivot = a.get(i, i).clone();
        for j in i + 1..n {
            if a.get(j, i).is_zero() {
                continue;
            }
            let factor = -(a.get(j, i) / &pivot);
            a.add_col_multiple(j, i, &factor);
            a.add_row_multiple(j, i, &factor);
            p.add_col_multiple(j, i, &factor);
        }
    }
    let diagonal = (0..n).map(|i| a.get(i, i).clone()).collect();
    Ok(Diagonalization { transform: p, diagonal })
}
