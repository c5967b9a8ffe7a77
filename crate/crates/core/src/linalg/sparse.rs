use num_traits::{One, Zero};

use super::{LinalgError, QMatrix, Subspace};
use crate::Rational;

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec { entries: vec![(index, Rational::one())] }
    }

    /// Accepts entries in any order; duplicates are summed and zeros dropped.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec { entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// Largest index plus one, or zero for the zero vector.
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn scale(&self, factor: &Rational) -> SparseVec {
        if factor.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * factor)).collect() }
    }

    /// `self + factor * other`, by merging the two index lists.
    pub fn add_scaled(&self, factor: &Rational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * factor));
                        b.next();
                    } else {
                        let s = x + y * factor;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * factor));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += x * y;
                a.next();
                b.next();
            }
        }
        acc
    }
}

/// Sparse matrix stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Result<Self, LinalgError> {
        if let Some(bad) = data.iter().find(|r| r.support_bound() > cols) {
            return Err(LinalgError::DimensionMismatch { expected: cols, found: bad.support_bound() });
        }
        Ok(SparseMatrix { rows: data.len(), cols, data })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self, LinalgError> {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            if col.support_bound() > rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: col.support_bound() });
            }
            for (i, v) in col.iter() {
                buckets[i].push((j, v.clone()));
            }
        }
        // columns were visited in increasing order, so each bucket is sorted
        let data = buckets.into_iter().map(|entries| SparseVec { entries }).collect();
        Ok(SparseMatrix { rows, cols: columns.len(), data })
    }

    pub fn from_dense(m: &QMatrix) -> Self {
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: (0..m.rows()).map(|r| SparseVec::from_dense(m.row(r))).collect(),
        }
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.cols, &self.data).expect("row supports are bounded by cols")
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(
            self.data.iter().enumerate().map(|(r, row)| (r, row.dot(v))).filter(|(_, x)| !x.is_zero()).collect(),
        )
    }

    /// `self * other`.
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().fold(SparseVec::new(), |acc, (k, a)| acc.add_scaled(a, &other.data[k])))
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn row_echelon(&self) -> EchelonForm {
        let mut e = EchelonForm::new(self.cols);
        for row in &self.data {
            e.insert(row);
        }
        e
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows < self.cols {
            self.row_echelon().rank()
        } else {
            self.transpose().row_echelon().rank()
        }
    }

    pub fn kernel(&self) -> Subspace {
        self.row_echelon().kernel()
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_echelon(self.transpose().row_echelon())
    }
}

/// Incrementally maintained reduced row echelon basis.
///
/// Rows are kept sorted by pivot column, normalized so the pivot entry is 1,
/// and every pivot column is zero in all other rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonForm {
    dim: usize,
    pivots: Vec<usize>,
    rows: Vec<SparseVec>,
}

impl EchelonForm {
    pub fn new(dim: usize) -> Self {
        EchelonForm { dim, pivots: Vec::new(), rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// Residual of `v` after removing its component along the current rows.
    /// Zero exactly when `v` lies in the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        // Rows are zero on each other's pivots, so the coefficient needed for
        // each pivot is read directly from v.
        let mut terms: Vec<(usize, Rational)> = v.entries.clone();
        for (col, coeff) in v.iter() {
            if let Some(r) = self.pivot_row(col) {
                let factor = -coeff;
                terms.extend(self.rows[r].iter().map(|(i, x)| (i, x * &factor)));
            }
        }
        SparseVec::from_entries(terms)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.support_bound() <= self.dim);
        let residual = self.reduce(v);
        let Some((pivot, lead)) = residual.leading() else {
            return false;
        };
        let new_row = residual.scale(&lead.recip());
        for row in &mut self.rows {
            if let Some(x) = row.get(pivot) {
                let factor = -x.clone();
                *row = row.add_scaled(&factor, &new_row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, new_row);
        true
    }

    /// Basis of the orthogonal solution space `{x : row · x = 0 for all rows}`,
    /// i.e. the kernel of the matrix whose rows span this form.
    pub fn kernel(&self) -> Subspace {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; self.dim];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut vectors: Vec<Vec<(usize, Rational)>> = free.iter().map(|&f| vec![(f, Rational::one())]).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, x) in row.iter() {
                if c != p {
                    vectors[slot[c]].push((p, -x.clone()));
                }
            }
        }
        Subspace::from_sparse(self.dim, vectors.into_iter().map(SparseVec::from_entries))
            .expect("kernel vectors lie in the ambient space")
    }
}
