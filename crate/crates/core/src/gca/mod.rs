//! Free graded-commutative algebras ΛV on generators of degree at least two.
//!
//! Even generators are polynomial, odd generators exterior. Products carry
//! the Koszul sign `ab = (-1)^{|a||b|} ba`, computed by counting inversions
//! between odd factors. Each degree has a deterministic monomial basis
//! (descending lexicographic in generator order), and a [`Derivation`]
//! becomes one sparse matrix per degree in those bases.

mod derivation;
mod monomial;
mod poly;

use std::collections::HashMap;

use num_traits::One;
use thiserror::Error;

pub use derivation::Derivation;
pub use monomial::Monomial;
pub use poly::Poly;

use crate::linalg::{EchelonForm, SparseMatrix, SparseVec, Subspace};
use crate::Rational;

/// Default cap on the number of monomials enumerated in a single degree.
pub const DEFAULT_BASIS_GUARD: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcaError {
    #[error("degree {degree} has {size} monomials, above the guard limit of {limit}")]
    BasisTooLarge { degree: u32, size: u128, limit: usize },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has degree {degree}; degrees must be at least 2")]
    DegreeTooLow { name: String, degree: u32 },
    #[error("image of `{generator}` has degree {found}, expected {expected}")]
    DegreeMismatch { generator: String, expected: u32, found: u32 },
    #[error("derivation has {found} images for {expected} generators")]
    DerivationLength { expected: usize, found: usize },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("odd generator `{0}` cannot appear squared")]
    OddSquare(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// Ordered generators; the order fixes monomial bases and Koszul signs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, u32)>) -> Result<Self, GcaError> {
        let mut gens = Self::new();
        for (name, degree) in pairs {
            gens.push(name, degree)?;
        }
        Ok(gens)
    }

    pub fn push(&mut self, name: impl Into<String>, degree: u32) -> Result<usize, GcaError> {
        let name = name.into();
        if degree < 2 {
            return Err(GcaError::DegreeTooLow { name, degree });
        }
        if self.index.contains_key(&name) {
            return Err(GcaError::DuplicateGenerator(name));
        }
        let i = self.gens.len();
        self.index.insert(name.clone(), i);
        self.gens.push(Generator { name, degree });
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.gens[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    /// Out-of-range indices count as even; they only ever carry exponent 0.
    pub fn is_odd(&self, i: usize) -> bool {
        self.gens.get(i).is_some_and(|g| g.degree % 2 == 1)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    pub fn count_in_degree(&self, degree: u32) -> usize {
        self.gens.iter().filter(|g| g.degree == degree).count()
    }
}

/// Number of monomials of degree `n`, saturating.
pub fn basis_len(gens: &GeneratorSet, n: u32) -> u128 {
    let n = n as usize;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for g in gens.iter() {
        let d = g.degree as usize;
        if d > n {
            continue;
        }
        if g.degree % 2 == 1 {
            for t in (d..=n).rev() {
                ways[t] = ways[t].saturating_add(ways[t - d]);
            }
        } else {
            for t in d..=n {
                ways[t] = ways[t].saturating_add(ways[t - d]);
            }
        }
    }
    ways[n]
}

/// Monomials of degree `n` in basis order.
pub fn basis(gens: &GeneratorSet, n: u32, guard: usize) -> Result<Vec<Monomial>, GcaError> {
    let size = basis_len(gens, n);
    if size > guard as u128 {
        return Err(GcaError::BasisTooLarge { degree: n, size, limit: guard });
    }
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree).collect();
    // smallest generator degree from position i onwards, for pruning
    let mut min_suffix = vec![u32::MAX; degrees.len() + 1];
    for i in (0..degrees.len()).rev() {
        min_suffix[i] = min_suffix[i + 1].min(degrees[i]);
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut exps = vec![0u32; degrees.len()];
    enumerate(&degrees, &min_suffix, 0, n, &mut exps, &mut out);
    debug_assert_eq!(out.len() as u128, size);
    Ok(out)
}

fn enumerate(
    degrees: &[u32],
    min_suffix: &[u32],
    i: usize,
    remaining: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_raw(exps[..i].to_vec()));
        return;
    }
    if i == degrees.len() || remaining < min_suffix[i] {
        return;
    }
    let d = degrees[i];
    let max = if d % 2 == 1 { (remaining / d).min(1) } else { remaining / d };
    for e in (0..=max).rev() {
        exps[i] = e;
        enumerate(degrees, min_suffix, i + 1, remaining - e * d, exps, out);
    }
    exps[i] = 0;
}

/// A degree's monomial basis together with a lookup table.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn new(gens: &GeneratorSet, degree: u32, guard: usize) -> Result<Self, GcaError> {
        Ok(Self::from_monomials(degree, basis(gens, degree, guard)?))
    }

    pub fn from_monomials(degree: u32, monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        GradedBasis { degree, monomials, index }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p` in this basis.
    ///
    /// # Panics
    /// If `p` has a term outside the basis.
    pub fn coordinates(&self, p: &Poly) -> SparseVec {
        SparseVec::from_entries(
            p.terms().map(|(m, c)| (self.position(m).expect("monomial belongs to the basis"), c.clone())).collect(),
        )
    }

    pub fn poly(&self, v: &SparseVec) -> Poly {
        let mut p = Poly::zero(self.degree);
        for (i, c) in v.iter() {
            p.add_term(self.monomials[i].clone(), c.clone());
        }
        p
    }
}

/// Matrix of a derivation from degree `n` to degree `n + 1`; rows index the
/// target basis, columns the source basis.
#[derive(Clone, Debug)]
pub struct DifferentialMatrix {
    pub source: GradedBasis,
    pub target: GradedBasis,
    pub matrix: SparseMatrix,
}

pub fn extend_derivation(
    gens: &GeneratorSet,
    d: &Derivation,
    n: u32,
    guard: usize,
) -> Result<DifferentialMatrix, GcaError> {
    let source = GradedBasis::new(gens, n, guard)?;
    let target = GradedBasis::new(gens, n + 1, guard)?;
    Ok(differential_between(gens, d, source, target))
}

pub(crate) fn differential_between(
    gens: &GeneratorSet,
    d: &Derivation,
    source: GradedBasis,
    target: GradedBasis,
) -> DifferentialMatrix {
    let columns: Vec<SparseVec> =
        source.monomials().iter().map(|m| target.coordinates(&d.apply_monomial(gens, m))).collect();
    let matrix = SparseMatrix::from_columns(target.len(), &columns).expect("images lie in the target degree");
    DifferentialMatrix { source, target, matrix }
}

/// Where `D∘D` fails to vanish: the element whose image is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSquaredFailure {
    pub element: String,
    pub image: Poly,
}

/// Checks `D∘D = 0`: on each generator directly, then by composing the
/// per-degree matrices through `working_degree`.
pub fn check_d_squared(
    gens: &GeneratorSet,
    d: &Derivation,
    working_degree: u32,
    guard: usize,
) -> Result<Option<DSquaredFailure>, GcaError> {
    for i in 0..gens.len() {
        let dd = d.apply(gens, d.image(i));
        if !dd.is_zero() {
            return Ok(Some(DSquaredFailure { element: gens.name(i).to_string(), image: dd }));
        }
    }
    if working_degree < 2 {
        return Ok(None);
    }
    let mut lower = extend_derivation(gens, d, 0, guard)?;
    for n in 1..working_degree {
        let target = GradedBasis::new(gens, n + 1, guard)?;
        let upper = differential_between(gens, d, lower.target.clone(), target);
        let composed = upper.matrix.compose(&lower.matrix).expect("shapes chain");
        let columns = composed.transpose();
        if let Some(col) = (0..columns.rows()).find(|&c| !columns.row(c).is_zero()) {
            let m = &lower.source.monomials()[col];
            let image = d.apply(gens, &d.apply_monomial(gens, m));
            return Ok(Some(DSquaredFailure { element: m.display(gens).to_string(), image }));
        }
        lower = upper;
    }
    Ok(None)
}

/// Span of all products of two positive-degree monomials landing in degree
/// `n`, in the coordinates of `basis(gens, n)`.
pub fn decomposable_subspace(gens: &GeneratorSet, n: u32, guard: usize) -> Result<Subspace, GcaError> {
    let target = GradedBasis::new(gens, n, guard)?;
    let mut span = EchelonForm::new(target.len());
    for i in 2..=n / 2 {
        let left = basis(gens, i, guard)?;
        let right = basis(gens, n - i, guard)?;
        for a in &left {
            for b in &right {
                if let Some((m, negative)) = a.mul(b, gens) {
                    let pos = target.position(&m).expect("product has degree n");
                    let c = if negative { -Rational::one() } else { Rational::one() };
                    span.insert(&SparseVec::from_entries(vec![(pos, c)]));
                }
            }
        }
    }
    Ok(Subspace::from_echelon(span))
}
