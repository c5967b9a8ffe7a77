//! Stage-by-stage construction of the Sullivan minimal model of a
//! cohomology algebra with zero differential.
//!
//! A stage `μ_k` is a free algebra on generators of degree at most `k`,
//! together with a map `m_k` to the target algebra `A` that is an isomorphism
//! on cohomology through degree `k` and injective in degree `k + 1`. The step
//! to `μ_{k+1}` adds generators of degree `k + 1`:
//!
//! * `u` generators with `du = 0`, one for each basis vector of a complement
//!   of `im(H^{k+1}(μ_k) → A^{k+1})`, mapped onto that vector;
//! * `v` generators with `dv = z`, one for each basis vector `z` of
//!   `ker(H^{k+2}(μ_k) → A^{k+2})`, mapped to zero.
//!
//! Since `A` has no differential, `m_k(z)` must vanish exactly; the engine
//! checks this instead of assuming it. The number of generators of degree
//! `r` is the rank of `π_r ⊗ ℚ`, and is cross-checked against the
//! codimension of the decomposables in degree `r`.
//!
//! Generators are named `u{deg}_{i}` and `v{deg}_{j}`; the degree-2
//! generators of the first stage take the names of the degree-2 basis of `A`.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::fourfold::{CohomologyAlgebra, RankTable};
use crate::gca::{
    check_d_squared, decomposable_subspace, differential_between, Derivation, GcaError, GeneratorSet, GradedBasis,
    Monomial, Poly, DEFAULT_BASIS_GUARD,
};
use crate::linalg::{complement_in, SparseMatrix, SparseVec, Subspace};

/// Default degree through which models are built.
pub const DEFAULT_MAX_DEGREE: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SullivanError {
    #[error("target algebra is not connected: H^0 has dimension {0}")]
    NotConnected(usize),
    #[error("target algebra is not simply connected: H^1 has dimension {0}")]
    NotSimplyConnected(usize),
    #[error("maximum degree must be at least 2, got {0}")]
    MaxDegreeTooSmall(u32),
    #[error("degree {0}: some coboundary is not a cocycle, so d² ≠ 0")]
    NotAComplex(u32),
    #[error("generator `{0}` does not map to zero under the differential")]
    NotAChainMap(String),
    #[error("degree {degree}: {generators} generators but decomposables have codimension {codim}")]
    GeneratorCountMismatch { degree: u32, generators: usize, codim: usize },
    #[error("{source} (model complete through degree {completed})")]
    GuardExceeded { source: GcaError, completed: u32, partial: RankTable },
    #[error(transparent)]
    Gca(#[from] GcaError),
}

impl SullivanError {
    pub fn is_guard(&self) -> bool {
        matches!(self, SullivanError::GuardExceeded { .. } | SullivanError::Gca(GcaError::BasisTooLarge { .. }))
    }
}

/// How the basis of each kernel `ker(H^{k+2}(μ_k) → A^{k+2})` is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KernelBasis {
    /// The reduced echelon basis.
    #[default]
    Echelon,
    /// Echelon basis reversed, then replaced by its running sums. Spans the
    /// same space with different vectors; used to test basis independence.
    ReversedCumulative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub guard: usize,
    pub kernel_basis: KernelBasis,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { guard: DEFAULT_BASIS_GUARD, kernel_basis: KernelBasis::Echelon }
    }
}

/// Degree-preserving algebra map from the model to the target, stored by its
/// values on generators (coordinates in the target's basis).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuasiMorphism {
    images: Vec<SparseVec>,
}

impl QuasiMorphism {
    pub fn from_images(images: Vec<SparseVec>) -> Self {
        QuasiMorphism { images }
    }

    pub fn image(&self, generator: usize) -> &SparseVec {
        &self.images[generator]
    }

    pub fn images(&self) -> &[SparseVec] {
        &self.images
    }

    fn push(&mut self, image: SparseVec) {
        self.images.push(image);
    }

    pub fn eval_monomial(&self, target: &CohomologyAlgebra, gens: &GeneratorSet, m: &Monomial) -> SparseVec {
        if m.degree(gens) > target.top_degree() {
            return SparseVec::new();
        }
        let mut acc = target.unit();
        for (i, e) in m.factors() {
            for _ in 0..e {
                acc = target.mul(&acc, &self.images[i]);
                if acc.is_zero() {
                    return acc;
                }
            }
        }
        acc
    }

    pub fn eval(&self, target: &CohomologyAlgebra, gens: &GeneratorSet, p: &Poly) -> SparseVec {
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            terms.extend(self.eval_monomial(target, gens, m).iter().map(|(i, x)| (i, x * c)));
        }
        SparseVec::from_entries(terms)
    }
}

/// One stage `(μ_k, d, m_k)` of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalModelStage {
    gens: GeneratorSet,
    diff: Derivation,
    qm: QuasiMorphism,
    k: u32,
}

impl MinimalModelStage {
    /// Assembles a stage without checking any invariant; see [`verify_stage`].
    pub fn from_parts(gens: GeneratorSet, diff: Derivation, qm: QuasiMorphism, k: u32) -> Self {
        MinimalModelStage { gens, diff, qm, k }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn differential(&self) -> &Derivation {
        &self.diff
    }

    pub fn quasi_morphism(&self) -> &QuasiMorphism {
        &self.qm
    }

    /// Degree through which the model has been built.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Replaces one generator's differential (test fixtures).
    pub fn set_differential(&mut self, generator: usize, image: Poly) -> Result<(), GcaError> {
        self.diff.set(&self.gens, generator, image)
    }

    pub fn generator_count(&self, degree: u32) -> usize {
        self.gens.count_in_degree(degree)
    }

    /// Ranks read off the generator counts in degrees `2..=k`.
    pub fn rank_table(&self) -> RankTable {
        RankTable::from_entries((2..=self.k).map(|r| (r, self.generator_count(r) as u64)), false)
    }

    fn push_generator(&mut self, name: String, degree: u32, d: Poly, image: SparseVec) -> Result<(), GcaError> {
        self.gens.push(name, degree)?;
        self.diff.push(&self.gens, d)?;
        self.qm.push(image);
        Ok(())
    }
}

/// Cohomology of a stage in one degree.
#[derive(Clone, Debug)]
pub struct StageCohomology {
    pub degree: u32,
    pub dim: usize,
    /// Cocycles whose classes form a basis of `H^degree`.
    pub cocycle_reps: Vec<Poly>,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub basis: GradedBasis,
}

/// Per-extension bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageReport {
    /// Index of the stage produced by the extension.
    pub k: u32,
    pub new_cocycle_generators: usize,
    pub new_kernel_generators: usize,
    /// `(degree, monomial count)` for each degree whose basis was enumerated.
    pub basis_sizes: Vec<(u32, usize)>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct BuildOutput {
    pub stage: MinimalModelStage,
    pub ranks: RankTable,
    pub reports: Vec<StageReport>,
}

/// First stage: one closed degree-2 generator per basis element of `A^2`.
pub fn init_stage(target: &CohomologyAlgebra) -> Result<MinimalModelStage, SullivanError> {
    let h0 = target.dim_in_degree(0);
    if h0 != 1 {
        return Err(SullivanError::NotConnected(h0));
    }
    let h1 = target.dim_in_degree(1);
    if h1 != 0 {
        return Err(SullivanError::NotSimplyConnected(h1));
    }
    let mut stage = MinimalModelStage {
        gens: GeneratorSet::new(),
        diff: Derivation::default(),
        qm: QuasiMorphism::default(),
        k: 2,
    };
    for i in target.basis_in_degree(2) {
        stage.push_generator(target.name(i).to_string(), 2, Poly::zero(3), SparseVec::unit(i))?;
    }
    Ok(stage)
}

/// Cocycle spaces already computed, keyed by degree and basis. The space
/// `μ^{k+2}` and its differential do not change when degree-`(k+1)`
/// generators are added, so the kernel found while extending to `k + 1` is
/// reused by the next extension.
#[derive(Default)]
struct CocycleCache {
    entry: Option<(u32, Vec<Monomial>, Subspace)>,
}

impl CocycleCache {
    fn get(&self, degree: u32, basis: &GradedBasis) -> Option<Subspace> {
        match &self.entry {
            Some((d, monomials, z)) if *d == degree && monomials.as_slice() == basis.monomials() => Some(z.clone()),
            _ => None,
        }
    }

    fn put(&mut self, degree: u32, basis: &GradedBasis, z: &Subspace) {
        self.entry = Some((degree, basis.monomials().to_vec(), z.clone()));
    }
}

pub fn stage_cohomology(stage: &MinimalModelStage, n: u32, guard: usize) -> Result<StageCohomology, SullivanError> {
    cohomology_with_cache(stage, n, guard, &mut CocycleCache::default())
}

fn cohomology_with_cache(
    stage: &MinimalModelStage,
    n: u32,
    guard: usize,
    cache: &mut CocycleCache,
) -> Result<StageCohomology, SullivanError> {
    let gens = &stage.gens;
    let basis = GradedBasis::new(gens, n, guard)?;
    let cocycles = match cache.get(n, &basis) {
        Some(z) => z,
        None => {
            let above = GradedBasis::new(gens, n + 1, guard)?;
            let d_n = differential_between(gens, &stage.diff, basis.clone(), above);
            let z = d_n.matrix.kernel();
            cache.put(n, &basis, &z);
            z
        }
    };
    let coboundaries = if n == 0 {
        Subspace::zero(basis.len())
    } else {
        let below = GradedBasis::new(gens, n - 1, guard)?;
        let images = below.monomials().iter().map(|m| basis.coordinates(&stage.diff.apply_monomial(gens, m)));
        Subspace::from_sparse(basis.len(), images).expect("images lie in degree n")
    };
    let reps = complement_in(&coboundaries, &cocycles).map_err(|_| SullivanError::NotAComplex(n))?;
    let cocycle_reps = reps.basis().iter().map(|v| basis.poly(v)).collect();
    Ok(StageCohomology { degree: n, dim: reps.dim(), cocycle_reps, cocycles, coboundaries, basis })
}

/// Matrix of `H^n(stage) → A^n` on the given representatives.
fn induced_map(stage: &MinimalModelStage, target: &CohomologyAlgebra, reps: &[Poly]) -> SparseMatrix {
    let columns: Vec<SparseVec> = reps.iter().map(|p| stage.qm.eval(target, &stage.gens, p)).collect();
    SparseMatrix::from_columns(target.dim(), &columns).expect("images are target coordinates")
}

fn degree_subspace(target: &CohomologyAlgebra, n: u32) -> Subspace {
    Subspace::from_sparse(target.dim(), target.basis_in_degree(n).into_iter().map(SparseVec::unit))
        .expect("basis indices are in range")
}

fn combine(coeffs: &SparseVec, reps: &[Poly], degree: u32) -> Poly {
    let mut z = Poly::zero(degree);
    for (i, c) in coeffs.iter() {
        z.add_scaled(c, &reps[i]);
    }
    z
}

fn rebase(vectors: Vec<SparseVec>, choice: KernelBasis) -> Vec<SparseVec> {
    match choice {
        KernelBasis::Echelon => vectors,
        KernelBasis::ReversedCumulative => {
            let mut acc = SparseVec::new();
            let one = crate::Rational::from_integer(1.into());
            vectors
                .into_iter()
                .rev()
                .map(|v| {
                    acc = acc.add_scaled(&one, &v);
                    acc.clone()
                })
                .collect()
        }
    }
}

/// Extends `μ_k` to `μ_{k+1}`.
pub fn extend_stage(
    stage: &MinimalModelStage,
    target: &CohomologyAlgebra,
    options: &BuildOptions,
) -> Result<(MinimalModelStage, StageReport), SullivanError> {
    extend_with_cache(stage, target, options, &mut CocycleCache::default())
}

fn extend_with_cache(
    stage: &MinimalModelStage,
    target: &CohomologyAlgebra,
    options: &BuildOptions,
    cache: &mut CocycleCache,
) -> Result<(MinimalModelStage, StageReport), SullivanError> {
    let start = Instant::now();
    let new_degree = stage.k + 1;
    let gens = &stage.gens;

    // u generators: complement of the image in A^{k+1}
    let low = cohomology_with_cache(stage, new_degree, options.guard, cache)?;
    let image = induced_map(stage, target, &low.cocycle_reps).column_space();
    let ys = complement_in(&image, &degree_subspace(target, new_degree)).expect("image lies in A^{k+1}");

    // v generators: kernel of H^{k+2}(μ_k) → A^{k+2}
    let high = cohomology_with_cache(stage, new_degree + 1, options.guard, cache)?;
    let kernel = induced_map(stage, target, &high.cocycle_reps).kernel();
    let zs: Vec<Poly> = rebase(kernel.basis().to_vec(), options.kernel_basis)
        .iter()
        .map(|c| combine(c, &high.cocycle_reps, new_degree + 1))
        .collect();

    let mut next = stage.clone();
    next.k = new_degree;
    for (i, y) in ys.basis().iter().enumerate() {
        next.push_generator(format!("u{new_degree}_{}", i + 1), new_degree, Poly::zero(new_degree + 1), y.clone())?;
    }
    for (j, z) in zs.iter().enumerate() {
        let name = format!("v{new_degree}_{}", j + 1);
        // m(z) = dw in A, and A has no differential
        if !stage.qm.eval(target, gens, z).is_zero() {
            return Err(SullivanError::NotAChainMap(name));
        }
        next.push_generator(name, new_degree, z.clone(), SparseVec::new())?;
    }

    let report = StageReport {
        k: new_degree,
        new_cocycle_generators: ys.dim(),
        new_kernel_generators: zs.len(),
        basis_sizes: vec![(new_degree, low.basis.len()), (new_degree + 1, high.basis.len())],
        elapsed: start.elapsed(),
    };
    Ok((next, report))
}

/// Builds the model through `max_degree` and reads off the rank table.
pub fn build(
    target: &CohomologyAlgebra,
    max_degree: u32,
    options: &BuildOptions,
) -> Result<BuildOutput, SullivanError> {
    if max_degree < 2 {
        return Err(SullivanError::MaxDegreeTooSmall(max_degree));
    }
    let mut stage = init_stage(target)?;
    let mut reports = Vec::new();
    let mut cache = CocycleCache::default();
    while stage.k < max_degree {
        match extend_with_cache(&stage, target, options, &mut cache) {
            Ok((next, report)) => {
                stage = next;
                reports.push(report);
            }
            Err(e) => return Err(with_partial(e, &stage)),
        }
    }
    for r in 2..=max_degree {
        let generators = stage.generator_count(r);
        let codim =
            decomposable_subspace(&stage.gens, r, options.guard).map_err(|e| with_partial(e.into(), &stage))?.codim();
        if generators != codim {
            return Err(SullivanError::GeneratorCountMismatch { degree: r, generators, codim });
        }
    }
    let ranks = stage.rank_table();
    Ok(BuildOutput { stage, ranks, reports })
}

fn with_partial(e: SullivanError, stage: &MinimalModelStage) -> SullivanError {
    match e {
        SullivanError::Gca(source @ GcaError::BasisTooLarge { .. }) => {
            SullivanError::GuardExceeded { source, completed: stage.k, partial: stage.rank_table() }
        }
        other => other,
    }
}

/// Outcome of one invariant check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    fn pass(name: &'static str) -> Self {
        Check { name, passed: true, witness: None }
    }

    fn fail(name: &'static str, witness: impl Into<String>) -> Self {
        Check { name, passed: false, witness: Some(witness.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const CHECK_D_SQUARED: &str = "d_squared";
pub const CHECK_MINIMAL: &str = "minimality";
pub const CHECK_CHAIN_MAP: &str = "chain_map";
pub const CHECK_QUASI_ISO: &str = "quasi_isomorphism";
pub const CHECK_GENERATOR_COUNT: &str = "generator_count";

/// Runs every stage invariant: `d² = 0`, minimality, `m ∘ d = 0`, cohomology
/// isomorphism through degree `k` with injectivity in degree `k + 1`, and
/// generator counts against the codimension of decomposables.
pub fn verify_stage(stage: &MinimalModelStage, target: &CohomologyAlgebra, guard: usize) -> VerifyReport {
    let gens = &stage.gens;
    let mut checks = Vec::new();

    checks.push(match check_d_squared(gens, &stage.diff, stage.k + 1, guard) {
        Ok(None) => Check::pass(CHECK_D_SQUARED),
        Ok(Some(f)) => Check::fail(CHECK_D_SQUARED, format!("d(d({})) = {}", f.element, f.image.display(gens))),
        Err(e) => Check::fail(CHECK_D_SQUARED, e.to_string()),
    });

    checks.push(match stage.diff.first_non_decomposable() {
        None => Check::pass(CHECK_MINIMAL),
        Some(i) => Check::fail(
            CHECK_MINIMAL,
            format!("d({}) = {} has a linear term", gens.name(i), stage.diff.image(i).display(gens)),
        ),
    });

    let chain = (0..gens.len()).find(|&i| !stage.qm.eval(target, gens, stage.diff.image(i)).is_zero());
    checks.push(match chain {
        None => Check::pass(CHECK_CHAIN_MAP),
        Some(i) => Check::fail(CHECK_CHAIN_MAP, format!("m(d({})) is nonzero", gens.name(i))),
    });

    checks.push(quasi_iso_check(stage, target, guard));

    let mut count_failure = None;
    for r in 2..=stage.k {
        match decomposable_subspace(gens, r, guard) {
            Ok(dec) if dec.codim() == stage.generator_count(r) => {}
            Ok(dec) => {
                count_failure = Some(format!(
                    "degree {r}: {} generators, decomposables have codimension {}",
                    stage.generator_count(r),
                    dec.codim()
                ));
                break;
            }
            Err(e) => {
                count_failure = Some(e.to_string());
                break;
            }
        }
    }
    checks.push(match count_failure {
        None => Check::pass(CHECK_GENERATOR_COUNT),
        Some(w) => Check::fail(CHECK_GENERATOR_COUNT, w),
    });

    VerifyReport { checks }
}

fn quasi_iso_check(stage: &MinimalModelStage, target: &CohomologyAlgebra, guard: usize) -> Check {
    let mut cache = CocycleCache::default();
    for i in 0..=stage.k + 1 {
        let h = match cohomology_with_cache(stage, i, guard, &mut cache) {
            Ok(h) => h,
            Err(e) => return Check::fail(CHECK_QUASI_ISO, e.to_string()),
        };
        let rank = induced_map(stage, target, &h.cocycle_reps).rank();
        let a_dim = target.dim_in_degree(i);
        if i <= stage.k && (h.dim != a_dim || rank != a_dim) {
            return Check::fail(
                CHECK_QUASI_ISO,
                format!("degree {i}: dim H = {}, dim A = {a_dim}, induced rank {rank}", h.dim),
            );
        }
        if i == stage.k + 1 && rank != h.dim {
            return Check::fail(CHECK_QUASI_ISO, format!("degree {i}: induced map not injective ({rank} < {})", h.dim));
        }
    }
    Check::pass(CHECK_QUASI_ISO)
}
