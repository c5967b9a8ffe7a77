//! Rational homotopy of simply connected closed four-manifolds.
//!
//! The rational homotopy type of such a manifold is fixed by the cohomology
//! ring, which in turn is fixed over ℚ by the rank and signature of the
//! intersection form. This crate builds the Sullivan minimal model of that
//! ring degree by degree in exact rational arithmetic and reads off the
//! ranks of `π_r(M) ⊗ ℚ` as generator counts.
//!
//! * [`linalg`]: dense and sparse elimination over ℚ.
//! * [`gca`]: free graded-commutative algebras, monomial bases, derivations.
//! * [`fourfold`]: intersection forms, cohomology algebras, closed forms.
//! * [`sullivan`]: the stage-by-stage minimal model engine.
//!
//! ```
//! use minimal4::{build, BuildOptions, CohomologyAlgebra};
//!
//! let a = CohomologyAlgebra::four_manifold(3, 0);
//! let out = build(&a, 4, &BuildOptions::default()).unwrap();
//! assert_eq!(out.ranks.get(3), Some(5));
//! ```

pub mod fourfold;
pub mod gca;
pub mod linalg;
pub mod sullivan;

/// Arbitrary-precision rational numbers used throughout.
pub type Rational = num_rational::BigRational;

pub use fourfold::{
    canonical_connected_sum, closed_form_ranks, complete_intersection_b2, hypersurface_b2, make_form,
    rationally_equivalent, CohomologyAlgebra, Example, FourfoldError, IntersectionForm, RankTable,
};
pub use gca::{Derivation, GcaError, GeneratorSet, Monomial, Poly, DEFAULT_BASIS_GUARD};
pub use linalg::{LinalgError, SparseVec, Subspace};
pub use sullivan::{
    build, extend_stage, init_stage, stage_cohomology, verify_stage, BuildOptions, BuildOutput, KernelBasis,
    MinimalModelStage, QuasiMorphism, StageReport, SullivanError, VerifyReport, DEFAULT_MAX_DEGREE,
};
