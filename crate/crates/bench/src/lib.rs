//! Inputs shared by the benchmarks.

use minimal4::gca::extend_derivation;
use minimal4::linalg::SparseMatrix;
use minimal4::{build, BuildOptions, CohomologyAlgebra, DEFAULT_BASIS_GUARD};

/// Differential from degree `n` to `n + 1` of the model of `#b2 CP²` built
/// through degree `k`.
pub fn cocycle_system(b2: usize, k: u32, n: u32) -> SparseMatrix {
    let a = CohomologyAlgebra::four_manifold(b2, 0);
    let stage = build(&a, k, &BuildOptions::default()).expect("model builds").stage;
    extend_derivation(stage.generators(), stage.differential(), n, DEFAULT_BASIS_GUARD).expect("within guard").matrix
}
