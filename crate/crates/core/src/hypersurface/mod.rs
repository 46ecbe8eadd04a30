//! Parametric hypersurface patches in `R^{n+1}` (`n` in `1..=3`) and the
//! integral geometry built on them: areas, oriented volumes, Gauss-map and
//! curvature integrals, tube (parallel-area) polynomials, and parallel
//! patches `X + t ν`.
//!
//! Orientation convention: the Gauss map `ν` completes the coordinate frame
//! `{∂_1 X, ..., ∂_n X, ν}` to a positively oriented basis, with an explicit
//! sign for flipping. Principal curvatures are the eigenvalues of the shape
//! operator built from `h_ij = <ν, ∂_ij X>`, so an outward-oriented sphere of
//! radius `R` has every principal curvature equal to `-1/R`, and the parallel
//! area density is `∏ (1 - k_i t)`.

mod curvature;
mod integrals;
mod parallel;
mod patch;
pub mod shapes;
mod tube;

pub use curvature::{curvature_at, CurvatureData};
pub use integrals::{area, curvature_integral, gauss_map_integral, oriented_volume};
pub use parallel::parallel_patch;
pub use patch::{Frame, ParametricPatch};
pub use tube::{
    parallel_area_check, tube_polynomial, volume_polynomial, TubePolynomial, VolumePolynomial,
};

/// Gram-determinant floor below which a chart is treated as a degenerate
/// immersion.
pub const GRAM_DET_FLOOR: f64 = 1e-12;
