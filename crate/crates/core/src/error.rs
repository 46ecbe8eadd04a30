//! Crate-wide error type. Variants are grouped roughly by the subsystem that
//! raises them; everything is a contract violation of some documented
//! precondition rather than a recoverable runtime condition.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    // --- numerical kernel ---
    #[error("quadrature order must be at least 2 (got {0})")]
    QuadratureOrder(usize),
    #[error("degenerate integration box on axis {axis}: [{lo}, {hi}]")]
    DegenerateBox { axis: usize, lo: f64, hi: f64 },
    #[error("non-finite integrand value at node {node:?}")]
    EvaluationFailure { node: Vec<f64> },
    #[error("finite-difference step must be positive and finite (got {0})")]
    NonPositiveStep(f64),
    #[error("matrix is not symmetric: max |a_ij - a_ji| = {deviation:.3e} exceeds {tolerance:.3e}")]
    AsymmetricInput { deviation: f64, tolerance: f64 },
    #[error("unsupported dimension {0} (supported: {1})")]
    UnsupportedDimension(usize, &'static str),

    // --- hypersurface geometry ---
    #[error("degenerate immersion at u = {u:?}: Gram determinant {gram:.3e} below threshold")]
    DegenerateImmersion { u: Vec<f64>, gram: f64 },
    #[error("focal crossing at u = {u:?}: parallel-surface factor 1 - k t = {factor:.3e}")]
    FocalCrossing { u: Vec<f64>, factor: f64 },
    #[error("matrix is not positive definite (pivot {pivot:.3e})")]
    NotPositiveDefinite { pivot: f64 },

    // --- capillary surfaces ---
    #[error("wedge edge collision: distance {distance:.6} is below the required minimum {min_distance:.6}")]
    EdgeCollision { distance: f64, min_distance: f64 },
    #[error("infeasible configuration: {0}")]
    InfeasibleGeometry(String),
    #[error("geometry violation: {0}")]
    GeometryViolation(String),
    #[error("surface is not CMC: sampled mean-curvature deviation {deviation:.3e} exceeds {tolerance:.3e}")]
    NotCmc { deviation: f64, tolerance: f64 },
    #[error("contact angle is not constant along wall {wall}: deviation {deviation:.3e} exceeds {tolerance:.3e}")]
    NonConstantAngle {
        wall: usize,
        deviation: f64,
        tolerance: f64,
    },
    #[error("missing boundary mean-curvature data for wall {wall}")]
    MissingBoundaryData { wall: usize },
    #[error("degenerate variation: raw volume {raw_volume:.3e} is not positive")]
    DegenerateVariation { raw_volume: f64 },

    // --- convex bodies ---
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("input is not convex: point {index} is not an extreme point of the hull")]
    NonConvexInput { index: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    // --- shared ---
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
