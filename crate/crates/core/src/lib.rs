//! Desk-scale numerical geometry: deterministic quadrature and finite-difference
//! kernels, parametric hypersurfaces with tube polynomials, capillary surfaces in
//! a half-space or wedge with their energy/stability functionals, and convex-body
//! quermassintegral machinery.
//!
//! Everything here is pure and deterministic: the same inputs produce bitwise
//! identical outputs, reductions use a fixed pairwise tree, and random suites
//! take explicit seeds.

// Index loops are kept where they mirror the written matrix algebra, and
// `!(x > 0.0)` comparisons are deliberate NaN guards.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod capillary;
pub mod convexbody;
pub mod error;
pub mod hypersurface;
pub mod numkernel;

pub use error::{Error, Result};
