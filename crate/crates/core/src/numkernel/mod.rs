//! Shared numerical kernel: Gauss–Legendre quadrature over boxes, central
//! finite-difference jets with one Richardson level, closed-form/Jacobi
//! symmetric eigensolvers for n <= 3, and order-independent pairwise summation.
//!
//! All routines are pure functions of their inputs. Reductions always use the
//! same pairwise tree, so results are bitwise reproducible run to run.

mod diff;
mod eigen;
pub mod linalg;
mod quadrature;

pub use diff::{fd_jet, JetEstimate};
pub use eigen::sym_eigen;
pub use quadrature::{
    integrate_box, integrate_box_vec, integrate_box_with_estimate, pairwise_sum, try_integrate_box,
    try_integrate_box_vec, Interval, QuadratureRule,
};

/// Default per-axis quadrature order used when a caller does not specify one.
pub const DEFAULT_ORDER: usize = 32;

/// Default step for finite-difference jets.
pub const DEFAULT_FD_STEP: f64 = 1e-3;
