//! Convex bodies in the plane and in space: polytopes as vertex hulls,
//! Minkowski sums and mixed volumes, quermassintegrals with their Steiner
//! polynomials, smooth ellipse/spheroid bodies handled by boundary
//! quadrature, and the classical inequality suite (Minkowski,
//! Alexandrov–Fenchel, isoperimetric-quotient monotonicity).

pub mod ball;
pub mod inequality;
pub mod minkowski;
pub mod polytope;
pub mod quermass;
pub mod random;
pub mod smooth;

pub use ball::{
    ball_approximant, icosphere_ball, polygon_ball, BallApproximant, DEFAULT_BALL_SIDES,
    DEFAULT_ICOSPHERE_LEVEL,
};
pub use inequality::{
    inequality_suite, inequality_suite_from_vertices, parallel_quotient_scan, InequalityReport,
};
pub use minkowski::{
    minkowski_sum, minkowski_sum_with_points, minkowski_volume, mixed_volume_2d, mixed_volumes_3d,
};
pub use polytope::{unit_cube_points, unit_square_points, ConvexPolytope, EdgeData};
pub use quermass::{
    quermass, steiner, steiner_check, steiner_check_with_ball, QuermassVector, SteinerCheck,
    SteinerPolynomial,
};
pub use random::{random_polygon, random_polyhedron, random_unit_sphere_points, seeded_rng};
pub use smooth::ConvexBody;
