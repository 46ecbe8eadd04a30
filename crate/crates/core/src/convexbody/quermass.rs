//! Quermassintegrals and Steiner polynomials of convex polytopes.
//!
//! The quermassintegrals are computed exactly from face data — area,
//! perimeter, surface, and the length-weighted edge-angle sum — never by
//! fitting the Steiner polynomial. Sampling the parallel-body volume
//! against a polytopal ball is kept as an independent cross-check with a
//! computable approximation bound.

use crate::error::{Error, Result};

use super::ball::{ball_approximant, BallApproximant};
use super::minkowski::minkowski_volume;
use super::polytope::ConvexPolytope;

/// The quermassintegrals `W_0..W_n` of a convex body in dimension `n`.
///
/// `W_0` is the volume, `n W_1` the boundary measure, `n W_2` the integral
/// of the absolute mean curvature over the boundary (concentrated on the
/// edges for a polytope), and `W_n` is always the unit-ball volume.
#[derive(Debug, Clone, PartialEq)]
pub struct QuermassVector {
    dim: usize,
    values: Vec<f64>,
}

impl QuermassVector {
    /// Wraps precomputed values; `values.len()` must be `dim + 1`.
    pub(crate) fn new(dim: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), dim + 1);
        QuermassVector { dim, values }
    }

    /// Body dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All entries `W_0..W_n` in order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The `j`-th quermassintegral.
    pub fn w(&self, j: usize) -> f64 {
        self.values[j]
    }

    /// Volume of the body, `W_0`.
    pub fn volume(&self) -> f64 {
        self.values[0]
    }

    /// Boundary measure, `n W_1`.
    pub fn boundary_measure(&self) -> f64 {
        self.dim as f64 * self.values[1]
    }

    /// Integral of `|H|` over the boundary, `n W_2`.
    pub fn mean_curvature_integral(&self) -> f64 {
        self.dim as f64 * self.values[2]
    }

    /// Integral of the pairwise curvature products over the boundary of a
    /// spatial body, `3 W_3`; `None` in the plane.
    pub fn curvature_product_integral(&self) -> Option<f64> {
        (self.dim == 3).then(|| 3.0 * self.values[3])
    }
}

/// Steiner polynomial `t -> H^n(K + tB)` of a convex body, stored by
/// coefficients `binom(n, j) W_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteinerPolynomial {
    dim: usize,
    coefficients: Vec<f64>,
}

impl SteinerPolynomial {
    /// Builds the polynomial from a quermass vector.
    pub fn from_quermass(quermass: &QuermassVector) -> Self {
        let n = quermass.dim();
        let coefficients = (0..=n)
            .map(|j| binomial(n, j) * quermass.w(j))
            .collect();
        SteinerPolynomial {
            dim: n,
            coefficients,
        }
    }

    /// Body dimension `n`; the polynomial has degree `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients in increasing degree; the leading one is the unit-ball
    /// volume of the dimension.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Volume of the parallel body at distance `t`.
    pub fn evaluate(&self, t: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * t + c)
    }

    /// Boundary measure of the parallel body at distance `t`: the
    /// derivative of the volume in the offset.
    pub fn boundary_at(&self, t: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (j, &c)| acc * t + j as f64 * c)
    }
}

fn binomial(n: usize, j: usize) -> f64 {
    let mut value = 1.0;
    for i in 0..j {
        value = value * (n - i) as f64 / (i + 1) as f64;
    }
    value
}

/// Exact quermassintegrals of a polytope from its face data.
pub fn quermass(p: &ConvexPolytope) -> QuermassVector {
    let values = match p.dim() {
        2 => vec![
            p.volume(),
            p.boundary_measure() / 2.0,
            std::f64::consts::PI,
        ],
        _ => vec![
            p.volume(),
            p.boundary_measure() / 3.0,
            p.edge_angle_measure() / 3.0,
            4.0 * std::f64::consts::PI / 3.0,
        ],
    };
    QuermassVector::new(p.dim(), values)
}

/// Steiner polynomial of a polytope.
pub fn steiner(p: &ConvexPolytope) -> SteinerPolynomial {
    SteinerPolynomial::from_quermass(&quermass(p))
}

/// Outcome of sampling the Steiner formula at one offset.
#[derive(Debug, Clone)]
pub struct SteinerCheck {
    /// Offset the parallel body was grown by.
    pub t: f64,
    /// Steiner polynomial value, the exact parallel-body volume.
    pub polynomial_value: f64,
    /// Volume of `P + t B_approx` for the inscribed polytopal ball.
    pub sampled_value: f64,
    /// `|polynomial_value − sampled_value|`.
    pub residual: f64,
    /// Guaranteed ceiling for the residual: the polynomial gap between the
    /// offsets `t` and `t * inradius(B_approx)`, plus a rounding allowance.
    pub approximation_bound: f64,
}

/// Samples the parallel-body volume with a polytopal ball and reports the
/// residual against the Steiner polynomial together with the approximation
/// bound the inscribed/circumscribed sandwich guarantees.
///
/// Since `r_in * B ⊆ B_approx ⊆ B`, the sampled volume lies between the
/// polynomial values at `t * r_in` and `t`, so the residual can never
/// legitimately exceed the reported bound.
pub fn steiner_check(p: &ConvexPolytope, t: f64) -> Result<SteinerCheck> {
    steiner_check_with_ball(p, t, &ball_approximant(p.dim())?)
}

/// As [`steiner_check`], with a caller-supplied ball approximant.
pub fn steiner_check_with_ball(
    p: &ConvexPolytope,
    t: f64,
    ball: &BallApproximant,
) -> Result<SteinerCheck> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "parallel-body offset must be nonnegative and finite, got {t}"
        )));
    }
    let polynomial = steiner(p);
    let polynomial_value = polynomial.evaluate(t);
    let sampled_value = if t == 0.0 {
        p.volume()
    } else {
        minkowski_volume(p, &ball.polytope, t)?
    };
    let residual = (polynomial_value - sampled_value).abs();
    let approximation_bound = polynomial_value - polynomial.evaluate(t * ball.inradius)
        + 1e-9 * (1.0 + polynomial_value.abs());
    Ok(SteinerCheck {
        t,
        polynomial_value,
        sampled_value,
        residual,
        approximation_bound,
    })
}
