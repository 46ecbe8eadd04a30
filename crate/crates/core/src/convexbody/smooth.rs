//! Convex bodies beyond polytopes: a closed ellipse in the plane and a
//! spheroid (ellipsoid of revolution) in space, with quermassintegrals
//! obtained by boundary quadrature instead of face data.
//!
//! These two shapes are deliberately the only smooth bodies: they exercise
//! the curvature integrals `∫|H| dS` and `∫ k₁k₂ dS` on genuinely curved
//! boundaries while staying exactly representable by the parametric patch
//! machinery.

use crate::error::{Error, Result};
use crate::hypersurface::{area, curvature_integral, oriented_volume, shapes};

use super::polytope::ConvexPolytope;
use super::quermass::{quermass, QuermassVector};

/// A convex body: a polytope, or one of the two supported smooth shapes,
/// both centered at the origin and axis-aligned.
#[derive(Debug, Clone)]
pub enum ConvexBody {
    /// A full-dimensional convex polytope.
    Polytope(ConvexPolytope),
    /// Planar ellipse with the given semi-axes.
    Ellipse { semi_x: f64, semi_y: f64 },
    /// Spheroid with equatorial radius `equatorial` and polar radius
    /// `polar`; equal radii give the round ball.
    Spheroid { equatorial: f64, polar: f64 },
}

impl ConvexBody {
    /// Wraps a polytope.
    pub fn polytope(p: ConvexPolytope) -> Self {
        ConvexBody::Polytope(p)
    }

    /// Planar ellipse with positive semi-axes.
    pub fn ellipse(semi_x: f64, semi_y: f64) -> Result<Self> {
        require_positive(semi_x, "x semi-axis")?;
        require_positive(semi_y, "y semi-axis")?;
        Ok(ConvexBody::Ellipse { semi_x, semi_y })
    }

    /// Spheroid with positive equatorial and polar radii.
    pub fn spheroid(equatorial: f64, polar: f64) -> Result<Self> {
        require_positive(equatorial, "equatorial radius")?;
        require_positive(polar, "polar radius")?;
        Ok(ConvexBody::Spheroid { equatorial, polar })
    }

    /// Ambient dimension of the body.
    pub fn dim(&self) -> usize {
        match self {
            ConvexBody::Polytope(p) => p.dim(),
            ConvexBody::Ellipse { .. } => 2,
            ConvexBody::Spheroid { .. } => 3,
        }
    }

    /// Quermassintegrals: exact face data for polytopes, boundary
    /// quadrature at the given order for the smooth shapes.
    ///
    /// For the smooth bodies the identities behind the entries are
    /// `n W_1 = boundary measure`, `n W_2 = ∫|H| dS`, and in space
    /// `3 W_3 = ∫ k₁k₂ dS`; with the outward orientation of the boundary
    /// patches the signed curvature integrals deliver exactly these
    /// absolute values, Gauss–Bonnet pinning the last one at `4π`.
    pub fn quermass(&self, order: usize) -> Result<QuermassVector> {
        match self {
            ConvexBody::Polytope(p) => Ok(quermass(p)),
            ConvexBody::Ellipse { semi_x, semi_y } => {
                let boundary = shapes::ellipse_curve(*semi_x, *semi_y)?;
                let enclosed = oriented_volume(std::slice::from_ref(&boundary), order)?;
                let perimeter = area(&boundary, order)?;
                let turning = curvature_integral(&boundary, 1, order)?;
                Ok(QuermassVector::new(
                    2,
                    vec![enclosed, perimeter / 2.0, turning / 2.0],
                ))
            }
            ConvexBody::Spheroid { equatorial, polar } => {
                let boundary = shapes::spheroid_cap(
                    *equatorial,
                    *polar,
                    [0.0, std::f64::consts::PI],
                    0.0,
                )?;
                let enclosed = oriented_volume(std::slice::from_ref(&boundary), order)?;
                let surface = area(&boundary, order)?;
                let mean_total = curvature_integral(&boundary, 1, order)?;
                let product_total = curvature_integral(&boundary, 2, order)?;
                Ok(QuermassVector::new(
                    3,
                    vec![enclosed, surface / 3.0, mean_total / 6.0, product_total / 3.0],
                ))
            }
        }
    }
}

fn require_positive(value: f64, what: &str) -> Result<()> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "{what} must be positive and finite, got {value}"
        )));
    }
    Ok(())
}
