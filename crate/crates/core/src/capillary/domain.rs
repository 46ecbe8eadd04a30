//! Support domains for capillary surfaces: a half-space or an open wedge.
//!
//! Both domains are positioned rigidly. The half-space is `{x_3 > 0}` with the
//! single wall `{x_3 = 0}` whose outward normal is `-e_3`. The wedge has its
//! edge on the `x_1`-axis and opens symmetrically about the half-plane
//! `{x_3 = 0, x_2 > 0}`: wall 0 is the plane tilted by `+alpha` out of
//! `{x_3 = 0}`, wall 1 by `-alpha`, and both outward normals point away from
//! the interior. All walls pass through the origin, so the signed distance to
//! wall `i` of a point `x` is just the inner product with the wall normal.

use crate::error::{Error, Result};
use crate::numkernel::linalg::dot;

/// Region of space whose boundary planes support the wetted domains.
#[derive(Debug, Clone, PartialEq)]
pub enum SupportDomain {
    /// Upper half-space `{x_3 > 0}`; one wall with outward normal `-e_3`.
    HalfSpace,
    /// Open wedge of half-angle `alpha` about the `x_1`-axis; two walls.
    Wedge { half_angle: f64 },
}

impl SupportDomain {
    /// Wedge of half-angle `alpha`, which must lie strictly in `(0, pi/2)`.
    pub fn wedge(half_angle: f64) -> Result<Self> {
        if !(half_angle > 0.0) || !(half_angle < std::f64::consts::FRAC_PI_2) {
            return Err(Error::InvalidParameter(format!(
                "wedge half-angle must lie in (0, pi/2), got {half_angle}"
            )));
        }
        Ok(SupportDomain::Wedge { half_angle })
    }

    /// Number of boundary walls (1 for the half-space, 2 for the wedge).
    pub fn wall_count(&self) -> usize {
        match self {
            SupportDomain::HalfSpace => 1,
            SupportDomain::Wedge { .. } => 2,
        }
    }

    /// Outward unit normal of wall `i`, pointing out of the domain.
    pub fn wall_normal(&self, wall: usize) -> Vec<f64> {
        match (self, wall) {
            (SupportDomain::HalfSpace, 0) => vec![0.0, 0.0, -1.0],
            (SupportDomain::Wedge { half_angle }, 0) => {
                vec![0.0, -half_angle.sin(), half_angle.cos()]
            }
            (SupportDomain::Wedge { half_angle }, 1) => {
                vec![0.0, -half_angle.sin(), -half_angle.cos()]
            }
            _ => panic!("wall index {wall} out of range for {self:?}"),
        }
    }

    /// In-plane unit vector of wall `i` orthogonal to the wedge edge, pointing
    /// from the edge into the wall. Only meaningful for the wedge.
    pub fn wall_tangent(&self, wall: usize) -> Vec<f64> {
        match (self, wall) {
            (SupportDomain::HalfSpace, 0) => vec![0.0, 1.0, 0.0],
            (SupportDomain::Wedge { half_angle }, 0) => {
                vec![0.0, half_angle.cos(), half_angle.sin()]
            }
            (SupportDomain::Wedge { half_angle }, 1) => {
                vec![0.0, half_angle.cos(), -half_angle.sin()]
            }
            _ => panic!("wall index {wall} out of range for {self:?}"),
        }
    }

    /// Signed distance of `x` to wall `i`: negative inside the domain, zero on
    /// the wall, positive outside.
    pub fn signed_distance(&self, x: &[f64], wall: usize) -> f64 {
        dot(x, &self.wall_normal(wall))
    }

    /// Whether `x` lies strictly inside the open domain.
    pub fn contains(&self, x: &[f64]) -> bool {
        (0..self.wall_count()).all(|i| self.signed_distance(x, i) < 0.0)
    }

    /// Distance of `x` to the wedge edge (the `x_1`-axis); `None` for the
    /// half-space, which has no edge.
    pub fn edge_distance(&self, x: &[f64]) -> Option<f64> {
        match self {
            SupportDomain::HalfSpace => None,
            SupportDomain::Wedge { .. } => Some(x[1].hypot(x[2])),
        }
    }
}
