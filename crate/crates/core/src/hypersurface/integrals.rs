//! Surface integrals over patches: area, enclosed volume, Gauss map, and
//! curvature integrands.

use crate::error::{Error, Result};
use crate::numkernel::linalg::dot;
use crate::numkernel::{try_integrate_box, try_integrate_box_vec};

use super::curvature::curvature_at;
use super::patch::ParametricPatch;

/// Surface area (length for curves) of one patch.
pub fn area(patch: &ParametricPatch, order: usize) -> Result<f64> {
    try_integrate_box(
        |u| Ok(patch.frame(u)?.area_element),
        patch.param_box(),
        order,
    )
}

/// Volume enclosed by a family of patches, via the divergence theorem applied
/// to the position field: `(n+1) vol = integral of <X, normal> dS`.
///
/// The result is exact for a closed, outward-oriented surface and, more
/// generally, is the signed cone volume over the origin, so open pieces can
/// be combined as long as they share consistent orientation.
pub fn oriented_volume(patches: &[ParametricPatch], order: usize) -> Result<f64> {
    if patches.is_empty() {
        return Err(Error::DegenerateInput("no patches given".into()));
    }
    let ambient = patches[0].ambient_dim();
    let mut total = 0.0;
    for patch in patches {
        if patch.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch {
                left: patch.ambient_dim(),
                right: ambient,
            });
        }
        total += try_integrate_box(
            |u| {
                let frame = patch.frame(u)?;
                Ok(dot(frame.position(), &frame.normal) * frame.area_element)
            },
            patch.param_box(),
            order,
        )?;
    }
    Ok(total / ambient as f64)
}

/// Integral of the unit normal over the patch, one component per ambient
/// coordinate. Vanishes for closed surfaces.
pub fn gauss_map_integral(patch: &ParametricPatch, order: usize) -> Result<Vec<f64>> {
    try_integrate_box_vec(
        |u| {
            let frame = patch.frame(u)?;
            Ok(frame
                .normal
                .iter()
                .map(|n| n * frame.area_element)
                .collect())
        },
        patch.param_box(),
        order,
    )
}

/// Signed curvature integral `(-1)^l` times the integral of the elementary
/// symmetric polynomial `e_l` of the principal curvatures.
///
/// These are precisely the coefficients of the parallel-area polynomial (see
/// [`super::tube_polynomial`]); `l = 0` recovers the area.
pub fn curvature_integral(patch: &ParametricPatch, l: usize, order: usize) -> Result<f64> {
    if l > patch.dim() {
        return Err(Error::InvalidParameter(format!(
            "curvature order {l} exceeds patch dimension {}",
            patch.dim()
        )));
    }
    let sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
    try_integrate_box(
        |u| {
            let data = curvature_at(patch, u)?;
            Ok(sign * data.elementary_symmetric(l) * data.frame.area_element)
        },
        patch.param_box(),
        order,
    )
}
