//! Parallel (offset) patches `u -> X(u) + t normal(u)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numkernel::linalg::{axpy, norm, sub};
use crate::numkernel::{try_integrate_box, JetEstimate};

use super::curvature::{curvature_at, normal_derivatives};
use super::patch::{JetFn, ParametricPatch, PositionFn};

/// Margin kept between `k_i t` and the focal value 1.
const FOCAL_MARGIN: f64 = 1e-9;

/// Agreement required between the offset patch's normal and the base normal
/// at the spot-check points.
const NORMAL_CHECK_TOL: f64 = 1e-8;

/// Builds the parallel patch at offset `t`.
///
/// Before constructing anything, every quadrature node of the base patch (at
/// the given order) is checked against the focal condition `1 - k_i t > 0`;
/// crossing a focal point makes the offset map degenerate, so that is an
/// error rather than a silent fold. The offset patch carries an analytic
/// first-order jet (`d_i X + t d_i normal`, with the normal derivatives from
/// the shape operator); its second derivatives come from differencing those
/// first derivatives. The construction is validated by checking that the
/// offset patch reports the same normal as the base patch.
pub fn parallel_patch(patch: &ParametricPatch, t: f64, order: usize) -> Result<ParametricPatch> {
    if !t.is_finite() {
        return Err(Error::InvalidParameter(format!("offset {t} is not finite")));
    }
    // Focal scan over the quadrature grid the caller will integrate on.
    try_integrate_box(
        |u| {
            let data = curvature_at(patch, u)?;
            for &k in &data.principal {
                let factor = 1.0 - k * t;
                if factor <= FOCAL_MARGIN {
                    return Err(Error::FocalCrossing {
                        u: u.to_vec(),
                        factor,
                    });
                }
            }
            Ok(0.0)
        },
        patch.param_box(),
        order,
    )?;

    let base = patch.clone();
    let ambient = patch.ambient_dim();
    let n = patch.dim();
    let position_base = base.clone();
    let position: PositionFn = Arc::new(move |u: &[f64]| match position_base.frame(u) {
        Ok(frame) => axpy(frame.position(), t, &frame.normal),
        Err(_) => vec![f64::NAN; ambient],
    });

    let jet_base = base.clone();
    let param_box = patch.param_box().to_vec();
    let h = patch.fd_step();
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        match offset_jet(&jet_base, u, t, h) {
            Ok(jet) => jet,
            // Poisoned jet; the consuming integrator reports the node.
            Err(_) => JetEstimate::analytic(
                vec![f64::NAN; ambient],
                vec![vec![f64::NAN; ambient]; n],
                vec![vec![f64::NAN; ambient]; n * (n + 1) / 2],
            ),
        }
    });

    let offset = ParametricPatch::from_position(param_box, ambient, position)?
        .with_analytic_jet(jet)
        .with_orientation(patch.orientation_sign())?
        .with_fd_step(patch.fd_step())?;

    // The offset of a sphere-like patch must keep the base normal; a sign
    // flip or focal fold would show up here.
    for u in check_points(patch) {
        let base_frame = patch.frame(&u)?;
        let offset_frame = offset.frame(&u)?;
        let deviation = norm(&sub(&offset_frame.normal, &base_frame.normal));
        if deviation > NORMAL_CHECK_TOL {
            return Err(Error::GeometryViolation(format!(
                "offset patch normal deviates from the base normal by {deviation:.3e} at {u:?}"
            )));
        }
    }
    Ok(offset)
}

/// First-order analytic jet of the offset map, with second derivatives from
/// centered (or, near the box edge, shifted one-sided) differences of the
/// analytic first derivatives.
fn offset_jet(base: &ParametricPatch, u: &[f64], t: f64, h: f64) -> Result<JetEstimate> {
    let n = base.dim();
    let firsts_at = |point: &[f64]| -> Result<Vec<Vec<f64>>> {
        let data = curvature_at(base, point)?;
        let dn = normal_derivatives(&data)?;
        Ok((0..n)
            .map(|i| axpy(data.frame.jet.first(i), t, &dn[i]))
            .collect())
    };

    let data = curvature_at(base, u)?;
    let dn = normal_derivatives(&data)?;
    let value = axpy(data.frame.position(), t, &data.frame.normal);
    let first: Vec<Vec<f64>> = (0..n)
        .map(|i| axpy(data.frame.jet.first(i), t, &dn[i]))
        .collect();

    if t == 0.0 {
        // Offset zero is the base patch; reuse its exact second derivatives.
        let mut second = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                second.push(data.frame.jet.second(i, j).to_vec());
            }
        }
        return Ok(JetEstimate::analytic(value, first, second));
    }

    // d_j of the first-derivative field, one difference per axis.
    let mut first_gradients: Vec<Vec<Vec<f64>>> = Vec::with_capacity(n);
    for j in 0..n {
        let [lo, hi] = base.param_box()[j];
        let room_lo = u[j] - lo;
        let room_hi = hi - u[j];
        let grad: Vec<Vec<f64>> = if room_lo >= h && room_hi >= h {
            let mut plus = u.to_vec();
            plus[j] += h;
            let mut minus = u.to_vec();
            minus[j] -= h;
            let fp = firsts_at(&plus)?;
            let fm = firsts_at(&minus)?;
            (0..n)
                .map(|i| {
                    sub(&fp[i], &fm[i])
                        .iter()
                        .map(|d| d / (2.0 * h))
                        .collect()
                })
                .collect()
        } else {
            // Shifted second-order stencil pointing into the box.
            let dir = if room_hi >= room_lo { 1.0 } else { -1.0 };
            if room_lo.max(room_hi) < 2.0 * h {
                return Err(Error::InvalidParameter(format!(
                    "box too small on axis {j} for offset differencing with step {h}"
                )));
            }
            let mut p1 = u.to_vec();
            p1[j] += dir * h;
            let mut p2 = u.to_vec();
            p2[j] += dir * 2.0 * h;
            let f0 = firsts_at(u)?;
            let f1 = firsts_at(&p1)?;
            let f2 = firsts_at(&p2)?;
            (0..n)
                .map(|i| {
                    (0..f0[i].len())
                        .map(|c| {
                            dir * (-1.5 * f0[i][c] + 2.0 * f1[i][c] - 0.5 * f2[i][c]) / h
                        })
                        .collect()
                })
                .collect()
        };
        first_gradients.push(grad);
    }

    let mut second = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            // Symmetrize d_j(first_i) with d_i(first_j).
            let a = &first_gradients[j][i];
            let b = &first_gradients[i][j];
            second.push(a.iter().zip(b.iter()).map(|(x, y)| 0.5 * (x + y)).collect());
        }
    }
    Ok(JetEstimate::analytic(value, first, second))
}

fn check_points(patch: &ParametricPatch) -> Vec<Vec<f64>> {
    let center = patch.center();
    let mut points = vec![center.clone()];
    for (axis, &[lo, hi]) in patch.param_box().iter().enumerate() {
        for frac in [0.25, 0.75] {
            let mut p = center.clone();
            p[axis] = lo + frac * (hi - lo);
            points.push(p);
        }
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersurface::{area, curvature_at, oriented_volume, shapes};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn offset_sphere_is_a_sphere_of_grown_radius() {
        let patch = shapes::sphere(&[0.0, 0.0, 0.0], 1.0).unwrap();
        let offset = parallel_patch(&patch, 0.3, 24).unwrap();
        assert_relative_eq!(
            area(&offset, 24).unwrap(),
            4.0 * PI * 1.3f64.powi(2),
            epsilon = 1e-8
        );
        assert_relative_eq!(
            oriented_volume(std::slice::from_ref(&offset), 24).unwrap(),
            4.0 * PI * 1.3f64.powi(3) / 3.0,
            epsilon = 1e-8
        );
        let data = curvature_at(&offset, &[1.1, 0.7]).unwrap();
        for k in &data.principal {
            assert_relative_eq!(*k, -1.0 / 1.3, epsilon = 1e-5);
        }
    }

    #[test]
    fn inward_offset_shrinks_the_sphere() {
        let patch = shapes::sphere(&[0.0, 0.0, 0.0], 1.0).unwrap();
        let offset = parallel_patch(&patch, -0.4, 24).unwrap();
        assert_relative_eq!(
            area(&offset, 24).unwrap(),
            4.0 * PI * 0.36,
            epsilon = 1e-8
        );
    }

    #[test]
    fn focal_crossing_is_detected_before_construction() {
        let patch = shapes::sphere(&[0.0, 0.0, 0.0], 1.0).unwrap();
        match parallel_patch(&patch, -1.01, 16) {
            Err(Error::FocalCrossing { factor, .. }) => assert!(factor <= 0.0),
            other => panic!("expected focal crossing, got {other:?}"),
        }
        // Outward offsets of an outward sphere never cross a focal point.
        assert!(parallel_patch(&patch, 5.0, 16).is_ok());
    }

    #[test]
    fn torus_inner_offset_hits_the_core_circle() {
        let patch = shapes::torus(2.0, 1.0).unwrap();
        // The +1 principal curvature on the inner equator makes offsets
        // beyond t = 1 fold through the core circle.
        assert!(matches!(
            parallel_patch(&patch, 1.05, 24),
            Err(Error::FocalCrossing { .. })
        ));
        assert!(parallel_patch(&patch, 0.5, 24).is_ok());
    }

    #[test]
    fn offset_composes_additively_on_areas() {
        let patch = shapes::torus(2.0, 1.0).unwrap();
        let once = parallel_patch(&patch, 0.2, 24).unwrap();
        let twice = parallel_patch(&once, 0.1, 24).unwrap();
        let direct = parallel_patch(&patch, 0.3, 24).unwrap();
        assert_relative_eq!(
            area(&twice, 24).unwrap(),
            area(&direct, 24).unwrap(),
            epsilon = 1e-5
        );
    }

    #[test]
    fn zero_offset_reproduces_base_second_derivatives_exactly() {
        let patch = shapes::torus(2.0, 1.0).unwrap();
        let offset = parallel_patch(&patch, 0.0, 16).unwrap();
        let u = [0.9, 2.2];
        let a = patch.jet(&u).unwrap();
        let b = offset.jet(&u).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for (x, y) in a.second(i, j).iter().zip(b.second(i, j).iter()) {
                    assert_relative_eq!(x, y, epsilon = 1e-12);
                }
            }
        }
    }
}
