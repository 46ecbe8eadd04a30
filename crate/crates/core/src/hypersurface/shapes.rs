//! Chart library: analytic-jet patches for the standard geometries used
//! throughout the crate.
//!
//! Every constructor returns a patch whose derivatives are supplied in closed
//! form, so quadrature sees no finite-difference noise, and whose default
//! orientation is outward (for closed or convex-side charts) as described on
//! each constructor.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numkernel::linalg::{dot, norm};
use crate::numkernel::{Interval, JetEstimate};

use super::patch::{JetFn, ParametricPatch, PositionFn};

fn require_positive(value: f64, what: &str) -> Result<()> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "{what} must be positive and finite, got {value}"
        )));
    }
    Ok(())
}

fn require_range(range: Interval, lo_min: f64, hi_max: f64, what: &str) -> Result<()> {
    let [lo, hi] = range;
    if !lo.is_finite() || !hi.is_finite() || lo < lo_min - 1e-12 || hi > hi_max + 1e-12 || hi <= lo
    {
        return Err(Error::InvalidParameter(format!(
            "{what} range [{lo}, {hi}] must sit inside [{lo_min}, {hi_max}]"
        )));
    }
    Ok(())
}

fn analytic_patch(
    param_box: Vec<Interval>,
    ambient: usize,
    position: PositionFn,
    jet: JetFn,
    orientation_sign: f64,
) -> Result<ParametricPatch> {
    ParametricPatch::from_position(param_box, ambient, position)?
        .with_analytic_jet(jet)
        .with_orientation(orientation_sign)
}

/// Round sphere chart in polar coordinates `(s, phi)`, `s` the polar angle
/// from the north pole. Oriented outward.
pub fn sphere(center: &[f64], radius: f64) -> Result<ParametricPatch> {
    sphere_cap(center, radius, [0.0, PI])
}

/// Polar-angle band of a round sphere; `polar_range = [0, pi]` is the whole
/// sphere. Oriented outward.
pub fn sphere_cap(center: &[f64], radius: f64, polar_range: Interval) -> Result<ParametricPatch> {
    spheroid_chart(center, radius, radius, polar_range)
}

/// Cap of a spheroid with equatorial semi-axis `equatorial` and polar
/// semi-axis `polar`, shifted so its symmetry axis is the `z`-axis with the
/// given apex-side offset. Oriented outward.
pub fn spheroid_cap(
    equatorial: f64,
    polar: f64,
    polar_range: Interval,
    z_shift: f64,
) -> Result<ParametricPatch> {
    if !z_shift.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "z shift must be finite, got {z_shift}"
        )));
    }
    spheroid_chart(&[0.0, 0.0, z_shift], equatorial, polar, polar_range)
}

/// Shared chart for spheres and spheroids of revolution about `z`.
fn spheroid_chart(
    center: &[f64],
    a: f64,
    c: f64,
    polar_range: Interval,
) -> Result<ParametricPatch> {
    require_positive(a, "equatorial semi-axis")?;
    require_positive(c, "polar semi-axis")?;
    require_range(polar_range, 0.0, PI, "polar angle")?;
    if center.len() != 3 {
        return Err(Error::DimensionMismatch {
            left: center.len(),
            right: 3,
        });
    }
    let ctr: [f64; 3] = [center[0], center[1], center[2]];
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (s, p) = (u[0], u[1]);
        vec![
            ctr[0] + a * s.sin() * p.cos(),
            ctr[1] + a * s.sin() * p.sin(),
            ctr[2] + c * s.cos(),
        ]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (s, p) = (u[0], u[1]);
        let (ss, cs) = s.sin_cos();
        let (sp, cp) = p.sin_cos();
        let value = vec![ctr[0] + a * ss * cp, ctr[1] + a * ss * sp, ctr[2] + c * cs];
        let d_s = vec![a * cs * cp, a * cs * sp, -c * ss];
        let d_p = vec![-a * ss * sp, a * ss * cp, 0.0];
        let d_ss = vec![-a * ss * cp, -a * ss * sp, -c * cs];
        let d_sp = vec![-a * cs * sp, a * cs * cp, 0.0];
        let d_pp = vec![-a * ss * cp, -a * ss * sp, 0.0];
        JetEstimate::analytic(value, vec![d_s, d_p], vec![d_ss, d_sp, d_pp])
    });
    analytic_patch(
        vec![polar_range, [0.0, 2.0 * PI]],
        3,
        position,
        jet,
        1.0,
    )
}

/// Torus of revolution about the `z`-axis with the given major and minor
/// radii, parametrized `(minor angle, major angle)`. Oriented outward.
pub fn torus(major: f64, minor: f64) -> Result<ParametricPatch> {
    require_positive(major, "major radius")?;
    require_positive(minor, "minor radius")?;
    if minor >= major {
        return Err(Error::InvalidParameter(format!(
            "minor radius {minor} must be below the major radius {major}"
        )));
    }
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (su, cu) = u[0].sin_cos();
        let (sv, cv) = u[1].sin_cos();
        let ring = major + minor * cu;
        vec![ring * cv, ring * sv, minor * su]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (su, cu) = u[0].sin_cos();
        let (sv, cv) = u[1].sin_cos();
        let ring = major + minor * cu;
        let value = vec![ring * cv, ring * sv, minor * su];
        let d_u = vec![-minor * su * cv, -minor * su * sv, minor * cu];
        let d_v = vec![-ring * sv, ring * cv, 0.0];
        let d_uu = vec![-minor * cu * cv, -minor * cu * sv, -minor * su];
        let d_uv = vec![minor * su * sv, -minor * su * cv, 0.0];
        let d_vv = vec![-ring * cv, -ring * sv, 0.0];
        JetEstimate::analytic(value, vec![d_u, d_v], vec![d_uu, d_uv, d_vv])
    });
    // The natural chart normal points into the solid torus; flip it outward.
    analytic_patch(
        vec![[0.0, 2.0 * PI], [0.0, 2.0 * PI]],
        3,
        position,
        jet,
        -1.0,
    )
}

/// Circular cylinder of the given radius about the `z`-axis, parametrized
/// `(angle, height)`. Oriented away from the axis.
pub fn cylinder(radius: f64, z_range: Interval) -> Result<ParametricPatch> {
    require_positive(radius, "radius")?;
    let [lo, hi] = z_range;
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(Error::DegenerateBox { axis: 1, lo, hi });
    }
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (sp, cp) = u[0].sin_cos();
        vec![radius * cp, radius * sp, u[1]]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (sp, cp) = u[0].sin_cos();
        let value = vec![radius * cp, radius * sp, u[1]];
        let d_p = vec![-radius * sp, radius * cp, 0.0];
        let d_z = vec![0.0, 0.0, 1.0];
        let d_pp = vec![-radius * cp, -radius * sp, 0.0];
        let zero = vec![0.0, 0.0, 0.0];
        JetEstimate::analytic(value, vec![d_p, d_z], vec![d_pp, zero.clone(), zero])
    });
    analytic_patch(vec![[0.0, 2.0 * PI], z_range], 3, position, jet, 1.0)
}

/// Catenoid with waist radius `waist`, parametrized `(height, angle)`.
/// Oriented away from the axis; a minimal surface, so the mean curvature
/// vanishes identically.
pub fn catenoid(waist: f64, z_range: Interval) -> Result<ParametricPatch> {
    require_positive(waist, "waist radius")?;
    let [lo, hi] = z_range;
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(Error::DegenerateBox { axis: 0, lo, hi });
    }
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let rho = waist * (u[0] / waist).cosh();
        let (sp, cp) = u[1].sin_cos();
        vec![rho * cp, rho * sp, u[0]]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let rho = waist * (u[0] / waist).cosh();
        let drho = (u[0] / waist).sinh();
        let ddrho = (u[0] / waist).cosh() / waist;
        let (sp, cp) = u[1].sin_cos();
        let value = vec![rho * cp, rho * sp, u[0]];
        let d_z = vec![drho * cp, drho * sp, 1.0];
        let d_p = vec![-rho * sp, rho * cp, 0.0];
        let d_zz = vec![ddrho * cp, ddrho * sp, 0.0];
        let d_zp = vec![-drho * sp, drho * cp, 0.0];
        let d_pp = vec![-rho * cp, -rho * sp, 0.0];
        JetEstimate::analytic(value, vec![d_z, d_p], vec![d_zz, d_zp, d_pp])
    });
    // Natural normal points toward the axis; flip outward.
    analytic_patch(vec![z_range, [0.0, 2.0 * PI]], 3, position, jet, -1.0)
}

/// Flat disk of the given radius in an arbitrary plane, parametrized
/// `(rho, phi)` against the supplied orthonormal in-plane frame. The natural
/// normal is the cross product `frame_u x frame_v`.
pub fn planar_disk(
    center: &[f64],
    radius: f64,
    frame_u: &[f64],
    frame_v: &[f64],
) -> Result<ParametricPatch> {
    require_positive(radius, "radius")?;
    if center.len() != 3 || frame_u.len() != 3 || frame_v.len() != 3 {
        return Err(Error::DimensionMismatch {
            left: center.len().max(frame_u.len()).max(frame_v.len()),
            right: 3,
        });
    }
    let ortho = (norm(frame_u) - 1.0).abs() < 1e-10
        && (norm(frame_v) - 1.0).abs() < 1e-10
        && dot(frame_u, frame_v).abs() < 1e-10;
    if !ortho {
        return Err(Error::InvalidParameter(
            "disk frame vectors must be orthonormal".into(),
        ));
    }
    let c: [f64; 3] = [center[0], center[1], center[2]];
    let eu: [f64; 3] = [frame_u[0], frame_u[1], frame_u[2]];
    let ev: [f64; 3] = [frame_v[0], frame_v[1], frame_v[2]];
    let combine = move |a: f64, b: f64, with_center: bool| -> Vec<f64> {
        (0..3)
            .map(|i| a * eu[i] + b * ev[i] + if with_center { c[i] } else { 0.0 })
            .collect()
    };
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (sp, cp) = u[1].sin_cos();
        combine(u[0] * cp, u[0] * sp, true)
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (sp, cp) = u[1].sin_cos();
        let value = combine(u[0] * cp, u[0] * sp, true);
        let d_r = combine(cp, sp, false);
        let d_p = combine(-u[0] * sp, u[0] * cp, false);
        let d_rr = vec![0.0, 0.0, 0.0];
        let d_rp = combine(-sp, cp, false);
        let d_pp = combine(-u[0] * cp, -u[0] * sp, false);
        JetEstimate::analytic(value, vec![d_r, d_p], vec![d_rr, d_rp, d_pp])
    });
    analytic_patch(
        vec![[0.0, radius], [0.0, 2.0 * PI]],
        3,
        position,
        jet,
        1.0,
    )
}

/// Horizontal disk at the given height, normal pointing up.
pub fn disk(radius: f64, height: f64) -> Result<ParametricPatch> {
    planar_disk(
        &[0.0, 0.0, height],
        radius,
        &[1.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0],
    )
}

/// Band of a sphere swept out by the pencil of planes through the `x`-axis.
///
/// The chart parameter `psi` tilts a plane through the `x`-axis (`psi = 0` is
/// the horizontal plane `z = 0` reached from the positive `y` side), and each
/// plane cuts the sphere of the given center and radius in a circle
/// parametrized by `phi`. The center must lie in the `y`-`z` plane, strictly
/// farther than `radius` from the axis, on the positive side of every plane
/// in the range; orientation is outward.
pub fn sphere_pencil_band(
    center: &[f64],
    radius: f64,
    psi_range: Interval,
) -> Result<ParametricPatch> {
    require_positive(radius, "radius")?;
    if center.len() != 3 {
        return Err(Error::DimensionMismatch {
            left: center.len(),
            right: 3,
        });
    }
    if center[0].abs() > 1e-12 {
        return Err(Error::InvalidParameter(
            "pencil-band center must lie in the y-z plane".into(),
        ));
    }
    let [lo, hi] = psi_range;
    require_range(psi_range, -0.5 * PI, 0.5 * PI, "pencil angle")?;
    let (cy, cz) = (center[1], center[2]);
    let axis_distance = cy.hypot(cz);
    if axis_distance <= radius {
        return Err(Error::InfeasibleGeometry(format!(
            "sphere of radius {radius} at axis distance {axis_distance} meets the pencil axis"
        )));
    }
    // The chart degenerates where a pencil plane becomes tangent to the
    // sphere (|p| -> radius) and faces the wrong way where q <= 0; both are
    // monotone enough to catch by dense sampling of the closed range.
    for k in 0..=256 {
        let psi = lo + (hi - lo) * k as f64 / 256.0;
        let (sp, cp) = psi.sin_cos();
        let p = -cy * sp + cz * cp;
        let q = cy * cp + cz * sp;
        if radius * radius - p * p < (1e-6 * radius).powi(2) {
            return Err(Error::GeometryViolation(format!(
                "pencil plane at angle {psi} is tangent to the sphere"
            )));
        }
        if q <= 1e-9 * axis_distance {
            return Err(Error::GeometryViolation(format!(
                "pencil plane at angle {psi} faces away from the sphere"
            )));
        }
    }
    // In the rotating frame n = (0, -sin psi, cos psi), t = (0, cos psi,
    // sin psi): with p = <c, n>, q = <c, t>, r = sqrt(R^2 - p^2), the chart
    // is X = c - p n + r (cos phi t + sin phi e_x).
    let assemble = move |coef_n: f64, coef_t: f64, coef_x: f64, psi: f64| -> [f64; 3] {
        let (sp, cp) = psi.sin_cos();
        [
            coef_x,
            -coef_n * sp + coef_t * cp,
            coef_n * cp + coef_t * sp,
        ]
    };
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (psi, phi) = (u[0], u[1]);
        let (spsi, cpsi) = psi.sin_cos();
        let p = -cy * spsi + cz * cpsi;
        let r = (radius * radius - p * p).sqrt();
        let (sphi, cphi) = phi.sin_cos();
        let v = assemble(-p, r * cphi, r * sphi, psi);
        vec![v[0], cy + v[1], cz + v[2]]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (psi, phi) = (u[0], u[1]);
        let (spsi, cpsi) = psi.sin_cos();
        let p = -cy * spsi + cz * cpsi;
        let q = cy * cpsi + cz * spsi;
        let r = (radius * radius - p * p).sqrt();
        let (sphi, cphi) = phi.sin_cos();
        let big_f = q + r * cphi;
        let big_g = p + (p * q / r) * cphi;
        let big_k = (p * q / r) * sphi;
        let w = (p * p - q * q) / r - p * p * q * q / (r * r * r);
        let dg = -q + w * cphi;
        let dk = w * sphi;
        let rp = p * q / r;

        let pos = assemble(-p, r * cphi, r * sphi, psi);
        let value = vec![pos[0], cy + pos[1], cz + pos[2]];
        let d_psi = assemble(big_f, big_g, big_k, psi).to_vec();
        let d_phi = assemble(0.0, -r * sphi, r * cphi, psi).to_vec();
        let d_psipsi = assemble(2.0 * big_g, dg - big_f, dk, psi).to_vec();
        let d_psiphi = assemble(-r * sphi, -rp * sphi, rp * cphi, psi).to_vec();
        let d_phiphi = assemble(0.0, -r * cphi, -r * sphi, psi).to_vec();
        JetEstimate::analytic(value, vec![d_psi, d_phi], vec![d_psipsi, d_psiphi, d_phiphi])
    });
    analytic_patch(
        vec![psi_range, [0.0, 2.0 * PI]],
        3,
        position,
        jet,
        1.0,
    )
}

/// Full circle in the plane, oriented outward (curvature `-1/radius`).
pub fn circle_curve(center: &[f64], radius: f64) -> Result<ParametricPatch> {
    require_positive(radius, "radius")?;
    if center.len() != 2 {
        return Err(Error::DimensionMismatch {
            left: center.len(),
            right: 2,
        });
    }
    let (cx, cy) = (center[0], center[1]);
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (s, c) = u[0].sin_cos();
        vec![cx + radius * c, cy + radius * s]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (s, c) = u[0].sin_cos();
        JetEstimate::analytic(
            vec![cx + radius * c, cy + radius * s],
            vec![vec![-radius * s, radius * c]],
            vec![vec![-radius * c, -radius * s]],
        )
    });
    // The natural normal of a counterclockwise chart is the inward left
    // normal; flip it outward.
    analytic_patch(vec![[0.0, 2.0 * PI]], 2, position, jet, -1.0)
}

/// Origin-centered ellipse with the given semi-axes, oriented outward.
pub fn ellipse_curve(semi_x: f64, semi_y: f64) -> Result<ParametricPatch> {
    require_positive(semi_x, "x semi-axis")?;
    require_positive(semi_y, "y semi-axis")?;
    let position: PositionFn = Arc::new(move |u: &[f64]| {
        let (s, c) = u[0].sin_cos();
        vec![semi_x * c, semi_y * s]
    });
    let jet: JetFn = Arc::new(move |u: &[f64]| {
        let (s, c) = u[0].sin_cos();
        JetEstimate::analytic(
            vec![semi_x * c, semi_y * s],
            vec![vec![-semi_x * s, semi_y * c]],
            vec![vec![-semi_x * c, -semi_y * s]],
        )
    });
    analytic_patch(vec![[0.0, 2.0 * PI]], 2, position, jet, -1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersurface::curvature_at;
    use crate::numkernel::linalg::cross3;
    use approx::assert_relative_eq;

    /// Twin of `patch` that must fall back to finite differences. A step
    /// finer than the default keeps the twin's truncation error below the
    /// comparison thresholds even for charts with large third derivatives.
    fn fd_twin(patch: &ParametricPatch) -> ParametricPatch {
        let base = patch.clone();
        ParametricPatch::from_position(
            patch.param_box().to_vec(),
            patch.ambient_dim(),
            Arc::new(move |u: &[f64]| base.position(u)),
        )
        .unwrap()
        .with_fd_step(1e-4)
        .unwrap()
    }

    /// Checks the hand-derived jet of every shape against finite differences
    /// of its own position map, at points well inside the box.
    fn assert_jet_matches_fd(patch: &ParametricPatch) {
        assert!(patch.has_analytic_jet());
        let twin = fd_twin(patch);
        for frac in [[0.31, 0.62], [0.55, 0.18], [0.72, 0.87]] {
            let u: Vec<f64> = patch
                .param_box()
                .iter()
                .enumerate()
                .map(|(d, &[lo, hi])| lo + frac[d.min(1)] * (hi - lo))
                .collect();
            let exact = patch.jet(&u).unwrap();
            let approx_jet = twin.jet(&u).unwrap();
            let n = patch.dim();
            for c in 0..patch.ambient_dim() {
                assert_relative_eq!(
                    exact.value()[c],
                    approx_jet.value()[c],
                    epsilon = 1e-12
                );
            }
            // Centered differences at step 1e-3 carry O(h^2) truncation, so
            // agreement beyond ~1e-6 cannot be expected from the twin.
            for i in 0..n {
                for c in 0..patch.ambient_dim() {
                    assert!(
                        (exact.first(i)[c] - approx_jet.first(i)[c]).abs() < 1e-6,
                        "first derivative {i}/{c} at {u:?}: {} vs {}",
                        exact.first(i)[c],
                        approx_jet.first(i)[c]
                    );
                }
            }
            for i in 0..n {
                for j in i..n {
                    for c in 0..patch.ambient_dim() {
                        assert!(
                            (exact.second(i, j)[c] - approx_jet.second(i, j)[c]).abs() < 1e-5,
                            "second derivative {i}{j}/{c} at {u:?}: {} vs {}",
                            exact.second(i, j)[c],
                            approx_jet.second(i, j)[c]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn analytic_jets_agree_with_finite_differences() {
        let shapes: Vec<ParametricPatch> = vec![
            sphere(&[0.2, -0.1, 0.4], 1.3).unwrap(),
            spheroid_cap(1.5, 1.0, [0.2, 2.0], -0.3).unwrap(),
            torus(2.0, 0.7).unwrap(),
            cylinder(1.2, [-1.0, 2.0]).unwrap(),
            catenoid(0.8, [-1.0, 1.0]).unwrap(),
            planar_disk(
                &[0.5, 0.0, 1.0],
                2.0,
                &[0.6, 0.8, 0.0],
                &[0.0, 0.0, 1.0],
            )
            .unwrap(),
            sphere_pencil_band(&[0.0, 2.5, 0.8], 1.0, [0.0, 0.6]).unwrap(),
            circle_curve(&[1.0, -2.0], 0.7).unwrap(),
            ellipse_curve(2.0, 0.5).unwrap(),
        ];
        for patch in &shapes {
            assert_jet_matches_fd(patch);
        }
    }

    #[test]
    fn outward_orientations_point_away_from_the_enclosed_region() {
        // Sphere: normal is the unit radial vector.
        let s = sphere(&[1.0, 2.0, 3.0], 2.0).unwrap();
        let f = s.frame(&[0.8, 1.9]).unwrap();
        let radial: Vec<f64> = f
            .position()
            .iter()
            .zip([1.0, 2.0, 3.0])
            .map(|(x, c)| (x - c) / 2.0)
            .collect();
        assert_relative_eq!(dot(&f.normal, &radial), 1.0, epsilon = 1e-10);

        // Pencil band: also a sphere, so the same radial test applies.
        let band = sphere_pencil_band(&[0.0, 3.0, -0.4], 1.2, [-0.45, 0.2]).unwrap();
        let bf = band.frame(&[0.1, 2.4]).unwrap();
        let center = [0.0, 3.0, -0.4];
        let radial: Vec<f64> = bf
            .position()
            .iter()
            .zip(center)
            .map(|(x, c)| (x - c) / 1.2)
            .collect();
        assert_relative_eq!(dot(&bf.normal, &radial), 1.0, epsilon = 1e-10);
        // And the band really sits on the sphere.
        let p = band.position(&[-0.2, 4.0]);
        let dist = p
            .iter()
            .zip(center)
            .map(|(x, c)| (x - c) * (x - c))
            .sum::<f64>()
            .sqrt();
        assert_relative_eq!(dist, 1.2, epsilon = 1e-12);

        // Outward circle: normal is the unit radial, curvature -1/R.
        let circle = circle_curve(&[0.0, 0.0], 3.0).unwrap();
        let cf = circle.frame(&[1.1]).unwrap();
        let radial: Vec<f64> = cf.position().iter().map(|x| x / 3.0).collect();
        assert_relative_eq!(dot(&cf.normal, &radial), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn catenoid_is_minimal() {
        let patch = catenoid(1.0, [-0.8, 0.8]).unwrap();
        for u in [[0.0, 0.3], [0.4, 2.0], [-0.6, 4.5]] {
            let data = curvature_at(&patch, &u).unwrap();
            assert!(data.mean.abs() < 1e-10, "mean curvature {}", data.mean);
        }
    }

    #[test]
    fn spheroid_equator_principal_curvatures() {
        // Oblate spheroid with a = 1.5, c = 1: on the equator the outward
        // meridian curvature is -a/c^2 and the parallel curvature is -1/a.
        let patch = spheroid_cap(1.5, 1.0, [0.1, 3.0], 0.0).unwrap();
        let data = curvature_at(&patch, &[0.5 * PI, 1.0]).unwrap();
        assert_relative_eq!(data.principal[0], -1.5, epsilon = 1e-9);
        assert_relative_eq!(data.principal[1], -1.0 / 1.5, epsilon = 1e-9);
    }

    #[test]
    fn ellipse_vertex_curvatures() {
        // Outward curvature at the end of the major axis is -a/b^2.
        let patch = ellipse_curve(2.0, 0.5).unwrap();
        let at_major = curvature_at(&patch, &[0.0]).unwrap();
        assert_relative_eq!(at_major.principal[0], -2.0 / 0.25, epsilon = 1e-10);
        let at_minor = curvature_at(&patch, &[0.5 * PI]).unwrap();
        assert_relative_eq!(at_minor.principal[0], -0.5 / 4.0, epsilon = 1e-10);
    }

    #[test]
    fn planar_disk_normal_is_frame_cross_product() {
        let eu = [0.6, 0.8, 0.0];
        let ev = [0.0, 0.0, 1.0];
        let disk = planar_disk(&[0.0, 1.0, 0.0], 1.5, &eu, &ev).unwrap();
        let f = disk.frame(&[0.7, 2.0]).unwrap();
        let expected = cross3(&eu, &ev);
        for (a, b) in f.normal.iter().zip(expected.iter()) {
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(sphere(&[0.0, 0.0, 0.0], 0.0).is_err());
        assert!(sphere_cap(&[0.0, 0.0, 0.0], 1.0, [0.5, 0.2]).is_err());
        assert!(sphere_cap(&[0.0, 0.0, 0.0], 1.0, [0.0, 4.0]).is_err());
        assert!(torus(1.0, 1.0).is_err());
        assert!(planar_disk(&[0.0; 3], 1.0, &[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]).is_err());
        assert!(planar_disk(&[0.0; 3], 1.0, &[2.0, 0.0, 0.0], &[0.0, 1.0, 0.0]).is_err());
        // Pencil bands: center off the y-z plane, or sphere touching the
        // axis, or a tangent plane inside the range.
        assert!(sphere_pencil_band(&[0.5, 2.0, 0.0], 1.0, [-0.2, 0.2]).is_err());
        assert!(sphere_pencil_band(&[0.0, 0.9, 0.0], 1.0, [-0.2, 0.2]).is_err());
        assert!(matches!(
            sphere_pencil_band(&[0.0, 1.05, 0.0], 1.0, [-1.4, 1.4]),
            Err(Error::GeometryViolation(_))
        ));
    }

    #[test]
    fn pencil_band_boundary_circles_lie_in_the_end_planes() {
        let band = sphere_pencil_band(&[0.0, 2.0, 0.3], 0.9, [-0.3, 0.25]).unwrap();
        for psi in [-0.3f64, 0.25] {
            // The psi-boundary circle lies in the pencil plane with normal
            // n(psi) through the x-axis: <X, n(psi)> = 0.
            for phi in [0.3, 1.8, 4.0] {
                let x = band.position(&[psi, phi]);
                let plane = -x[1] * psi.sin() + x[2] * psi.cos();
                assert!(plane.abs() < 1e-12, "plane residual {plane}");
            }
        }
    }
}
