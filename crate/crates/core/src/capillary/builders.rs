//! Constructors for the concrete capillary surfaces used throughout the
//! crate: spherical caps sitting on a half-space wall, spherical bridges
//! spanning the two walls of a wedge, and spheroidal caps as a deliberately
//! non-CMC comparison family.
//!
//! Each builder derives the exact center, wetted-disk and volume data in
//! closed form and then runs the full assembly checks of
//! [`CapillarySurface::assemble`], so a successfully returned record has
//! verified boundary placement, constant mean curvature (where claimed) and
//! constant measured contact angles.

use crate::capillary::domain::SupportDomain;
use crate::capillary::surface::{
    BoundaryContact, CapillarySurface, Tolerances, WettedDomain, EDGE_CLEARANCE,
};
use crate::error::{Error, Result};
use crate::hypersurface::shapes;
use crate::numkernel::linalg::{axpy, dot, norm};
use std::f64::consts::PI;

/// Volume of a spherical cap of height `h` cut from a sphere of radius `r`.
fn spherical_cap_volume(r: f64, h: f64) -> f64 {
    PI * h * h * (3.0 * r - h) / 3.0
}

fn require_radius(radius: f64) -> Result<()> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive and finite, got {radius}"
        )));
    }
    Ok(())
}

fn require_contact_angle(theta: f64) -> Result<()> {
    if !(theta > 0.0) || !(theta < PI) {
        return Err(Error::InvalidParameter(format!(
            "contact angle must lie in (0, pi), got {theta}"
        )));
    }
    Ok(())
}

/// Spherical cap of radius `radius` resting on the floor of the upper
/// half-space with contact angle `theta`.
///
/// The sphere center sits at `(0, 0, -radius cos theta)`, so the wall plane
/// `{x_3 = 0}` cuts the sphere in a circle of radius `radius sin theta` and
/// the cap above the wall meets it at angle `theta` exactly. Angles at least
/// `pi/2` give the configurations covered by the stability classification;
/// acute angles are still constructible but carry a warning and fail the
/// hypothesis record. `theta >= pi` is rejected.
pub fn cap_in_halfspace(radius: f64, theta: f64) -> Result<CapillarySurface> {
    require_radius(radius)?;
    require_contact_angle(theta)?;
    let center = [0.0, 0.0, -radius * theta.cos()];
    let patch = shapes::sphere_cap(&center, radius, [0.0, theta])?;
    let wetted = WettedDomain::round_disk(0, &[0.0, 0.0, 0.0], radius * theta.sin())?;
    let height = radius * (1.0 - theta.cos());
    let volume = spherical_cap_volume(radius, height);
    CapillarySurface::assemble(
        patch,
        SupportDomain::HalfSpace,
        vec![BoundaryContact {
            wall: 0,
            axis: 0,
            at_upper: true,
        }],
        vec![theta],
        vec![wetted],
        volume,
        true,
        true,
        &Tolerances::default(),
    )
}

/// Spherical bridge of radius `radius` spanning the wedge of half-angle
/// `half_angle`, meeting wall 0 at angle `theta1` and wall 1 at `theta2`.
///
/// The center is the unique point of the `y`-`z` plane whose signed distance
/// to wall `i` equals `radius cos theta_i`. Infeasible data are rejected in
/// this order: a center outside the closed wedge (which happens exactly when
/// some `theta_i < pi/2`), a sphere that reaches the wedge edge, and a
/// contact circle that reaches the edge within its wall.
pub fn bridge_in_wedge(
    radius: f64,
    half_angle: f64,
    theta1: f64,
    theta2: f64,
) -> Result<CapillarySurface> {
    require_radius(radius)?;
    require_contact_angle(theta1)?;
    require_contact_angle(theta2)?;
    let domain = SupportDomain::wedge(half_angle)?;
    let thetas = [theta1, theta2];

    // Solve <c, N_i> = radius cos theta_i for the center in the y-z plane.
    let (sin_a, cos_a) = half_angle.sin_cos();
    let center = vec![
        0.0,
        -radius * (theta1.cos() + theta2.cos()) / (2.0 * sin_a),
        radius * (theta1.cos() - theta2.cos()) / (2.0 * cos_a),
    ];
    for wall in 0..2 {
        let depth = dot(&center, &domain.wall_normal(wall));
        if depth > 1e-12 {
            return Err(Error::InfeasibleGeometry(format!(
                "no sphere center inside the wedge: contact angle {} on wall {wall} \
                 is below pi/2, which places the center {depth:.6} outside",
                thetas[wall]
            )));
        }
    }

    let edge_distance = norm(&center);
    if edge_distance <= radius + EDGE_CLEARANCE {
        return Err(Error::EdgeCollision {
            distance: edge_distance,
            min_distance: radius + EDGE_CLEARANCE,
        });
    }

    let mut wetted = Vec::with_capacity(2);
    for wall in 0..2 {
        let depth = radius * thetas[wall].cos();
        let disk_radius = radius * thetas[wall].sin();
        let clearance = dot(&center, &domain.wall_tangent(wall)) - disk_radius;
        if clearance <= EDGE_CLEARANCE {
            return Err(Error::EdgeCollision {
                distance: clearance,
                min_distance: EDGE_CLEARANCE,
            });
        }
        let disk_center = axpy(&center, -depth, &domain.wall_normal(wall));
        wetted.push(WettedDomain::round_disk(wall, &disk_center, disk_radius)?);
    }

    let patch = shapes::sphere_pencil_band(&center, radius, [-half_angle, half_angle])?;
    let mut volume = 4.0 * PI * radius.powi(3) / 3.0;
    for theta in thetas {
        // Height of the cap cut away beyond each wall.
        let height = radius * (1.0 + theta.cos());
        volume -= spherical_cap_volume(radius, height);
    }

    CapillarySurface::assemble(
        patch,
        domain,
        vec![
            BoundaryContact {
                wall: 0,
                axis: 0,
                at_upper: true,
            },
            BoundaryContact {
                wall: 1,
                axis: 0,
                at_upper: false,
            },
        ],
        vec![theta1, theta2],
        wetted,
        volume,
        true,
        true,
        &Tolerances::default(),
    )
}

/// Cap of a spheroid of revolution (equatorial semi-axis `equatorial`, polar
/// semi-axis `polar`) cut at height `cut` and rested on the half-space floor.
///
/// Unless the semi-axes coincide this surface is not CMC; the record carries
/// the measured curvature deviation and `is_cmc = false`, which quarantines
/// it from every functional that requires constant mean curvature. The
/// contact angle is still constant by rotational symmetry.
pub fn spheroid_cap_in_halfspace(
    equatorial: f64,
    polar: f64,
    cut: f64,
) -> Result<CapillarySurface> {
    require_radius(equatorial)?;
    require_radius(polar)?;
    if !(cut.abs() < polar) {
        return Err(Error::InfeasibleGeometry(format!(
            "cut height {cut} must lie strictly between -{polar} and {polar}"
        )));
    }
    let s_cut = (cut / polar).acos();
    let patch = shapes::spheroid_cap(equatorial, polar, [0.0, s_cut], -cut)?;
    let disk_radius = equatorial * s_cut.sin();
    let wetted = WettedDomain::round_disk(0, &[0.0, 0.0, 0.0], disk_radius)?;
    // Angle between the meridian tangent at the cut and the floor.
    let theta = (polar * s_cut.sin()).atan2(equatorial * s_cut.cos());
    let volume = PI
        * equatorial
        * equatorial
        * (2.0 * polar / 3.0 - cut + cut.powi(3) / (3.0 * polar * polar));
    CapillarySurface::assemble(
        patch,
        SupportDomain::HalfSpace,
        vec![BoundaryContact {
            wall: 0,
            axis: 0,
            at_upper: true,
        }],
        vec![theta],
        vec![wetted],
        volume,
        false,
        true,
        &Tolerances::default(),
    )
}
