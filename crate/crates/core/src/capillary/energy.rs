//! Wetting energy of a capillary surface and its expansion coefficients.
//!
//! The energy of a configuration is the free-surface area minus the
//! cosine-weighted areas of the wetted domains,
//! `E = |Sigma| - sum_i cos(theta_i) |D_i|`. Along the distinguished normal
//! variation (unit normal plus the return translation) the unscaled energy of
//! a surface of dimension two is exactly the quadratic polynomial
//! `e_0 + e_1 t + e_2 t^2` whose coefficients this module computes from the
//! surface data:
//!
//! * `e_0` is the energy itself,
//! * `e_1 = -n H |Sigma| - sum_i cos(theta_i) sin(theta_i) |C_i|`,
//! * `e_2` integrates the second elementary symmetric function of the
//!   principal curvatures plus a contact-line correction weighted by
//!   `cos(theta_i) sin^2(theta_i)`.
//!
//! Every constant-mean-curvature surface with constant contact angles built
//! here is volume-critical: the enclosed volume satisfies
//! `v_0 = (n/(n+1)) e_0^2 / e_1`, and `criticality_residual` reports the
//! relative defect of that identity.

use crate::capillary::surface::CapillarySurface;
use crate::capillary::Tolerances;
use crate::error::{Error, Result};
use crate::hypersurface::{area, curvature_integral};

/// Coefficients of the unscaled energy polynomial along the distinguished
/// normal variation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyCoefficients {
    pub e0: f64,
    pub e1: f64,
    pub e2: f64,
}

/// Checks that the record claims constant mean curvature; the energy
/// expansion and balancing laws are only meaningful in that case.
fn require_cmc(surface: &CapillarySurface) -> Result<()> {
    if !surface.is_cmc {
        return Err(Error::NotCmc {
            deviation: surface.cmc_deviation,
            tolerance: Tolerances::default().cmc,
        });
    }
    Ok(())
}

/// Free-surface area minus the cosine-weighted wetted areas.
pub fn total_energy(surface: &CapillarySurface, order: usize) -> Result<f64> {
    let mut total = area(&surface.patch, order)?;
    for wetted in &surface.wetted {
        total -= surface.contact_angles[wetted.wall].cos() * wetted.area;
    }
    Ok(total)
}

/// Balancing law on one wall: for a constant-mean-curvature surface with
/// constant contact angle the wetted area and contact-line length satisfy
/// `n H |D_i| + sin(theta_i) |C_i| = 0`; the return value is the left-hand
/// side. Requires a CMC record; no quadrature is involved since the wetted
/// data are stored exactly.
pub fn balancing_residual(surface: &CapillarySurface, wall: usize) -> Result<f64> {
    require_cmc(surface)?;
    let wetted = surface
        .wetted
        .iter()
        .find(|w| w.wall == wall)
        .ok_or_else(|| Error::InvalidParameter(format!("no wetted domain on wall {wall}")))?;
    let n = surface.dim() as f64;
    let theta = surface.contact_angles[wall];
    Ok(n * surface.mean_curvature * wetted.area + theta.sin() * wetted.boundary_area)
}

/// Coefficients `(e_0, e_1, e_2)` of the unscaled energy polynomial.
/// Requires a CMC record; the quadratic coefficient needs the contact-line
/// curvature integrals stored on the wetted domains.
pub fn energy_coefficients(
    surface: &CapillarySurface,
    order: usize,
) -> Result<EnergyCoefficients> {
    require_cmc(surface)?;
    let n = surface.dim() as f64;
    let free_area = area(&surface.patch, order)?;

    let mut e0 = free_area;
    let mut e1 = -n * surface.mean_curvature * free_area;
    let mut e2 = curvature_integral(&surface.patch, 2, order)?;
    for wetted in &surface.wetted {
        let theta = surface.contact_angles[wetted.wall];
        let (sin_t, cos_t) = theta.sin_cos();
        e0 -= cos_t * wetted.area;
        e1 -= cos_t * sin_t * wetted.boundary_area;
        e2 += 0.5 * cos_t * sin_t * sin_t * wetted.boundary_mean_curv_integral;
    }
    Ok(EnergyCoefficients { e0, e1, e2 })
}

/// Relative defect of the volume-criticality identity
/// `v_0 = (n/(n+1)) e_0^2 / e_1`. Zero (up to quadrature noise) for every
/// CMC constant-angle configuration.
pub fn criticality_residual(
    surface: &CapillarySurface,
    coefficients: &EnergyCoefficients,
) -> f64 {
    let n = surface.dim() as f64;
    let predicted = n / (n + 1.0) * coefficients.e0 * coefficients.e0 / coefficients.e1;
    (surface.enclosed_volume - predicted).abs() / surface.enclosed_volume.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capillary::builders::{
        bridge_in_wedge, cap_in_halfspace, spheroid_cap_in_halfspace,
    };
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

    #[test]
    fn hemisphere_energy_coefficients_are_two_four_two_pi() {
        let surface = cap_in_halfspace(1.0, FRAC_PI_2).unwrap();
        let e = energy_coefficients(&surface, 24).unwrap();
        assert_relative_eq!(e.e0, 2.0 * PI, epsilon = 1e-10);
        assert_relative_eq!(e.e1, 4.0 * PI, epsilon = 1e-9);
        assert_relative_eq!(e.e2, 2.0 * PI, epsilon = 1e-9);
        assert!(criticality_residual(&surface, &e) < 1e-10);
        assert_relative_eq!(total_energy(&surface, 24).unwrap(), e.e0, epsilon = 1e-12);
    }

    #[test]
    fn steep_cap_energy_coefficients_match_closed_forms() {
        // theta = 2 pi/3 on the unit sphere: e_0 = e_2 = 27 pi/8 and
        // e_1 = 27 pi/4, with enclosed volume 9 pi/8.
        let surface = cap_in_halfspace(1.0, 2.0 * FRAC_PI_3).unwrap();
        let e = energy_coefficients(&surface, 24).unwrap();
        assert_relative_eq!(e.e0, 27.0 * PI / 8.0, epsilon = 1e-9);
        assert_relative_eq!(e.e1, 27.0 * PI / 4.0, epsilon = 1e-9);
        assert_relative_eq!(e.e2, 27.0 * PI / 8.0, epsilon = 1e-9);
        assert!(criticality_residual(&surface, &e) < 1e-10);
    }

    #[test]
    fn caps_satisfy_the_balancing_law_exactly() {
        for &theta in &[FRAC_PI_2, 2.0 * FRAC_PI_3, 0.75 * PI, 5.0 * FRAC_PI_6] {
            let surface = cap_in_halfspace(1.3, theta).unwrap();
            let residual = balancing_residual(&surface, 0).unwrap();
            assert!(residual.abs() < 1e-10, "theta {theta}: residual {residual}");
        }
    }

    #[test]
    fn bridges_satisfy_the_balancing_law_on_both_walls() {
        for &(radius, alpha, t1, t2) in &[
            (1.0, FRAC_PI_6, 5.0 * FRAC_PI_6, 5.0 * FRAC_PI_6),
            (0.8, FRAC_PI_6, 2.8, 2.55),
            (1.2, 0.4, 2.9, 2.6),
        ] {
            let surface = bridge_in_wedge(radius, alpha, t1, t2).unwrap();
            for wall in 0..2 {
                let residual = balancing_residual(&surface, wall).unwrap();
                let scale = 2.0 * surface.mean_curvature.abs() * surface.wetted[wall].area
                    + surface.wetted[wall].boundary_area;
                assert!(
                    residual.abs() <= 1e-8 * scale,
                    "wall {wall}: residual {residual}"
                );
            }
        }
    }

    #[test]
    fn bridges_are_volume_critical() {
        for &(radius, alpha, t1, t2) in &[
            (1.0, FRAC_PI_6, 5.0 * FRAC_PI_6, 5.0 * FRAC_PI_6),
            (0.8, FRAC_PI_6, 2.8, 2.55),
        ] {
            let surface = bridge_in_wedge(radius, alpha, t1, t2).unwrap();
            let e = energy_coefficients(&surface, 32).unwrap();
            let residual = criticality_residual(&surface, &e);
            assert!(residual < 1e-6, "residual {residual}");
        }
    }

    #[test]
    fn non_cmc_records_are_refused() {
        let spheroid = spheroid_cap_in_halfspace(1.5, 1.0, 0.0).unwrap();
        assert!(matches!(
            energy_coefficients(&spheroid, 24),
            Err(Error::NotCmc { .. })
        ));
        assert!(matches!(
            balancing_residual(&spheroid, 0),
            Err(Error::NotCmc { .. })
        ));
        // The plain energy is still defined for non-CMC surfaces.
        assert!(total_energy(&spheroid, 24).is_ok());
    }
}
