//! The classical inequality suite for convex bodies: the quadratic
//! quermassintegral inequalities, the boundary-measure bound on the total
//! mean curvature, the spatial curvature-product chain, and the
//! monotonicity of the isoperimetric quotient along parallel bodies.
//!
//! Every function reports *slacks* — left-hand side subtracted from the
//! right-hand side — so a valid convex body produces only nonnegative
//! numbers (up to quadrature tolerance) and equality cases show up as
//! zeros.

use crate::error::{Error, Result};

use super::polytope::ConvexPolytope;
use super::quermass::{QuermassVector, SteinerPolynomial};
use super::smooth::ConvexBody;

/// Slack of every inequality the suite checks, all nonnegative for a
/// genuine convex body.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    /// Body dimension.
    pub dim: usize,
    /// The quermassintegrals the slacks were computed from.
    pub quermass: QuermassVector,
    /// `W₁² − W₀W₂`.
    pub minkowski_first: f64,
    /// `W₂² − W₁W₃`, spatial bodies only.
    pub minkowski_second: Option<f64>,
    /// `(boundary measure)² / volume − n ∫|H| dS`: the bound the first
    /// Minkowski inequality puts on the total mean curvature. In the plane
    /// this is the isoperimetric inequality itself.
    pub mean_curvature_isoperimetric: f64,
    /// Spatial chain bounding the curvature-product integral:
    /// first `(∫|H|)²/S − ∫k₁k₂`, then `S³/(9V²) − (∫|H|)²/S`.
    pub curvature_product_chain: Option<[f64; 2]>,
}

impl InequalityReport {
    /// All slacks in a fixed order, for sweep-style assertions.
    pub fn slacks(&self) -> Vec<f64> {
        let mut out = vec![self.minkowski_first];
        if let Some(s) = self.minkowski_second {
            out.push(s);
        }
        out.push(self.mean_curvature_isoperimetric);
        if let Some([a, b]) = self.curvature_product_chain {
            out.push(a);
            out.push(b);
        }
        out
    }

    /// The smallest slack; nonnegative (within tolerance) for convex input.
    pub fn min_slack(&self) -> f64 {
        self.slacks().into_iter().fold(f64::INFINITY, f64::min)
    }
}

/// Evaluates the whole inequality suite for a convex body.
///
/// Convexity is established at construction time — polytopes are hulls by
/// construction and the smooth bodies are convex outright — so this never
/// sees a nonconvex input; data that merely *claims* to be a convex vertex
/// list goes through [`inequality_suite_from_vertices`], which refuses the
/// claim if any point fails to be extreme.
pub fn inequality_suite(body: &ConvexBody, order: usize) -> Result<InequalityReport> {
    let quermass = body.quermass(order)?;
    let n = quermass.dim() as f64;
    let volume = quermass.volume();
    if !(volume > 0.0) {
        return Err(Error::DegenerateInput(format!(
            "convex body with nonpositive volume {volume}"
        )));
    }
    let boundary = quermass.boundary_measure();
    let mean_total = quermass.mean_curvature_integral();
    let minkowski_first = quermass.w(1) * quermass.w(1) - quermass.w(0) * quermass.w(2);
    let mean_curvature_isoperimetric = boundary * boundary / volume - n * mean_total;
    let (minkowski_second, curvature_product_chain) = if quermass.dim() == 3 {
        let second = quermass.w(2) * quermass.w(2) - quermass.w(1) * quermass.w(3);
        let product_total = quermass
            .curvature_product_integral()
            .expect("spatial body has a curvature-product integral");
        let against_mean = mean_total * mean_total / boundary - product_total;
        let against_boundary =
            boundary.powi(3) / (9.0 * volume * volume) - mean_total * mean_total / boundary;
        (Some(second), Some([against_mean, against_boundary]))
    } else {
        (None, None)
    };
    Ok(InequalityReport {
        dim: quermass.dim(),
        quermass,
        minkowski_first,
        minkowski_second,
        mean_curvature_isoperimetric,
        curvature_product_chain,
    })
}

/// Runs the suite on a claimed polytope vertex list, refusing nonconvex
/// claims: every input point must be an extreme point of the hull.
pub fn inequality_suite_from_vertices(
    points: &[Vec<f64>],
    dim: usize,
    order: usize,
) -> Result<InequalityReport> {
    let polytope = ConvexPolytope::from_extreme_points(points, dim)?;
    inequality_suite(&ConvexBody::polytope(polytope), order)
}

/// Isoperimetric quotients `H^{n−1}(∂D_t)^n / H^n(D_t)^{n−1}` of the
/// parallel bodies `D_t = D + tB` along an increasing offset grid.
///
/// Both measures of the parallel body are polynomials in `t` (the Steiner
/// polynomial and its derivative), so the scan is exact given the
/// quermassintegrals. The sequence is nonincreasing for convex bodies and
/// tends to the ball value as the offsets grow.
pub fn parallel_quotient_scan(
    body: &ConvexBody,
    t_grid: &[f64],
    order: usize,
) -> Result<Vec<f64>> {
    if t_grid.is_empty() {
        return Err(Error::InvalidParameter(
            "parallel-body scan needs at least one offset".into(),
        ));
    }
    for pair in t_grid.windows(2) {
        if !(pair[1] > pair[0]) {
            return Err(Error::InvalidParameter(format!(
                "offset grid must be strictly increasing, got {} after {}",
                pair[1], pair[0]
            )));
        }
    }
    if !(t_grid[0] >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "offsets must be nonnegative, got {}",
            t_grid[0]
        )));
    }
    let polynomial = SteinerPolynomial::from_quermass(&body.quermass(order)?);
    let n = polynomial.dim() as i32;
    Ok(t_grid
        .iter()
        .map(|&t| {
            let volume = polynomial.evaluate(t);
            let boundary = polynomial.boundary_at(t);
            boundary.powi(n) / volume.powi(n - 1)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexbody::ball::{icosphere_ball, polygon_ball};
    use crate::convexbody::polytope::{unit_cube_points, unit_square_points};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    // High enough that quadrature error on the eccentric smooth bodies stays
    // below the 1e-9 slack tolerances used below; polytopes ignore the order.
    const ORDER: usize = 160;

    fn cube_body() -> ConvexBody {
        ConvexBody::polytope(ConvexPolytope::hull(&unit_cube_points(), 3).unwrap())
    }

    fn square_body() -> ConvexBody {
        ConvexBody::polytope(ConvexPolytope::hull(&unit_square_points(), 2).unwrap())
    }

    #[test]
    fn cube_slacks_match_closed_forms() {
        let report = inequality_suite(&cube_body(), ORDER).unwrap();
        assert_relative_eq!(report.minkowski_first, 4.0 - PI, epsilon = 1e-12);
        assert_relative_eq!(
            report.minkowski_second.unwrap(),
            PI * PI - 8.0 * PI / 3.0,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            report.mean_curvature_isoperimetric,
            36.0 - 9.0 * PI,
            epsilon = 1e-12
        );
        let [against_mean, against_boundary] = report.curvature_product_chain.unwrap();
        assert_relative_eq!(against_mean, 1.5 * PI * PI - 4.0 * PI, epsilon = 1e-12);
        assert_relative_eq!(against_boundary, 24.0 - 1.5 * PI * PI, epsilon = 1e-12);
        assert!(report.min_slack() > 0.0);
        assert_eq!(report.slacks().len(), 5);
    }

    #[test]
    fn square_slack_is_the_isoperimetric_deficit() {
        let report = inequality_suite(&square_body(), ORDER).unwrap();
        assert_relative_eq!(report.minkowski_first, 4.0 - PI, epsilon = 1e-12);
        assert_relative_eq!(
            report.mean_curvature_isoperimetric,
            16.0 - 4.0 * PI,
            epsilon = 1e-12
        );
        assert!(report.minkowski_second.is_none());
        assert_eq!(report.slacks().len(), 2);
    }

    #[test]
    fn ball_approximants_sit_at_the_equality_case() {
        let disk = ConvexBody::polytope(polygon_ball(1024).unwrap().polytope);
        let report = inequality_suite(&disk, ORDER).unwrap();
        for slack in report.slacks() {
            assert!(slack.abs() < 1e-3, "disk slack {slack}");
            assert!(slack >= -1e-9);
        }
        // Slacks of the inscribed icosphere shrink like 4^-level; level 6 is
        // the first refinement whose worst slack (4.4e-4) clears 1e-3.
        let ball = ConvexBody::polytope(icosphere_ball(6).unwrap().polytope);
        let report = inequality_suite(&ball, ORDER).unwrap();
        for slack in report.slacks() {
            assert!(slack.abs() < 1e-3, "ball slack {slack}");
            assert!(slack >= -1e-9);
        }
    }

    #[test]
    fn smooth_bodies_obey_the_suite_with_equality_for_round_ones() {
        let round = inequality_suite(&ConvexBody::ellipse(1.0, 1.0).unwrap(), ORDER).unwrap();
        for slack in round.slacks() {
            assert!(slack.abs() < 1e-9);
        }
        let flat = inequality_suite(&ConvexBody::ellipse(2.0, 1.0).unwrap(), ORDER).unwrap();
        let perimeter = flat.quermass.boundary_measure();
        let expected = perimeter * perimeter / (2.0 * PI) - 2.0 * (2.0 * PI);
        assert_relative_eq!(flat.mean_curvature_isoperimetric, expected, epsilon = 1e-9);
        assert!(flat.mean_curvature_isoperimetric > 0.0);

        let sphere = inequality_suite(&ConvexBody::spheroid(1.0, 1.0).unwrap(), ORDER).unwrap();
        for slack in sphere.slacks() {
            assert!(slack.abs() < 1e-8);
        }
        let prolate = inequality_suite(&ConvexBody::spheroid(1.0, 2.0).unwrap(), ORDER).unwrap();
        for slack in prolate.slacks() {
            assert!(slack > 0.0);
        }
    }

    #[test]
    fn nonconvex_vertex_claims_are_refused() {
        let mut points = unit_square_points();
        points.push(vec![0.5, 0.25]);
        let err = inequality_suite_from_vertices(&points, 2, ORDER).unwrap_err();
        assert!(matches!(err, Error::NonConvexInput { index: 4 }));
        assert!(inequality_suite_from_vertices(&unit_square_points(), 2, ORDER).is_ok());
    }

    #[test]
    fn square_quotient_scan_starts_at_sixteen_and_decreases() {
        let grid = [0.0, 0.5, 1.0, 2.0];
        let scan = parallel_quotient_scan(&square_body(), &grid, ORDER).unwrap();
        assert_relative_eq!(scan[0], 16.0, epsilon = 1e-12);
        for pair in scan.windows(2) {
            assert!(pair[1] < pair[0]);
        }
        // Every quotient dominates the disk value the scan drains toward.
        for q in &scan {
            assert!(*q > 4.0 * PI);
        }
        // Initial slope from the closed forms P(t) = 4 + 2πt, A(t) = 1 + 4t + πt².
        let h = 1e-6;
        let near = parallel_quotient_scan(&square_body(), &[0.0, h], ORDER).unwrap();
        let slope = (near[1] - near[0]) / h;
        assert_relative_eq!(slope, 16.0 * PI - 64.0, epsilon = 1e-3);
    }

    #[test]
    fn disk_quotient_scan_is_constant() {
        let disk = ConvexBody::ellipse(1.0, 1.0).unwrap();
        let scan = parallel_quotient_scan(&disk, &[0.0, 0.3, 1.0, 2.5], ORDER).unwrap();
        for q in scan {
            assert_relative_eq!(q, 4.0 * PI, epsilon = 1e-9);
        }
    }

    #[test]
    fn cube_quotient_scan_decreases() {
        let grid = [0.0, 0.5, 1.0];
        let scan = parallel_quotient_scan(&cube_body(), &grid, ORDER).unwrap();
        assert_relative_eq!(scan[0], 216.0, epsilon = 1e-12);
        for pair in scan.windows(2) {
            assert!(pair[1] < pair[0]);
        }
        for q in &scan {
            assert!(*q > 36.0 * PI);
        }
    }

    #[test]
    fn bad_offset_grids_are_refused() {
        assert!(parallel_quotient_scan(&square_body(), &[], ORDER).is_err());
        assert!(parallel_quotient_scan(&square_body(), &[0.0, 0.0], ORDER).is_err());
        assert!(parallel_quotient_scan(&square_body(), &[-0.5, 1.0], ORDER).is_err());
        assert!(parallel_quotient_scan(&square_body(), &[1.0, 0.5], ORDER).is_err());
    }
}
