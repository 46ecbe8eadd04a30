//! Minkowski sums and mixed volumes of convex polytopes.
//!
//! The sum of two convex polytopes is the hull of the pairwise vertex sums;
//! that hull search is quadratic-by-triples in space, so a separate
//! volume-only routine decomposes the boundary of `P + tQ` along the common
//! refinement of the two normal fans and never builds the hull. The two
//! paths cross-validate each other in the tests.

use crate::error::{Error, Result};
use crate::numkernel::linalg::{cross3, dot, norm, scaled, solve2, sub};

use super::polytope::ConvexPolytope;

/// Point-count cap for the hull-based spatial sum; beyond this the
/// quadratic-by-triples hull search becomes unreasonably slow and the
/// volume-only decomposition should be used instead.
const HULL_SUM_LIMIT: usize = 500;
/// Strictness margin for deciding that a direction lies inside an edge's
/// normal cone; directions closer than this to the cone boundary belong to
/// the neighbouring facet terms.
const CONE_MARGIN: f64 = 1e-7;

/// Minkowski sum `P + Q` as the hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &ConvexPolytope, q: &ConvexPolytope) -> Result<ConvexPolytope> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    minkowski_sum_with_points(p, q.vertices())
}

/// Minkowski sum of a polytope with an arbitrary finite point set.
///
/// Summands that are not full-dimensional are welcome here: a single point
/// acts as a translation (the identity of the sum when it is the origin),
/// a segment extrudes, and so on. Only the resulting sum must be a genuine
/// polytope.
pub fn minkowski_sum_with_points(
    p: &ConvexPolytope,
    points: &[Vec<f64>],
) -> Result<ConvexPolytope> {
    if points.is_empty() {
        return Err(Error::DegenerateInput("empty Minkowski summand".into()));
    }
    for w in points {
        if w.len() != p.dim() {
            return Err(Error::DimensionMismatch {
                left: w.len(),
                right: p.dim(),
            });
        }
    }
    let total = p.vertex_count() * points.len();
    if p.dim() == 3 && total > HULL_SUM_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "hull-based spatial Minkowski sum over {total} pairwise points \
             exceeds the supported size; use minkowski_volume for measures"
        )));
    }
    let mut sums = Vec::with_capacity(total);
    for v in p.vertices() {
        for w in points {
            sums.push(v.iter().zip(w).map(|(a, b)| a + b).collect());
        }
    }
    ConvexPolytope::hull(&sums, p.dim())
}

/// Exact volume of `P + tQ` without constructing the sum.
///
/// Every facet of the sum is the sum of a pair of faces of `P` and `tQ`
/// whose dimensions add to `dim - 1`: a facet of one body plus a supporting
/// vertex/edge/facet of the other, or (in space) an edge of each whose
/// normal cones overlap. Summing `<x, n> * area / dim` over these facets
/// gives the volume by the divergence theorem. In the plane the hull of the
/// pairwise sums is cheap at any size, so this simply delegates.
pub fn minkowski_volume(p: &ConvexPolytope, q: &ConvexPolytope, t: f64) -> Result<f64> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "scale of the second summand must be nonnegative and finite, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(p.volume());
    }
    if p.dim() == 2 {
        let shifted: Vec<Vec<f64>> = q.vertices().iter().map(|w| scaled(w, t)).collect();
        return Ok(minkowski_sum_with_points(p, &shifted)?.volume());
    }

    let support_tol_p = 1e-9 * p.scale().max(1.0);
    let support_tol_q = 1e-9 * q.scale().max(1.0);
    let mut volume = 0.0;

    // Facets of P, fattened by the supporting face of tQ in their normal
    // direction.
    for (f, normal) in p.facet_normals().iter().enumerate() {
        let supp = q.support_set(normal, support_tol_q);
        let mut corners: Vec<Vec<f64>> = Vec::new();
        for &vi in &p.facets()[f] {
            for &wi in &supp {
                corners.push(
                    p.vertices()[vi]
                        .iter()
                        .zip(&q.vertices()[wi])
                        .map(|(a, b)| a + t * b)
                        .collect(),
                );
            }
        }
        let offset = p.facet_offsets()[f] + t * q.support(normal);
        volume += offset * planar_polygon_area(&corners, normal)? / 3.0;
    }

    // Facets of tQ, translated to the supporting face of P; skip normals
    // already covered by a facet of P.
    for (g, normal) in q.facet_normals().iter().enumerate() {
        let duplicate = p
            .facet_normals()
            .iter()
            .any(|n| dot(n, normal) > 1.0 - 1e-12);
        if duplicate {
            continue;
        }
        let supp = p.support_set(normal, support_tol_p);
        let mut corners: Vec<Vec<f64>> = Vec::new();
        for &wi in &q.facets()[g] {
            for &vi in &supp {
                corners.push(
                    p.vertices()[vi]
                        .iter()
                        .zip(&q.vertices()[wi])
                        .map(|(a, b)| a + t * b)
                        .collect(),
                );
            }
        }
        let offset = p.support(normal) + t * q.facet_offsets()[g];
        volume += offset * planar_polygon_area(&corners, normal)? / 3.0;
    }

    // Edge-pair facets: one edge of each body, glued along a direction in
    // both normal cones. Parallel edge pairs contribute edges of the sum,
    // not facets, and are skipped by the cross-product guard.
    for e in p.edges() {
        let pa = &p.vertices()[e.endpoints[0]];
        let dir_e = sub(&p.vertices()[e.endpoints[1]], pa);
        let cone_e = [
            p.facet_normals()[e.facets[0]].clone(),
            p.facet_normals()[e.facets[1]].clone(),
        ];
        for f in q.edges() {
            let qa = &q.vertices()[f.endpoints[0]];
            let dir_f = sub(&q.vertices()[f.endpoints[1]], qa);
            let cross = cross3(&dir_e, &dir_f);
            let len = norm(&cross);
            if len <= 1e-12 * (norm(&dir_e) * norm(&dir_f)) {
                continue;
            }
            let candidate = scaled(&cross, 1.0 / len);
            let cone_f = [
                q.facet_normals()[f.facets[0]].clone(),
                q.facet_normals()[f.facets[1]].clone(),
            ];
            let accepted = [candidate.clone(), scaled(&candidate, -1.0)]
                .into_iter()
                .find(|u| in_edge_cone(u, &cone_e) && in_edge_cone(u, &cone_f));
            if let Some(u) = accepted {
                let area = t * len;
                let anchor: Vec<f64> = pa.iter().zip(qa).map(|(a, b)| a + t * b).collect();
                volume += dot(&anchor, &u) * area / 3.0;
            }
        }
    }

    Ok(volume)
}

/// Whether `u` lies strictly inside the cone spanned by the two unit
/// normals; near-degenerate cones (almost coplanar facets) are treated as
/// empty since their facets already carry the adjacent area.
fn in_edge_cone(u: &[f64], cone: &[Vec<f64>; 2]) -> bool {
    let g = dot(&cone[0], &cone[1]);
    let det = 1.0 - g * g;
    if det <= 1e-12 {
        return false;
    }
    let gram = [[1.0, g], [g, 1.0]];
    let rhs = [dot(&cone[0], u), dot(&cone[1], u)];
    match solve2(gram, rhs) {
        Ok([alpha, beta]) => alpha > CONE_MARGIN && beta > CONE_MARGIN,
        Err(_) => false,
    }
}

/// Area of the planar convex point cloud `corners` lying in a plane with
/// the given unit normal, by projecting onto an in-plane frame and hulling.
fn planar_polygon_area(corners: &[Vec<f64>], normal: &[f64]) -> Result<f64> {
    if corners.len() < 3 {
        return Err(Error::DegenerateInput(
            "facet of a Minkowski sum with fewer than 3 corners".into(),
        ));
    }
    let seed = if normal[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let mut u = cross3(normal, &seed);
    u = scaled(&u, 1.0 / norm(&u));
    let v = cross3(normal, &u);
    // Shoelace over the planar hull; three corners need no hull call.
    let planar: Vec<Vec<f64>> = corners
        .iter()
        .map(|x| vec![dot(&u, x), dot(&v, x)])
        .collect();
    if planar.len() == 3 {
        let t = (planar[1][0] - planar[0][0]) * (planar[2][1] - planar[0][1])
            - (planar[1][1] - planar[0][1]) * (planar[2][0] - planar[0][0]);
        return Ok(t.abs() / 2.0);
    }
    Ok(ConvexPolytope::hull(&planar, 2)?.volume())
}

/// Mixed area `V(K, L)` in the plane, from the polarization identity
/// `Area(K + L) = Area(K) + 2 V(K, L) + Area(L)`.
pub fn mixed_volume_2d(k: &ConvexPolytope, l: &ConvexPolytope) -> Result<f64> {
    if k.dim() != 2 || l.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: k.dim(),
            right: l.dim(),
        });
    }
    let sum = minkowski_sum(k, l)?;
    Ok((sum.volume() - k.volume() - l.volume()) / 2.0)
}

/// The two genuinely mixed volumes `(V(K,K,L), V(K,L,L))` in space.
///
/// `Vol(K + tL)` is the cubic `V(K) + 3V(K,K,L) t + 3V(K,L,L) t^2 + V(L) t^3`;
/// evaluating the sum at `t = 1` and `t = 2` leaves a 2x2 linear system for
/// the two unknown coefficients.
pub fn mixed_volumes_3d(k: &ConvexPolytope, l: &ConvexPolytope) -> Result<(f64, f64)> {
    if k.dim() != 3 || l.dim() != 3 {
        return Err(Error::DimensionMismatch {
            left: k.dim(),
            right: l.dim(),
        });
    }
    let v_k = k.volume();
    let v_l = l.volume();
    let at_one = minkowski_volume(k, l, 1.0)?;
    let at_two = minkowski_volume(k, l, 2.0)?;
    let f1 = at_one - v_k - v_l;
    let f2 = at_two - v_k - 8.0 * v_l;
    // 3a + 3b = f1 and 6a + 12b = f2.
    let b = (f2 - 2.0 * f1) / 6.0;
    let a = f1 / 3.0 - b;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexbody::ball::icosphere_ball;
    use crate::convexbody::polytope::{unit_cube_points, unit_square_points};
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn unit_square() -> ConvexPolytope {
        ConvexPolytope::hull(&unit_square_points(), 2).unwrap()
    }

    fn unit_cube() -> ConvexPolytope {
        ConvexPolytope::hull(&unit_cube_points(), 3).unwrap()
    }

    fn centered_square() -> ConvexPolytope {
        let pts = vec![
            vec![-0.5, -0.5],
            vec![0.5, -0.5],
            vec![0.5, 0.5],
            vec![-0.5, 0.5],
        ];
        ConvexPolytope::hull(&pts, 2).unwrap()
    }

    fn rotated_square() -> ConvexPolytope {
        let s = FRAC_1_SQRT_2;
        let pts = vec![
            vec![s, 0.0],
            vec![0.0, s],
            vec![-s, 0.0],
            vec![0.0, -s],
        ];
        ConvexPolytope::hull(&pts, 2).unwrap()
    }

    #[test]
    fn adding_the_origin_is_the_identity() {
        let square = unit_square();
        let same = minkowski_sum_with_points(&square, &[vec![0.0, 0.0]]).unwrap();
        assert_eq!(same.vertex_count(), 4);
        for (a, b) in square.vertices().iter().zip(same.vertices()) {
            assert_relative_eq!(a[0], b[0], epsilon = 1e-12);
            assert_relative_eq!(a[1], b[1], epsilon = 1e-12);
        }
        let cube = unit_cube();
        let moved = minkowski_sum_with_points(&cube, &[vec![1.0, 2.0, 3.0]]).unwrap();
        assert_relative_eq!(moved.volume(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn square_plus_square_doubles_the_side() {
        let sum = minkowski_sum(&unit_square(), &unit_square()).unwrap();
        assert_eq!(sum.vertex_count(), 4);
        assert_relative_eq!(sum.volume(), 4.0, epsilon = 1e-12);
        assert_relative_eq!(sum.boundary_measure(), 8.0, epsilon = 1e-12);
    }

    #[test]
    fn square_plus_rotated_square_is_an_octagon() {
        let k = centered_square();
        let l = rotated_square();
        let sum = minkowski_sum(&k, &l).unwrap();
        assert_eq!(sum.vertex_count(), 8);
        // Support additivity gives the octagon area 2 + 2*sqrt(2) directly.
        let expected = 2.0 + 2.0 * 2.0_f64.sqrt();
        assert_relative_eq!(sum.volume(), expected, epsilon = 1e-12);
        let mixed = mixed_volume_2d(&k, &l).unwrap();
        assert_relative_eq!(
            sum.volume(),
            k.volume() + 2.0 * mixed + l.volume(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn mixed_area_is_symmetric_and_diagonal_recovers_area() {
        let k = centered_square();
        let l = rotated_square();
        let kl = mixed_volume_2d(&k, &l).unwrap();
        let lk = mixed_volume_2d(&l, &k).unwrap();
        assert_relative_eq!(kl, lk, epsilon = 1e-10);
        assert_relative_eq!(kl, 2.0_f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(mixed_volume_2d(&k, &k).unwrap(), k.volume(), epsilon = 1e-12);
    }

    #[test]
    fn cube_mixed_volumes_with_itself_and_scalings() {
        let cube = unit_cube();
        let (a, b) = mixed_volumes_3d(&cube, &cube).unwrap();
        assert_relative_eq!(a, 1.0, epsilon = 1e-10);
        assert_relative_eq!(b, 1.0, epsilon = 1e-10);
        let double = cube.scaled(2.0).unwrap();
        let (a2, b2) = mixed_volumes_3d(&cube, &double).unwrap();
        // Multilinearity: each L slot contributes one factor of the scale.
        assert_relative_eq!(a2, 2.0, epsilon = 1e-10);
        assert_relative_eq!(b2, 4.0, epsilon = 1e-10);
    }

    #[test]
    fn volume_decomposition_matches_the_hull_on_small_sums() {
        let cube = unit_cube();
        let octa = ConvexPolytope::hull(
            &[
                vec![1.0, 0.0, 0.0],
                vec![-1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, -1.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![0.0, 0.0, -1.0],
            ],
            3,
        )
        .unwrap();
        for t in [0.25, 0.5, 1.0] {
            let scaled_octa = octa.scaled(t).unwrap();
            let hulled = minkowski_sum(&cube, &scaled_octa).unwrap().volume();
            let decomposed = minkowski_volume(&cube, &octa, t).unwrap();
            assert_relative_eq!(decomposed, hulled, epsilon = 1e-9);
        }
        assert_relative_eq!(
            minkowski_volume(&cube, &cube, 1.0).unwrap(),
            8.0,
            epsilon = 1e-9
        );
        assert_relative_eq!(minkowski_volume(&cube, &octa, 0.0).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn volume_decomposition_handles_a_fine_ball_summand() {
        let cube = unit_cube();
        let ball = icosphere_ball(2).unwrap();
        let t = 0.25;
        let grown = minkowski_volume(&cube, &ball.polytope, t).unwrap();
        // Sandwich between the parallel bodies of the inscribed and the
        // circumscribed ball radii.
        let parallel = |r: f64| {
            1.0 + 6.0 * r + 3.0 * std::f64::consts::PI * r * r
                + 4.0 * std::f64::consts::PI / 3.0 * r * r * r
        };
        assert!(grown <= parallel(t) + 1e-9);
        assert!(grown >= parallel(t * ball.inradius) - 1e-9);
    }

    #[test]
    fn oversized_spatial_hull_sums_are_refused() {
        let cube = unit_cube();
        let ball = icosphere_ball(2).unwrap();
        assert!(matches!(
            minkowski_sum(&cube, &ball.polytope),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(minkowski_sum(&unit_square(), &unit_cube()).is_err());
        assert!(mixed_volume_2d(&unit_square(), &unit_cube()).is_err());
        assert!(mixed_volumes_3d(&unit_square(), &unit_square()).is_err());
    }
}
