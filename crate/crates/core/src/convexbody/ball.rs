//! Inscribed polytopal approximants of the unit ball, used as the sampled
//! side of Steiner-formula cross-checks.
//!
//! Both approximants have all vertices exactly on the unit sphere, so they
//! sit between the ball scaled by their inradius and the ball itself:
//! `r_in * B  ⊆  B_approx  ⊆  B`. That sandwich turns the approximation
//! error of any parallel-body volume into a computable bound.

use crate::error::{Error, Result};
use crate::numkernel::linalg::{norm, scaled};

use super::polytope::ConvexPolytope;

/// Default side count for the planar approximant.
pub const DEFAULT_BALL_SIDES: usize = 1024;
/// Default icosphere subdivision level (20 * 4^level facets).
pub const DEFAULT_ICOSPHERE_LEVEL: usize = 3;

/// A polytopal stand-in for the unit ball together with its inradius, the
/// scale factor of the largest centered ball it contains.
#[derive(Debug, Clone)]
pub struct BallApproximant {
    /// The inscribed polytope; all vertices lie on the unit sphere.
    pub polytope: ConvexPolytope,
    /// Distance from the origin to the nearest facet plane; `< 1`.
    pub inradius: f64,
}

/// Default approximant for the given dimension: a regular 1024-gon in the
/// plane, a level-3 icosphere (1280 facets) in space.
pub fn ball_approximant(dim: usize) -> Result<BallApproximant> {
    match dim {
        2 => polygon_ball(DEFAULT_BALL_SIDES),
        3 => icosphere_ball(DEFAULT_ICOSPHERE_LEVEL),
        other => Err(Error::UnsupportedDimension(other, "ball approximant")),
    }
}

/// Regular `sides`-gon inscribed in the unit circle.
pub fn polygon_ball(sides: usize) -> Result<BallApproximant> {
    if sides < 8 {
        return Err(Error::InvalidParameter(format!(
            "ball approximant needs at least 8 sides, got {sides}"
        )));
    }
    let step = 2.0 * std::f64::consts::PI / sides as f64;
    let points: Vec<Vec<f64>> = (0..sides)
        .map(|i| {
            let (s, c) = (i as f64 * step).sin_cos();
            vec![c, s]
        })
        .collect();
    let polytope = ConvexPolytope::hull(&points, 2)?;
    let inradius = polytope.min_facet_offset();
    Ok(BallApproximant { polytope, inradius })
}

/// Icosphere: the regular icosahedron subdivided `level` times, with every
/// new vertex projected back onto the unit sphere. Produces `20 * 4^level`
/// triangular facets with known combinatorics, so no hull search is needed.
pub fn icosphere_ball(level: usize) -> Result<BallApproximant> {
    if level > 6 {
        return Err(Error::InvalidParameter(format!(
            "icosphere level {level} would create an excessive facet count"
        )));
    }
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let raw = [
        [-1.0, phi, 0.0],
        [1.0, phi, 0.0],
        [-1.0, -phi, 0.0],
        [1.0, -phi, 0.0],
        [0.0, -1.0, phi],
        [0.0, 1.0, phi],
        [0.0, -1.0, -phi],
        [0.0, 1.0, -phi],
        [phi, 0.0, -1.0],
        [phi, 0.0, 1.0],
        [-phi, 0.0, -1.0],
        [-phi, 0.0, 1.0],
    ];
    let mut vertices: Vec<Vec<f64>> = raw
        .iter()
        .map(|v| {
            let n = norm(v);
            scaled(v, 1.0 / n)
        })
        .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];

    for _ in 0..level {
        let mut midpoint_cache: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let mut midpoint = |a: usize, b: usize, vertices: &mut Vec<Vec<f64>>| -> usize {
            let key = (a.min(b), a.max(b));
            if let Some(&id) = midpoint_cache.get(&key) {
                return id;
            }
            let m: Vec<f64> = vertices[a]
                .iter()
                .zip(&vertices[b])
                .map(|(x, y)| (x + y) / 2.0)
                .collect();
            let unit = scaled(&m, 1.0 / norm(&m));
            vertices.push(unit);
            let id = vertices.len() - 1;
            midpoint_cache.insert(key, id);
            id
        };
        let mut next = Vec::with_capacity(faces.len() * 4);
        for &[a, b, c] in &faces {
            let ab = midpoint(a, b, &mut vertices);
            let bc = midpoint(b, c, &mut vertices);
            let ca = midpoint(c, a, &mut vertices);
            next.push([a, ab, ca]);
            next.push([b, bc, ab]);
            next.push([c, ca, bc]);
            next.push([ab, bc, ca]);
        }
        faces = next;
    }

    let facets: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    let polytope = ConvexPolytope::from_face_lattice(vertices, facets)?;
    let inradius = polytope.min_facet_offset();
    Ok(BallApproximant { polytope, inradius })
}
