//! Convex polytopes in the plane and in space, stored as vertex hulls with
//! derived face, edge, and angle data.
//!
//! Construction always goes through a hull step, so the stored vertex list
//! contains extreme points only and every derived quantity (facet normals,
//! exterior dihedral angles, volume) refers to the hull of the input.

use crate::error::{Error, Result};
use crate::numkernel::linalg::{cross3, dot, norm, scaled, sub};

/// Relative tolerance for merging nearly identical points.
const POINT_TOL: f64 = 1e-9;
/// Relative tolerance for classifying a point as lying on a candidate
/// supporting plane.
const PLANE_TOL: f64 = 1e-9;
/// Tolerance on normal alignment when merging duplicate supporting planes.
const NORMAL_TOL: f64 = 1e-9;

/// One edge of a three-dimensional polytope together with the data the
/// Steiner machinery needs: its length and the exterior dihedral angle
/// (the angle between the outward normals of the two incident facets).
#[derive(Debug, Clone)]
pub struct EdgeData {
    /// Indices of the two endpoints in the vertex list.
    pub endpoints: [usize; 2],
    /// Indices of the two incident facets.
    pub facets: [usize; 2],
    /// Euclidean length of the edge.
    pub length: f64,
    /// Exterior dihedral angle in `[0, pi)`; zero for coplanar neighbours.
    pub exterior_angle: f64,
}

/// A full-dimensional convex polytope in dimension 2 or 3.
///
/// Vertices are extreme points listed in a canonical order: counterclockwise
/// starting from the lexicographically smallest vertex in the plane, and
/// lexicographically sorted in space. Facets store vertex indices ordered
/// counterclockwise as seen from outside.
#[derive(Debug, Clone)]
pub struct ConvexPolytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
    facets: Vec<Vec<usize>>,
    facet_normals: Vec<Vec<f64>>,
    facet_offsets: Vec<f64>,
    edges: Vec<EdgeData>,
    volume: f64,
    boundary_measure: f64,
}

impl ConvexPolytope {
    /// Convex hull of a finite point set in dimension 2 or 3.
    ///
    /// Requires at least `dim + 1` affinely independent points; flat or
    /// otherwise lower-dimensional input is rejected rather than embedded.
    pub fn hull(points: &[Vec<f64>], dim: usize) -> Result<Self> {
        match dim {
            2 => hull2(points),
            3 => hull3(points),
            other => Err(Error::UnsupportedDimension(other, "convex hull")),
        }
    }

    /// Builds the hull of `points` and additionally demands that every input
    /// point survives as a vertex.
    ///
    /// This is the strict entry point for data that claims to be the vertex
    /// list of a convex polytope: a point that lands inside the hull (or on
    /// a face of it) makes the claim false and is reported by index.
    pub fn from_extreme_points(points: &[Vec<f64>], dim: usize) -> Result<Self> {
        let hull = Self::hull(points, dim)?;
        let tol = POINT_TOL * hull.scale().max(1.0);
        for (index, point) in points.iter().enumerate() {
            let retained = hull
                .vertices
                .iter()
                .any(|v| point_distance(v, point) <= tol);
            if !retained {
                return Err(Error::NonConvexInput { index });
            }
        }
        Ok(hull)
    }

    /// Ambient (and intrinsic) dimension, 2 or 3.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme points in canonical order.
    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Facets as vertex index lists. In the plane these are the edges
    /// `[i, i+1]` of the counterclockwise boundary cycle; in space they are
    /// the face polygons oriented counterclockwise seen from outside.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Outward unit normal of each facet.
    pub fn facet_normals(&self) -> &[Vec<f64>] {
        &self.facet_normals
    }

    /// Support value of each facet: `<n, x> = c` on the facet plane.
    pub fn facet_offsets(&self) -> &[f64] {
        &self.facet_offsets
    }

    /// Edge data (empty in the plane, where facets already are the edges).
    pub fn edges(&self) -> &[EdgeData] {
        &self.edges
    }

    /// Enclosed measure: area in the plane, volume in space.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Boundary measure: perimeter in the plane, surface area in space.
    pub fn boundary_measure(&self) -> f64 {
        self.boundary_measure
    }

    /// Half the length-weighted sum of exterior dihedral angles,
    /// `sum_e length(e) * angle(e) / 2`.
    ///
    /// This is the quadratic Steiner coefficient of a spatial polytope: the
    /// parallel body at distance `t` gains cylindrical wedges along the
    /// edges whose total volume is this sum times `t^2`.
    pub fn edge_angle_measure(&self) -> f64 {
        self.edges
            .iter()
            .map(|e| e.length * e.exterior_angle)
            .sum::<f64>()
            / 2.0
    }

    /// Support function `h(dir) = max_v <v, dir>`.
    pub fn support(&self, dir: &[f64]) -> f64 {
        self.vertices
            .iter()
            .map(|v| dot(v, dir))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Indices of all vertices attaining the support value in direction
    /// `dir`, up to an absolute slack of `tol`.
    pub fn support_set(&self, dir: &[f64], tol: f64) -> Vec<usize> {
        let h = self.support(dir);
        (0..self.vertices.len())
            .filter(|&i| dot(&self.vertices[i], dir) >= h - tol)
            .collect()
    }

    /// Whether `point` lies in the polytope, within an absolute slack of
    /// `tol` on every facet inequality.
    pub fn contains(&self, point: &[f64], tol: f64) -> bool {
        self.facet_normals
            .iter()
            .zip(&self.facet_offsets)
            .all(|(n, &c)| dot(n, point) <= c + tol)
    }

    /// Minimum facet offset; for a body containing the origin this is the
    /// inradius measured from the origin.
    pub fn min_facet_offset(&self) -> f64 {
        self.facet_offsets
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// The polytope translated by `shift`.
    pub fn translated(&self, shift: &[f64]) -> Result<Self> {
        if shift.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: shift.len(),
                right: self.dim,
            });
        }
        let moved: Vec<Vec<f64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect())
            .collect();
        Self::hull(&moved, self.dim)
    }

    /// The polytope scaled about the origin by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be positive and finite, got {factor}"
            )));
        }
        let moved: Vec<Vec<f64>> = self.vertices.iter().map(|v| scaled(v, factor)).collect();
        Self::hull(&moved, self.dim)
    }

    /// Largest coordinate magnitude over all vertices; the reference scale
    /// for relative tolerances.
    pub fn scale(&self) -> f64 {
        self.vertices
            .iter()
            .flat_map(|v| v.iter())
            .fold(0.0, |acc: f64, &x| acc.max(x.abs()))
    }

    /// Builds a spatial polytope directly from a known face lattice:
    /// `facets` lists each face as vertex indices ordered counterclockwise
    /// seen from outside. Used for polytopes whose combinatorics are known
    /// by construction (subdivided spheres), bypassing the hull search.
    pub(crate) fn from_face_lattice(vertices: Vec<Vec<f64>>, facets: Vec<Vec<usize>>) -> Result<Self> {
        assemble3(vertices, facets)
    }
}

fn point_distance(a: &[f64], b: &[f64]) -> f64 {
    norm(&sub(a, b))
}

/// Lexicographic comparison with exact coordinates; used for canonical
/// ordering after deduplication.
fn lex_less(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Equal) | None => continue,
            Some(ord) => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

/// Sorts lexicographically and merges points closer than the relative
/// point tolerance.
fn dedupe(points: &[Vec<f64>], dim: usize) -> Result<Vec<Vec<f64>>> {
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                left: p.len(),
                right: dim,
            });
        }
        if p.iter().any(|x| !x.is_finite()) {
            return Err(Error::DegenerateInput(
                "point with non-finite coordinates".into(),
            ));
        }
    }
    let scale = points
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0, |acc: f64, &x| acc.max(x.abs()))
        .max(1.0);
    let tol = POINT_TOL * scale;
    let mut sorted: Vec<Vec<f64>> = points.to_vec();
    sorted.sort_by(|a, b| lex_less(a, b));
    // Tolerance-based merge via a cell grid: a fresh point is compared with
    // the kept points in its own and neighbouring cells only, so duplicates
    // are caught regardless of how the sort interleaves nearby points.
    let cell_of = |p: &[f64]| -> Vec<i64> {
        p.iter().map(|x| (x / tol).floor() as i64).collect()
    };
    let mut grid: std::collections::HashMap<Vec<i64>, Vec<usize>> =
        std::collections::HashMap::new();
    let mut unique: Vec<Vec<f64>> = Vec::with_capacity(sorted.len());
    for p in sorted {
        let cell = cell_of(&p);
        let mut seen = false;
        let offsets: &[i64] = &[-1, 0, 1];
        let mut neighbours = vec![Vec::new()];
        for axis in 0..dim {
            let mut grown = Vec::with_capacity(neighbours.len() * 3);
            for partial in &neighbours {
                for &off in offsets {
                    let mut next: Vec<i64> = partial.clone();
                    next.push(cell[axis] + off);
                    grown.push(next);
                }
            }
            neighbours = grown;
        }
        'scan: for key in &neighbours {
            if let Some(ids) = grid.get(key) {
                for &id in ids {
                    if point_distance(&unique[id], &p) <= tol {
                        seen = true;
                        break 'scan;
                    }
                }
            }
        }
        if !seen {
            grid.entry(cell).or_default().push(unique.len());
            unique.push(p);
        }
    }
    Ok(unique)
}

/// Monotone-chain hull in the plane. Collinear points along the boundary
/// are dropped, so the output vertices are exactly the extreme points.
fn hull2(points: &[Vec<f64>]) -> Result<ConvexPolytope> {
    let pts = dedupe(points, 2)?;
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 distinct points in the plane, got {}",
            pts.len()
        )));
    }
    let scale = pts
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0, |acc: f64, &x| acc.max(x.abs()))
        .max(1.0);
    let area_tol = PLANE_TOL * scale * scale;
    let turn = |o: &[f64], a: &[f64], b: &[f64]| -> f64 {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let chain = |iter: &mut dyn Iterator<Item = &Vec<f64>>| -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = Vec::new();
        for p in iter {
            while out.len() >= 2 && turn(&out[out.len() - 2], &out[out.len() - 1], p) <= area_tol {
                out.pop();
            }
            out.push(p.clone());
        }
        out
    };
    let mut lower = chain(&mut pts.iter());
    let mut upper = chain(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    let vertices = lower;
    if vertices.len() < 3 {
        return Err(Error::DegenerateInput(
            "points are collinear; the hull is not full-dimensional".into(),
        ));
    }

    let m = vertices.len();
    let mut facets = Vec::with_capacity(m);
    let mut facet_normals = Vec::with_capacity(m);
    let mut facet_offsets = Vec::with_capacity(m);
    let mut area2 = 0.0;
    let mut perimeter = 0.0;
    for i in 0..m {
        let j = (i + 1) % m;
        let (a, b) = (&vertices[i], &vertices[j]);
        area2 += a[0] * b[1] - b[0] * a[1];
        let edge = sub(b, a);
        let len = norm(&edge);
        perimeter += len;
        // Outward normal of a counterclockwise edge is the right-hand
        // rotation of the edge direction.
        let normal = vec![edge[1] / len, -edge[0] / len];
        facet_offsets.push(dot(&normal, a));
        facet_normals.push(normal);
        facets.push(vec![i, j]);
    }
    Ok(ConvexPolytope {
        dim: 2,
        vertices,
        facets,
        facet_normals,
        facet_offsets,
        edges: Vec::new(),
        volume: area2 / 2.0,
        boundary_measure: perimeter,
    })
}

/// Hull in space by supporting-plane enumeration: every triple of points
/// spans a candidate plane, and a plane with all points on one side is a
/// facet plane. Coplanar point clusters are resolved by a planar hull, so
/// facets come out as maximal polygons with extreme corners only.
///
/// Quadratic-by-triples search, entirely adequate for the point counts this
/// crate works with (hundreds at most); the ball approximants that would be
/// too large for it are built from known combinatorics instead.
fn hull3(points: &[Vec<f64>]) -> Result<ConvexPolytope> {
    let pts = dedupe(points, 3)?;
    if pts.len() < 4 {
        return Err(Error::DegenerateInput(format!(
            "need at least 4 distinct points in space, got {}",
            pts.len()
        )));
    }
    let scale = pts
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0, |acc: f64, &x| acc.max(x.abs()))
        .max(1.0);
    let plane_tol = PLANE_TOL * scale;
    let cross_tol = 1e-12 * scale * scale;

    let mut planes: Vec<(Vec<f64>, f64)> = Vec::new();
    let mut record = |normal: Vec<f64>, offset: f64| {
        let duplicate = planes.iter().any(|(n, c)| {
            dot(n, &normal) > 1.0 - NORMAL_TOL && (c - offset).abs() <= plane_tol
        });
        if !duplicate {
            planes.push((normal, offset));
        }
    };

    let n = pts.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let ab = sub(&pts[j], &pts[i]);
            for k in (j + 1)..n {
                let ac = sub(&pts[k], &pts[i]);
                let cr = cross3(&ab, &ac);
                let len = norm(&cr);
                if len <= cross_tol {
                    continue;
                }
                let normal = scaled(&cr, 1.0 / len);
                let offset = dot(&normal, &pts[i]);
                let mut max_d = f64::NEG_INFINITY;
                let mut min_d = f64::INFINITY;
                for p in &pts {
                    let d = dot(&normal, p) - offset;
                    max_d = max_d.max(d);
                    min_d = min_d.min(d);
                }
                if max_d <= plane_tol {
                    record(normal.clone(), offset);
                }
                if min_d >= -plane_tol {
                    record(scaled(&normal, -1.0), -offset);
                }
            }
        }
    }
    if planes.len() < 4 {
        return Err(Error::DegenerateInput(
            "points are coplanar; the hull is not full-dimensional".into(),
        ));
    }

    // Resolve each supporting plane into a maximal facet polygon.
    let mut face_polygons: Vec<Vec<Vec<f64>>> = Vec::with_capacity(planes.len());
    for (normal, offset) in &planes {
        let cluster: Vec<&Vec<f64>> = pts
            .iter()
            .filter(|p| (dot(normal, p) - offset).abs() <= plane_tol)
            .collect();
        if cluster.len() < 3 {
            continue;
        }
        // In-plane orthonormal frame (u, v) with (u, v, normal) right-handed,
        // so a counterclockwise planar hull is counterclockwise from outside.
        let seed = if normal[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let mut u = cross3(normal, &seed);
        u = scaled(&u, 1.0 / norm(&u));
        let v = cross3(normal, &u);
        let planar: Vec<Vec<f64>> = cluster
            .iter()
            .map(|p| vec![dot(&u, p), dot(&v, p)])
            .collect();
        let Ok(flat) = hull2(&planar) else {
            // Collinear cluster: this plane supports an edge, not a facet.
            continue;
        };
        // With v = normal x u the frame (u, v, normal) is right-handed, so
        // the counterclockwise planar hull is already the outward order.
        let corners: Vec<Vec<f64>> = flat
            .vertices()
            .iter()
            .map(|q| {
                (0..3)
                    .map(|axis| q[0] * u[axis] + q[1] * v[axis] + offset * normal[axis])
                    .collect()
            })
            .collect();
        face_polygons.push(corners);
    }

    // Canonical vertex list: every facet corner, deduplicated and sorted.
    let corner_pool: Vec<Vec<f64>> = face_polygons.iter().flatten().cloned().collect();
    let vertices = dedupe(&corner_pool, 3)?;
    let tol = POINT_TOL * scale;
    let locate = |p: &Vec<f64>| -> Result<usize> {
        vertices
            .iter()
            .position(|q| point_distance(q, p) <= tol)
            .ok_or_else(|| Error::DegenerateInput("hull corner lookup failed".into()))
    };
    let mut facets: Vec<Vec<usize>> = Vec::with_capacity(face_polygons.len());
    for polygon in &face_polygons {
        let ids: Result<Vec<usize>> = polygon.iter().map(&locate).collect();
        facets.push(ids?);
    }
    assemble3(vertices, facets)
}

/// Derives normals, offsets, edges, dihedral angles, and measures from a
/// spatial vertex/facet description, and verifies convexity plus the Euler
/// relation on the way.
fn assemble3(vertices: Vec<Vec<f64>>, facets: Vec<Vec<usize>>) -> Result<ConvexPolytope> {
    if vertices.len() < 4 || facets.len() < 4 {
        return Err(Error::DegenerateInput(
            "a spatial polytope needs at least 4 vertices and 4 facets".into(),
        ));
    }
    let scale = vertices
        .iter()
        .flat_map(|v| v.iter())
        .fold(0.0, |acc: f64, &x| acc.max(x.abs()))
        .max(1.0);
    let plane_tol = 10.0 * PLANE_TOL * scale;

    let mut centroid = vec![0.0; 3];
    for v in &vertices {
        for (c, x) in centroid.iter_mut().zip(v) {
            *c += x / vertices.len() as f64;
        }
    }

    let mut facet_normals = Vec::with_capacity(facets.len());
    let mut facet_offsets = Vec::with_capacity(facets.len());
    let mut volume = 0.0;
    let mut boundary = 0.0;
    for polygon in &facets {
        if polygon.len() < 3 {
            return Err(Error::DegenerateInput("facet with fewer than 3 corners".into()));
        }
        // Newell normal: robust for any simple polygon, exact for triangles.
        let mut normal = vec![0.0; 3];
        for i in 0..polygon.len() {
            let a = &vertices[polygon[i]];
            let b = &vertices[polygon[(i + 1) % polygon.len()]];
            normal[0] += (a[1] - b[1]) * (a[2] + b[2]);
            normal[1] += (a[2] - b[2]) * (a[0] + b[0]);
            normal[2] += (a[0] - b[0]) * (a[1] + b[1]);
        }
        let len = norm(&normal);
        if len <= 1e-14 * scale * scale {
            return Err(Error::DegenerateInput("degenerate facet polygon".into()));
        }
        let mut unit = scaled(&normal, 1.0 / len);
        let anchor = &vertices[polygon[0]];
        if dot(&unit, anchor) < dot(&unit, &centroid) {
            unit = scaled(&unit, -1.0);
        }
        let area = len / 2.0;
        let offset = dot(&unit, anchor);
        volume += offset * area / 3.0;
        boundary += area;
        facet_normals.push(unit);
        facet_offsets.push(offset);
    }

    // Edge map: each undirected vertex pair must be shared by exactly two
    // facets.
    let mut edge_map: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
        std::collections::BTreeMap::new();
    for (f, polygon) in facets.iter().enumerate() {
        for i in 0..polygon.len() {
            let a = polygon[i];
            let b = polygon[(i + 1) % polygon.len()];
            let key = (a.min(b), a.max(b));
            edge_map.entry(key).or_default().push(f);
        }
    }
    let mut edges = Vec::with_capacity(edge_map.len());
    for ((a, b), incident) in &edge_map {
        if incident.len() != 2 {
            return Err(Error::DegenerateInput(format!(
                "edge shared by {} facets instead of 2",
                incident.len()
            )));
        }
        let (f1, f2) = (incident[0], incident[1]);
        let n1 = &facet_normals[f1];
        let n2 = &facet_normals[f2];
        // Convexity across the edge: the neighbouring facet must stay on the
        // inner side of this facet's plane (and vice versa).  A closed surface
        // that is convex across every edge bounds a convex body, so this local
        // test replaces a full vertex-against-plane sweep.
        for (from, n, &c) in [(f2, n1, &facet_offsets[f1]), (f1, n2, &facet_offsets[f2])] {
            let outlier = facets[from]
                .iter()
                .find(|&&w| w != *a && w != *b)
                .map(|&w| dot(n, &vertices[w]) - c);
            if outlier.is_some_and(|excess| excess > plane_tol) {
                return Err(Error::DegenerateInput(
                    "facet description is not convex".into(),
                ));
            }
        }
        let exterior_angle = norm(&cross3(n1, n2)).atan2(dot(n1, n2));
        edges.push(EdgeData {
            endpoints: [*a, *b],
            facets: [f1, f2],
            length: point_distance(&vertices[*a], &vertices[*b]),
            exterior_angle,
        });
    }

    let (v, e, f) = (vertices.len(), edges.len(), facets.len());
    if v + f != e + 2 {
        return Err(Error::DegenerateInput(format!(
            "Euler relation violated: V={v}, E={e}, F={f}"
        )));
    }

    Ok(ConvexPolytope {
        dim: 3,
        vertices,
        facets,
        facet_normals,
        facet_offsets,
        edges,
        volume,
        boundary_measure: boundary,
    })
}

/// Corners of the unit square `[0,1]^2`.
pub fn unit_square_points() -> Vec<Vec<f64>> {
    vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ]
}

/// Corners of the unit cube `[0,1]^3`.
pub fn unit_cube_points() -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(8);
    for x in [0.0, 1.0] {
        for y in [0.0, 1.0] {
            for z in [0.0, 1.0] {
                out.push(vec![x, y, z]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn square_hull_keeps_the_four_corners() {
        let hull = ConvexPolytope::hull(&unit_square_points(), 2).unwrap();
        assert_eq!(hull.vertex_count(), 4);
        assert_relative_eq!(hull.volume(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(hull.boundary_measure(), 4.0, epsilon = 1e-12);
        // Canonical order: counterclockwise from the lexicographic minimum.
        assert_eq!(hull.vertices()[0], vec![0.0, 0.0]);
        assert_eq!(hull.vertices()[1], vec![1.0, 0.0]);
    }

    #[test]
    fn interior_and_boundary_midpoints_are_discarded_in_the_plane() {
        let mut points = unit_square_points();
        points.push(vec![0.5, 0.5]);
        points.push(vec![0.5, 0.0]);
        let hull = ConvexPolytope::hull(&points, 2).unwrap();
        assert_eq!(hull.vertex_count(), 4);
    }

    #[test]
    fn collinear_input_is_rejected() {
        let points = vec![
            vec![0.0, 0.0],
            vec![1.0, 1.0],
            vec![2.0, 2.0],
            vec![3.0, 3.0],
        ];
        assert!(matches!(
            ConvexPolytope::hull(&points, 2),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn cube_hull_discards_the_center() {
        let mut points = unit_cube_points();
        points.push(vec![0.5, 0.5, 0.5]);
        let hull = ConvexPolytope::hull(&points, 3).unwrap();
        assert_eq!(hull.vertex_count(), 8);
        assert_relative_eq!(hull.volume(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(hull.boundary_measure(), 6.0, epsilon = 1e-12);
    }

    #[test]
    fn cube_face_lattice_satisfies_euler_and_right_angles() {
        let hull = ConvexPolytope::hull(&unit_cube_points(), 3).unwrap();
        let v = hull.vertex_count();
        let e = hull.edges().len();
        let f = hull.facets().len();
        assert_eq!(v as i64 - e as i64 + f as i64, 2);
        assert_eq!((v, e, f), (8, 12, 6));
        for edge in hull.edges() {
            assert_relative_eq!(edge.exterior_angle, FRAC_PI_2, epsilon = 1e-12);
            assert_relative_eq!(edge.length, 1.0, epsilon = 1e-12);
        }
        assert_relative_eq!(hull.edge_angle_measure(), 3.0 * PI, epsilon = 1e-12);
    }

    #[test]
    fn coplanar_input_is_rejected_in_space() {
        let points = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.0],
            vec![0.5, 0.25, 0.0],
        ];
        assert!(matches!(
            ConvexPolytope::hull(&points, 3),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn tetrahedron_volume_and_angles() {
        let points = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        let hull = ConvexPolytope::hull(&points, 3).unwrap();
        assert_eq!(hull.vertex_count(), 4);
        assert_eq!(hull.facets().len(), 4);
        assert_relative_eq!(hull.volume(), 1.0 / 6.0, epsilon = 1e-12);
        // The three right-angle edges meet the slanted face edges; every
        // exterior angle is strictly between 0 and pi.
        for edge in hull.edges() {
            assert!(edge.exterior_angle > 0.1 && edge.exterior_angle < PI);
        }
    }

    #[test]
    fn octahedron_across_facet_merging() {
        // Vertices of the regular octahedron; every facet is a triangle and
        // the supporting-plane clusters have exactly three members each.
        let points = vec![
            vec![1.0, 0.0, 0.0],
            vec![-1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, -1.0],
        ];
        let hull = ConvexPolytope::hull(&points, 3).unwrap();
        assert_eq!(hull.vertex_count(), 6);
        assert_eq!(hull.facets().len(), 8);
        assert_eq!(hull.edges().len(), 12);
        assert_relative_eq!(hull.volume(), 4.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn from_extreme_points_refuses_interior_claims() {
        let mut points = unit_square_points();
        points.push(vec![0.25, 0.5]);
        let err = ConvexPolytope::from_extreme_points(&points, 2).unwrap_err();
        assert!(matches!(err, Error::NonConvexInput { index: 4 }));
        assert!(ConvexPolytope::from_extreme_points(&unit_square_points(), 2).is_ok());
        assert!(ConvexPolytope::from_extreme_points(&unit_cube_points(), 3).is_ok());
    }

    #[test]
    fn support_and_membership_agree_on_the_cube() {
        let hull = ConvexPolytope::hull(&unit_cube_points(), 3).unwrap();
        assert_relative_eq!(hull.support(&[1.0, 1.0, 1.0]), 3.0, epsilon = 1e-12);
        let top = hull.support_set(&[0.0, 0.0, 1.0], 1e-9);
        assert_eq!(top.len(), 4);
        assert!(hull.contains(&[0.5, 0.5, 0.5], 1e-12));
        assert!(hull.contains(&[0.0, 0.0, 0.0], 1e-12));
        assert!(!hull.contains(&[1.2, 0.5, 0.5], 1e-9));
    }

    #[test]
    fn translation_and_scaling_produce_expected_measures() {
        let hull = ConvexPolytope::hull(&unit_cube_points(), 3).unwrap();
        let moved = hull.translated(&[5.0, -2.0, 1.0]).unwrap();
        assert_relative_eq!(moved.volume(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(moved.edge_angle_measure(), 3.0 * PI, epsilon = 1e-12);
        let doubled = hull.scaled(2.0).unwrap();
        assert_relative_eq!(doubled.volume(), 8.0, epsilon = 1e-12);
        assert_relative_eq!(doubled.boundary_measure(), 24.0, epsilon = 1e-12);
        assert!(hull.scaled(-1.0).is_err());
    }

    #[test]
    fn dimension_mismatches_are_reported() {
        assert!(matches!(
            ConvexPolytope::hull(&unit_square_points(), 4),
            Err(Error::UnsupportedDimension(4, _))
        ));
        let mixed = vec![vec![0.0, 0.0], vec![1.0, 0.0, 0.0]];
        assert!(ConvexPolytope::hull(&mixed, 2).is_err());
    }
}
