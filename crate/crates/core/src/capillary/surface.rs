//! The capillary-surface record: an immersed patch meeting the walls of a
//! support domain, together with exact wetted-domain data and the measured
//! quantities (mean curvature, contact angles) that every downstream
//! functional relies on.
//!
//! Records are produced by the builders in this module and checked once, at
//! assembly time: the boundary must lie on the declared walls, the interior
//! must stay strictly inside the domain, boundary circles must keep clear of
//! the wedge edge, the mean curvature must be constant within tolerance when
//! the record claims so, and the contact angle along each wall must be
//! constant and equal to its nominal value.

use crate::capillary::domain::SupportDomain;
use crate::error::{Error, Result};
use crate::hypersurface::{curvature_at, ParametricPatch};
use crate::numkernel::linalg::{axpy, dot, normalized, scaled, sub};

/// Number of sample points along each contact line when measuring angles.
pub const ANGLE_SAMPLES: usize = 64;
/// Samples per axis of the interior grid used for curvature measurement.
pub const CURVATURE_GRID: usize = 20;
/// A boundary sample may sit off its wall plane by at most this much.
pub const BOUNDARY_PLANE_TOL: f64 = 1e-10;
/// Boundary circles must keep at least this distance from the wedge edge.
pub const EDGE_CLEARANCE: f64 = 1e-9;

/// Tolerances used during assembly and by the stability classifier.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Sampled standard deviation of mean curvature below which a surface
    /// counts as having constant mean curvature.
    pub cmc: f64,
    /// Allowed variation of the measured contact angle along one wall.
    pub angle_constancy: f64,
    /// Allowed gap between the measured mean angle and the nominal angle.
    pub angle_match: f64,
    /// Slack when testing the hypothesis `theta_i >= pi/2`.
    pub hypothesis_angle: f64,
    /// Sup-norm umbilicity defect below which a surface counts as umbilic.
    pub umbilic: f64,
    /// Magnitude below which the stability indicator counts as zero.
    pub indicator: f64,
    /// Relative magnitude below which the first energy coefficient `e_1`
    /// counts as zero and the variation problem as degenerate.
    pub degenerate_e1: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cmc: 1e-6,
            angle_constancy: 1e-6,
            angle_match: 1e-8,
            hypothesis_angle: 1e-6,
            umbilic: 1e-6,
            indicator: 1e-6,
            degenerate_e1: 1e-8,
        }
    }
}

/// Exact description of a round wetted disk lying in a wall plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarDiskData {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Wetted domain on one wall: the planar region bounded by a contact line,
/// with the integral data the energy and stability functionals consume.
#[derive(Debug, Clone, PartialEq)]
pub struct WettedDomain {
    /// Index of the wall carrying this domain.
    pub wall: usize,
    /// Area of the wetted domain.
    pub area: f64,
    /// Length (codimension-one measure) of its boundary, the contact line.
    pub boundary_area: f64,
    /// Integral over the contact line of the sum of its principal curvatures
    /// inside the wall plane, with the outward orientation convention.
    pub boundary_mean_curv_integral: f64,
    /// For surface dimension two this equals the total geodesic curvature of
    /// the contact curve; `-2 pi` for any smooth Jordan curve.
    pub geodesic_curv_integral: Option<f64>,
    /// Orientation sign relating the wall normal to the outward normal of the
    /// enclosed drop along this domain; `+1` for all builders here.
    pub orientation_sign: f64,
    /// Whether the wetted domain is convex.
    pub convex: bool,
    /// Exact disk payload when the domain is a round disk.
    pub disk: Option<PlanarDiskData>,
}

impl WettedDomain {
    /// Round disk of the given center and radius on wall `wall`, with all
    /// integral data filled in exactly. The boundary circle is oriented
    /// outward (curvature `-1/radius`), so its total curvature is `-2 pi`.
    pub fn round_disk(wall: usize, center: &[f64], radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "wetted disk radius must be positive and finite, got {radius}"
            )));
        }
        let tau = std::f64::consts::TAU;
        Ok(WettedDomain {
            wall,
            area: std::f64::consts::PI * radius * radius,
            boundary_area: tau * radius,
            boundary_mean_curv_integral: -tau,
            geodesic_curv_integral: Some(-tau),
            orientation_sign: 1.0,
            convex: true,
            disk: Some(PlanarDiskData {
                center: center.to_vec(),
                radius,
            }),
        })
    }

    /// Coefficients `[c_0, c_1, c_2]` of the area of the outward parallel
    /// domain at distance `tau` inside its wall plane,
    /// `A(tau) = c_0 + c_1 tau + c_2 tau^2`. Exact for planar domains, since
    /// the length of a parallel curve is affine in the offset.
    pub fn parallel_area_coefficients(&self) -> Result<[f64; 3]> {
        let total_curvature = self
            .geodesic_curv_integral
            .ok_or(Error::MissingBoundaryData { wall: self.wall })?;
        Ok([self.area, self.boundary_area, -0.5 * total_curvature])
    }
}

/// Location of one contact line in the parameter box of the patch: the edge
/// of axis `axis` at the lower or upper end, mapped onto wall `wall`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryContact {
    pub wall: usize,
    pub axis: usize,
    pub at_upper: bool,
}

/// Record of the structural hypotheses behind the stability classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypotheses {
    /// Per wall: whether the contact angle is at least `pi/2` (within slack).
    pub angle_at_least_right: Vec<bool>,
    /// Whether the boundary is known to be embedded.
    pub boundary_embedded: bool,
    /// Whether every wetted domain is convex.
    pub wetted_convex: bool,
}

impl Hypotheses {
    /// All hypotheses hold.
    pub fn met(&self) -> bool {
        self.angle_at_least_right.iter().all(|&b| b)
            && self.boundary_embedded
            && self.wetted_convex
    }
}

/// An immersed capillary surface in a half-space or wedge.
///
/// Fields are public and the struct can be assembled by hand for synthetic
/// test records, but [`CapillarySurface::assemble`] is the checked path every
/// builder uses.
#[derive(Debug, Clone)]
pub struct CapillarySurface {
    /// The immersed surface patch, oriented away from the enclosed drop.
    pub patch: ParametricPatch,
    /// The supporting domain whose walls carry the wetted domains.
    pub domain: SupportDomain,
    /// Where each contact line sits in the parameter box.
    pub contacts: Vec<BoundaryContact>,
    /// Nominal contact angle against each wall, indexed like the walls.
    pub contact_angles: Vec<f64>,
    /// Wetted domain on each wall, indexed like the walls.
    pub wetted: Vec<WettedDomain>,
    /// Sampled mean of the mean curvature.
    pub mean_curvature: f64,
    /// Sampled standard deviation of the mean curvature.
    pub cmc_deviation: f64,
    /// Whether the surface counts as having constant mean curvature.
    pub is_cmc: bool,
    /// Volume enclosed between the surface and the wetted domains.
    pub enclosed_volume: f64,
    /// Structural hypotheses checked at assembly time.
    pub hypotheses: Hypotheses,
    /// Human-readable warnings (for instance an acute contact angle).
    pub warnings: Vec<String>,
}

impl CapillarySurface {
    /// Checks and assembles a record from its raw parts.
    ///
    /// `nominal_angles` lists the intended contact angle per wall. The call
    /// measures mean curvature and contact angles, verifies the boundary and
    /// interior placement, and fills in the measured fields and hypotheses.
    /// `claims_cmc` states whether the construction is supposed to have
    /// constant mean curvature; a violated claim is an error, while a
    /// non-claim simply records the measured deviation.
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        patch: ParametricPatch,
        domain: SupportDomain,
        contacts: Vec<BoundaryContact>,
        nominal_angles: Vec<f64>,
        wetted: Vec<WettedDomain>,
        enclosed_volume: f64,
        claims_cmc: bool,
        boundary_embedded: bool,
        tol: &Tolerances,
    ) -> Result<Self> {
        if patch.dim() != 2 {
            return Err(Error::UnsupportedDimension(patch.dim(), "2"));
        }
        let walls = domain.wall_count();
        if nominal_angles.len() != walls || wetted.len() != walls || contacts.len() != walls {
            return Err(Error::InvalidParameter(format!(
                "expected {walls} contact angles, wetted domains and contacts, got {}/{}/{}",
                nominal_angles.len(),
                wetted.len(),
                contacts.len()
            )));
        }

        let mut surface = CapillarySurface {
            patch,
            domain,
            contacts,
            contact_angles: nominal_angles,
            wetted,
            mean_curvature: 0.0,
            cmc_deviation: 0.0,
            is_cmc: false,
            enclosed_volume,
            hypotheses: Hypotheses {
                angle_at_least_right: Vec::new(),
                boundary_embedded,
                wetted_convex: true,
            },
            warnings: Vec::new(),
        };

        surface.check_boundary_and_interior()?;

        let (mean, deviation) = surface.measure_mean_curvature(CURVATURE_GRID)?;
        surface.mean_curvature = mean;
        surface.cmc_deviation = deviation;
        surface.is_cmc = deviation <= tol.cmc;
        if claims_cmc && !surface.is_cmc {
            return Err(Error::NotCmc {
                deviation,
                tolerance: tol.cmc,
            });
        }

        for wall in 0..walls {
            let (measured, spread) = surface.contact_angle(wall, ANGLE_SAMPLES)?;
            if spread > tol.angle_constancy {
                return Err(Error::NonConstantAngle {
                    wall,
                    deviation: spread,
                    tolerance: tol.angle_constancy,
                });
            }
            let nominal = surface.contact_angles[wall];
            if (measured - nominal).abs() > tol.angle_match {
                return Err(Error::GeometryViolation(format!(
                    "measured contact angle {measured:.12} on wall {wall} disagrees with \
                     the nominal angle {nominal:.12}"
                )));
            }
        }

        let half_pi = std::f64::consts::FRAC_PI_2;
        surface.hypotheses.angle_at_least_right = surface
            .contact_angles
            .iter()
            .map(|&theta| theta >= half_pi - tol.hypothesis_angle)
            .collect();
        surface.hypotheses.wetted_convex = surface.wetted.iter().all(|w| w.convex);
        for (wall, &ok) in surface.hypotheses.angle_at_least_right.iter().enumerate() {
            if !ok {
                surface.warnings.push(format!(
                    "contact angle {:.6} on wall {wall} is below pi/2; the stability \
                     classification does not apply",
                    surface.contact_angles[wall]
                ));
            }
        }

        Ok(surface)
    }

    /// Surface dimension `n` (the ambient space has dimension `n + 1`).
    pub fn dim(&self) -> usize {
        self.patch.dim()
    }

    /// The contact record for wall `wall`.
    pub fn contact_for_wall(&self, wall: usize) -> Result<&BoundaryContact> {
        self.contacts
            .iter()
            .find(|c| c.wall == wall)
            .ok_or_else(|| {
                Error::InvalidParameter(format!("no contact line is mapped to wall {wall}"))
            })
    }

    /// Parameter points tracing the contact line on wall `wall`. Samples are
    /// offset by half a step so periodic seams are not duplicated.
    pub fn boundary_params(&self, wall: usize, samples: usize) -> Result<Vec<Vec<f64>>> {
        let contact = *self.contact_for_wall(wall)?;
        let bounds = self.patch.param_box();
        let edge_axis = contact.axis;
        let along_axis = 1 - edge_axis;
        let edge_value = if contact.at_upper {
            bounds[edge_axis][1]
        } else {
            bounds[edge_axis][0]
        };
        let [lo, hi] = bounds[along_axis];
        let mut points = Vec::with_capacity(samples);
        for j in 0..samples {
            let s = lo + (hi - lo) * (j as f64 + 0.5) / samples as f64;
            let mut u = vec![0.0; 2];
            u[edge_axis] = edge_value;
            u[along_axis] = s;
            points.push(u);
        }
        Ok(points)
    }

    /// Outward unit conormal of the surface at a parameter point on the
    /// contact edge: tangent to the surface, orthogonal to the contact line,
    /// pointing out of the parameter box.
    pub fn outward_conormal(&self, contact: &BoundaryContact, u: &[f64]) -> Result<Vec<f64>> {
        let jet = self.patch.jet(u)?;
        let along_axis = 1 - contact.axis;
        let t = jet.first(along_axis);
        let w = jet.first(contact.axis);
        let sign = if contact.at_upper { 1.0 } else { -1.0 };
        let projected = axpy(w, -dot(w, t) / dot(t, t), t);
        let eta = normalized(&scaled(&projected, sign)).map_err(|_| {
            Error::DegenerateImmersion {
                u: u.to_vec(),
                gram: 0.0,
            }
        })?;
        Ok(eta)
    }

    /// Measured contact angle along wall `wall`: the mean over boundary
    /// samples and the spread `max - min` across them.
    ///
    /// At each sample the angle between the surface and the wall is read off
    /// the outward conormal `eta`: its component along the wall normal gives
    /// the sine, its component against the direction into the wetted domain
    /// gives the cosine, and `atan2` combines them into an angle in
    /// `(0, pi)`.
    pub fn contact_angle(&self, wall: usize, samples: usize) -> Result<(f64, f64)> {
        let contact = *self.contact_for_wall(wall)?;
        let wetted = &self.wetted[wall];
        let disk = wetted
            .disk
            .as_ref()
            .ok_or(Error::MissingBoundaryData { wall })?;
        let normal = self.domain.wall_normal(wall);
        let mut angles = Vec::with_capacity(samples);
        for u in self.boundary_params(wall, samples)? {
            let eta = self.outward_conormal(&contact, &u)?;
            let x = self.patch.position(&u);
            let into_domain = normalized(&sub(&disk.center, &x)).map_err(|_| {
                Error::GeometryViolation(format!(
                    "boundary sample coincides with the wetted-disk center on wall {wall}"
                ))
            })?;
            let sine = wetted.orientation_sign * dot(&eta, &normal);
            let cosine = -dot(&eta, &into_domain);
            angles.push(sine.atan2(cosine));
        }
        let mean = angles.iter().sum::<f64>() / angles.len() as f64;
        let max = angles.iter().cloned().fold(f64::MIN, f64::max);
        let min = angles.iter().cloned().fold(f64::MAX, f64::min);
        Ok((mean, max - min))
    }

    /// Interior sample grid: `grid x grid` points placed at half-step offsets
    /// inside the parameter box, away from the edges.
    fn interior_grid(&self, grid: usize) -> Vec<Vec<f64>> {
        let bounds = self.patch.param_box();
        let mut points = Vec::with_capacity(grid * grid);
        for i in 0..grid {
            for j in 0..grid {
                let s = (i as f64 + 0.5) / grid as f64;
                let t = (j as f64 + 0.5) / grid as f64;
                points.push(vec![
                    bounds[0][0] + (bounds[0][1] - bounds[0][0]) * s,
                    bounds[1][0] + (bounds[1][1] - bounds[1][0]) * t,
                ]);
            }
        }
        points
    }

    /// Sampled mean and standard deviation of the mean curvature over an
    /// interior grid.
    pub fn measure_mean_curvature(&self, grid: usize) -> Result<(f64, f64)> {
        let points = self.interior_grid(grid);
        let mut values = Vec::with_capacity(points.len());
        for u in &points {
            values.push(curvature_at(&self.patch, u)?.mean);
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
            / values.len() as f64;
        Ok((mean, var.sqrt()))
    }

    /// Supremum over the interior sample grid of the largest pairwise gap
    /// between principal curvatures; zero exactly on umbilic surfaces.
    pub fn umbilic_deficit_sup(&self, grid: usize) -> Result<f64> {
        let mut sup: f64 = 0.0;
        for u in self.interior_grid(grid) {
            sup = sup.max(curvature_at(&self.patch, &u)?.max_pairwise_difference());
        }
        Ok(sup)
    }

    /// Boundary placement checks: every contact-line sample must lie on its
    /// wall plane, keep clear of the wedge edge, and every interior sample
    /// must stay strictly inside the open domain.
    fn check_boundary_and_interior(&self) -> Result<()> {
        for contact in &self.contacts {
            for u in self.boundary_params(contact.wall, ANGLE_SAMPLES)? {
                let x = self.patch.position(&u);
                let off_plane = self.domain.signed_distance(&x, contact.wall).abs();
                if off_plane > BOUNDARY_PLANE_TOL {
                    return Err(Error::GeometryViolation(format!(
                        "contact-line sample sits {off_plane:.3e} off wall {}",
                        contact.wall
                    )));
                }
                if let Some(edge) = self.domain.edge_distance(&x) {
                    if edge < EDGE_CLEARANCE {
                        return Err(Error::EdgeCollision {
                            distance: edge,
                            min_distance: EDGE_CLEARANCE,
                        });
                    }
                }
            }
        }
        for u in self.interior_grid(CURVATURE_GRID) {
            let x = self.patch.position(&u);
            if !self.domain.contains(&x) {
                return Err(Error::GeometryViolation(format!(
                    "interior sample at parameters {u:?} leaves the open domain"
                )));
            }
        }
        Ok(())
    }

    /// Largest distance of any contact-line sample from its wall plane.
    /// Useful for reporting; assembly already enforces the hard bound.
    pub fn boundary_plane_deviation(&self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for contact in &self.contacts {
            for u in self.boundary_params(contact.wall, ANGLE_SAMPLES)? {
                let x = self.patch.position(&u);
                worst = worst.max(self.domain.signed_distance(&x, contact.wall).abs());
            }
        }
        Ok(worst)
    }
}