//! The admissible volume-fixing variation of a capillary surface and the
//! scaled energy along it.
//!
//! The distinguished variation moves every surface point by `t (nu + a)`,
//! where `nu` is the outward unit normal and `a` is the *return translation*:
//! the unique translation (in the span of the wall normals) that slides the
//! displaced boundary back onto the walls. For a surface of dimension two the
//! unscaled energy along this family is exactly the quadratic polynomial with
//! the coefficients of [`energy_coefficients`], assembled here geometrically
//! from the tube polynomial of the free surface and the parallel-domain areas
//! of the wetted disks. The unscaled enclosed volume is the exact
//! antiderivative of the unscaled energy.
//!
//! Scaling each deformed configuration back to the original volume gives the
//! scaled energy `E(t) = s(t)^n E_raw(t)` with
//! `s(t) = (v_0 / V_raw(t))^{1/(n+1)}`; its first derivative at `t = 0`
//! vanishes for volume-critical data and its second derivative has the
//! closed form `(2 n e_0 e_2 - (n-1) e_1^2) / (n e_0)`.

use crate::capillary::surface::{CapillarySurface, Tolerances, ANGLE_SAMPLES};
use crate::error::{Error, Result};
use crate::hypersurface::tube_polynomial;
use crate::numkernel::linalg::{add, dot, scaled, solve2};

/// Energy and volume data of one deformed configuration along the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationEvaluation {
    /// Unscaled energy of the deformed configuration.
    pub raw_energy: f64,
    /// Unscaled enclosed volume.
    pub raw_volume: f64,
    /// Scaling factor returning the volume to its initial value.
    pub scale: f64,
    /// Energy after rescaling to the initial volume.
    pub scaled_energy: f64,
}

/// Precomputed polynomial data of the distinguished variation.
#[derive(Debug, Clone)]
pub struct VariationFamily {
    dim: usize,
    /// Unscaled-energy coefficients in ascending degree, length `dim + 1`.
    energy_poly: Vec<f64>,
    /// Unscaled-volume coefficients, the antiderivative plus `v_0`.
    volume_poly: Vec<f64>,
}

fn horner(coefficients: &[f64], t: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

impl VariationFamily {
    /// Assembles the family for a CMC record of dimension two.
    ///
    /// The unscaled energy is the tube polynomial of the free surface minus,
    /// for each wall, the cosine-weighted area of the parallel wetted domain
    /// at in-plane distance `t sin(theta_i)`; both pieces are polynomials in
    /// `t`, so the family stores plain coefficients.
    pub fn new(surface: &CapillarySurface, order: usize) -> Result<Self> {
        if !surface.is_cmc {
            return Err(Error::NotCmc {
                deviation: surface.cmc_deviation,
                tolerance: Tolerances::default().cmc,
            });
        }
        let dim = surface.dim();
        if dim != 2 {
            return Err(Error::UnsupportedDimension(dim, "2"));
        }
        let tube = tube_polynomial(&surface.patch, order)?;
        let mut energy_poly = tube.coefficients.clone();
        for wetted in &surface.wetted {
            let theta = surface.contact_angles[wetted.wall];
            let (sin_t, cos_t) = theta.sin_cos();
            let parallel = wetted.parallel_area_coefficients()?;
            for (degree, coefficient) in parallel.iter().enumerate() {
                energy_poly[degree] -= cos_t * coefficient * sin_t.powi(degree as i32);
            }
        }
        let mut volume_poly = vec![surface.enclosed_volume];
        for (degree, coefficient) in energy_poly.iter().enumerate() {
            volume_poly.push(coefficient / (degree as f64 + 1.0));
        }
        Ok(VariationFamily {
            dim,
            energy_poly,
            volume_poly,
        })
    }

    /// Coefficients of the unscaled-energy polynomial, assembled from the
    /// tube and parallel-domain geometry. They agree with
    /// [`energy_coefficients`] up to quadrature noise.
    pub fn energy_polynomial(&self) -> &[f64] {
        &self.energy_poly
    }

    /// Coefficients of the unscaled-volume polynomial.
    pub fn volume_polynomial(&self) -> &[f64] {
        &self.volume_poly
    }

    /// Evaluates the family at deformation parameter `t`. Fails with a
    /// degenerate-variation error when the unscaled volume is not positive.
    pub fn evaluate(&self, t: f64) -> Result<VariationEvaluation> {
        let raw_energy = horner(&self.energy_poly, t);
        let raw_volume = horner(&self.volume_poly, t);
        if !(raw_volume > 0.0) {
            return Err(Error::DegenerateVariation { raw_volume });
        }
        let scale = (self.volume_poly[0] / raw_volume).powf(1.0 / (self.dim as f64 + 1.0));
        Ok(VariationEvaluation {
            raw_energy,
            raw_volume,
            scale,
            scaled_energy: scale.powi(self.dim as i32) * raw_energy,
        })
    }

    /// Scaled energy at `t`.
    pub fn scaled_energy(&self, t: f64) -> Result<f64> {
        Ok(self.evaluate(t)?.scaled_energy)
    }

    /// First and second derivative of the scaled energy at `t = 0` by
    /// five-point central differences with step `h`. The stencil
    /// differentiates quartics exactly, so for this family the error is pure
    /// rounding noise.
    pub fn scaled_derivatives(&self, h: f64) -> Result<(f64, f64)> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::NonPositiveStep(h));
        }
        let em2 = self.scaled_energy(-2.0 * h)?;
        let em1 = self.scaled_energy(-h)?;
        let e0 = self.scaled_energy(0.0)?;
        let ep1 = self.scaled_energy(h)?;
        let ep2 = self.scaled_energy(2.0 * h)?;
        let first = (8.0 * (ep1 - em1) - (ep2 - em2)) / (12.0 * h);
        let second = (16.0 * (ep1 + em1) - (ep2 + em2) - 30.0 * e0) / (12.0 * h * h);
        Ok((first, second))
    }

    /// Closed-form second derivative of the scaled energy at `t = 0`,
    /// `(2 n e_0 e_2 - (n-1) e_1^2) / (n e_0)`, valid for volume-critical
    /// data (where the first derivative vanishes).
    pub fn second_derivative_closed_form(&self) -> f64 {
        let n = self.dim as f64;
        let (e0, e1, e2) = (
            self.energy_poly[0],
            self.energy_poly[1],
            self.energy_poly[2],
        );
        (2.0 * n * e0 * e2 - (n - 1.0) * e1 * e1) / (n * e0)
    }
}

/// One-call evaluation of the distinguished variation at parameter `t`.
pub fn variation_energy(
    surface: &CapillarySurface,
    t: f64,
    order: usize,
) -> Result<VariationEvaluation> {
    VariationFamily::new(surface, order)?.evaluate(t)
}

/// The return translation: the vector `a` in the span of the wall normals
/// with `<a, N_i> = -<nu, N_i>` along each contact line, so that boundary
/// points displaced by `t (nu + a)` stay on their walls.
///
/// The normal component `<nu, N_i>` must be constant along each contact line
/// (it equals `-cos(theta_i)` when the contact angle is constant); a
/// non-constant component is rejected.
pub fn return_translation(surface: &CapillarySurface) -> Result<Vec<f64>> {
    let tol = Tolerances::default();
    let walls = surface.domain.wall_count();
    let mut rhs = Vec::with_capacity(walls);
    for wall in 0..walls {
        let normal = surface.domain.wall_normal(wall);
        let mut values = Vec::with_capacity(ANGLE_SAMPLES);
        for u in surface.boundary_params(wall, ANGLE_SAMPLES)? {
            let frame = surface.patch.frame(&u)?;
            values.push(dot(&frame.normal, &normal));
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let spread = values.iter().fold(0.0_f64, |m, v| m.max((v - mean).abs()));
        if spread > tol.angle_constancy {
            return Err(Error::NonConstantAngle {
                wall,
                deviation: spread,
                tolerance: tol.angle_constancy,
            });
        }
        rhs.push(-mean);
    }

    match walls {
        1 => {
            // Single wall with a unit normal: a = rhs * N.
            Ok(scaled(&surface.domain.wall_normal(0), rhs[0]))
        }
        2 => {
            let n1 = surface.domain.wall_normal(0);
            let n2 = surface.domain.wall_normal(1);
            let gram = [[dot(&n1, &n1), dot(&n1, &n2)], [dot(&n2, &n1), dot(&n2, &n2)]];
            let [x, y] = solve2(gram, [rhs[0], rhs[1]])?;
            Ok(add(&scaled(&n1, x), &scaled(&n2, y)))
        }
        _ => Err(Error::UnsupportedDimension(walls, "1 or 2 walls")),
    }
}
