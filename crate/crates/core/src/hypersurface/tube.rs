//! Parallel-area and swept-volume polynomials.
//!
//! For a patch with principal curvatures `k_i`, the area of the parallel
//! surface `X + t normal` is `integral of prod(1 - k_i t) dS`, a polynomial
//! in `t` whose coefficients are the signed curvature integrals
//! `a_l = (-1)^l integral of e_l dS`. Integrating the area polynomial in `t`
//! gives the volume swept between the surface and its parallel.

use crate::error::Result;
use crate::numkernel::try_integrate_box_vec;

use super::curvature::curvature_at;
use super::integrals::area as patch_area;
use super::parallel::parallel_patch;
use super::patch::ParametricPatch;

/// Polynomial `t -> area of the parallel surface at offset t`.
#[derive(Debug, Clone, PartialEq)]
pub struct TubePolynomial {
    /// Coefficient `l` multiplies `t^l`; degree equals the patch dimension.
    pub coefficients: Vec<f64>,
}

impl TubePolynomial {
    pub fn evaluate(&self, t: f64) -> f64 {
        horner(&self.coefficients, t)
    }

    /// Convenience accessor; zero beyond the stored degree.
    pub fn coefficient(&self, l: usize) -> f64 {
        self.coefficients.get(l).copied().unwrap_or(0.0)
    }
}

/// Polynomial `t -> volume swept out between offsets 0 and t`, shifted by the
/// volume enclosed at offset zero.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumePolynomial {
    pub coefficients: Vec<f64>,
}

impl VolumePolynomial {
    pub fn evaluate(&self, t: f64) -> f64 {
        horner(&self.coefficients, t)
    }

    pub fn coefficient(&self, l: usize) -> f64 {
        self.coefficients.get(l).copied().unwrap_or(0.0)
    }

    /// The derivative in `t` recovers the parallel-area polynomial.
    pub fn derivative(&self) -> TubePolynomial {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(l, c)| l as f64 * c)
            .collect();
        TubePolynomial { coefficients }
    }
}

fn horner(coefficients: &[f64], t: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Computes all parallel-area coefficients of a patch in a single quadrature
/// pass.
pub fn tube_polynomial(patch: &ParametricPatch, order: usize) -> Result<TubePolynomial> {
    let n = patch.dim();
    let coefficients = try_integrate_box_vec(
        |u| {
            let data = curvature_at(patch, u)?;
            let ds = data.frame.area_element;
            Ok((0..=n)
                .map(|l| {
                    let sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
                    sign * data.elementary_symmetric(l) * ds
                })
                .collect())
        },
        patch.param_box(),
        order,
    )?;
    Ok(TubePolynomial { coefficients })
}

/// Antiderivative of the parallel-area polynomial with constant term
/// `base_volume`, the volume enclosed at offset zero.
pub fn volume_polynomial(tube: &TubePolynomial, base_volume: f64) -> VolumePolynomial {
    let mut coefficients = Vec::with_capacity(tube.coefficients.len() + 1);
    coefficients.push(base_volume);
    for (l, a) in tube.coefficients.iter().enumerate() {
        coefficients.push(a / (l + 1) as f64);
    }
    VolumePolynomial { coefficients }
}

/// Cross-check helper: measures the parallel surface directly and compares it
/// against the polynomial prediction, returning `(measured, predicted)`.
pub fn parallel_area_check(
    patch: &ParametricPatch,
    tube: &TubePolynomial,
    t: f64,
    order: usize,
) -> Result<(f64, f64)> {
    let offset = parallel_patch(patch, t, order)?;
    let measured = patch_area(&offset, order)?;
    Ok((measured, tube.evaluate(t)))
}
