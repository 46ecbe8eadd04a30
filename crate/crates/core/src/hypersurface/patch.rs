//! Chart-based hypersurface patches and their first-order frames.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numkernel::linalg::{axpy, cross_general, det_sym, dot, norm, scaled};
use crate::numkernel::{fd_jet, Interval, JetEstimate, DEFAULT_FD_STEP};

use super::GRAM_DET_FLOOR;

/// Chart map `u -> X(u)`, evaluated pointwise.
pub type PositionFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// Analytic jet of the chart map; must agree with the position map.
pub type JetFn = Arc<dyn Fn(&[f64]) -> JetEstimate + Send + Sync>;

/// A single chart of an immersed hypersurface: a map from an axis-aligned
/// parameter box in `R^n` into `R^{n+1}`, with `n` in `1..=3`.
///
/// Derivatives come from an attached analytic jet when one is supplied and
/// from centered finite differences otherwise. The orientation sign selects
/// which of the two unit normals the patch reports; see [`Frame::normal`].
#[derive(Clone)]
pub struct ParametricPatch {
    param_box: Vec<Interval>,
    ambient_dim: usize,
    position: PositionFn,
    analytic_jet: Option<JetFn>,
    orientation_sign: f64,
    fd_step: f64,
}

impl std::fmt::Debug for ParametricPatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParametricPatch")
            .field("param_box", &self.param_box)
            .field("ambient_dim", &self.ambient_dim)
            .field("analytic_jet", &self.analytic_jet.is_some())
            .field("orientation_sign", &self.orientation_sign)
            .field("fd_step", &self.fd_step)
            .finish()
    }
}

impl ParametricPatch {
    /// Builds a patch from a bare position map; derivatives will be estimated
    /// by finite differences with the default step.
    pub fn from_position(
        param_box: Vec<Interval>,
        ambient_dim: usize,
        position: PositionFn,
    ) -> Result<Self> {
        let n = param_box.len();
        if n == 0 || n > 3 {
            return Err(Error::UnsupportedDimension(n, "1..=3 parameters"));
        }
        if ambient_dim != n + 1 {
            return Err(Error::DimensionMismatch {
                left: ambient_dim,
                right: n + 1,
            });
        }
        for (axis, &[lo, hi]) in param_box.iter().enumerate() {
            if !lo.is_finite() || !hi.is_finite() || hi <= lo {
                return Err(Error::DegenerateBox { axis, lo, hi });
            }
        }
        Ok(ParametricPatch {
            param_box,
            ambient_dim,
            position,
            analytic_jet: None,
            orientation_sign: 1.0,
            fd_step: DEFAULT_FD_STEP,
        })
    }

    /// Attaches an analytic jet; the finite-difference path is bypassed.
    pub fn with_analytic_jet(mut self, jet: JetFn) -> Self {
        self.analytic_jet = Some(jet);
        self
    }

    /// Sets the orientation sign; only `+1` and `-1` are meaningful.
    pub fn with_orientation(mut self, sign: f64) -> Result<Self> {
        if sign != 1.0 && sign != -1.0 {
            return Err(Error::InvalidParameter(format!(
                "orientation sign must be +1 or -1, got {sign}"
            )));
        }
        self.orientation_sign = sign;
        Ok(self)
    }

    /// Returns the same chart with the opposite normal.
    pub fn with_orientation_flipped(mut self) -> Self {
        self.orientation_sign = -self.orientation_sign;
        self
    }

    /// Overrides the finite-difference step.
    pub fn with_fd_step(mut self, step: f64) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::NonPositiveStep(step));
        }
        self.fd_step = step;
        Ok(self)
    }

    /// Parameter-space dimension `n`.
    pub fn dim(&self) -> usize {
        self.param_box.len()
    }

    /// Ambient dimension `n + 1`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn param_box(&self) -> &[Interval] {
        &self.param_box
    }

    pub fn orientation_sign(&self) -> f64 {
        self.orientation_sign
    }

    pub fn fd_step(&self) -> f64 {
        self.fd_step
    }

    pub fn has_analytic_jet(&self) -> bool {
        self.analytic_jet.is_some()
    }

    /// Evaluates the chart map.
    pub fn position(&self, u: &[f64]) -> Vec<f64> {
        (self.position)(u)
    }

    /// Second-order jet at `u`, analytic when available.
    pub fn jet(&self, u: &[f64]) -> Result<JetEstimate> {
        let jet = match &self.analytic_jet {
            Some(jet) => jet(u),
            None => fd_jet(|p| (self.position)(p), u, self.fd_step, Some(&self.param_box))?,
        };
        if jet.dim() != self.dim() || jet.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: jet.ambient_dim(),
                right: self.ambient_dim,
            });
        }
        let finite = jet.value().iter().all(|v| v.is_finite())
            && (0..self.dim()).all(|i| jet.first(i).iter().all(|v| v.is_finite()));
        if !finite {
            return Err(Error::EvaluationFailure { node: u.to_vec() });
        }
        Ok(jet)
    }

    /// First-order frame (jet, metric, normal, area element) at `u`.
    pub fn frame(&self, u: &[f64]) -> Result<Frame> {
        let jet = self.jet(u)?;
        let n = self.dim();
        let mut metric = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i..n {
                let g = dot(jet.first(i), jet.first(j));
                metric[i][j] = g;
                metric[j][i] = g;
            }
        }
        let gram_det = det_sym(&metric);
        let firsts: Vec<&[f64]> = (0..n).map(|i| jet.first(i)).collect();
        let weighted_normal = cross_general(&firsts)?;
        let area_element = norm(&weighted_normal);
        if !(gram_det > GRAM_DET_FLOOR) || !(area_element > 0.0) {
            return Err(Error::DegenerateImmersion {
                u: u.to_vec(),
                gram: gram_det,
            });
        }
        let normal = scaled(&weighted_normal, self.orientation_sign / area_element);
        Ok(Frame {
            jet,
            metric,
            gram_det,
            area_element,
            normal,
        })
    }

    /// Image of the patch under `x -> R x + b`. The rotation must be special
    /// orthogonal so that the orientation convention carries over unchanged.
    pub fn transformed(&self, rotation: &[Vec<f64>], translation: &[f64]) -> Result<Self> {
        let m = self.ambient_dim;
        if rotation.len() != m || rotation.iter().any(|row| row.len() != m) {
            return Err(Error::DimensionMismatch {
                left: rotation.len(),
                right: m,
            });
        }
        if translation.len() != m {
            return Err(Error::DimensionMismatch {
                left: translation.len(),
                right: m,
            });
        }
        let rot: Vec<Vec<f64>> = rotation.to_vec();
        let shift = translation.to_vec();
        let base_position = Arc::clone(&self.position);
        let rot_pos = rot.clone();
        let shift_pos = shift.clone();
        let position: PositionFn = Arc::new(move |u: &[f64]| {
            let x = base_position(u);
            apply_affine(&rot_pos, &shift_pos, &x)
        });
        let analytic_jet = self.analytic_jet.as_ref().map(|jet| {
            let base_jet = Arc::clone(jet);
            let n = self.dim();
            let mapped: JetFn = Arc::new(move |u: &[f64]| {
                let jet = base_jet(u);
                let value = apply_affine(&rot, &shift, jet.value());
                let first = (0..n).map(|i| apply_linear(&rot, jet.first(i))).collect();
                let mut second = Vec::with_capacity(n * (n + 1) / 2);
                for i in 0..n {
                    for j in i..n {
                        second.push(apply_linear(&rot, jet.second(i, j)));
                    }
                }
                JetEstimate::analytic(value, first, second)
            });
            mapped
        });
        Ok(ParametricPatch {
            param_box: self.param_box.clone(),
            ambient_dim: self.ambient_dim,
            position,
            analytic_jet,
            orientation_sign: self.orientation_sign,
            fd_step: self.fd_step,
        })
    }

    /// Convenience wrapper for a pure translation.
    pub fn translated(&self, shift: &[f64]) -> Result<Self> {
        let m = self.ambient_dim;
        let identity: Vec<Vec<f64>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        self.transformed(&identity, shift)
    }

    /// Midpoint of the parameter box; a convenient well-interior sample.
    pub fn center(&self) -> Vec<f64> {
        self.param_box
            .iter()
            .map(|&[lo, hi]| 0.5 * (lo + hi))
            .collect()
    }
}

fn apply_linear(rows: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    rows.iter().map(|row| dot(row, x)).collect()
}

fn apply_affine(rows: &[Vec<f64>], shift: &[f64], x: &[f64]) -> Vec<f64> {
    axpy(&apply_linear(rows, x), 1.0, shift)
}

/// First-order data of a patch at one parameter point.
#[derive(Debug, Clone)]
pub struct Frame {
    /// Position and derivatives of the chart map.
    pub jet: JetEstimate,
    /// Induced metric `g_ij = <d_i X, d_j X>`.
    pub metric: Vec<Vec<f64>>,
    /// Determinant of the induced metric.
    pub gram_det: f64,
    /// Length of the generalized cross product of the chart derivatives;
    /// equals `sqrt(gram_det)` and is the density of the area measure.
    pub area_element: f64,
    /// Unit normal, oriented so that `{d_1 X, ..., d_n X, normal}` is a
    /// positively oriented basis when the patch's orientation sign is `+1`.
    pub normal: Vec<f64>,
}

impl Frame {
    pub fn position(&self) -> &[f64] {
        self.jet.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_sphere_position() -> PositionFn {
        Arc::new(|u: &[f64]| {
            let (s, p) = (u[0], u[1]);
            vec![s.sin() * p.cos(), s.sin() * p.sin(), s.cos()]
        })
    }

    #[test]
    fn sphere_frame_has_outward_normal_and_sin_density() {
        let patch = ParametricPatch::from_position(
            vec![[0.0, std::f64::consts::PI], [0.0, 2.0 * std::f64::consts::PI]],
            3,
            unit_sphere_position(),
        )
        .unwrap();
        let u = [1.1, 2.3];
        let frame = patch.frame(&u).unwrap();
        // On the unit sphere the outward normal is the position itself.
        // Tolerances sit at the finite-difference noise floor: this patch
        // carries no analytic jet.
        for (n, x) in frame.normal.iter().zip(frame.position().iter()) {
            assert_relative_eq!(n, x, epsilon = 1e-6);
        }
        assert_relative_eq!(frame.area_element, u[0].sin(), epsilon = 1e-6);
        assert_relative_eq!(frame.gram_det, u[0].sin().powi(2), epsilon = 1e-6);
    }

    #[test]
    fn orientation_flip_negates_the_normal() {
        let patch = ParametricPatch::from_position(
            vec![[0.0, std::f64::consts::PI], [0.0, 2.0 * std::f64::consts::PI]],
            3,
            unit_sphere_position(),
        )
        .unwrap();
        let flipped = patch.clone().with_orientation_flipped();
        let u = [0.9, 1.7];
        let a = patch.frame(&u).unwrap();
        let b = flipped.frame(&u).unwrap();
        for (x, y) in a.normal.iter().zip(b.normal.iter()) {
            assert_relative_eq!(*x, -y, epsilon = 1e-12);
        }
        assert_relative_eq!(a.area_element, b.area_element, epsilon = 1e-12);
    }

    #[test]
    fn plane_curve_frame_reports_left_normal() {
        // Counterclockwise unit circle; the frame normal of the natural
        // orientation is the left normal, which points into the disk.
        let patch = ParametricPatch::from_position(
            vec![[0.0, 2.0 * std::f64::consts::PI]],
            2,
            Arc::new(|u: &[f64]| vec![u[0].cos(), u[0].sin()]),
        )
        .unwrap();
        let frame = patch.frame(&[0.4]).unwrap();
        let inward = [-(0.4f64.cos()), -(0.4f64.sin())];
        for (n, x) in frame.normal.iter().zip(inward.iter()) {
            assert_relative_eq!(n, x, epsilon = 1e-8);
        }
    }

    #[test]
    fn degenerate_chart_is_reported_with_its_gram_determinant() {
        // Collapses the second coordinate: rank-one differential everywhere.
        let patch = ParametricPatch::from_position(
            vec![[0.0, 1.0], [0.0, 1.0]],
            3,
            Arc::new(|u: &[f64]| vec![u[0], 2.0 * u[0], 0.0]),
        )
        .unwrap();
        match patch.frame(&[0.5, 0.5]) {
            Err(Error::DegenerateImmersion { gram, .. }) => assert!(gram.abs() < 1e-10),
            other => panic!("expected degenerate immersion, got {other:?}"),
        }
    }

    #[test]
    fn transformed_patch_moves_positions_and_normals_together() {
        let patch = ParametricPatch::from_position(
            vec![[0.0, std::f64::consts::PI], [0.0, 2.0 * std::f64::consts::PI]],
            3,
            unit_sphere_position(),
        )
        .unwrap();
        // Rotation by 90 degrees about z, then a shift.
        let rot = vec![
            vec![0.0, -1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        let shift = [2.0, -1.0, 0.5];
        let moved = patch.transformed(&rot, &shift).unwrap();
        let u = [1.2, 0.8];
        let base = patch.frame(&u).unwrap();
        let image = moved.frame(&u).unwrap();
        let expect_pos = apply_affine(&rot, &shift, base.position());
        let expect_normal = apply_linear(&rot, &base.normal);
        for (a, b) in image.position().iter().zip(expect_pos.iter()) {
            assert_relative_eq!(a, b, epsilon = 1e-9);
        }
        for (a, b) in image.normal.iter().zip(expect_normal.iter()) {
            assert_relative_eq!(a, b, epsilon = 1e-7);
        }
        assert_relative_eq!(image.area_element, base.area_element, epsilon = 1e-8);
    }

    #[test]
    fn ambient_dimension_must_be_parameter_dimension_plus_one() {
        let bad = ParametricPatch::from_position(
            vec![[0.0, 1.0]],
            3,
            Arc::new(|u: &[f64]| vec![u[0], 0.0, 0.0]),
        );
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
    }
}
