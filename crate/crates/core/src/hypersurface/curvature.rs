//! Second fundamental form, shape operator, and principal curvatures.

use crate::error::Result;
use crate::numkernel::linalg::{backward_solve_transposed, cholesky, dot, forward_solve};
use crate::numkernel::sym_eigen;

use super::patch::{Frame, ParametricPatch};

/// Pointwise curvature data of a patch.
///
/// The second fundamental form is `h_ij = <normal, d_ij X>`, so its sign
/// follows the patch orientation: an outward-oriented sphere of radius `R`
/// has every principal curvature equal to `-1/R`.
#[derive(Debug, Clone)]
pub struct CurvatureData {
    /// First-order frame at the same point.
    pub frame: Frame,
    /// Second fundamental form in chart coordinates.
    pub second_form: Vec<Vec<f64>>,
    /// Principal curvatures in ascending order.
    pub principal: Vec<f64>,
    /// Mean curvature `H = (k_1 + ... + k_n) / n`.
    pub mean: f64,
    /// Gauss–Kronecker curvature `k_1 ... k_n`.
    pub gauss: f64,
}

impl CurvatureData {
    /// Elementary symmetric polynomial `e_l` of the principal curvatures;
    /// `e_0 = 1`.
    pub fn elementary_symmetric(&self, l: usize) -> f64 {
        elementary_symmetric(&self.principal, l)
    }

    /// Sum over pairs of squared curvature differences,
    /// `sum_{i<j} (k_i - k_j)^2`; zero exactly at umbilic points.
    pub fn pairwise_difference_squared(&self) -> f64 {
        let k = &self.principal;
        let mut total = 0.0;
        for i in 0..k.len() {
            for j in (i + 1)..k.len() {
                total += (k[i] - k[j]) * (k[i] - k[j]);
            }
        }
        total
    }

    /// Largest pairwise gap `max_{i<j} |k_i - k_j|` between principal
    /// curvatures; the pointwise umbilicity defect.
    pub fn max_pairwise_difference(&self) -> f64 {
        // Principal curvatures are sorted, so the extremes realize the max.
        match self.principal.as_slice() {
            [] | [_] => 0.0,
            ks => ks[ks.len() - 1] - ks[0],
        }
    }
}

/// Elementary symmetric polynomial `e_l` of a slice of values.
pub(crate) fn elementary_symmetric(values: &[f64], l: usize) -> f64 {
    if l == 0 {
        return 1.0;
    }
    if l > values.len() {
        return 0.0;
    }
    // Incremental expansion of prod(1 + k_i x): coeffs[l] ends as e_l.
    let mut coeffs = vec![0.0; l + 1];
    coeffs[0] = 1.0;
    for &k in values {
        for j in (1..=l).rev() {
            coeffs[j] += k * coeffs[j - 1];
        }
    }
    coeffs[l]
}

/// Evaluates the curvature data of `patch` at the parameter point `u`.
///
/// The shape operator `g^{-1} h` is diagonalized through the congruent
/// symmetric matrix `L^{-1} h L^{-T}` (with `g = L L^T`), which has the same
/// eigenvalues and keeps the solve symmetric-definite.
pub fn curvature_at(patch: &ParametricPatch, u: &[f64]) -> Result<CurvatureData> {
    let frame = patch.frame(u)?;
    let n = patch.dim();
    let mut second_form = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let h = dot(&frame.normal, frame.jet.second(i, j));
            second_form[i][j] = h;
            second_form[j][i] = h;
        }
    }
    let l = cholesky(&frame.metric)?;
    // Columns of M = L^{-1} h, then rows of A = M L^{-T} via A^T = L^{-1} M^T.
    let mut m_cols = Vec::with_capacity(n);
    for c in 0..n {
        let col: Vec<f64> = (0..n).map(|r| second_form[r][c]).collect();
        m_cols.push(forward_solve(&l, &col));
    }
    let mut shape_sym = vec![vec![0.0; n]; n];
    for r in 0..n {
        let row: Vec<f64> = (0..n).map(|c| m_cols[c][r]).collect();
        shape_sym[r].copy_from_slice(&forward_solve(&l, &row));
    }
    // Symmetrize away the last rounding asymmetry before the eigensolve.
    for r in 0..n {
        for c in (r + 1)..n {
            let avg = 0.5 * (shape_sym[r][c] + shape_sym[c][r]);
            shape_sym[r][c] = avg;
            shape_sym[c][r] = avg;
        }
    }
    let principal = sym_eigen(&shape_sym)?;
    let mean = principal.iter().sum::<f64>() / n as f64;
    let gauss = principal.iter().product();
    Ok(CurvatureData {
        frame,
        second_form,
        principal,
        mean,
        gauss,
    })
}

/// Normal derivative directions `d_i normal = -sum_j S_ji d_j X`, returned as
/// one ambient vector per chart direction. Used by parallel patches.
pub(crate) fn normal_derivatives(data: &CurvatureData) -> Result<Vec<Vec<f64>>> {
    let n = data.frame.metric.len();
    let l = cholesky(&data.frame.metric)?;
    let ambient = data.frame.normal.len();
    // Shape operator columns: S[:, i] solves g S[:, i] = h[:, i].
    let mut shape_cols = Vec::with_capacity(n);
    for i in 0..n {
        let col: Vec<f64> = (0..n).map(|r| data.second_form[r][i]).collect();
        let y = forward_solve(&l, &col);
        shape_cols.push(backward_solve_transposed(&l, &y));
    }
    let mut result = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![0.0; ambient];
        for j in 0..n {
            for (a, x) in v.iter_mut().zip(data.frame.jet.first(j).iter()) {
                *a -= shape_cols[i][j] * x;
            }
        }
        result.push(v);
    }
    Ok(result)
}
