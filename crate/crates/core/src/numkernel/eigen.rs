//! Symmetric eigenvalues for the tiny matrices that show up in curvature
//! computations (n <= 3): closed forms for n <= 2, deterministic cyclic Jacobi
//! sweeps for n = 3.

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-10;

/// Eigenvalues of a symmetric `n x n` matrix (`n` in `1..=3`), ascending.
///
/// The input is given as rows; it must be symmetric within `1e-10` (scaled by
/// the largest entry) and is symmetrized before solving.
pub fn sym_eigen(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = rows.len();
    if n == 0 || n > 3 {
        return Err(Error::UnsupportedDimension(n, "1..=3"));
    }
    let mut a = [[0.0f64; 3]; 3];
    let mut max_abs: f64 = 0.0;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: row.len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(
                    "non-finite matrix entry".to_string(),
                ));
            }
            a[i][j] = v;
            max_abs = max_abs.max(v.abs());
        }
    }
    let tolerance = SYMMETRY_TOL * max_abs.max(1.0);
    let mut deviation: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            deviation = deviation.max((a[i][j] - a[j][i]).abs());
        }
    }
    if deviation > tolerance {
        return Err(Error::AsymmetricInput {
            deviation,
            tolerance,
        });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let s = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = s;
            a[j][i] = s;
        }
    }

    let mut eig = match n {
        1 => vec![a[0][0]],
        2 => {
            let mean = 0.5 * (a[0][0] + a[1][1]);
            let radius = (0.5 * (a[0][0] - a[1][1])).hypot(a[0][1]);
            vec![mean - radius, mean + radius]
        }
        _ => jacobi3(&mut a),
    };
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eig)
}

/// Cyclic Jacobi on a symmetric 3x3: fixed sweep order (0,1), (0,2), (1,2)
/// until the off-diagonal mass is negligible. Deterministic by construction.
fn jacobi3(a: &mut [[f64; 3]; 3]) -> Vec<f64> {
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, &v| m.max(v.abs()))
        .max(1e-300);
    for _sweep in 0..50 {
        let off = (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]).sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for &(p, q) in &[(0usize, 1usize), (0, 2), (1, 2)] {
            let apq = a[p][q];
            if apq.abs() <= 1e-300 {
                continue;
            }
            // Standard stable rotation angle selection.
            let theta = 0.5 * (a[q][q] - a[p][p]) / apq;
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let app = a[p][p];
            let aqq = a[q][q];
            a[p][p] = app - t * apq;
            a[q][q] = aqq + t * apq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            let r = 3 - p - q; // remaining index
            let arp = a[r][p];
            let arq = a[r][q];
            a[r][p] = c * arp - s * arq;
            a[p][r] = a[r][p];
            a[r][q] = s * arp + c * arq;
            a[q][r] = a[r][q];
        }
    }
    vec![a[0][0], a[1][1], a[2][2]]
}
