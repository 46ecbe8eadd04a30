//! Small dense helpers for the low-dimensional vectors and matrices used by
//! the geometry code (ambient dimension at most 4, parameter dimension at
//! most 3). Nothing here allocates beyond the returned vectors.

use crate::error::{Error, Result};

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn scaled(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| s * x).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `a + s * b`.
pub fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn normalized(a: &[f64]) -> Result<Vec<f64>> {
    let n = norm(a);
    if n < 1e-300 {
        return Err(Error::InvalidParameter(
            "cannot normalize a zero vector".to_string(),
        ));
    }
    Ok(scaled(a, 1.0 / n))
}

pub fn cross3(a: &[f64], b: &[f64]) -> Vec<f64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a * d - b * c
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
}

/// Generalized cross product of `n` vectors in `R^{n+1}` (`n` in `1..=3`):
/// the unique vector `w` with `det[v_1, ..., v_n, w] = |v_1 ∧ ... ∧ v_n|^2`,
/// so `{v_1, ..., v_n, w}` is positively oriented and `|w|` equals the
/// parallelepiped volume of the `v_i`.
pub fn cross_general(vectors: &[&[f64]]) -> Result<Vec<f64>> {
    let n = vectors.len();
    let ambient = n + 1;
    for v in vectors {
        if v.len() != ambient {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: v.len(),
            });
        }
    }
    match n {
        1 => {
            let t = vectors[0];
            Ok(vec![-t[1], t[0]])
        }
        2 => Ok(cross3(vectors[0], vectors[1])),
        3 => {
            // Cofactor expansion along the w-column of det[v1 v2 v3 w].
            let mut w = vec![0.0; 4];
            for k in 0..4 {
                let mut minor = [[0.0; 3]; 3];
                let mut row = 0;
                for r in 0..4 {
                    if r == k {
                        continue;
                    }
                    for c in 0..3 {
                        minor[row][c] = vectors[c][r];
                    }
                    row += 1;
                }
                // Cofactor sign (-1)^{row + column} for row k+1, column 4.
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                w[k] = sign * det3(&minor);
            }
            Ok(w)
        }
        other => Err(Error::UnsupportedDimension(other, "1..=3 factors")),
    }
}

/// Determinant of a symmetric positive matrix given as rows (n <= 3).
pub fn det_sym(rows: &[Vec<f64>]) -> f64 {
    match rows.len() {
        1 => rows[0][0],
        2 => det2(rows[0][0], rows[0][1], rows[1][0], rows[1][1]),
        3 => {
            let mut m = [[0.0; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    m[i][j] = rows[i][j];
                }
            }
            det3(&m)
        }
        _ => f64::NAN,
    }
}

/// Cholesky factor L (lower triangular, `g = L Lᵀ`) of a symmetric
/// positive-definite matrix with n <= 3.
pub fn cholesky(rows: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = rows.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = rows[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(Error::NotPositiveDefinite { pivot: s });
                }
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    Ok(l)
}

/// Solves `L x = b` for lower-triangular `L`.
pub fn forward_solve(l: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut x = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i][k] * x[k];
        }
        x[i] = s / l[i][i];
    }
    x
}

/// Solves `Lᵀ x = b` for lower-triangular `L`.
pub fn backward_solve_transposed(l: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in (i + 1)..n {
            s -= l[k][i] * x[k];
        }
        x[i] = s / l[i][i];
    }
    x
}

/// Solves a general 2x2 system; fails on a near-singular matrix.
pub fn solve2(a: [[f64; 2]; 2], b: [f64; 2]) -> Result<[f64; 2]> {
    let det = det2(a[0][0], a[0][1], a[1][0], a[1][1]);
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, &v| m.max(v.abs()))
        .max(1e-300);
    if det.abs() < 1e-14 * scale * scale {
        return Err(Error::DegenerateInput(format!(
            "2x2 system is singular (det = {det:.3e})"
        )));
    }
    Ok([
        (b[0] * a[1][1] - b[1] * a[0][1]) / det,
        (a[0][0] * b[1] - a[1][0] * b[0]) / det,
    ])
}
