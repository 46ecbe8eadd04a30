//! Finite-difference jets (value, first and second partials) of vector-valued
//! maps on boxes.
//!
//! Interior points use central second-order stencils; second derivatives get
//! one Richardson extrapolation level (combining steps `h` and `h/2`). Within
//! `2h` of the box boundary the affected coordinate falls back to one-sided
//! second-order stencils and the estimate is flagged.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numkernel::quadrature::Interval;

/// A second-order jet of a map `R^n -> R^m` at one parameter point.
///
/// Second partials are stored once per unordered index pair, so
/// `second(i, j)` and `second(j, i)` return the same slice.
#[derive(Debug, Clone)]
pub struct JetEstimate {
    dim: usize,
    value: Vec<f64>,
    first: Vec<Vec<f64>>,
    second: Vec<Vec<f64>>,
    /// Step used for finite differences; zero for analytic jets.
    pub step: f64,
    /// True when any coordinate had to use one-sided stencils.
    pub one_sided: bool,
}

impl JetEstimate {
    /// Wraps analytically computed derivatives in the same record the
    /// finite-difference path produces. `second_upper` lists the pairs
    /// `(0,0), (0,1), ..., (0,n-1), (1,1), ...` in row-major upper-triangle
    /// order.
    pub fn analytic(value: Vec<f64>, first: Vec<Vec<f64>>, second_upper: Vec<Vec<f64>>) -> Self {
        let dim = first.len();
        assert_eq!(second_upper.len(), dim * (dim + 1) / 2);
        for d in &first {
            assert_eq!(d.len(), value.len());
        }
        for d in &second_upper {
            assert_eq!(d.len(), value.len());
        }
        JetEstimate {
            dim,
            value,
            first,
            second: second_upper,
            step: 0.0,
            one_sided: false,
        }
    }

    /// Parameter-space dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Ambient dimension `m` of the mapped values.
    pub fn ambient_dim(&self) -> usize {
        self.value.len()
    }

    pub fn value(&self) -> &[f64] {
        &self.value
    }

    /// First partial with respect to coordinate `i`.
    pub fn first(&self, i: usize) -> &[f64] {
        &self.first[i]
    }

    /// Second partial with respect to coordinates `i`, `j` (order irrelevant).
    pub fn second(&self, i: usize, j: usize) -> &[f64] {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        &self.second[pack_index(self.dim, a, b)]
    }
}

fn pack_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

/// Which stencil family a coordinate uses, decided by its distance to the box
/// boundary.
#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Centered,
    Forward,
    Backward,
}

/// 1D stencil as `(offset, coefficient)` pairs; offsets are multiples of the
/// step, coefficients are for the *unscaled* combination (divide by `step^p`).
fn first_stencil(mode: Mode) -> &'static [(i32, f64)] {
    match mode {
        Mode::Centered => &[(-1, -0.5), (1, 0.5)],
        Mode::Forward => &[(0, -1.5), (1, 2.0), (2, -0.5)],
        Mode::Backward => &[(0, 1.5), (-1, -2.0), (-2, 0.5)],
    }
}

fn second_stencil(mode: Mode) -> &'static [(i32, f64)] {
    match mode {
        Mode::Centered => &[(-1, 1.0), (0, -2.0), (1, 1.0)],
        Mode::Forward => &[(0, 2.0), (1, -5.0), (2, 4.0), (3, -1.0)],
        Mode::Backward => &[(0, 2.0), (-1, -5.0), (-2, 4.0), (-3, -1.0)],
    }
}

struct Workspace<'a, F: Fn(&[f64]) -> Vec<f64>> {
    f: &'a F,
    u: &'a [f64],
    half_step: f64,
    ambient: usize,
    // Memoized evaluations keyed by per-coordinate offsets in half-step units;
    // BTreeMap keeps behavior independent of hash order.
    cache: BTreeMap<Vec<i32>, Vec<f64>>,
}

impl<'a, F: Fn(&[f64]) -> Vec<f64>> Workspace<'a, F> {
    fn eval(&mut self, offsets: &[i32]) -> Result<Vec<f64>> {
        if let Some(hit) = self.cache.get(offsets) {
            return Ok(hit.clone());
        }
        let mut point = self.u.to_vec();
        for (d, &o) in offsets.iter().enumerate() {
            point[d] += o as f64 * self.half_step;
        }
        let value = (self.f)(&point);
        if value.len() != self.ambient || value.iter().any(|v| !v.is_finite()) {
            return Err(Error::EvaluationFailure { node: point });
        }
        self.cache.insert(offsets.to_vec(), value.clone());
        Ok(value)
    }

    /// Applies a 1D stencil along coordinate `d` with step `half_units * h/2`,
    /// on top of the base offsets.
    fn apply_1d(
        &mut self,
        base: &[i32],
        d: usize,
        stencil: &[(i32, f64)],
        half_units: i32,
        scale: f64,
    ) -> Result<Vec<f64>> {
        let mut acc = vec![0.0; self.ambient];
        for &(k, c) in stencil {
            let mut offsets = base.to_vec();
            offsets[d] += k * half_units;
            let v = self.eval(&offsets)?;
            for (a, x) in acc.iter_mut().zip(v.iter()) {
                *a += c * x;
            }
        }
        for a in acc.iter_mut() {
            *a *= scale;
        }
        Ok(acc)
    }

    /// Composes two first-derivative stencils for a mixed partial.
    fn apply_cross(
        &mut self,
        i: usize,
        si: &[(i32, f64)],
        j: usize,
        sj: &[(i32, f64)],
        half_units: i32,
        scale: f64,
    ) -> Result<Vec<f64>> {
        let n = self.u.len();
        let mut acc = vec![0.0; self.ambient];
        for &(ki, ci) in si {
            for &(kj, cj) in sj {
                let mut offsets = vec![0i32; n];
                offsets[i] += ki * half_units;
                offsets[j] += kj * half_units;
                let v = self.eval(&offsets)?;
                let c = ci * cj;
                for (a, x) in acc.iter_mut().zip(v.iter()) {
                    *a += c * x;
                }
            }
        }
        for a in acc.iter_mut() {
            *a *= scale;
        }
        Ok(acc)
    }
}

/// Estimates the second-order jet of `f` at `u` with step `h`.
///
/// When `bounds` is given, coordinates closer than `2h` to a box face switch
/// to one-sided stencils (and the result is flagged); a coordinate needs `3h`
/// of room on at least one side or the call fails.
pub fn fd_jet(
    f: impl Fn(&[f64]) -> Vec<f64>,
    u: &[f64],
    h: f64,
    bounds: Option<&[Interval]>,
) -> Result<JetEstimate> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::NonPositiveStep(h));
    }
    let n = u.len();
    if n == 0 || n > 3 {
        return Err(Error::UnsupportedDimension(n, "1..=3 parameters"));
    }
    let mut modes = vec![Mode::Centered; n];
    if let Some(bounds) = bounds {
        if bounds.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bounds.len(),
            });
        }
        for d in 0..n {
            let [lo, hi] = bounds[d];
            if u[d] < lo - 1e-12 || u[d] > hi + 1e-12 {
                return Err(Error::InvalidParameter(format!(
                    "point {} lies outside [{lo}, {hi}] on axis {d}",
                    u[d]
                )));
            }
            let room_lo = u[d] - lo;
            let room_hi = hi - u[d];
            let margin = 2.0 * h * (1.0 - 1e-12);
            modes[d] = if room_lo >= margin && room_hi >= margin {
                Mode::Centered
            } else if room_hi >= 3.0 * h {
                Mode::Forward
            } else if room_lo >= 3.0 * h {
                Mode::Backward
            } else {
                return Err(Error::InvalidParameter(format!(
                    "box too small on axis {d} for step {h}"
                )));
            };
        }
    }
    let one_sided = modes.iter().any(|m| *m != Mode::Centered);

    let probe = f(u);
    let ambient = probe.len();
    let mut ws = Workspace {
        f: &f,
        u,
        half_step: 0.5 * h,
        ambient,
        cache: BTreeMap::new(),
    };
    let zero = vec![0i32; n];
    let value = ws.eval(&zero)?;

    let mut first = Vec::with_capacity(n);
    for d in 0..n {
        first.push(ws.apply_1d(&zero, d, first_stencil(modes[d]), 2, 1.0 / h)?);
    }

    let mut second = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let estimate = if i == j {
                let stencil = second_stencil(modes[i]);
                let coarse = ws.apply_1d(&zero, i, stencil, 2, 1.0 / (h * h))?;
                if modes[i] == Mode::Centered {
                    let fine = ws.apply_1d(&zero, i, stencil, 1, 4.0 / (h * h))?;
                    richardson(&fine, &coarse)
                } else {
                    coarse
                }
            } else {
                let si = first_stencil(modes[i]);
                let sj = first_stencil(modes[j]);
                let coarse = ws.apply_cross(i, si, j, sj, 2, 1.0 / (h * h))?;
                if modes[i] == Mode::Centered && modes[j] == Mode::Centered {
                    let fine = ws.apply_cross(i, si, j, sj, 1, 4.0 / (h * h))?;
                    richardson(&fine, &coarse)
                } else {
                    coarse
                }
            };
            second.push(estimate);
        }
    }

    Ok(JetEstimate {
        dim: n,
        value,
        first,
        second,
        step: h,
        one_sided,
    })
}

/// One Richardson level for a second-order estimator: `(4 D(h/2) - D(h)) / 3`.
fn richardson(fine: &[f64], coarse: &[f64]) -> Vec<f64> {
    fine.iter()
        .zip(coarse.iter())
        .map(|(f, c)| (4.0 * f - c) / 3.0)
        .collect()
}
