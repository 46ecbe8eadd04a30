//! Tensor-product Gauss–Legendre quadrature over axis-aligned boxes.
//!
//! Nodes and weights are generated by Newton iteration on the Legendre
//! polynomials and mirrored about zero, so the rule is exactly symmetric.
//! Box integration enumerates nodes in a fixed lexicographic order and reduces
//! the weighted samples with a fixed pairwise tree; no accumulation order
//! depends on the platform or on threading.

use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` of one box axis.
pub type Interval = [f64; 2];

/// One-dimensional Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds the rule with `order` nodes. A rule of order `m` integrates
    /// polynomials of degree `<= 2m - 1` exactly.
    pub fn gauss_legendre(order: usize) -> Result<Self> {
        if order < 1 {
            return Err(Error::QuadratureOrder(order));
        }
        let m = order;
        let mut nodes = vec![0.0; m];
        let mut weights = vec![0.0; m];
        // Solve for the positive-half roots and mirror them; Legendre roots are
        // symmetric about zero and the mirroring keeps them exactly so.
        let half = m / 2;
        for i in 0..half {
            // Standard asymptotic initial guess for the i-th largest root.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(m, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            // One clean-up iteration, then the weight from the final root.
            let (p, d) = legendre_with_derivative(m, x);
            x -= p / d;
            let dp = legendre_with_derivative(m, x).1;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[m - 1 - i] = x;
            nodes[i] = -x;
            weights[m - 1 - i] = w;
            weights[i] = w;
        }
        if m % 2 == 1 {
            let (_, d) = legendre_with_derivative(m, 0.0);
            nodes[half] = 0.0;
            weights[half] = 2.0 / (d * d);
        }
        Ok(QuadratureRule {
            order,
            nodes,
            weights,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Nodes in ascending order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Evaluates `P_m(x)` and `P_m'(x)` by the three-term recurrence.
fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let d = if (x * x - 1.0).abs() < 1e-300 {
        // Endpoint derivative; not hit by interior roots but kept total.
        0.5 * (m * (m + 1)) as f64 * if x > 0.0 { 1.0 } else { -1.0 }
    } else {
        (m as f64) * (x * p - p_prev) / (x * x - 1.0)
    };
    (p, d)
}

/// Sums `values` with a fixed pairwise tree. The result does not depend on any
/// external accumulation order, so repeated runs are bitwise identical.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        3 => (values[0] + values[1]) + values[2],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

fn validate_box(bounds: &[Interval]) -> Result<()> {
    if bounds.is_empty() || bounds.len() > 3 {
        return Err(Error::UnsupportedDimension(bounds.len(), "1..=3 axes"));
    }
    for (axis, &[lo, hi]) in bounds.iter().enumerate() {
        if !lo.is_finite() || !hi.is_finite() || hi <= lo {
            return Err(Error::DegenerateBox { axis, lo, hi });
        }
    }
    Ok(())
}

/// Shared driver: walks the tensor grid in lexicographic order (last axis
/// fastest) and hands each node plus its combined weight to `visit`.
fn for_each_node(
    bounds: &[Interval],
    order: usize,
    mut visit: impl FnMut(&[f64], f64) -> Result<()>,
) -> Result<()> {
    if order < 2 {
        return Err(Error::QuadratureOrder(order));
    }
    validate_box(bounds)?;
    let rule = QuadratureRule::gauss_legendre(order)?;
    let dim = bounds.len();
    let mut index = vec![0usize; dim];
    let mut node = vec![0.0f64; dim];
    loop {
        let mut weight = 1.0;
        for d in 0..dim {
            let [lo, hi] = bounds[d];
            let half = 0.5 * (hi - lo);
            node[d] = lo + half * (rule.nodes[index[d]] + 1.0);
            weight *= half * rule.weights[index[d]];
        }
        visit(&node, weight)?;
        // Odometer increment, last axis fastest.
        let mut d = dim;
        loop {
            if d == 0 {
                return Ok(());
            }
            d -= 1;
            index[d] += 1;
            if index[d] < order {
                break;
            }
            index[d] = 0;
        }
    }
}

/// Integrates a scalar integrand that may itself fail; integrand errors are
/// propagated, non-finite values are reported with the offending node.
pub fn try_integrate_box(
    f: impl Fn(&[f64]) -> Result<f64>,
    bounds: &[Interval],
    order: usize,
) -> Result<f64> {
    let mut samples = Vec::with_capacity(order.pow(bounds.len() as u32));
    for_each_node(bounds, order, |node, weight| {
        let value = f(node)?;
        if !value.is_finite() {
            return Err(Error::EvaluationFailure {
                node: node.to_vec(),
            });
        }
        samples.push(weight * value);
        Ok(())
    })?;
    Ok(pairwise_sum(&samples))
}

/// Integrates a scalar function over an axis-aligned box with the
/// tensor-product Gauss–Legendre rule of the given per-axis order.
pub fn integrate_box(f: impl Fn(&[f64]) -> f64, bounds: &[Interval], order: usize) -> Result<f64> {
    try_integrate_box(|u| Ok(f(u)), bounds, order)
}

/// Vector-valued version of [`try_integrate_box`]; each component is reduced
/// with its own pairwise tree.
pub fn try_integrate_box_vec(
    f: impl Fn(&[f64]) -> Result<Vec<f64>>,
    bounds: &[Interval],
    order: usize,
) -> Result<Vec<f64>> {
    let mut components: Vec<Vec<f64>> = Vec::new();
    for_each_node(bounds, order, |node, weight| {
        let value = f(node)?;
        if components.is_empty() {
            components = vec![Vec::new(); value.len()];
        }
        if value.len() != components.len() {
            return Err(Error::DimensionMismatch {
                left: components.len(),
                right: value.len(),
            });
        }
        for (k, v) in value.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::EvaluationFailure {
                    node: node.to_vec(),
                });
            }
            components[k].push(weight * v);
        }
        Ok(())
    })?;
    Ok(components.iter().map(|c| pairwise_sum(c)).collect())
}

/// Vector-valued version of [`integrate_box`].
pub fn integrate_box_vec(
    f: impl Fn(&[f64]) -> Vec<f64>,
    bounds: &[Interval],
    order: usize,
) -> Result<Vec<f64>> {
    try_integrate_box_vec(|u| Ok(f(u)), bounds, order)
}

/// Integrates at the requested order and reports a conservative error estimate
/// obtained by comparing against the half-order result.
pub fn integrate_box_with_estimate(
    f: impl Fn(&[f64]) -> f64,
    bounds: &[Interval],
    order: usize,
) -> Result<(f64, f64)> {
    let value = integrate_box(&f, bounds, order)?;
    let coarse_order = (order / 2).max(2);
    let coarse = integrate_box(&f, bounds, coarse_order)?;
    // Spectral convergence makes |I_m - I_{m/2}| a safe bound for the fine
    // result's error; the floor covers rounding saturation.
    let estimate = (value - coarse).abs() + 1e-14 * (1.0 + value.abs());
    Ok((value, estimate))
}
