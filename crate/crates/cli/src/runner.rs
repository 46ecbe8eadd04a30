//! Command dispatch: build the subject described by the config, run the
//! requested analysis through the core crate, and assemble the report.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use capillary_core::capillary::{
    balancing_residual, bridge_in_wedge, cap_in_halfspace, criticality_residual,
    energy_coefficients, second_factor, spheroid_cap_in_halfspace, stability_indicator,
    CapillarySurface, StabilityVerdict, Tolerances, VariationFamily,
};
use capillary_core::convexbody::{
    ball_approximant, inequality_suite, parallel_quotient_scan, quermass, random_polygon,
    random_polyhedron, seeded_rng, steiner, steiner_check, unit_cube_points, unit_square_points,
    ConvexBody, ConvexPolytope, InequalityReport,
};
use capillary_core::hypersurface::{
    gauss_map_integral, oriented_volume, parallel_area_check, shapes, tube_polynomial,
    volume_polynomial, ParametricPatch,
};

use crate::config::{BodySpec, Command, ExperimentConfig, SurfaceSpec, ThetaSpec, DEFAULT_FD_STEP};
use crate::report::{measured, Report, Table};

/// Stability indicator must be this close to zero to count as vanishing.
const TOL_INDICATOR: f64 = 1e-6;
/// Umbilicity deficit below which a surface counts as spherical.
const TOL_UMBILIC: f64 = 1e-6;
/// Balancing residual ceiling for a well-formed builder output.
const TOL_BALANCING: f64 = 1e-8;
/// Relative ceiling for the volume-criticality defect.
const TOL_CRITICALITY: f64 = 1e-6;
/// First derivative of the scaled energy must vanish to this tolerance.
const TOL_FIRST_DERIVATIVE: f64 = 1e-6;
/// Allowed gap between the stencil and closed-form second derivatives.
const TOL_SECOND_DERIVATIVE: f64 = 1e-4;
/// Closed-surface Gauss-map integral ceiling per component.
const TOL_GAUSS_MAP: f64 = 1e-8;
/// Inequality slacks may dip below zero by at most this much.
const TOL_SLACK: f64 = 1e-9;
/// Parallel-quotient sequences may rise by at most this much per step.
const TOL_MONOTONE: f64 = 1e-9;
/// Scale factor for the sampled parallel-area tolerance.
const TOL_TUBE_RELATIVE: f64 = 1e-6;

/// Process exit status the report maps to: 0 success, 2 hypothesis failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Success,
    HypothesesNotMet,
}

impl RunStatus {
    pub fn code(self) -> u8 {
        match self {
            RunStatus::Success => 0,
            RunStatus::HypothesesNotMet => 2,
        }
    }
}

/// Runs one experiment and assembles the report. `order` has been resolved
/// by the caller (flag > config > environment > default); `seed_override`
/// comes from the `--seed` flag.
pub fn run(
    config: &ExperimentConfig,
    order: usize,
    seed_override: Option<u64>,
) -> Result<(Report, RunStatus)> {
    let started = Instant::now();
    let seed = seed_override.or(config.seed).unwrap_or(0);
    let fd_step = config.fd_step.unwrap_or(DEFAULT_FD_STEP);

    let (results, table, verdict, tolerances, status) = match config.command {
        Command::CapStability => run_cap_stability(config, order)?,
        Command::VariationCheck => run_variation_check(config, order, fd_step)?,
        Command::TubePoly => run_tube_poly(config, order)?,
        Command::ConvexCheck => run_convex_check(config, order, seed)?,
        Command::Steiner => run_steiner(config, seed)?,
        Command::QuotientScan => run_quotient_scan(config, order, seed)?,
        Command::Sweep => run_sweep(config, order)?,
    };

    let report = Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command: config.command.name().to_string(),
        quadrature_order: order,
        config: config.clone(),
        tolerances,
        results,
        table,
        verdict,
        wall_clock_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    Ok((report, status))
}

type CommandOutput = (
    Value,
    Option<Table>,
    String,
    BTreeMap<String, f64>,
    RunStatus,
);

fn require_surface(config: &ExperimentConfig) -> Result<&SurfaceSpec> {
    config
        .surface
        .as_ref()
        .ok_or_else(|| anyhow!("missing \"surface\" entry"))
}

fn require_body(config: &ExperimentConfig) -> Result<&BodySpec> {
    config.body.as_ref().ok_or_else(|| anyhow!("missing \"body\" entry"))
}

fn fixed_theta(theta: &ThetaSpec) -> Result<f64> {
    match theta {
        ThetaSpec::Fixed(t) => Ok(*t),
        ThetaSpec::Range(_) => {
            bail!("a theta range is only valid for the sweep command")
        }
    }
}

/// Builds the CMC surfaces; the spheroid cap is handled separately since it
/// is not CMC away from the round case.
fn build_cmc_surface(spec: &SurfaceSpec) -> Result<CapillarySurface> {
    match spec {
        SurfaceSpec::CapHalfspace(cap) => {
            Ok(cap_in_halfspace(cap.radius, fixed_theta(&cap.theta)?)?)
        }
        SurfaceSpec::BridgeWedge(bridge) => {
            let t1 = fixed_theta(&bridge.theta)?;
            Ok(bridge_in_wedge(
                bridge.radius,
                bridge.alpha,
                t1,
                bridge.theta2.unwrap_or(t1),
            )?)
        }
        SurfaceSpec::SpheroidCap(_) => {
            bail!("the spheroid cap is not CMC; only cap-stability and tube-poly accept it")
        }
        SurfaceSpec::Sphere(_) | SurfaceSpec::Torus(_) => {
            bail!("closed reference surfaces are only valid for the tube-poly command")
        }
    }
}

fn verdict_name(verdict: StabilityVerdict) -> &'static str {
    match verdict {
        StabilityVerdict::SphereStable => "sphere_stable",
        StabilityVerdict::UnstableNonUmbilic => "unstable_non_umbilic",
        StabilityVerdict::HypothesesNotMet => "hypotheses_not_met",
        StabilityVerdict::Degenerate => "degenerate",
    }
}

fn run_cap_stability(config: &ExperimentConfig, order: usize) -> Result<CommandOutput> {
    let spec = require_surface(config)?;
    let tol = Tolerances::default();
    let tolerances = BTreeMap::from([
        ("indicator".to_string(), TOL_INDICATOR),
        ("umbilic_deficit".to_string(), TOL_UMBILIC),
        ("balancing_residual".to_string(), TOL_BALANCING),
        ("criticality_residual".to_string(), TOL_CRITICALITY),
    ]);

    // The spheroid cap is reported through the bracket alone: the stability
    // classification refuses non-CMC records, but the sign of the bracket is
    // exactly the quantity of interest there.
    if let SurfaceSpec::SpheroidCap(sc) = spec {
        let surface = spheroid_cap_in_halfspace(sc.a, sc.c, sc.cut)?;
        let bracket = second_factor(&surface, order)?;
        let tolerances = BTreeMap::from([("second_factor".to_string(), TOL_INDICATOR)]);
        let results = json!({
            "cmc_deviation": surface.cmc_deviation,
            "second_factor": bracket.value,
            "curvature_difference_integral": bracket.curvature_difference_integral,
            "boundary_terms": bracket.boundary_terms,
        });
        let verdict = if surface.is_cmc { "sphere_stable" } else { "not_cmc" };
        return Ok((
            results,
            None,
            verdict.to_string(),
            tolerances,
            RunStatus::Success,
        ));
    }

    let surface = build_cmc_surface(spec)?;
    let report = stability_indicator(&surface, order, &tol)?;
    let energy = &report.energy;

    let mut balancing = Vec::new();
    for wall in 0..surface.domain.wall_count() {
        balancing.push(measured(balancing_residual(&surface, wall)?, TOL_BALANCING));
    }
    let criticality = criticality_residual(&surface, energy);

    let results = json!({
        "indicator": measured(report.indicator, TOL_INDICATOR),
        "first_factor": report.first_factor,
        "second_factor": report.second_factor,
        "second_derivative": report.second_derivative,
        "umbilic_deficit": measured(report.umbilic_deficit, TOL_UMBILIC),
        "energy": { "e0": energy.e0, "e1": energy.e1, "e2": energy.e2 },
        "mean_curvature": surface.mean_curvature,
        "enclosed_volume": surface.enclosed_volume,
        "balancing_residuals": balancing,
        "criticality_residual": measured(criticality, TOL_CRITICALITY),
        "hypotheses": {
            "angle_at_least_right": report.hypotheses.angle_at_least_right,
            "boundary_embedded": report.hypotheses.boundary_embedded,
            "wetted_convex": report.hypotheses.wetted_convex,
        },
    });
    let status = if report.verdict == StabilityVerdict::HypothesesNotMet {
        RunStatus::HypothesesNotMet
    } else {
        RunStatus::Success
    };
    Ok((
        results,
        None,
        verdict_name(report.verdict).to_string(),
        tolerances,
        status,
    ))
}

fn run_variation_check(
    config: &ExperimentConfig,
    order: usize,
    fd_step: f64,
) -> Result<CommandOutput> {
    let surface = build_cmc_surface(require_surface(config)?)?;
    let family = VariationFamily::new(&surface, order)?;

    // One Richardson level on top of the five-point stencils.
    let (d1_coarse, d2_coarse) = family.scaled_derivatives(fd_step)?;
    let (d1_fine, d2_fine) = family.scaled_derivatives(fd_step / 2.0)?;
    let first = (4.0 * d1_fine - d1_coarse) / 3.0;
    let second = (4.0 * d2_fine - d2_coarse) / 3.0;
    let closed = family.second_derivative_closed_form();
    let gap = (second - closed).abs();

    let consistent = first.abs() <= TOL_FIRST_DERIVATIVE && gap <= TOL_SECOND_DERIVATIVE;
    let results = json!({
        "energy_polynomial": family.energy_polynomial(),
        "volume_polynomial": family.volume_polynomial(),
        "first_derivative": measured(first, TOL_FIRST_DERIVATIVE),
        "second_derivative_stencil": second,
        "second_derivative_closed_form": closed,
        "second_derivative_gap": measured(gap, TOL_SECOND_DERIVATIVE),
        "fd_step": fd_step,
    });
    let tolerances = BTreeMap::from([
        ("first_derivative".to_string(), TOL_FIRST_DERIVATIVE),
        ("second_derivative_gap".to_string(), TOL_SECOND_DERIVATIVE),
    ]);
    let verdict = if consistent {
        "derivatives_consistent"
    } else {
        "derivative_mismatch"
    };
    Ok((
        results,
        None,
        verdict.to_string(),
        tolerances,
        RunStatus::Success,
    ))
}

/// Patch plus base volume and whether the surface closes up.
fn tube_subject(spec: &SurfaceSpec, order: usize) -> Result<(ParametricPatch, f64, bool)> {
    match spec {
        SurfaceSpec::Sphere(sphere) => {
            let patch = shapes::sphere(&[0.0, 0.0, 0.0], sphere.radius)?;
            let volume = oriented_volume(std::slice::from_ref(&patch), order)?;
            Ok((patch, volume, true))
        }
        SurfaceSpec::Torus(torus) => {
            let patch = shapes::torus(torus.major, torus.r)?;
            let volume = oriented_volume(std::slice::from_ref(&patch), order)?;
            Ok((patch, volume, true))
        }
        SurfaceSpec::SpheroidCap(sc) => {
            let surface = spheroid_cap_in_halfspace(sc.a, sc.c, sc.cut)?;
            let volume = surface.enclosed_volume;
            Ok((surface.patch, volume, false))
        }
        _ => {
            let surface = build_cmc_surface(spec)?;
            let volume = surface.enclosed_volume;
            Ok((surface.patch, volume, false))
        }
    }
}

fn run_tube_poly(config: &ExperimentConfig, order: usize) -> Result<CommandOutput> {
    let (patch, base_volume, closed) = tube_subject(require_surface(config)?, order)?;
    let tube = tube_polynomial(&patch, order)?;
    let volume = volume_polynomial(&tube, base_volume);

    let offsets = config
        .offsets
        .clone()
        .unwrap_or_else(|| vec![-0.2, -0.1, 0.1, 0.2]);
    let mut checks = Vec::new();
    let mut consistent = true;
    let mut rows = Vec::new();
    for &t in &offsets {
        let (sampled, predicted) = parallel_area_check(&patch, &tube, t, order)?;
        let tolerance = TOL_TUBE_RELATIVE * (1.0 + predicted.abs());
        let residual = (sampled - predicted).abs();
        consistent &= residual <= tolerance;
        checks.push(json!({
            "t": t,
            "sampled": sampled,
            "predicted": predicted,
            "residual": measured(residual, tolerance),
        }));
        rows.push(vec![t, sampled, predicted, residual]);
    }

    let mut results = json!({
        "tube_coefficients": tube.coefficients,
        "volume_coefficients": volume.coefficients,
        "base_volume": base_volume,
        "parallel_checks": checks,
    });
    let mut tolerances = BTreeMap::from([(
        "parallel_residual_scale".to_string(),
        TOL_TUBE_RELATIVE,
    )]);
    if closed {
        let flux = gauss_map_integral(&patch, order)?;
        let max_abs = flux.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        consistent &= max_abs <= TOL_GAUSS_MAP;
        results["gauss_map_integral"] = json!({
            "components": flux,
            "max_abs": measured(max_abs, TOL_GAUSS_MAP),
        });
        tolerances.insert("gauss_map_component".to_string(), TOL_GAUSS_MAP);
    }

    let table = Table {
        columns: ["t", "sampled_area", "predicted_area", "residual"]
            .map(String::from)
            .to_vec(),
        rows,
    };
    let verdict = if consistent {
        "tube_consistent"
    } else {
        "tube_residual_exceeded"
    };
    Ok((
        results,
        Some(table),
        verdict.to_string(),
        tolerances,
        RunStatus::Success,
    ))
}

/// Materializes a body spec; explicit vertex lists are checked for convexity
/// rather than hulled silently.
fn build_body(spec: &BodySpec, seed: u64) -> Result<ConvexBody> {
    let polytope = match spec {
        BodySpec::Cube(b) => scaled_box(&unit_cube_points(), b.side, 3)?,
        BodySpec::Square(b) => scaled_box(&unit_square_points(), b.side, 2)?,
        BodySpec::Points(points) => {
            ConvexPolytope::from_extreme_points(&points.vertices, points.dim)?
        }
        BodySpec::Ellipse(e) => return Ok(ConvexBody::ellipse(e.a, e.b)?),
        BodySpec::Spheroid(s) => return Ok(ConvexBody::spheroid(s.a, s.c)?),
        BodySpec::Ball(ball) => ball_approximant(ball.dim)?.polytope,
        BodySpec::RandomPolygon(r) => {
            random_polygon(&mut seeded_rng(seed), r.points, r.half_extent)?
        }
        BodySpec::RandomPolyhedron(r) => {
            random_polyhedron(&mut seeded_rng(seed), r.points, r.half_extent)?
        }
    };
    Ok(ConvexBody::polytope(polytope))
}

fn scaled_box(points: &[Vec<f64>], side: f64, dim: usize) -> Result<ConvexPolytope> {
    if !(side > 0.0) {
        bail!("side length must be positive, got {side}");
    }
    let scaled: Vec<Vec<f64>> = points
        .iter()
        .map(|p| p.iter().map(|x| x * side).collect())
        .collect();
    Ok(ConvexPolytope::hull(&scaled, dim)?)
}

fn slack_entries(report: &InequalityReport) -> Value {
    let mut slacks = serde_json::Map::new();
    slacks.insert(
        "minkowski_first".to_string(),
        measured(report.minkowski_first, TOL_SLACK),
    );
    if let Some(second) = report.minkowski_second {
        slacks.insert("minkowski_second".to_string(), measured(second, TOL_SLACK));
    }
    slacks.insert(
        "mean_curvature_isoperimetric".to_string(),
        measured(report.mean_curvature_isoperimetric, TOL_SLACK),
    );
    if let Some(chain) = report.curvature_product_chain {
        slacks.insert(
            "curvature_product_chain".to_string(),
            Value::Array(chain.iter().map(|&s| measured(s, TOL_SLACK)).collect()),
        );
    }
    Value::Object(slacks)
}

fn run_convex_check(config: &ExperimentConfig, order: usize, seed: u64) -> Result<CommandOutput> {
    let body = build_body(require_body(config)?, seed)?;
    let report = inequality_suite(&body, order)?;

    let results = json!({
        "quermass": report.quermass.values(),
        "volume": report.quermass.volume(),
        "boundary_measure": report.quermass.boundary_measure(),
        "mean_curvature_integral": report.quermass.mean_curvature_integral(),
        "curvature_product_integral": report.quermass.curvature_product_integral(),
        "slacks": slack_entries(&report),
        "min_slack": measured(report.min_slack(), TOL_SLACK),
    });
    let tolerances = BTreeMap::from([("slack_floor".to_string(), TOL_SLACK)]);
    let verdict = if report.min_slack() >= -TOL_SLACK {
        "all_slacks_nonnegative"
    } else {
        "inequality_violated"
    };
    Ok((
        results,
        None,
        verdict.to_string(),
        tolerances,
        RunStatus::Success,
    ))
}

fn require_polytope(body: ConvexBody) -> Result<ConvexPolytope> {
    match body {
        ConvexBody::Polytope(p) => Ok(p),
        ConvexBody::Ellipse { .. } => bail!("this command needs a polytopal body, got an ellipse"),
        ConvexBody::Spheroid { .. } => {
            bail!("this command needs a polytopal body, got a spheroid")
        }
    }
}

fn run_steiner(config: &ExperimentConfig, seed: u64) -> Result<CommandOutput> {
    let polytope = require_polytope(build_body(require_body(config)?, seed)?)?;
    let polynomial = steiner(&polytope);
    let offsets = config.offsets.clone().unwrap_or_else(|| vec![0.1, 0.5, 1.0]);

    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut within = true;
    for &t in &offsets {
        let check = steiner_check(&polytope, t)?;
        within &= check.residual <= check.approximation_bound;
        checks.push(json!({
            "t": check.t,
            "polynomial_value": check.polynomial_value,
            "sampled_value": check.sampled_value,
            "residual": measured(check.residual, check.approximation_bound),
        }));
        rows.push(vec![
            check.t,
            check.polynomial_value,
            check.sampled_value,
            check.residual,
            check.approximation_bound,
        ]);
    }

    let results = json!({
        "quermass": quermass(&polytope).values(),
        "steiner_coefficients": polynomial.coefficients(),
        "checks": checks,
    });
    let table = Table {
        columns: [
            "t",
            "polynomial_value",
            "sampled_value",
            "residual",
            "approximation_bound",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    };
    // The bound is computed per offset, so the tolerance map records the
    // uniform rounding allowance baked into it.
    let tolerances = BTreeMap::from([("bound_rounding_allowance".to_string(), 1e-9)]);
    let verdict = if within {
        "residuals_within_bounds"
    } else {
        "approximation_bound_exceeded"
    };
    Ok((
        results,
        Some(table),
        verdict.to_string(),
        tolerances,
        RunStatus::Success,
    ))
}

fn run_quotient_scan(config: &ExperimentConfig, order: usize, seed: u64) -> Result<CommandOutput> {
    let body = build_body(require_body(config)?, seed)?;
    let grid = config
        .offsets
        .clone()
        .unwrap_or_else(|| vec![0.0, 0.5, 1.0, 2.0]);
    let quotients = parallel_quotient_scan(&body, &grid, order)?;

    let max_increase = quotients
        .windows(2)
        .map(|pair| pair[1] - pair[0])
        .fold(f64::NEG_INFINITY, f64::max)
        .max(0.0);
    let rows = grid
        .iter()
        .zip(&quotients)
        .map(|(&t, &q)| vec![t, q])
        .collect();

    let results = json!({
        "grid": grid,
        "quotients": quotients,
        "max_increase": measured(max_increase, TOL_MONOTONE),
    });
    let table = Table {
        columns: ["t", "quotient"].map(String::from).to_vec(),
        rows,
    };
    let tolerances = BTreeMap::from([("monotonicity".to_string(), TOL_MONOTONE)]);
    let verdict = if max_increase <= TOL_MONOTONE {
        "nonincreasing"
    } else {
        "monotonicity_violated"
    };
    Ok((
        results,
        Some(table),
        verdict.to_string(),
        tolerances,
        RunStatus::Success,
    ))
}

fn run_sweep(config: &ExperimentConfig, order: usize) -> Result<CommandOutput> {
    let spec = require_surface(config)?;
    let (range, steps) = match spec {
        SurfaceSpec::CapHalfspace(cap) => match cap.theta {
            ThetaSpec::Range(range) => (range, cap.steps),
            ThetaSpec::Fixed(_) => bail!(
                "the sweep command needs a theta range, for instance \"theta\": [2.1, 3.0] with \"steps\""
            ),
        },
        SurfaceSpec::BridgeWedge(bridge) => match bridge.theta {
            ThetaSpec::Range(range) => {
                if bridge.theta2.is_some() {
                    bail!("theta2 cannot be combined with a theta range; the sweep uses the same angle on both walls");
                }
                (range, bridge.steps)
            }
            ThetaSpec::Fixed(_) => bail!(
                "the sweep command needs a theta range, for instance \"theta\": [2.1, 3.0] with \"steps\""
            ),
        },
        _ => bail!("the sweep command sweeps the capillary builders only"),
    };
    let steps = steps.ok_or_else(|| anyhow!("the sweep command needs a \"steps\" count"))?;
    if steps < 1 {
        bail!("steps must be at least 1, got {steps}");
    }
    let [lo, hi] = range;

    let tol = Tolerances::default();
    let mut rows = Vec::new();
    let mut verdicts = Vec::new();
    let mut skipped = Vec::new();
    for k in 0..steps {
        let theta = if steps == 1 {
            lo
        } else {
            lo + (hi - lo) * k as f64 / (steps - 1) as f64
        };
        let built = match spec {
            SurfaceSpec::CapHalfspace(cap) => cap_in_halfspace(cap.radius, theta),
            SurfaceSpec::BridgeWedge(bridge) => {
                bridge_in_wedge(bridge.radius, bridge.alpha, theta, theta)
            }
            _ => unreachable!("checked above"),
        };
        let surface = match built {
            Ok(surface) => surface,
            Err(err) => {
                skipped.push(json!({ "theta": theta, "error": err.to_string() }));
                continue;
            }
        };
        let mut residual = 0.0_f64;
        for wall in 0..surface.domain.wall_count() {
            residual = residual.max(balancing_residual(&surface, wall)?.abs());
        }
        let energy = energy_coefficients(&surface, order)?;
        let report = stability_indicator(&surface, order, &tol)?;
        rows.push(vec![
            theta,
            residual,
            energy.e0,
            energy.e1,
            energy.e2,
            report.indicator,
        ]);
        verdicts.push(verdict_name(report.verdict).to_string());
    }
    if rows.is_empty() {
        bail!("every grid point of the sweep failed to build");
    }

    let results = json!({
        "grid_points": rows.len(),
        "verdicts": verdicts,
        "skipped": skipped,
    });
    let table = Table {
        columns: [
            "theta",
            "balancing_residual",
            "e0",
            "e1",
            "e2",
            "indicator",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    };
    let tolerances = BTreeMap::from([
        ("balancing_residual".to_string(), TOL_BALANCING),
        ("indicator".to_string(), TOL_INDICATOR),
    ]);
    let verdict = if skipped.is_empty() {
        "completed"
    } else {
        "completed_with_skips"
    };
    Ok((
        results,
        Some(table),
        verdict.to_string(),
        tolerances,
        RunStatus::Success,
    ))
}

/// Resolves the quadrature order: explicit flag, then config, then the
/// `CAPILLARY_LAB_ORDER` environment variable, then the built-in default.
pub fn resolve_order(flag: Option<usize>, config: &ExperimentConfig) -> Result<usize> {
    if let Some(order) = flag {
        return Ok(order);
    }
    if let Some(order) = config.quadrature_order {
        return Ok(order);
    }
    match std::env::var("CAPILLARY_LAB_ORDER") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .with_context(|| format!("CAPILLARY_LAB_ORDER must be an integer, got {text:?}")),
        Err(_) => Ok(crate::config::DEFAULT_ORDER),
    }
}
