//! Experiment configuration: strict JSON schema for one tool invocation.
//!
//! Parsing is strict — unknown fields are rejected so a typo in a config file
//! fails loudly instead of silently running with defaults — and every numeric
//! parameter is checked for finiteness after deserialization. The surface and
//! body specs are tagged unions on a `kind` field, with one struct per kind
//! mirroring the corresponding builder's parameters.

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

/// Default quadrature order when neither the config, the `--order` flag, nor
/// the `CAPILLARY_LAB_ORDER` environment variable says otherwise.
pub const DEFAULT_ORDER: usize = 32;
/// Default step for the finite-difference derivative cross-checks.
pub const DEFAULT_FD_STEP: f64 = 1e-3;

/// Which analysis to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Classify the stability of a CMC capillary surface.
    CapStability,
    /// Validate the variation derivatives against closed forms.
    VariationCheck,
    /// Parallel-area polynomial of a surface plus sampled cross-checks.
    TubePoly,
    /// Quermassintegrals and inequality slacks of a convex body.
    ConvexCheck,
    /// Sample the Steiner formula against polytopal ball approximants.
    Steiner,
    /// Isoperimetric quotient of the parallel bodies along an offset grid.
    QuotientScan,
    /// Sweep a builder parameter and tabulate the results.
    Sweep,
}

impl Command {
    /// Kebab-case name, as it appears in configs and reports.
    pub fn name(self) -> &'static str {
        match self {
            Command::CapStability => "cap-stability",
            Command::VariationCheck => "variation-check",
            Command::TubePoly => "tube-poly",
            Command::ConvexCheck => "convex-check",
            Command::Steiner => "steiner",
            Command::QuotientScan => "quotient-scan",
            Command::Sweep => "sweep",
        }
    }
}

/// A contact angle: one value, or an inclusive range swept with `steps`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ThetaSpec {
    Fixed(f64),
    Range([f64; 2]),
}

/// Spherical cap over the floor of a half-space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapSpec {
    #[serde(rename = "R")]
    pub radius: f64,
    pub theta: ThetaSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
}

/// Spherical bridge between the two walls of a wedge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BridgeSpec {
    #[serde(rename = "R")]
    pub radius: f64,
    pub alpha: f64,
    pub theta: ThetaSpec,
    /// Contact angle on wall 1; defaults to the wall-0 angle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
}

/// Upper half of a spheroid cut at a given height (not CMC unless round).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpheroidCapSpec {
    pub a: f64,
    pub c: f64,
    pub cut: f64,
}

/// Round sphere, for tube-polynomial and closed-surface checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereSpec {
    #[serde(rename = "R")]
    pub radius: f64,
}

/// Torus of revolution, for tube-polynomial and closed-surface checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusSpec {
    #[serde(rename = "R")]
    pub major: f64,
    pub r: f64,
}

/// Surface description, mirroring the capillary builders and the closed
/// reference shapes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SurfaceSpec {
    #[serde(rename = "cap_halfspace")]
    CapHalfspace(CapSpec),
    #[serde(rename = "bridge_wedge")]
    BridgeWedge(BridgeSpec),
    #[serde(rename = "spheroid_cap")]
    SpheroidCap(SpheroidCapSpec),
    #[serde(rename = "sphere")]
    Sphere(SphereSpec),
    #[serde(rename = "torus")]
    Torus(TorusSpec),
}

/// Axis-aligned cube or square with one corner at the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxSpec {
    pub side: f64,
}

/// Hull of an explicit vertex list; every point must be extreme.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsSpec {
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
}

/// Ellipse with the given semi-axes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllipseSpec {
    pub a: f64,
    pub b: f64,
}

/// Spheroid with equatorial semi-axis `a` and polar semi-axis `c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpheroidSpec {
    pub a: f64,
    pub c: f64,
}

/// Polytopal unit-ball approximant of the given dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallSpec {
    pub dim: usize,
}

/// Seeded random body: hull of uniform samples in a centered box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomBodySpec {
    pub points: usize,
    #[serde(default = "default_half_extent")]
    pub half_extent: f64,
}

fn default_half_extent() -> f64 {
    1.0
}

/// Convex-body description, mirroring the convex-body constructors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum BodySpec {
    #[serde(rename = "cube")]
    Cube(BoxSpec),
    #[serde(rename = "square")]
    Square(BoxSpec),
    #[serde(rename = "points")]
    Points(PointsSpec),
    #[serde(rename = "ellipse")]
    Ellipse(EllipseSpec),
    #[serde(rename = "spheroid")]
    Spheroid(SpheroidSpec),
    #[serde(rename = "ball")]
    Ball(BallSpec),
    #[serde(rename = "random_polygon")]
    RandomPolygon(RandomBodySpec),
    #[serde(rename = "random_polyhedron")]
    RandomPolyhedron(RandomBodySpec),
}

/// One experiment: a command plus its subject and numeric knobs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub body: Option<BodySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fd_step: Option<f64>,
    /// Seed for the random-body generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Offsets for the steiner, quotient-scan, and tube-poly grids.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<f64>>,
    /// Where to write the JSON report, in addition to stdout.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
}

impl ExperimentConfig {
    /// Parses a config from JSON text, rejecting unknown fields; the error
    /// message of a malformed document carries the line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    /// Structural checks beyond the schema: the command has its subject, and
    /// every numeric parameter is finite.
    pub fn validate(&self) -> Result<()> {
        let needs_surface = matches!(
            self.command,
            Command::CapStability | Command::VariationCheck | Command::TubePoly | Command::Sweep
        );
        if needs_surface && self.surface.is_none() {
            bail!("command {:?} needs a \"surface\" entry", self.command.name());
        }
        if !needs_surface && self.body.is_none() {
            bail!("command {:?} needs a \"body\" entry", self.command.name());
        }

        let mut numbers: Vec<(&str, f64)> = Vec::new();
        if let Some(surface) = &self.surface {
            match surface {
                SurfaceSpec::CapHalfspace(cap) => {
                    numbers.push(("R", cap.radius));
                    push_theta(&mut numbers, &cap.theta);
                }
                SurfaceSpec::BridgeWedge(bridge) => {
                    numbers.push(("R", bridge.radius));
                    numbers.push(("alpha", bridge.alpha));
                    push_theta(&mut numbers, &bridge.theta);
                    if let Some(t2) = bridge.theta2 {
                        numbers.push(("theta2", t2));
                    }
                }
                SurfaceSpec::SpheroidCap(spheroid) => {
                    numbers.extend([("a", spheroid.a), ("c", spheroid.c), ("cut", spheroid.cut)]);
                }
                SurfaceSpec::Sphere(sphere) => numbers.push(("R", sphere.radius)),
                SurfaceSpec::Torus(torus) => {
                    numbers.extend([("R", torus.major), ("r", torus.r)]);
                }
            }
        }
        if let Some(body) = &self.body {
            match body {
                BodySpec::Cube(b) | BodySpec::Square(b) => numbers.push(("side", b.side)),
                BodySpec::Points(points) => {
                    for v in &points.vertices {
                        for &x in v {
                            numbers.push(("vertices", x));
                        }
                    }
                }
                BodySpec::Ellipse(e) => numbers.extend([("a", e.a), ("b", e.b)]),
                BodySpec::Spheroid(s) => numbers.extend([("a", s.a), ("c", s.c)]),
                BodySpec::Ball(_) => {}
                BodySpec::RandomPolygon(r) | BodySpec::RandomPolyhedron(r) => {
                    numbers.push(("half_extent", r.half_extent));
                }
            }
        }
        if let Some(step) = self.fd_step {
            numbers.push(("fd_step", step));
        }
        if let Some(offsets) = &self.offsets {
            for &t in offsets {
                numbers.push(("offsets", t));
            }
        }
        for (field, value) in numbers {
            if !value.is_finite() {
                bail!("field \"{field}\" must be finite, got {value}");
            }
        }
        if let Some(order) = self.quadrature_order {
            if !(1..=2048).contains(&order) {
                bail!("quadrature_order must lie in 1..=2048, got {order}");
            }
        }
        if let Some(step) = self.fd_step {
            if !(step > 0.0) {
                bail!("fd_step must be positive, got {step}");
            }
        }
        Ok(())
    }
}

fn push_theta<'a>(numbers: &mut Vec<(&'a str, f64)>, theta: &ThetaSpec) {
    match theta {
        ThetaSpec::Fixed(t) => numbers.push(("theta", *t)),
        ThetaSpec::Range([lo, hi]) => {
            numbers.push(("theta[0]", *lo));
            numbers.push(("theta[1]", *hi));
        }
    }
}
