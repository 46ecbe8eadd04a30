//! Capillary surfaces in a half-space or a wedge: constrained immersions
//! meeting the domain walls at prescribed angles, their wetting energy, the
//! distinguished volume-fixing variation, and the stability classification
//! for constant-mean-curvature configurations.
//!
//! The flow through the module: [`cap_in_halfspace`], [`bridge_in_wedge`] and
//! [`spheroid_cap_in_halfspace`] build checked [`CapillarySurface`] records;
//! [`energy_coefficients`] expands the wetting energy along the variation;
//! [`VariationFamily`] evaluates the scaled energy; [`stability_indicator`]
//! classifies the configuration.

mod builders;
mod domain;
mod energy;
mod stability;
mod surface;
mod variation;

pub use builders::{bridge_in_wedge, cap_in_halfspace, spheroid_cap_in_halfspace};
pub use domain::SupportDomain;
pub use energy::{
    balancing_residual, criticality_residual, energy_coefficients, total_energy,
    EnergyCoefficients,
};
pub use stability::{second_factor, stability_indicator, BracketTerms, StabilityReport, StabilityVerdict};
pub use surface::{
    BoundaryContact, CapillarySurface, Hypotheses, PlanarDiskData, Tolerances, WettedDomain,
    ANGLE_SAMPLES, BOUNDARY_PLANE_TOL, CURVATURE_GRID, EDGE_CLEARANCE,
};
pub use variation::{
    return_translation, variation_energy, VariationEvaluation, VariationFamily,
};
