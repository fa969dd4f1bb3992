// SPDX-License-Identifier: Apache-2.0

//! Maps from a conformally flat planar grid into a matrix Lie group.

mod field;
mod grid;
mod ops;

pub use field::{Field, GValuedField, GValuedOneForm, OneForm};
pub use grid::{inv_mu2, Grid, GridMap, MIN_GRID_POINTS};
pub use ops::{
    bitension_theta_2d, biharmonic_residual, bracket_2tensor_trace, codifferential,
    delta_theta_residual, divergence, exterior_derivative, harmonic_residual, imaginary_sup,
    integrability_residual, maurer_cartan_pullback, maurer_cartan_pullback_with_diagnostics,
    theta_form, wedge_bracket, PullbackDiagnostics, TensionData, TANGENT_TOL,
};
