// SPDX-License-Identifier: Apache-2.0

//! Complex-coordinate form of the biharmonic map equation, loop families of
//! 1-forms with their zero-curvature conditions, and checks that a map fits
//! the harmonic-then-biharmonic construction.

mod family;
mod form;
mod verify;

pub use family::{
    alpha_family_residuals, beta_family, circle_samples, flatness_profile, flatness_residual,
    real_integrability, AlphaFamilyResiduals, ConjugateCoefficient, LoopParameter, LoopSample,
    DEFAULT_LOOP_SAMPLES, UNIT_CIRCLE_TOL,
};
pub use form::{
    complex_codifferential, complex_delta_alpha, complexify, d_z, d_zbar, delta_theta_tilde,
    real_delta_alpha, theta_tilde, ComplexField, ComplexForm,
};
pub use verify::{
    complex_divergence, complex_flatness, product_ansatz_map, three_step_fields,
    three_step_verify, AnsatzGrid, ThreeStepFields, ThreeStepReport,
};
