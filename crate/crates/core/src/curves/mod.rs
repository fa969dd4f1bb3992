// SPDX-License-Identifier: Apache-2.0

//! Biharmonic curves into a compact group: the reduced equation
//! `F''' = [F, F'']` for the Maurer-Cartan coefficients `F = psi^{-1} psi'`,
//! its integration, group reconstruction, geodesics, the su(2) helix family
//! and the Frenet-Serret apparatus.

mod curve;
mod export;
mod frenet;
mod helix;
mod integrate;
mod reconstruct;
mod residual;

pub use curve::{CurveField, CurveState, DiscreteCurve};
pub use export::write_curve_csv;
pub use frenet::{
    cross, dot, frenet_apparatus, frenet_from_samples, norm, CirclePath, FrenetData, LinePath,
    SpaceCurve, Vec3, KAPPA_MIN,
};
pub use helix::{helix_curve, integrated_helix_curve, HelixPath};
pub use integrate::{
    biharmonic_rhs, curve_from_states, integrate_curve, integrate_trajectory,
    ode_consistency_residual,
};
pub use reconstruct::{
    geodesic_curve, maurer_cartan_pullback_1d, reconstruct_group_curve, ReconstructOptions,
    RECONSTRUCT_DRIFT_TOL, TANGENT_TOL,
};
pub use residual::{bitension_theta_1d, delta_alpha_1d};
