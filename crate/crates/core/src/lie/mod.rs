// SPDX-License-Identifier: Apache-2.0

//! Compact matrix Lie algebra arithmetic: orthonormal bases, structure
//! constants, brackets, the Ad-invariant inner product and the exponential.

mod basis;
mod element;
mod expm;
mod group;

pub use basis::{
    builtin_algebra, builtin_algebra_with_limit, su2, su_n, AlgebraBasis, CMatrix,
    InvariantReport, CONSTRUCTION_TOL, DEFAULT_INNER_SCALE, DEFAULT_MAX_SU_DEGREE,
};
pub use element::{bracket, exp_algebra, inner_product, AlgebraElement};
pub use expm::expm;
pub use group::{GroupElement, UNITARY_TOL};

pub(crate) use group::{matrix_from_rows, matrix_rows};

/// Drift tolerance used by identities that accumulate roundoff.
pub const DRIFT_TOL: f64 = 1e-10;
