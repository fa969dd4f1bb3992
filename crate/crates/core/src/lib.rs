// SPDX-License-Identifier: Apache-2.0

//! Numerical toolkit for harmonic and biharmonic maps into compact matrix Lie
//! groups: algebra arithmetic, biharmonic curves, discretized surface maps and
//! their complexified and loop-group formulations.

// Threshold checks are written `!(x <= tol)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod complex_loop;
pub mod convergence;
pub mod curves;
pub mod error;
pub mod io;
pub mod lie;
pub mod registry;
pub mod scalar;
pub mod surface;

pub use error::{Error, Result};
