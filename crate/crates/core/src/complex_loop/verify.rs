// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::curves::DiscreteCurve;
use crate::error::{Error, Result};
use crate::surface::{Grid, GridMap, TensionData};

use super::form::{complexify, d_z, d_zbar, theta_tilde_from, ComplexField, ComplexForm};

/// Sup norms reported by [`three_step_verify`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThreeStepReport {
    /// `-dA_z/dzbar + dA_zbar/dz + [A_z, A_zbar]`.
    pub alpha_flatness: f64,
    /// `dB_z/dzbar + dB_zbar/dz`, the first harmonic-system equation for `B`.
    pub b_divergence: f64,
    /// `-dB_z/dzbar + dB_zbar/dz + [B_z, B_zbar]`, the second one.
    pub b_flatness: f64,
    /// Size of the induced `B` itself.
    pub b_norm: f64,
}

impl ThreeStepReport {
    /// Largest harmonic-system residual of the induced `B`.
    pub fn harmonic_system_residual(&self) -> f64 {
        self.b_divergence.max(self.b_flatness)
    }
}

/// Fields behind a [`ThreeStepReport`].
#[derive(Debug, Clone)]
pub struct ThreeStepFields {
    pub a: ComplexForm,
    /// Margin 3.
    pub b: ComplexForm,
    pub alpha_flatness: ComplexField,
    pub b_divergence: ComplexField,
    pub b_flatness: ComplexField,
}

impl ThreeStepFields {
    pub fn report(&self) -> ThreeStepReport {
        ThreeStepReport {
            alpha_flatness: self.alpha_flatness.sup_norm(),
            b_divergence: self.b_divergence.sup_norm(),
            b_flatness: self.b_flatness.sup_norm(),
            b_norm: self.b.sup_norm(),
        }
    }
}

/// `-dC_z/dzbar + dC_zbar/dz + [C_z, C_zbar]`.
pub fn complex_flatness(c: &ComplexForm) -> Result<ComplexField> {
    let curl = d_z(&c.zbar)?.sub(&d_zbar(&c.z)?)?;
    curl.add(&c.z.bracket(&c.zbar)?)
}

/// `dC_z/dzbar + dC_zbar/dz`.
pub fn complex_divergence(c: &ComplexForm) -> Result<ComplexField> {
    d_zbar(&c.z)?.add(&d_z(&c.zbar)?)
}

/// Reads `A` off the map, forms `B` as the left-hand sides of the driven
/// equations, and evaluates the flatness of `A` and the harmonic system for `B`.
pub fn three_step_fields(map: &GridMap) -> Result<ThreeStepFields> {
    let data = TensionData::new(map)?;
    let a = complexify(&data.alpha)?;
    let b = theta_tilde_from(&a, &data.delta_alpha.to_complex())?;
    Ok(ThreeStepFields {
        alpha_flatness: complex_flatness(&a)?,
        b_divergence: complex_divergence(&b)?,
        b_flatness: complex_flatness(&b)?,
        a,
        b,
    })
}

pub fn three_step_verify(map: &GridMap) -> Result<ThreeStepReport> {
    Ok(three_step_fields(map)?.report())
}

/// Placement of a product-ansatz grid over the samples of a curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzGrid {
    /// Curve sample at `x = x0`.
    pub start: usize,
    /// Curve samples per grid step in `x`.
    pub stride: usize,
    pub nx: usize,
    pub ny: usize,
    pub hy: f64,
    pub y0: f64,
}

impl AnsatzGrid {
    /// Square cells starting at the first sample.
    pub fn square(curve: &DiscreteCurve, stride: usize, nx: usize, ny: usize) -> Self {
        Self {
            start: 0,
            stride,
            nx,
            ny,
            hy: curve.h() * stride as f64,
            y0: 0.0,
        }
    }
}

/// `psi(x, y) = gamma(x)` with `mu = 1`.
pub fn product_ansatz_map(curve: &DiscreteCurve, placement: AnsatzGrid) -> Result<GridMap> {
    let psi = curve
        .psi_samples()
        .ok_or_else(|| Error::InvalidInput("curve carries no group samples".into()))?;
    if placement.stride == 0 || placement.nx == 0 {
        return Err(Error::InvalidParameter("stride and nx must be positive".into()));
    }
    let last = placement.start + (placement.nx - 1) * placement.stride;
    if last >= psi.len() {
        return Err(Error::RangeError(format!(
            "grid needs curve sample {last}, curve has {}",
            psi.len()
        )));
    }
    let grid = Grid::new(
        placement.nx,
        placement.ny,
        curve.h() * placement.stride as f64,
        placement.hy,
        curve.time(placement.start),
        placement.y0,
    )?;
    let mut samples = Vec::with_capacity(grid.len());
    for _ in 0..placement.ny {
        samples.extend((0..placement.nx).map(|i| psi[placement.start + i * placement.stride].clone()));
    }
    GridMap::new(curve.basis().clone(), grid, vec![1.0; grid.len()], samples)
}
