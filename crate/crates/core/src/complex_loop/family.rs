// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::surface::{integrability_residual, wedge_bracket};

use super::form::{complex_codifferential, d_z, d_zbar, ComplexField, ComplexForm};

/// Allowed deviation of a loop parameter from the unit circle.
pub const UNIT_CIRCLE_TOL: f64 = 1e-12;

/// Default number of equally spaced loop-parameter samples.
pub const DEFAULT_LOOP_SAMPLES: usize = 16;

/// A point of the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopParameter(Complex64);

impl LoopParameter {
    pub fn new(value: Complex64) -> Result<Self> {
        if !((value.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL) {
            return Err(Error::InvalidLoopParameter {
                re: value.re,
                im: value.im,
            });
        }
        Ok(Self(value))
    }

    /// `e^{i theta}`.
    pub fn from_angle(theta: f64) -> Self {
        Self(Complex64::from_polar(1.0, theta))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    /// `(1 - lambda)/2`.
    pub fn dz_factor(&self) -> Complex64 {
        (Complex64::new(1.0, 0.0) - self.0) * 0.5
    }

    /// `(1 - lambda^-1)/2`.
    pub fn dzbar_factor(&self) -> Complex64 {
        (Complex64::new(1.0, 0.0) - self.0.inv()) * 0.5
    }
}

impl fmt::Display for LoopParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.0.re, self.0.im)
    }
}

/// `e^{2 pi i k / count}` for `k = 0..count`; the first sample is exactly 1.
pub fn circle_samples(count: usize) -> Vec<LoopParameter> {
    (0..count)
        .map(|k| {
            if k == 0 {
                LoopParameter(Complex64::new(1.0, 0.0))
            } else {
                LoopParameter::from_angle(2.0 * PI * k as f64 / count as f64)
            }
        })
        .collect()
}

/// A member of a loop family of 1-forms.
#[derive(Debug, Clone)]
pub struct LoopSample {
    pub lambda: LoopParameter,
    pub form: ComplexForm,
}

/// `beta_lambda = (1 - lambda)/2 B_z dz + (1 - lambda^-1)/2 B_zbar dzbar`.
pub fn beta_family(b: &ComplexForm, lambda: Complex64) -> Result<LoopSample> {
    let lambda = LoopParameter::new(lambda)?;
    Ok(LoopSample {
        lambda,
        form: b.scaled(lambda.dz_factor(), lambda.dzbar_factor()),
    })
}

/// Coefficient of `dx ^ dy` in `d beta + [beta ^ beta]`, in real coordinates.
pub fn flatness_residual(sample: &LoopSample) -> Result<ComplexField> {
    zero_curvature(&sample.form)
}

fn zero_curvature(form: &ComplexForm) -> Result<ComplexField> {
    let pq = form.real_coordinates()?;
    let curl = pq.dy.d_x()?.sub(&pq.dx.d_y()?)?;
    curl.add(&wedge_bracket(&pq, &pq)?)
}

/// Sup norm of the flatness residual at each sampled loop parameter.
pub fn flatness_profile(b: &ComplexForm, lambdas: &[LoopParameter]) -> Result<Vec<(LoopParameter, f64)>> {
    lambdas
        .iter()
        .map(|l| Ok((*l, flatness_residual(&beta_family(b, l.value())?)?.sup_norm())))
        .collect()
}

/// Which coefficient multiplies `A_zbar` in the bracket of the second driven equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConjugateCoefficient {
    /// `(1 - nu)/2`, the `dz` factor of the family.
    #[default]
    Unconjugated,
    /// `(1 - nu^-1)/2`, the `dzbar` factor of the family.
    Conjugated,
}

/// Residuals of the loop-family equations at one `nu`.
#[derive(Debug, Clone)]
pub struct AlphaFamilyResiduals {
    pub nu: LoopParameter,
    /// `d(delta alpha_nu)/dz - [(1 - nu)/2 A_z, delta alpha_nu] - B_z`.
    pub driven_z: ComplexField,
    /// `d(delta alpha_nu)/dzbar - [c A_zbar, delta alpha_nu] - B_zbar`.
    pub driven_zbar: ComplexField,
    /// `d alpha_nu + [alpha_nu ^ alpha_nu]` on `dx ^ dy`.
    pub zero_curvature: ComplexField,
}

impl AlphaFamilyResiduals {
    pub fn sup_norms(&self) -> [f64; 3] {
        [
            self.driven_z.sup_norm(),
            self.driven_zbar.sup_norm(),
            self.zero_curvature.sup_norm(),
        ]
    }
}

/// Evaluates `alpha_nu = (1 - nu)/2 A_z dz + (1 - nu^-1)/2 A_zbar dzbar` against
/// the driven equations with right-hand sides `B`.
pub fn alpha_family_residuals(
    a: &ComplexForm,
    b: &ComplexForm,
    nu: Complex64,
    mu: &[f64],
    coefficient: ConjugateCoefficient,
) -> Result<AlphaFamilyResiduals> {
    let nu = LoopParameter::new(nu)?;
    let alpha = a.scaled(nu.dz_factor(), nu.dzbar_factor());
    let delta = complex_codifferential(&alpha, mu)?;
    let c_zbar = match coefficient {
        ConjugateCoefficient::Unconjugated => nu.dz_factor(),
        ConjugateCoefficient::Conjugated => nu.dzbar_factor(),
    };
    let driven_z = d_z(&delta)?
        .sub(&a.z.scale(nu.dz_factor()).bracket(&delta)?)?
        .sub(&b.z)?;
    let driven_zbar = d_zbar(&delta)?
        .sub(&a.zbar.scale(c_zbar).bracket(&delta)?)?
        .sub(&b.zbar)?;
    Ok(AlphaFamilyResiduals {
        nu,
        driven_z,
        driven_zbar,
        zero_curvature: zero_curvature(&alpha)?,
    })
}

/// Real integrability residual of the form underlying `a`, for comparison
/// with the zero-curvature residual at `nu = -1`.
pub fn real_integrability(a: &ComplexForm) -> Result<ComplexField> {
    integrability_residual(&a.real_coordinates()?)
}
