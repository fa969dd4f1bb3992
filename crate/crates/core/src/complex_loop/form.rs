// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::error::Result;
use crate::surface::{codifferential, Field, GValuedOneForm, GridMap, OneForm, TensionData};

pub type ComplexField = Field<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `C_z dz + C_zbar dzbar` with complexified-algebra coefficients.
#[derive(Debug, Clone)]
pub struct ComplexForm {
    pub z: ComplexField,
    pub zbar: ComplexField,
}

impl ComplexForm {
    pub fn new(z: ComplexField, zbar: ComplexField) -> Result<Self> {
        let m = z.margin().max(zbar.margin());
        let z = z.with_margin(m);
        let zbar = zbar.with_margin(m);
        z.check_compatible(&zbar)?;
        Ok(Self { z, zbar })
    }

    pub fn margin(&self) -> usize {
        self.z.margin()
    }

    /// `P dx + Q dy` with `P = C_z + C_zbar` and `Q = i (C_z - C_zbar)`.
    pub fn real_coordinates(&self) -> Result<OneForm<Complex64>> {
        let p = self.z.add(&self.zbar)?;
        let q = self.z.sub(&self.zbar)?.scale(I);
        OneForm::new(p, q)
    }

    /// Real parts of [`Self::real_coordinates`].
    pub fn decomplexify(&self) -> Result<GValuedOneForm> {
        let pq = self.real_coordinates()?;
        OneForm::new(pq.dx.re(), pq.dy.re())
    }

    /// Largest imaginary part of the real coordinates; zero for forms of real 1-forms.
    pub fn reality_defect(&self) -> Result<f64> {
        let pq = self.real_coordinates()?;
        Ok(pq.dx.im().sup_norm().max(pq.dy.im().sup_norm()))
    }

    /// `(c_z C_z) dz + (c_zbar C_zbar) dzbar`.
    pub fn scaled(&self, c_z: Complex64, c_zbar: Complex64) -> Self {
        Self {
            z: self.z.scale(c_z),
            zbar: self.zbar.scale(c_zbar),
        }
    }

    pub fn sup_norm(&self) -> f64 {
        self.z.sup_norm().max(self.zbar.sup_norm())
    }

    pub fn max_difference(&self, other: &Self) -> Result<f64> {
        Ok(self.z.max_difference(&other.z)?.max(self.zbar.max_difference(&other.zbar)?))
    }
}

/// `A_z = (A_x - i A_y)/2`, `A_zbar = (A_x + i A_y)/2`.
pub fn complexify(form: &GValuedOneForm) -> Result<ComplexForm> {
    let p = form.dx.to_complex();
    let q = form.dy.to_complex().scale(I);
    ComplexForm::new(p.sub(&q)?.scale(0.5.into()), p.add(&q)?.scale(0.5.into()))
}

/// `d/dz = (d/dx - i d/dy)/2` on the shared central-difference stencils.
pub fn d_z(f: &ComplexField) -> Result<ComplexField> {
    Ok(f.d_x()?.sub(&f.d_y()?.scale(I))?.scale(0.5.into()))
}

/// `d/dzbar = (d/dx + i d/dy)/2`.
pub fn d_zbar(f: &ComplexField) -> Result<ComplexField> {
    Ok(f.d_x()?.add(&f.d_y()?.scale(I))?.scale(0.5.into()))
}

/// `-2 mu^-2 (d C_z/dzbar + d C_zbar/dz)`. Adds one to the margin.
pub fn complex_codifferential(form: &ComplexForm, mu: &[f64]) -> Result<ComplexField> {
    let s = d_zbar(&form.z)?.add(&d_z(&form.zbar)?)?;
    Ok(s.weighted(&crate::surface::inv_mu2(mu))?.scale((-2.0).into()))
}

/// `Theta~ = (d delta alpha/dz - [A_z, delta alpha]) dz + (d delta alpha/dzbar - [A_zbar, delta alpha]) dzbar`.
/// Margin 3.
pub fn theta_tilde(map: &GridMap) -> Result<ComplexForm> {
    let data = TensionData::new(map)?;
    theta_tilde_from(&complexify(&data.alpha)?, &data.delta_alpha.to_complex())
}

pub(crate) fn theta_tilde_from(a: &ComplexForm, delta_alpha: &ComplexField) -> Result<ComplexForm> {
    let tz = d_z(delta_alpha)?.sub(&a.z.bracket(delta_alpha)?)?;
    let tzbar = d_zbar(delta_alpha)?.sub(&a.zbar.bracket(delta_alpha)?)?;
    ComplexForm::new(tz, tzbar)
}

/// `delta Theta~`; its real part matches the real `delta Theta`. Margin 4.
pub fn delta_theta_tilde(map: &GridMap) -> Result<ComplexField> {
    complex_codifferential(&theta_tilde(map)?, map.mu())
}

/// Real `delta alpha` recomputed through the complex coordinates.
pub fn complex_delta_alpha(form: &GValuedOneForm, mu: &[f64]) -> Result<ComplexField> {
    complex_codifferential(&complexify(form)?, mu)
}

/// Reference: real-form `delta alpha` for comparison with [`complex_delta_alpha`].
pub fn real_delta_alpha(form: &GValuedOneForm, mu: &[f64]) -> Result<Field<f64>> {
    codifferential(form, mu)
}
