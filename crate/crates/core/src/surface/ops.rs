// SPDX-License-Identifier: Apache-2.0

//! Discrete 1-form calculus on a conformally flat grid and the residuals
//! characterizing harmonic and biharmonic maps.
//!
//! All derivatives are compositions of the central first difference, so a
//! residual built from `k` nested differences of the pullback has margin `k + 1`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::field::{Field, GValuedField, GValuedOneForm, OneForm};
use super::grid::{inv_mu2, GridMap};

/// Projection defect above which a pullback sample is rejected.
pub const TANGENT_TOL: f64 = 1e-3;

/// Worst-case diagnostics of a Maurer-Cartan pullback.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PullbackDiagnostics {
    /// Largest Frobenius distance between `psi^-1 d psi` and its projection.
    pub projection_defect: f64,
    /// Largest `|M + M^H|` of the raw samples `M = psi^-1 d psi`.
    pub skew_defect: f64,
}

/// `alpha = psi^-1 d psi` as `A_x dx + A_y dy`. Margin 1.
pub fn maurer_cartan_pullback(map: &GridMap) -> Result<GValuedOneForm> {
    maurer_cartan_pullback_with_diagnostics(map).map(|(a, _)| a)
}

pub fn maurer_cartan_pullback_with_diagnostics(
    map: &GridMap,
) -> Result<(GValuedOneForm, PullbackDiagnostics)> {
    let basis = map.basis().clone();
    let grid = *map.grid();
    let mut diag = PullbackDiagnostics::default();
    let mut component = |di: usize, dj: usize, h: f64| -> Result<GValuedField> {
        let mut out = Field::zeros(basis.clone(), grid, 1);
        let points: Vec<_> = out.interior_points().collect();
        for (i, j) in points {
            let fwd = map.psi_at(i + di, j + dj).matrix();
            let bwd = map.psi_at(i - di, j - dj).matrix();
            let raw = map.psi_at(i, j).matrix().adjoint() * (fwd - bwd).unscale(2.0 * h);
            let (coeffs, defect) = basis.project(&raw);
            diag.skew_defect = diag.skew_defect.max((&raw + raw.adjoint()).norm());
            diag.projection_defect = diag.projection_defect.max(defect);
            if !(defect <= TANGENT_TOL) {
                return Err(Error::NotTangent {
                    defect,
                    tol: TANGENT_TOL,
                    i,
                    j,
                });
            }
            out.at_mut(i, j).copy_from_slice(&coeffs);
        }
        Ok(out)
    };
    let ax = component(1, 0, grid.hx)?;
    let ay = component(0, 1, grid.hy)?;
    Ok((OneForm::new(ax, ay)?, diag))
}

/// `delta(P dx + Q dy) = -mu^-2 (P_x + Q_y)`. Adds one to the margin.
pub fn codifferential<T: Scalar>(form: &OneForm<T>, mu: &[f64]) -> Result<Field<T>> {
    divergence(form)?.weighted(&inv_mu2(mu)).map(|f| f.scale(-T::one()))
}

/// `P_x + Q_y`.
pub fn divergence<T: Scalar>(form: &OneForm<T>) -> Result<Field<T>> {
    form.dx.d_x()?.add(&form.dy.d_y()?)
}

/// `Q_x - P_y + [P, Q]`, the coefficient of `dx ^ dy` in `d alpha + [alpha ^ alpha]`.
pub fn integrability_residual<T: Scalar>(form: &OneForm<T>) -> Result<Field<T>> {
    let curl = form.dy.d_x()?.sub(&form.dx.d_y()?)?;
    curl.add(&wedge_bracket(form, form)?)
}

/// `Trace_g([alpha, beta]) = mu^-2 ([alpha_x, beta_x] + [alpha_y, beta_y])` in the
/// orthonormal frame `mu^-1 d/dx, mu^-1 d/dy`.
pub fn bracket_2tensor_trace<T: Scalar>(
    alpha: &OneForm<T>,
    beta: &OneForm<T>,
    mu: &[f64],
) -> Result<Field<T>> {
    let sum = alpha.dx.bracket(&beta.dx)?.add(&alpha.dy.bracket(&beta.dy)?)?;
    sum.weighted(&inv_mu2(mu))
}

/// `[alpha ^ beta](d/dx, d/dy) = ([alpha_x, beta_y] - [alpha_y, beta_x]) / 2`.
pub fn wedge_bracket<T: Scalar>(alpha: &OneForm<T>, beta: &OneForm<T>) -> Result<Field<T>> {
    let d = alpha.dx.bracket(&beta.dy)?.sub(&alpha.dy.bracket(&beta.dx)?)?;
    Ok(d.scale(T::one() * 0.5))
}

/// `d f = f_x dx + f_y dy`.
pub fn exterior_derivative<T: Scalar>(f: &Field<T>) -> Result<OneForm<T>> {
    OneForm::new(f.d_x()?, f.d_y()?)
}

/// Pullback `alpha` and `delta alpha` of a map, shared by the residuals.
#[derive(Debug, Clone)]
pub struct TensionData {
    pub alpha: GValuedOneForm,
    /// Margin 2.
    pub delta_alpha: GValuedField,
}

impl TensionData {
    pub fn new(map: &GridMap) -> Result<Self> {
        let alpha = maurer_cartan_pullback(map)?;
        let delta_alpha = codifferential(&alpha, map.mu())?;
        Ok(Self { alpha, delta_alpha })
    }

    /// `Theta = d(delta alpha) - ([A_x, delta alpha] dx + [A_y, delta alpha] dy)`. Margin 3.
    pub fn theta(&self) -> Result<GValuedOneForm> {
        let d = exterior_derivative(&self.delta_alpha)?;
        let bx = self.alpha.dx.bracket(&self.delta_alpha)?;
        let by = self.alpha.dy.bracket(&self.delta_alpha)?;
        OneForm::new(d.dx.sub(&bx)?, d.dy.sub(&by)?)
    }

    /// `(d_xx + d_yy) delta alpha - d_x [A_x, delta alpha] - d_y [A_y, delta alpha]`. Margin 4.
    pub fn biharmonic_lhs(&self) -> Result<GValuedField> {
        let da = &self.delta_alpha;
        let lap = da.d_x()?.d_x()?.add(&da.d_y()?.d_y()?)?;
        let bx = self.alpha.dx.bracket(da)?.d_x()?;
        let by = self.alpha.dy.bracket(da)?.d_y()?;
        lap.sub(&bx)?.sub(&by)
    }
}

/// `(A_x)_x + (A_y)_y`, which is `-mu^2 delta alpha`. Margin 2.
pub fn harmonic_residual(map: &GridMap) -> Result<GValuedField> {
    divergence(&maurer_cartan_pullback(map)?)
}

/// Left-hand side of the biharmonic map equation for `g = mu^2 g0`. Margin 4.
pub fn biharmonic_residual(map: &GridMap) -> Result<GValuedField> {
    TensionData::new(map)?.biharmonic_lhs()
}

/// `Theta = d delta alpha - beta` with `beta = [A_x, delta alpha] dx + [A_y, delta alpha] dy`.
pub fn theta_form(map: &GridMap) -> Result<GValuedOneForm> {
    TensionData::new(map)?.theta()
}

/// `delta Theta`, equal to `-mu^-2` times [`biharmonic_residual`] up to roundoff. Margin 4.
pub fn delta_theta_residual(map: &GridMap) -> Result<GValuedField> {
    codifferential(&theta_form(map)?, map.mu())
}

/// `delta d delta alpha + Trace_g([alpha, d delta alpha])`, the bitension field
/// pulled back to the algebra. Margin 4.
///
/// Agrees with `-mu^-2` times [`biharmonic_residual`] to `O(h^2)`: the two
/// differ by the failure of the product rule for central differences.
pub fn bitension_theta_2d(map: &GridMap) -> Result<GValuedField> {
    let data = TensionData::new(map)?;
    let d_delta = exterior_derivative(&data.delta_alpha)?;
    let laplacian_part = codifferential(&d_delta, map.mu())?;
    let trace = bracket_2tensor_trace(&data.alpha, &d_delta, map.mu())?;
    laplacian_part.add(&trace)
}

/// Complex-to-real helper: `sup |im|` over a complex field.
pub fn imaginary_sup(f: &Field<Complex64>) -> f64 {
    f.im().sup_norm()
}
