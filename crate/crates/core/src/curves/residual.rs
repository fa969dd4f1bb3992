// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::lie::AlgebraElement;

use super::curve::{CurveField, DiscreteCurve};

/// `delta alpha = -F'` by central differences. Margin 1.
pub fn delta_alpha_1d(curve: &DiscreteCurve) -> Result<CurveField> {
    let f = curve.f_samples();
    if f.len() < 3 {
        return Err(Error::InsufficientSamples { needed: 3, got: f.len() });
    }
    let h = curve.h();
    let values = (1..f.len() - 1)
        .map(|k| f[k + 1].add_scaled(-1.0, &f[k - 1]).map(|d| d.scaled(-0.5 / h)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveField {
        t0: curve.t0(),
        h,
        margin: 1,
        values,
    })
}

/// Biharmonic curve residual `F''' - [F, F'']` on the interior samples.
///
/// `F''` uses the 3-point central difference and `F'''` the central first
/// difference applied three times,
/// `(f[k+3] - 3 f[k+1] + 3 f[k-1] - f[k-3]) / (8 h^3)`, so both are second
/// order and three samples are dropped at each end.
pub fn bitension_theta_1d(curve: &DiscreteCurve) -> Result<CurveField> {
    let f = curve.f_samples();
    if f.len() < 7 {
        return Err(Error::InsufficientSamples { needed: 7, got: f.len() });
    }
    let h = curve.h();
    let basis = curve.basis();
    let n = basis.dim();
    let c = |k: usize| f[k].coeffs();
    let mut values = Vec::with_capacity(f.len() - 6);
    for k in 3..f.len() - 3 {
        let second: Vec<f64> = (0..n)
            .map(|i| (c(k + 1)[i] - 2.0 * c(k)[i] + c(k - 1)[i]) / (h * h))
            .collect();
        let third: Vec<f64> = (0..n)
            .map(|i| {
                (c(k + 3)[i] - 3.0 * c(k + 1)[i] + 3.0 * c(k - 1)[i] - c(k - 3)[i]) / (8.0 * h * h * h)
            })
            .collect();
        let br = basis.bracket_coeffs(c(k), &second);
        let r: Vec<f64> = third.iter().zip(&br).map(|(a, b)| a - b).collect();
        values.push(AlgebraElement::new(basis.clone(), r)?);
    }
    Ok(CurveField {
        t0: curve.t0(),
        h,
        margin: 3,
        values,
    })
}
