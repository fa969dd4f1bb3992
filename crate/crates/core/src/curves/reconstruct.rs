// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::lie::{exp_algebra, AlgebraElement, GroupElement};

use super::curve::{CurveField, DiscreteCurve};

/// Default unitarity drift allowed during reconstruction.
pub const RECONSTRUCT_DRIFT_TOL: f64 = 1e-6;

/// Largest projection defect accepted by the Maurer-Cartan pullback.
pub const TANGENT_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy)]
pub struct ReconstructOptions {
    /// Polar-project each sample back onto the unitary group.
    pub reunitarize: bool,
    pub drift_tol: f64,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        Self {
            reunitarize: false,
            drift_tol: RECONSTRUCT_DRIFT_TOL,
        }
    }
}

/// Solves `psi' = psi F` from `psi0` with the midpoint Lie step
/// `psi_{n+1} = psi_n exp(h F(t_n + h/2))`, where `F` at the midpoint is the
/// average of neighbouring samples.
pub fn reconstruct_group_curve(
    curve: &DiscreteCurve,
    psi0: &GroupElement,
    opts: ReconstructOptions,
) -> Result<DiscreteCurve> {
    let basis = curve.basis();
    if psi0.size() != basis.matrix_size() {
        return Err(Error::InvalidInput(format!(
            "initial point has size {}, algebra {} needs {}",
            psi0.size(),
            basis.name(),
            basis.matrix_size()
        )));
    }
    let h = curve.h();
    let f = curve.f_samples();
    let mut psi = Vec::with_capacity(f.len());
    psi.push(psi0.clone());
    for n in 0..f.len() - 1 {
        let mid = f[n].add_scaled(1.0, &f[n + 1])?.scaled(0.5);
        let mut next = psi[n].mul(&exp_algebra(&mid, h)?);
        if opts.reunitarize {
            next = next.reunitarize();
        } else {
            let defect = next.unitarity_defect();
            if !(defect <= opts.drift_tol) {
                return Err(Error::UnitarityDrift {
                    index: n + 1,
                    defect,
                });
            }
        }
        psi.push(next);
    }
    Ok(curve.clone().with_psi(psi))
}

/// Recovers `F = psi^{-1} psi'` from group samples by central differences,
/// projected onto the algebra. Margin 1.
pub fn maurer_cartan_pullback_1d(curve: &DiscreteCurve) -> Result<CurveField> {
    let psi = curve
        .psi_samples()
        .ok_or_else(|| Error::InvalidInput("curve carries no group samples".into()))?;
    if psi.len() < 3 {
        return Err(Error::InsufficientSamples {
            needed: 3,
            got: psi.len(),
        });
    }
    let basis = curve.basis();
    let h = curve.h();
    let mut values = Vec::with_capacity(psi.len() - 2);
    for k in 1..psi.len() - 1 {
        let diff = (psi[k + 1].matrix() - psi[k - 1].matrix()) / num_complex::Complex64::new(2.0 * h, 0.0);
        let raw = psi[k].matrix().adjoint() * diff;
        let (coeffs, defect) = basis.project(&raw);
        if !(defect <= TANGENT_TOL) {
            return Err(Error::NotTangent {
                defect,
                tol: TANGENT_TOL,
                i: k,
                j: 0,
            });
        }
        values.push(AlgebraElement::new(basis.clone(), coeffs)?);
    }
    Ok(CurveField {
        t0: curve.t0(),
        h,
        margin: 1,
        values,
    })
}

/// Samples the geodesic `psi(t) = x exp(t X)`, `t = k h` for `k = 0..=steps`.
pub fn geodesic_curve(
    x: &GroupElement,
    generator: &AlgebraElement,
    h: f64,
    steps: usize,
) -> Result<DiscreteCurve> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    let basis = generator.basis().clone();
    if x.size() != basis.matrix_size() {
        return Err(Error::InvalidInput("base point does not match the algebra".into()));
    }
    let psi = (0..=steps)
        .map(|k| exp_algebra(generator, k as f64 * h).map(|g| x.mul(&g)))
        .collect::<Result<Vec<_>>>()?;
    let f = vec![generator.clone(); steps + 1];
    Ok(DiscreteCurve::from_parts_unchecked(basis, 0.0, h, f, Some(psi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::su2;
    use std::sync::Arc;

    #[test]
    fn constant_generator_reproduces_one_parameter_subgroup() {
        let b = Arc::new(su2());
        let x = AlgebraElement::new(b.clone(), vec![0.4, -1.2, 0.3]).unwrap();
        let h = 0.01;
        let curve = DiscreteCurve::new(b.clone(), 0.0, h, vec![x.clone(); 201], None).unwrap();
        let rec = reconstruct_group_curve(&curve, &GroupElement::identity(2), Default::default()).unwrap();
        for (k, g) in rec.psi_samples().unwrap().iter().enumerate() {
            let exact = exp_algebra(&x, k as f64 * h).unwrap();
            assert!((g.matrix() - exact.matrix()).norm() < 1e-8);
        }
    }

    #[test]
    fn left_translation_is_carried_through() {
        let b = Arc::new(su2());
        let f: Vec<_> = (0..50)
            .map(|k| AlgebraElement::new(b.clone(), vec![(k as f64 * 0.1).sin(), 1.0, 0.2]).unwrap())
            .collect();
        let curve = DiscreteCurve::new(b.clone(), 0.0, 0.05, f, None).unwrap();
        let g = AlgebraElement::new(b.clone(), vec![0.7, 0.1, -0.4]).unwrap().exp(1.0).unwrap();
        let plain = reconstruct_group_curve(&curve, &GroupElement::identity(2), Default::default()).unwrap();
        let moved = reconstruct_group_curve(&curve, &g, Default::default()).unwrap();
        for (p, m) in plain.psi_samples().unwrap().iter().zip(moved.psi_samples().unwrap()) {
            assert!((g.mul(p).matrix() - m.matrix()).norm() < 1e-13);
        }
    }

    #[test]
    fn drift_is_reported_and_reprojection_fixes_it() {
        let b = Arc::new(su2());
        let f = vec![AlgebraElement::new(b.clone(), vec![1.0, 0.0, 0.0]).unwrap(); 5];
        let curve = DiscreteCurve::new(b, 0.0, 0.1, f, None).unwrap();
        let tight = ReconstructOptions { reunitarize: false, drift_tol: 0.0 };
        let noisy = GroupElement::from_matrix_unchecked(
            crate::lie::CMatrix::identity(2, 2) * num_complex::Complex64::new(1.0 + 1e-12, 0.0),
        );
        assert!(matches!(
            reconstruct_group_curve(&curve, &noisy, tight),
            Err(Error::UnitarityDrift { index: 1, .. })
        ));
        let fixed = ReconstructOptions { reunitarize: true, drift_tol: 0.0 };
        let rec = reconstruct_group_curve(&curve, &noisy, fixed).unwrap();
        assert!(rec.psi_samples().unwrap()[4].unitarity_defect() < 1e-14);
    }

    #[test]
    fn geodesic_samples() {
        let b = Arc::new(su2());
        let zero = AlgebraElement::zero(b.clone());
        let x = AlgebraElement::new(b.clone(), vec![0.1, 0.2, 0.3]).unwrap().exp(1.0).unwrap();
        let c = geodesic_curve(&x, &zero, 0.1, 10).unwrap();
        for g in c.psi_samples().unwrap() {
            assert!((g.matrix() - x.matrix()).norm() < 1e-15);
        }
        let gen = AlgebraElement::basis_vector(b, 0);
        let c = geodesic_curve(&GroupElement::identity(2), &gen, 0.1, 10).unwrap();
        let pulled = maurer_cartan_pullback_1d(&c).unwrap();
        assert_eq!(pulled.values.len(), 9);
        for v in &pulled.values {
            // sin(h/2)/(h/2) factor from the central difference of exp.
            let expected = (0.05f64).sin() / 0.05;
            assert!((v.coeffs()[0] - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn pullback_needs_group_samples() {
        let b = Arc::new(su2());
        let curve = DiscreteCurve::new(b.clone(), 0.0, 0.1, vec![AlgebraElement::zero(b); 4], None).unwrap();
        assert!(maurer_cartan_pullback_1d(&curve).is_err());
    }
}
