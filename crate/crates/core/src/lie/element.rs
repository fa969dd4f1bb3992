// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::basis::{AlgebraBasis, CMatrix};
use super::group::GroupElement;
use crate::error::{Error, Result};
use crate::io::Exact;
use crate::scalar::coeff_norm;

/// Coefficient vector of a Lie algebra element in an orthonormal basis.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    basis: Arc<AlgebraBasis>,
    coeffs: Vec<f64>,
}

impl AlgebraElement {
    pub fn new(basis: Arc<AlgebraBasis>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != basis.dim() {
            return Err(Error::InvalidInput(format!(
                "{} coefficients given for {} of dimension {}",
                coeffs.len(),
                basis.name(),
                basis.dim()
            )));
        }
        Ok(Self { basis, coeffs })
    }

    pub fn zero(basis: Arc<AlgebraBasis>) -> Self {
        let n = basis.dim();
        Self {
            basis,
            coeffs: vec![0.0; n],
        }
    }

    /// The `k`-th basis vector (zero-based).
    pub fn basis_vector(basis: Arc<AlgebraBasis>, k: usize) -> Self {
        let mut e = Self::zero(basis);
        e.coeffs[k] = 1.0;
        e
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn matrix(&self) -> CMatrix {
        self.basis.to_matrix(&self.coeffs)
    }

    pub fn norm(&self) -> f64 {
        coeff_norm(&self.coeffs)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || *self.basis == *other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: self.basis.name().to_string(),
                right: other.basis.name().to_string(),
            })
        }
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: self.basis.bracket_coeffs(&self.coeffs, &other.coeffs),
        })
    }

    pub fn inner_product(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: f64, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + k * b)
                .collect(),
        })
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|a| k * a).collect(),
        }
    }

    /// `exp(t X)` as a group element.
    pub fn exp(&self, t: f64) -> Result<GroupElement> {
        exp_algebra(self, t)
    }
}

/// Lie bracket `[x, y]` evaluated through the structure constants.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.bracket(y)
}

/// `<x, y>`; in orthonormal coordinates this is the dot product of coefficients.
pub fn inner_product(x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
    x.inner_product(y)
}

/// Matrix exponential of `t` times the matrix of `x`.
pub fn exp_algebra(x: &AlgebraElement, t: f64) -> Result<GroupElement> {
    if !t.is_finite() || !x.is_finite() {
        return Err(Error::InvalidInput("non-finite exponent".into()));
    }
    let m = x.matrix() * num_complex::Complex64::new(t, 0.0);
    Ok(GroupElement::from_matrix_unchecked(super::expm::expm(&m)))
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&Exact(*c))?;
        }
        seq.end()
    }
}
