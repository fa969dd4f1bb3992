// SPDX-License-Identifier: Apache-2.0

//! Coefficient scalars: real algebra coefficients and their complexification.

use std::fmt::Debug;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use num_traits::Num;

/// Coefficient type of an algebra-valued field.
///
/// `f64` covers the real Lie algebra, `Complex64` its complexification.
pub trait Scalar:
    Copy + Debug + Send + Sync + Num + Neg<Output = Self> + Mul<f64, Output = Self> + 'static
{
    fn from_real(x: f64) -> Self;
    fn modulus(self) -> f64;
    fn is_finite_value(self) -> bool;
}

impl Scalar for f64 {
    fn from_real(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl Scalar for Complex64 {
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn is_finite_value(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Euclidean norm of a coefficient vector.
pub fn coeff_norm<T: Scalar>(v: &[T]) -> f64 {
    v.iter().map(|x| x.modulus().powi(2)).sum::<f64>().sqrt()
}
