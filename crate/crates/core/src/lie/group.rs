// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;
use serde::ser::{Serialize, Serializer};

use super::basis::CMatrix;
use crate::error::{Error, Result};
use crate::io::Exact;

/// Default tolerance for `|psi^dagger psi - I|`.
pub const UNITARY_TOL: f64 = 1e-10;

/// Element of a compact matrix group, stored as its `N x N` unitary matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    matrix: CMatrix,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        Self {
            matrix: CMatrix::identity(n, n),
        }
    }

    /// Wraps a matrix after checking unitarity against `tol`.
    pub fn from_matrix(matrix: CMatrix, tol: f64) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::InvalidInput("group element must be a square matrix".into()));
        }
        let g = Self { matrix };
        let defect = g.unitarity_defect();
        if !(defect <= tol) {
            return Err(Error::InvalidInput(format!(
                "matrix is not unitary (defect {defect:.3e})"
            )));
        }
        Ok(g)
    }

    pub(crate) fn from_matrix_unchecked(matrix: CMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    /// Frobenius norm of `psi^dagger psi - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.size();
        (self.matrix.adjoint() * &self.matrix - CMatrix::identity(n, n)).norm()
    }

    /// `|det psi - 1|`, relevant for SU(n).
    pub fn det_defect(&self) -> f64 {
        (self.matrix.determinant() - Complex64::new(1.0, 0.0)).norm()
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        Self {
            matrix: &self.matrix * &other.matrix,
        }
    }

    /// Group inverse, the conjugate transpose.
    pub fn inverse(&self) -> GroupElement {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// Polar projection `psi (psi^dagger psi)^(-1/2)` by Newton-Schulz
    /// iteration; valid for matrices close to unitary.
    pub fn reunitarize(&self) -> GroupElement {
        let n = self.size();
        let three = CMatrix::identity(n, n) * Complex64::new(3.0, 0.0);
        let half = Complex64::new(0.5, 0.0);
        let mut x = self.matrix.clone();
        for _ in 0..30 {
            let gram = x.adjoint() * &x;
            if (&gram - CMatrix::identity(n, n)).norm() < 1e-15 {
                break;
            }
            x = &x * (&three - gram) * half;
        }
        Self { matrix: x }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        matrix_rows(&self.matrix).serialize(serializer)
    }
}

pub(crate) fn matrix_rows(m: &CMatrix) -> Vec<Vec<[Exact; 2]>> {
    (0..m.nrows())
        .map(|r| {
            (0..m.ncols())
                .map(|c| [Exact(m[(r, c)].re), Exact(m[(r, c)].im)])
                .collect()
        })
        .collect()
}

/// Rebuilds a matrix from `[[[re, im]]]` rows.
pub(crate) fn matrix_from_rows(rows: &[Vec<[f64; 2]>]) -> Result<CMatrix> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("group element must be a square [[re, im]] matrix".into()));
    }
    Ok(CMatrix::from_fn(n, n, |r, c| {
        Complex64::new(rows[r][c][0], rows[r][c][1])
    }))
}
