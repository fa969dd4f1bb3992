// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{exact_vec, Exact};
use crate::lie::{
    builtin_algebra, matrix_from_rows, matrix_rows, AlgebraBasis, AlgebraElement, GroupElement,
    UNITARY_TOL,
};

/// Jet `(F, F', F'')` of the Maurer-Cartan coefficient function at time `t`.
#[derive(Debug, Clone)]
pub struct CurveState {
    pub t: f64,
    pub y: AlgebraElement,
    pub y1: AlgebraElement,
    pub y2: AlgebraElement,
}

impl CurveState {
    pub fn new(t: f64, y: AlgebraElement, y1: AlgebraElement, y2: AlgebraElement) -> Result<Self> {
        let same = |e: &AlgebraElement| **e.basis() == **y.basis();
        if !same(&y1) || !same(&y2) {
            return Err(Error::BasisMismatch {
                left: y.basis().name().to_string(),
                right: if same(&y1) { y2.basis() } else { y1.basis() }.name().to_string(),
            });
        }
        let state = Self { t, y, y1, y2 };
        if !state.is_finite() {
            return Err(Error::InvalidInput("curve state has non-finite entries".into()));
        }
        Ok(state)
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        self.y.basis()
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.y.is_finite() && self.y1.is_finite() && self.y2.is_finite()
    }
}

/// Uniform samples `F(t0 + k h)` of a curve's Maurer-Cartan coefficients,
/// optionally with the group-valued samples `psi(t0 + k h)`.
#[derive(Debug, Clone)]
pub struct DiscreteCurve {
    basis: Arc<AlgebraBasis>,
    t0: f64,
    h: f64,
    f_samples: Vec<AlgebraElement>,
    psi_samples: Option<Vec<GroupElement>>,
}

impl DiscreteCurve {
    pub fn new(
        basis: Arc<AlgebraBasis>,
        t0: f64,
        h: f64,
        f_samples: Vec<AlgebraElement>,
        psi_samples: Option<Vec<GroupElement>>,
    ) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) || !t0.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "sample spacing must be positive and finite, got h={h}, t0={t0}"
            )));
        }
        if f_samples.is_empty() {
            return Err(Error::InsufficientSamples { needed: 1, got: 0 });
        }
        if let Some(bad) = f_samples.iter().find(|f| **f.basis() != *basis) {
            return Err(Error::BasisMismatch {
                left: basis.name().to_string(),
                right: bad.basis().name().to_string(),
            });
        }
        if let Some(psi) = &psi_samples {
            if psi.len() != f_samples.len() {
                return Err(Error::InvalidInput(format!(
                    "{} group samples for {} coefficient samples",
                    psi.len(),
                    f_samples.len()
                )));
            }
            for (index, g) in psi.iter().enumerate() {
                if g.size() != basis.matrix_size() {
                    return Err(Error::InvalidInput(format!(
                        "group sample {index} has size {}, expected {}",
                        g.size(),
                        basis.matrix_size()
                    )));
                }
                let defect = g.unitarity_defect();
                if !(defect <= UNITARY_TOL) {
                    return Err(Error::UnitarityDrift { index, defect });
                }
            }
        }
        Ok(Self {
            basis,
            t0,
            h,
            f_samples,
            psi_samples,
        })
    }

    pub(crate) fn from_parts_unchecked(
        basis: Arc<AlgebraBasis>,
        t0: f64,
        h: f64,
        f_samples: Vec<AlgebraElement>,
        psi_samples: Option<Vec<GroupElement>>,
    ) -> Self {
        Self {
            basis,
            t0,
            h,
            f_samples,
            psi_samples,
        }
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn len(&self) -> usize {
        self.f_samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f_samples.is_empty()
    }

    pub fn time(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.h
    }

    pub fn f_samples(&self) -> &[AlgebraElement] {
        &self.f_samples
    }

    pub fn psi_samples(&self) -> Option<&[GroupElement]> {
        self.psi_samples.as_deref()
    }

    pub(crate) fn with_psi(mut self, psi: Vec<GroupElement>) -> Self {
        self.psi_samples = Some(psi);
        self
    }

    pub fn to_json(&self) -> Result<String> {
        let dto = CurveJsonOut {
            algebra: self.basis.name(),
            t0: Exact(self.t0),
            h: Exact(self.h),
            f: self.f_samples.iter().map(|f| exact_vec(f.coeffs())).collect(),
            psi: self
                .psi_samples
                .as_ref()
                .map(|p| p.iter().map(|g| matrix_rows(g.matrix())).collect()),
        };
        Ok(serde_json::to_string(&dto)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: CurveJsonIn = serde_json::from_str(text)?;
        let basis = builtin_algebra(&dto.algebra)?;
        let f = dto
            .f
            .into_iter()
            .map(|c| AlgebraElement::new(basis.clone(), c))
            .collect::<Result<Vec<_>>>()?;
        let psi = dto
            .psi
            .map(|p| {
                p.iter()
                    .map(|rows| GroupElement::from_matrix(matrix_from_rows(rows)?, UNITARY_TOL))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Self::new(basis, dto.t0, dto.h, f, psi)
    }
}

#[derive(Serialize)]
struct CurveJsonOut<'a> {
    algebra: &'a str,
    t0: Exact,
    h: Exact,
    #[serde(rename = "F")]
    f: Vec<Vec<Exact>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    psi: Option<Vec<Vec<Vec<[Exact; 2]>>>>,
}

#[derive(Deserialize)]
struct CurveJsonIn {
    algebra: String,
    t0: f64,
    h: f64,
    #[serde(rename = "F")]
    f: Vec<Vec<f64>>,
    #[serde(default)]
    psi: Option<Vec<Vec<Vec<[f64; 2]>>>>,
}

/// Algebra-valued samples on the interior of a [`DiscreteCurve`]: entry `k`
/// belongs to sample index `margin + k`.
#[derive(Debug, Clone)]
pub struct CurveField {
    pub t0: f64,
    pub h: f64,
    pub margin: usize,
    pub values: Vec<AlgebraElement>,
}

impl CurveField {
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Norm at sample index `k` of the parent curve, if inside the margin.
    pub fn norm_at(&self, k: usize) -> Option<f64> {
        k.checked_sub(self.margin)
            .and_then(|i| self.values.get(i))
            .map(|v| v.norm())
    }
}
