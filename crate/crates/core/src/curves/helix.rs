// SPDX-License-Identifier: Apache-2.0

//! The arc-length helix family whose tangent solves `y''' = y x y''`, the
//! su(2) form of the biharmonic curve equation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{su2, AlgebraBasis, AlgebraElement, GroupElement};

use super::curve::{CurveState, DiscreteCurve};
use super::frenet::{SpaceCurve, Vec3};
use super::integrate::integrate_curve;
use super::reconstruct::{reconstruct_group_curve, ReconstructOptions};

/// `x(s) = (a cos(cs), a sin(cs), cs)` with `c = 1/sqrt(a^2 + 1)`.
#[derive(Debug, Clone, Copy)]
pub struct HelixPath {
    a: f64,
}

impl HelixPath {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidParameter(format!("helix radius must be positive, got {a}")));
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// Angular rate `1/sqrt(a^2 + 1)`.
    pub fn rate(&self) -> f64 {
        1.0 / (self.a * self.a + 1.0).sqrt()
    }

    pub fn curvature(&self) -> f64 {
        self.a / (self.a * self.a + 1.0)
    }

    pub fn torsion(&self) -> f64 {
        1.0 / (self.a * self.a + 1.0)
    }

    /// `[y, y', y'', y''']` of the tangent `y = x'`.
    pub fn tangent_jet(&self, s: f64) -> [Vec3; 4] {
        let jet = self.jet_to_order(s, 4);
        [jet[1], jet[2], jet[3], jet[4]]
    }

    // Derivatives 0..=order of the position.
    fn jet_to_order(&self, s: f64, order: usize) -> Vec<Vec3> {
        let (a, c) = (self.a, self.rate());
        let (sn, cs) = (c * s).sin_cos();
        (0..=order)
            .map(|k| {
                // d^k/ds^k of (a cos(cs), a sin(cs)) rotates the phase by k * pi/2.
                let ck = c.powi(k as i32);
                let (re, im) = match k % 4 {
                    0 => (cs, sn),
                    1 => (-sn, cs),
                    2 => (-cs, -sn),
                    _ => (sn, -cs),
                };
                let z = match k {
                    0 => c * s,
                    1 => c,
                    _ => 0.0,
                };
                [a * ck * re, a * ck * im, z]
            })
            .collect()
    }

    /// Initial data `(y, y', y'')` at `s` in su(2) coordinates.
    pub fn initial_state(&self, basis: Arc<AlgebraBasis>, s: f64) -> Result<CurveState> {
        if basis.dim() != 3 {
            return Err(Error::InvalidInput(format!(
                "helix data lives in su2, got {}",
                basis.name()
            )));
        }
        let [y, y1, y2, _] = self.tangent_jet(s);
        CurveState::new(
            s,
            AlgebraElement::new(basis.clone(), y.to_vec())?,
            AlgebraElement::new(basis.clone(), y1.to_vec())?,
            AlgebraElement::new(basis, y2.to_vec())?,
        )
    }
}

impl SpaceCurve for HelixPath {
    fn jet(&self, s: f64) -> [Vec3; 4] {
        let j = self.jet_to_order(s, 3);
        [j[0], j[1], j[2], j[3]]
    }
}

/// Samples the helix on `s_range` (inclusive) and returns the space path and
/// the su(2) coefficient curve `F(s) = y(s) = x'(s)`.
pub fn helix_curve(a: f64, s_range: (f64, f64), samples: usize) -> Result<(Vec<Vec3>, DiscreteCurve)> {
    let helix = HelixPath::new(a)?;
    let (s0, s1) = s_range;
    if samples < 2 || !(s1 > s0) {
        return Err(Error::InvalidParameter(format!(
            "need at least two samples on a nonempty range, got {samples} on [{s0}, {s1}]"
        )));
    }
    let h = (s1 - s0) / (samples - 1) as f64;
    let basis = Arc::new(su2());
    let mut path = Vec::with_capacity(samples);
    let mut f = Vec::with_capacity(samples);
    for k in 0..samples {
        let s = s0 + k as f64 * h;
        let [x, y, ..] = helix.jet(s);
        path.push(x);
        f.push(AlgebraElement::new(basis.clone(), y.to_vec())?);
    }
    Ok((path, DiscreteCurve::new(basis, s0, h, f, None)?))
}

/// Integrates `F''' = [F, F'']` from helix data at `s = 0` and reconstructs
/// the group curve from the identity.
pub fn integrated_helix_curve(a: f64, h: f64, steps: usize) -> Result<DiscreteCurve> {
    let init = HelixPath::new(a)?.initial_state(Arc::new(su2()), 0.0)?;
    let curve = integrate_curve(&init, h, steps)?;
    reconstruct_group_curve(&curve, &GroupElement::identity(2), ReconstructOptions::default())
}
