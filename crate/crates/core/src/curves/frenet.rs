// SPDX-License-Identifier: Apache-2.0

//! Frenet-Serret apparatus of space curves, from analytic derivatives or from
//! uniformly spaced samples.

use crate::error::{Error, Result};

/// Curvature below which the Frenet frame is considered undefined.
pub const KAPPA_MIN: f64 = 1e-8;

pub type Vec3 = [f64; 3];

/// Orthonormal frame with curvature and torsion at parameter `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetData {
    pub s: f64,
    pub e1: Vec3,
    pub e2: Vec3,
    pub e3: Vec3,
    pub kappa: f64,
    pub tau: f64,
}

impl FrenetData {
    /// Largest deviation of `(e1, e2, e3)` from an orthonormal right-handed frame.
    pub fn frame_defect(&self) -> f64 {
        let frame = [self.e1, self.e2, self.e3];
        let mut worst: f64 = 0.0;
        for (i, a) in frame.iter().enumerate() {
            for (j, b) in frame.iter().enumerate() {
                let delta = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(a, b) - delta).abs());
            }
        }
        let c = cross(&self.e1, &self.e2);
        worst.max(norm(&sub(&c, &self.e3)))
    }
}

/// A space curve with analytic derivatives.
pub trait SpaceCurve {
    /// `[x, x', x'', x''']` at parameter `s`.
    fn jet(&self, s: f64) -> [Vec3; 4];
}

/// Circle of radius `radius` in the `xy`-plane, arc-length parametrized.
#[derive(Debug, Clone, Copy)]
pub struct CirclePath {
    pub radius: f64,
}

impl SpaceCurve for CirclePath {
    fn jet(&self, s: f64) -> [Vec3; 4] {
        let r = self.radius;
        let (sn, cs) = (s / r).sin_cos();
        [
            [r * cs, r * sn, 0.0],
            [-sn, cs, 0.0],
            [-cs / r, -sn / r, 0.0],
            [sn / (r * r), -cs / (r * r), 0.0],
        ]
    }
}

/// Straight line `s * direction`.
#[derive(Debug, Clone, Copy)]
pub struct LinePath {
    pub direction: Vec3,
}

impl SpaceCurve for LinePath {
    fn jet(&self, s: f64) -> [Vec3; 4] {
        let d = self.direction;
        [[s * d[0], s * d[1], s * d[2]], d, [0.0; 3], [0.0; 3]]
    }
}

/// Frenet apparatus of an analytic curve at `s`.
pub fn frenet_apparatus(curve: &dyn SpaceCurve, s: f64, kappa_min: f64) -> Result<FrenetData> {
    let [_, d1, d2, d3] = curve.jet(s);
    frame_from_derivatives(s, d1, d2, d3, kappa_min)
}

/// Frenet apparatus at sample `index` of a uniformly spaced point sequence,
/// using second-order central differences (needs two samples on each side).
pub fn frenet_from_samples(points: &[Vec3], h: f64, index: usize, kappa_min: f64) -> Result<FrenetData> {
    if points.len() < 5 {
        return Err(Error::InsufficientSamples {
            needed: 5,
            got: points.len(),
        });
    }
    if index < 2 || index + 2 >= points.len() {
        return Err(Error::RangeError(format!(
            "sample {index} lies within two samples of the end"
        )));
    }
    let p = |k: usize| points[k];
    let (m2, m1, c0, p1, p2) = (p(index - 2), p(index - 1), p(index), p(index + 1), p(index + 2));
    let mut d1 = [0.0; 3];
    let mut d2 = [0.0; 3];
    let mut d3 = [0.0; 3];
    for i in 0..3 {
        d1[i] = (p1[i] - m1[i]) / (2.0 * h);
        d2[i] = (p1[i] - 2.0 * c0[i] + m1[i]) / (h * h);
        d3[i] = (p2[i] - 2.0 * p1[i] + 2.0 * m1[i] - m2[i]) / (2.0 * h * h * h);
    }
    frame_from_derivatives(index as f64 * h, d1, d2, d3, kappa_min)
}

// Parametrization-independent formulas: kappa = |x' x x''| / |x'|^3,
// tau = (x' x x'') . x''' / |x' x x''|^2.
fn frame_from_derivatives(s: f64, d1: Vec3, d2: Vec3, d3: Vec3, kappa_min: f64) -> Result<FrenetData> {
    let speed = norm(&d1);
    if !(speed > 0.0) {
        return Err(Error::DegenerateCurvature { kappa: 0.0, kappa_min });
    }
    let b = cross(&d1, &d2);
    let bn = norm(&b);
    let kappa = bn / speed.powi(3);
    if !(kappa > kappa_min) {
        return Err(Error::DegenerateCurvature { kappa, kappa_min });
    }
    let tau = dot(&b, &d3) / (bn * bn);
    let e1 = scale(&d1, 1.0 / speed);
    let e3 = scale(&b, 1.0 / bn);
    let e2 = cross(&e3, &e1);
    Ok(FrenetData {
        s,
        e1,
        e2,
        e3,
        kappa,
        tau,
    })
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn scale(a: &Vec3, k: f64) -> Vec3 {
    [a[0] * k, a[1] * k, a[2] * k]
}
