// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{AlgebraBasis, AlgebraElement};
use crate::scalar::coeff_norm;

use super::curve::{CurveState, DiscreteCurve};

/// Right-hand side of the biharmonic curve equation `F''' = [F, F'']`,
/// in coordinates `y'''_k = sum_ij y_i y''_j C^k_ij`.
pub fn biharmonic_rhs(basis: &AlgebraBasis, state: &CurveState) -> Result<AlgebraElement> {
    if *basis != **state.basis() {
        return Err(Error::BasisMismatch {
            left: basis.name().to_string(),
            right: state.basis().name().to_string(),
        });
    }
    state.y.bracket(&state.y2)
}

/// Integrates `(y, y', y'')' = (y', y'', [y, y''])` with classical RK4 and
/// returns every state, `steps + 1` in total.
pub fn integrate_trajectory(init: &CurveState, h: f64, steps: usize) -> Result<Vec<CurveState>> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    if steps == 0 {
        return Err(Error::InvalidParameter("at least one step is required".into()));
    }
    if !init.is_finite() {
        return Err(Error::DivergedIntegration { step: 0 });
    }
    let basis = init.basis().clone();
    let n = basis.dim();

    let rhs = |u: &[f64], out: &mut [f64]| {
        out[..n].copy_from_slice(&u[n..2 * n]);
        out[n..2 * n].copy_from_slice(&u[2 * n..]);
        basis.bracket_into(&u[..n], &u[2 * n..], &mut out[2 * n..]);
    };

    let mut u: Vec<f64> = [init.y.coeffs(), init.y1.coeffs(), init.y2.coeffs()].concat();
    let mut k1 = vec![0.0; 3 * n];
    let mut k2 = vec![0.0; 3 * n];
    let mut k3 = vec![0.0; 3 * n];
    let mut k4 = vec![0.0; 3 * n];
    let mut tmp = vec![0.0; 3 * n];

    let mut out = Vec::with_capacity(steps + 1);
    out.push(init.clone());
    for step in 1..=steps {
        rhs(&u, &mut k1);
        axpy(&u, 0.5 * h, &k1, &mut tmp);
        rhs(&tmp, &mut k2);
        axpy(&u, 0.5 * h, &k2, &mut tmp);
        rhs(&tmp, &mut k3);
        axpy(&u, h, &k3, &mut tmp);
        rhs(&tmp, &mut k4);
        for i in 0..3 * n {
            u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::DivergedIntegration { step });
        }
        out.push(state_from(&basis, init.t + step as f64 * h, &u));
    }
    Ok(out)
}

/// RK4 integration of the biharmonic curve equation, keeping the `F` samples.
pub fn integrate_curve(init: &CurveState, h: f64, steps: usize) -> Result<DiscreteCurve> {
    let states = integrate_trajectory(init, h, steps)?;
    Ok(curve_from_states(&states, h))
}

pub fn curve_from_states(states: &[CurveState], h: f64) -> DiscreteCurve {
    let basis = states[0].basis().clone();
    let f = states.iter().map(|s| s.y.clone()).collect();
    DiscreteCurve::from_parts_unchecked(basis, states[0].t, h, f, None)
}

/// `|D(y'') - [y, y'']|` along a trajectory, where `D` is the central
/// difference; `None` at the two end samples.
pub fn ode_consistency_residual(states: &[CurveState], h: f64) -> Vec<Option<f64>> {
    let len = states.len();
    (0..len)
        .map(|k| {
            if k == 0 || k + 1 >= len {
                return None;
            }
            let n = states[k].basis().dim();
            let rhs = states[k].basis().bracket_coeffs(states[k].y.coeffs(), states[k].y2.coeffs());
            let diff: Vec<f64> = (0..n)
                .map(|i| {
                    (states[k + 1].y2.coeffs()[i] - states[k - 1].y2.coeffs()[i]) / (2.0 * h)
                        - rhs[i]
                })
                .collect();
            Some(coeff_norm(&diff))
        })
        .collect()
}

fn axpy(u: &[f64], a: f64, k: &[f64], out: &mut [f64]) {
    for ((o, x), y) in out.iter_mut().zip(u).zip(k) {
        *o = x + a * y;
    }
}

fn state_from(basis: &Arc<AlgebraBasis>, t: f64, u: &[f64]) -> CurveState {
    let n = basis.dim();
    let el = |r: std::ops::Range<usize>| {
        AlgebraElement::new(basis.clone(), u[r].to_vec()).expect("dimension matches basis")
    };
    CurveState {
        t,
        y: el(0..n),
        y1: el(n..2 * n),
        y2: el(2 * n..3 * n),
    }
}
