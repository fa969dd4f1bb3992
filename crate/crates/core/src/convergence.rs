// SPDX-License-Identifier: Apache-2.0

//! Observed convergence orders from errors on successively refined grids.

/// `log(e_k / e_{k+1}) / log(refinement)` for consecutive pairs.
pub fn observed_orders(errors: &[f64], refinement: f64) -> Vec<f64> {
    errors
        .windows(2)
        .map(|w| (w[0] / w[1]).ln() / refinement.ln())
        .collect()
}

/// Whether every observed order lies in `[expected - tol, expected + tol]`.
pub fn orders_within(errors: &[f64], refinement: f64, expected: f64, tol: f64) -> bool {
    let orders = observed_orders(errors, refinement);
    !orders.is_empty() && orders.iter().all(|p| (p - expected).abs() <= tol)
}
