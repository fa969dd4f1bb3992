// SPDX-License-Identifier: Apache-2.0

//! Number formatting shared by the JSON and CSV writers.
//!
//! Every real is written with 17 significant digits so files round-trip
//! bit-exactly.

use std::str::FromStr;

use serde::ser::{Error as _, Serialize, Serializer};

/// An `f64` that serializes to JSON with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exact(pub f64);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom(format!("cannot serialize non-finite {}", self.0)));
        }
        let n = serde_json::Number::from_str(&fmt_f64(self.0)).map_err(S::Error::custom)?;
        n.serialize(serializer)
    }
}

/// `'.'`-decimal scientific notation with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Wraps a slice for exact serialization.
pub fn exact_vec(v: &[f64]) -> Vec<Exact> {
    v.iter().copied().map(Exact).collect()
}
