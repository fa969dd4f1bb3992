// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

use bhg_core::io::{fmt_f64, Exact};
use bhg_core::lie::builtin_algebra;
use serde::Serialize;

use crate::cli::AlgebraArgs;
use crate::failure::{Failure, Outcome};
use crate::output::{sink, Format};
use crate::Settings;

/// Default invariant threshold.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Serialize)]
struct Constant {
    l: usize,
    t: usize,
    s: usize,
    value: Exact,
}

#[derive(Serialize)]
struct Report<'a> {
    name: &'a str,
    dim: usize,
    matrix_size: usize,
    inner_scale: Exact,
    /// `[X_l, X_t] = sum_s C^s_{lt} X_s`, 1-based, all nonzero entries.
    structure_constants: Vec<Constant>,
    invariants: Vec<(&'static str, Exact)>,
    tol: Exact,
    pass: bool,
}

pub fn run(args: &AlgebraArgs, settings: &Settings) -> Outcome {
    let format = Format::resolve(settings.format, Format::Text, &[Format::Text, Format::Csv, Format::Json])?;
    let tol = settings.tol.unwrap_or(DEFAULT_TOL);
    let basis = builtin_algebra(&args.name)?;
    let invariants = basis.check_invariants();
    let pass = invariants.passes(tol);
    let constants: Vec<(usize, usize, usize, f64)> = basis
        .nonzero_structure_constants()
        .iter()
        .map(|&(l, t, s, v)| (l + 1, t + 1, s + 1, v))
        .collect();

    let mut w = sink(None)?;
    match format {
        Format::Json => {
            let report = Report {
                name: basis.name(),
                dim: basis.dim(),
                matrix_size: basis.matrix_size(),
                inner_scale: Exact(basis.inner_scale()),
                structure_constants: constants
                    .iter()
                    .map(|&(l, t, s, v)| Constant { l, t, s, value: Exact(v) })
                    .collect(),
                invariants: invariants.entries().iter().map(|&(n, v)| (n, Exact(v))).collect(),
                tol: Exact(tol),
                pass,
            };
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(w, "l,t,s,value")?;
            for (l, t, s, v) in &constants {
                writeln!(w, "{l},{t},{s},{}", fmt_f64(*v))?;
            }
        }
        Format::Text => {
            writeln!(
                w,
                "{}: dimension {}, {}x{} matrices, <X, Y> = -{} Re Tr(XY)",
                basis.name(),
                basis.dim(),
                basis.matrix_size(),
                basis.matrix_size(),
                basis.inner_scale()
            )?;
            writeln!(w, "nonzero structure constants C^s_lt with l < t:")?;
            for (l, t, s, v) in constants.iter().filter(|c| c.0 < c.1) {
                writeln!(w, "  C^{s}_{l}{t} = {v}")?;
            }
            for (name, v) in invariants.entries() {
                let mark = if v <= tol { "PASS" } else { "FAIL" };
                writeln!(w, "  {name:<22} {v:.3e} {mark}")?;
            }
            if pass {
                writeln!(w, "all invariants PASS (tol {tol:e})")?;
            } else {
                writeln!(w, "invariants FAIL: worst {:.3e} > {tol:e}", invariants.worst())?;
            }
        }
    }
    w.flush()?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Invariant(format!(
            "{} basis violates its invariants by {:.3e}",
            basis.name(),
            invariants.worst()
        )))
    }
}
