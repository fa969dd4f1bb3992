// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::Path;

use bhg_core::complex_loop::{product_ansatz_map, AnsatzGrid};
use bhg_core::curves::{integrate_curve, reconstruct_group_curve};
use bhg_core::io::{fmt_f64, Exact};
use bhg_core::lie::{builtin_algebra, GroupElement};
use bhg_core::registry::ResidualRegistry;
use bhg_core::surface::{GValuedField, GridMap};
use serde::Serialize;

use crate::cli::{AnsatzArgs, MapCommand, ResidualArgs};
use crate::commands::curve::parse_init;
use crate::failure::{Failure, Outcome};
use crate::output::{read_input, sink, Format};
use crate::Settings;

/// Default residual threshold.
pub const DEFAULT_TOL: f64 = 1e-6;

pub fn run(cmd: &MapCommand, settings: &Settings) -> Outcome {
    match cmd {
        MapCommand::Residuals(a) => residuals(a, settings),
        MapCommand::Ansatz(a) => ansatz(a, settings),
    }
}

pub fn load_map(path: &Path) -> Result<GridMap, Failure> {
    GridMap::from_json(&read_input(path)?).map_err(|e| match Failure::from(e) {
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
        other => other,
    })
}

#[derive(Serialize)]
struct Named {
    name: &'static str,
    sup: Exact,
}

#[derive(Serialize)]
struct InputSummary {
    path: String,
    nx: usize,
    ny: usize,
    hx: Exact,
    hy: Exact,
    residuals: Vec<Named>,
}

#[derive(Serialize)]
struct Ratios {
    name: &'static str,
    /// Coarse-to-fine quotients of successive sup norms; null where the finer one is zero.
    ratios: Vec<Option<Exact>>,
}

#[derive(Serialize)]
struct Summary {
    tol: Exact,
    pass: bool,
    inputs: Vec<InputSummary>,
    ratios: Vec<Ratios>,
}

fn residuals(args: &ResidualArgs, settings: &Settings) -> Outcome {
    let format = Format::resolve(settings.format, Format::Text, &[Format::Text, Format::Json])?;
    let tol = settings.tol.unwrap_or(DEFAULT_TOL);
    let registry = ResidualRegistry::with_builtins();
    let kinds = registry.select(&args.which)?;

    let mut fields: Vec<Vec<GValuedField>> = Vec::new();
    let mut inputs = Vec::new();
    for path in &args.input {
        let map = load_map(path)?;
        let evaluated = kinds.iter().map(|k| k.evaluate(&map)).collect::<Result<Vec<_>, _>>()?;
        let g = map.grid();
        inputs.push(InputSummary {
            path: path.display().to_string(),
            nx: g.nx,
            ny: g.ny,
            hx: Exact(g.hx),
            hy: Exact(g.hy),
            residuals: kinds
                .iter()
                .zip(&evaluated)
                .map(|(k, f)| Named { name: k.name(), sup: Exact(f.sup_norm()) })
                .collect(),
        });
        fields.push(evaluated);
    }
    let ratios: Vec<Ratios> = if inputs.len() < 2 {
        Vec::new()
    } else {
        kinds
            .iter()
            .enumerate()
            .map(|(c, k)| Ratios {
                name: k.name(),
                ratios: inputs
                    .windows(2)
                    .map(|p| {
                        let (coarse, fine) = (p[0].residuals[c].sup.0, p[1].residuals[c].sup.0);
                        (fine > 0.0).then(|| Exact(coarse / fine))
                    })
                    .collect(),
            })
            .collect()
    };
    let worst = inputs
        .iter()
        .flat_map(|i| i.residuals.iter().map(|r| r.sup.0))
        .fold(0.0, f64::max);
    let pass = worst < tol;

    if let Some(out) = &args.out {
        let mut w = sink(Some(out))?;
        let dim = fields.first().and_then(|f| f.first()).map_or(0, |f| f.dim());
        let coeffs: Vec<String> = (1..=dim).map(|i| format!("coeff_{i}")).collect();
        writeln!(w, "input,residual,x,y,{},norm", coeffs.join(","))?;
        for (n, per_input) in fields.iter().enumerate() {
            for (k, f) in kinds.iter().zip(per_input) {
                for (i, j) in f.interior_points() {
                    let g = f.grid();
                    let values: Vec<String> = f.at(i, j).iter().map(|v| fmt_f64(*v)).collect();
                    writeln!(
                        w,
                        "{},{},{},{},{},{}",
                        n + 1,
                        k.name(),
                        fmt_f64(g.x(i)),
                        fmt_f64(g.y(j)),
                        values.join(","),
                        fmt_f64(f.norm_at(i, j))
                    )?;
                }
            }
        }
        w.flush()?;
    }

    let mut w = sink(None)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &Summary { tol: Exact(tol), pass, inputs, ratios })?;
            writeln!(w)?;
        }
        _ => {
            for (n, s) in inputs.iter().enumerate() {
                writeln!(w, "input {}: {} ({}x{}, h = {:e} x {:e})", n + 1, s.path, s.nx, s.ny, s.hx.0, s.hy.0)?;
                for r in &s.residuals {
                    writeln!(w, "  {:<14} {:.6e}", r.name, r.sup.0)?;
                }
            }
            if !ratios.is_empty() {
                writeln!(w, "successive ratios:")?;
                for r in &ratios {
                    let q: Vec<String> = r
                        .ratios
                        .iter()
                        .map(|q| q.map_or("-".to_string(), |q| format!("{:.4}", q.0)))
                        .collect();
                    writeln!(w, "  {:<14} {}", r.name, q.join(" "))?;
                }
            }
            writeln!(w, "{} (max {worst:.3e}, tol {tol:e})", if pass { "PASS" } else { "FAIL" })?;
        }
    }
    w.flush()?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Threshold(format!("residual {worst:.3e} >= {tol:e}")))
    }
}

fn ansatz(args: &AnsatzArgs, settings: &Settings) -> Outcome {
    Format::resolve(settings.format, Format::Json, &[Format::Json])?;
    if !(args.h > 0.0 && args.h.is_finite()) {
        return Err(Failure::Usage(format!("step must be positive, got {}", args.h)));
    }
    if args.stride == 0 {
        return Err(Failure::Usage("--stride must be positive".into()));
    }
    let basis = builtin_algebra(&args.algebra)?;
    let init = parse_init(&args.init, &basis)?;
    let coefficients = integrate_curve(&init, args.h, args.steps)?;
    let curve = reconstruct_group_curve(
        &coefficients,
        &GroupElement::identity(basis.matrix_size()),
        Default::default(),
    )?;
    let nx = args.nx.unwrap_or(args.steps / args.stride + 1);
    let map = product_ansatz_map(&curve, AnsatzGrid::square(&curve, args.stride, nx, args.ny))?;
    let mut w = sink(args.out.as_deref())?;
    writeln!(w, "{}", map.to_json()?)?;
    w.flush()?;
    Ok(())
}
