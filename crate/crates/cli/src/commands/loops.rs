// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

use bhg_core::complex_loop::{
    alpha_family_residuals, circle_samples, complexify, flatness_profile, three_step_fields,
    theta_tilde, ConjugateCoefficient, ThreeStepReport,
};
use bhg_core::io::Exact;
use bhg_core::surface::maurer_cartan_pullback;
use serde::Serialize;

use crate::cli::{Coefficient, LoopArgs, LoopSource};
use crate::commands::map::load_map;
use crate::failure::{Failure, Outcome};
use crate::output::{sink, Format};
use crate::Settings;

/// Default flatness threshold.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Serialize)]
struct Sample {
    lambda: [Exact; 2],
    flatness: Exact,
}

#[derive(Serialize)]
struct DrivenSample {
    nu: [Exact; 2],
    driven_z: Exact,
    driven_zbar: Exact,
    zero_curvature: Exact,
}

#[derive(Serialize)]
struct ThreeStep {
    report: ThreeStepReport,
    harmonic_system_residual: Exact,
    conjugate_coefficient: &'static str,
    /// Driven loop-family residuals with right-hand side Theta.
    driven: Vec<DrivenSample>,
}

#[derive(Serialize)]
struct LoopReport {
    input: String,
    source: &'static str,
    samples: Vec<Sample>,
    max_flatness: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    three_step: Option<ThreeStep>,
    tol: Exact,
    pass: bool,
}

fn pair(z: num_complex::Complex64) -> [Exact; 2] {
    [Exact(z.re), Exact(z.im)]
}

pub fn run(args: &LoopArgs, settings: &Settings) -> Outcome {
    let format = Format::resolve(settings.format, Format::Json, &[Format::Text, Format::Json])?;
    let tol = settings.tol.unwrap_or(DEFAULT_TOL);
    if args.lambda_samples == 0 {
        return Err(Failure::Usage("--lambda-samples must be positive".into()));
    }
    let map = load_map(&args.input)?;
    let lambdas = circle_samples(args.lambda_samples);
    let form = match args.source {
        LoopSource::Pullback => complexify(&maurer_cartan_pullback(&map)?)?,
        LoopSource::Theta => theta_tilde(&map)?,
    };
    let profile = flatness_profile(&form, &lambdas)?;
    let max_flatness = profile.iter().map(|p| p.1).fold(0.0, f64::max);
    let mut pass = max_flatness < tol;

    let three_step = if args.three_step {
        let fields = three_step_fields(&map)?;
        let report = fields.report();
        pass &= report.harmonic_system_residual() < tol;
        let (coefficient, label) = match args.conjugate_coefficient {
            Coefficient::Unconjugated => (ConjugateCoefficient::Unconjugated, "unconjugated"),
            Coefficient::Conjugated => (ConjugateCoefficient::Conjugated, "conjugated"),
        };
        let driven = lambdas
            .iter()
            .map(|nu| {
                let r = alpha_family_residuals(&fields.a, &fields.b, nu.value(), map.mu(), coefficient)?;
                let [z, zbar, curvature] = r.sup_norms();
                Ok(DrivenSample {
                    nu: pair(nu.value()),
                    driven_z: Exact(z),
                    driven_zbar: Exact(zbar),
                    zero_curvature: Exact(curvature),
                })
            })
            .collect::<Result<Vec<_>, bhg_core::Error>>()?;
        Some(ThreeStep {
            harmonic_system_residual: Exact(report.harmonic_system_residual()),
            report,
            conjugate_coefficient: label,
            driven,
        })
    } else {
        None
    };

    let report = LoopReport {
        input: args.input.display().to_string(),
        source: match args.source {
            LoopSource::Pullback => "pullback",
            LoopSource::Theta => "theta",
        },
        samples: profile
            .iter()
            .map(|(l, r)| Sample { lambda: pair(l.value()), flatness: Exact(*r) })
            .collect(),
        max_flatness: Exact(max_flatness),
        three_step,
        tol: Exact(tol),
        pass,
    };

    let mut w = sink(None)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
        }
        _ => {
            writeln!(w, "{} ({} form, {} samples)", report.input, report.source, lambdas.len())?;
            for (l, r) in &profile {
                let z = l.value();
                writeln!(w, "  lambda = {:+.6}{:+.6}i  flatness {r:.3e}", z.re, z.im)?;
            }
            if let Some(t) = &report.three_step {
                let r = &t.report;
                writeln!(w, "  alpha flatness  {:.3e}", r.alpha_flatness)?;
                writeln!(w, "  B divergence    {:.3e}", r.b_divergence)?;
                writeln!(w, "  B flatness      {:.3e}", r.b_flatness)?;
                writeln!(w, "  B norm          {:.3e}", r.b_norm)?;
            }
            writeln!(w, "{} (max flatness {max_flatness:.3e}, tol {tol:e})", if pass { "PASS" } else { "FAIL" })?;
        }
    }
    w.flush()?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Threshold(format!("flatness violated: {max_flatness:.3e} >= {tol:e}")))
    }
}
