// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::sync::Arc;

use bhg_core::curves::{
    bitension_theta_1d, cross, curve_from_states, delta_alpha_1d, frenet_apparatus, geodesic_curve,
    integrate_trajectory, ode_consistency_residual, write_curve_csv, CurveState, HelixPath,
    KAPPA_MIN,
};
use bhg_core::io::Exact;
use bhg_core::lie::{builtin_algebra, AlgebraBasis, AlgebraElement, GroupElement};
use serde::Serialize;

use crate::cli::{CurveCommand, GeodesicArgs, HelixArgs, IntegrateArgs};
use crate::failure::{Failure, Outcome};
use crate::output::{parse_list, sink, Format};
use crate::Settings;

/// Default threshold on the trajectory consistency residual.
pub const INTEGRATE_TOL: f64 = 1e-6;
/// Default threshold on the helix relations.
pub const HELIX_TOL: f64 = 1e-8;
/// Default threshold on geodesic tension and bitension.
pub const GEODESIC_TOL: f64 = 1e-10;

pub fn run(cmd: &CurveCommand, settings: &Settings) -> Outcome {
    match cmd {
        CurveCommand::Integrate(a) => integrate(a, settings),
        CurveCommand::Helix(a) => helix(a, settings),
        CurveCommand::Geodesic(a) => geodesic(a, settings),
    }
}

/// Initial data `(y, y', y'')` at `t = 0` from `helix:<a>` or `state:<y>;<y'>;<y''>`.
pub fn parse_init(text: &str, basis: &Arc<AlgebraBasis>) -> Result<CurveState, Failure> {
    let (kind, rest) = text
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("initial data `{text}` needs a `kind:` prefix")))?;
    match kind {
        "helix" => {
            let a = rest
                .trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("helix parameter `{rest}` is not a number")))?;
            Ok(HelixPath::new(a)?.initial_state(basis.clone(), 0.0)?)
        }
        "state" => {
            let parts: Vec<&str> = rest.split(';').collect();
            if parts.len() != 3 {
                return Err(Failure::Usage("state data needs three `;`-separated vectors".into()));
            }
            let mut v = parts
                .iter()
                .map(|p| Ok(AlgebraElement::new(basis.clone(), parse_list(p)?)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            let y2 = v.pop().unwrap();
            let y1 = v.pop().unwrap();
            let y = v.pop().unwrap();
            Ok(CurveState::new(0.0, y, y1, y2)?)
        }
        other => Err(Failure::Usage(format!("unknown initial data kind `{other}`, expected helix or state"))),
    }
}

fn check_step(h: f64) -> Outcome {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("step must be positive, got {h}")))
    }
}

fn integrate(args: &IntegrateArgs, settings: &Settings) -> Outcome {
    let format = Format::resolve(settings.format, Format::Csv, &[Format::Csv, Format::Json])?;
    let tol = settings.tol.unwrap_or(INTEGRATE_TOL);
    check_step(args.h)?;
    let basis = builtin_algebra(&args.algebra)?;
    let init = parse_init(&args.init, &basis)?;
    let states = integrate_trajectory(&init, args.h, args.steps)?;
    let curve = curve_from_states(&states, args.h);
    let residual = ode_consistency_residual(&states, args.h);

    let mut w = sink(args.out.as_deref())?;
    match format {
        Format::Json => writeln!(w, "{}", curve.to_json()?)?,
        _ => write_curve_csv(&mut w, &curve, &[("res_norm", residual.clone())])?,
    }
    w.flush()?;

    let worst = residual.iter().flatten().copied().fold(0.0, f64::max);
    eprintln!("{} samples, max res_norm {worst:.3e} (tol {tol:e})", curve.len());
    if worst <= tol {
        Ok(())
    } else {
        Err(Failure::Threshold(format!("res_norm {worst:.3e} > {tol:e}")))
    }
}

#[derive(Serialize)]
struct HelixReport {
    a: Exact,
    kappa: Exact,
    tau: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<HelixCheck>,
}

#[derive(Serialize)]
struct HelixCheck {
    samples: usize,
    /// Largest deviation of the Frenet curvature and torsion from the closed form.
    frenet_deviation: Exact,
    /// `max |kappa^2 - tau (1 - tau)|`.
    curvature_relation: Exact,
    /// `max |y''' - y x y''|` for the unit tangent `y`.
    tangent_equation: Exact,
    tol: Exact,
    pass: bool,
}

fn helix(args: &HelixArgs, settings: &Settings) -> Outcome {
    let format = Format::resolve(settings.format, Format::Text, &[Format::Text, Format::Json])?;
    let tol = settings.tol.unwrap_or(HELIX_TOL);
    let helix = HelixPath::new(args.a)?;
    let (kappa, tau) = (helix.curvature(), helix.torsion());

    let check = if args.check {
        if args.samples == 0 {
            return Err(Failure::Usage("--samples must be positive".into()));
        }
        let (mut deviation, mut relation, mut equation): (f64, f64, f64) = (0.0, 0.0, 0.0);
        // One full turn of the helix.
        let period = 2.0 * std::f64::consts::PI / helix.rate();
        for k in 0..args.samples {
            let s = period * k as f64 / args.samples as f64;
            let f = frenet_apparatus(&helix, s, KAPPA_MIN)?;
            deviation = deviation.max((f.kappa - kappa).abs()).max((f.tau - tau).abs());
            relation = relation.max((f.kappa * f.kappa - f.tau * (1.0 - f.tau)).abs());
            let [y, _, y2, y3] = helix.tangent_jet(s);
            let rhs = cross(&y, &y2);
            equation = (0..3).map(|i| (y3[i] - rhs[i]).abs()).fold(equation, f64::max);
        }
        Some(HelixCheck {
            samples: args.samples,
            frenet_deviation: Exact(deviation),
            curvature_relation: Exact(relation),
            tangent_equation: Exact(equation),
            tol: Exact(tol),
            pass: deviation.max(relation).max(equation) <= tol,
        })
    } else {
        None
    };

    let pass = check.as_ref().is_none_or(|c| c.pass);
    let mut w = sink(None)?;
    match format {
        Format::Json => {
            let report = HelixReport { a: Exact(args.a), kappa: Exact(kappa), tau: Exact(tau), check };
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
        }
        _ => {
            writeln!(w, "helix a = {}: kappa = {kappa}, tau = {tau}", args.a)?;
            if let Some(c) = &check {
                writeln!(w, "  frenet deviation          {:.3e}", c.frenet_deviation.0)?;
                writeln!(w, "  |kappa^2 - tau(1 - tau)|  {:.3e}", c.curvature_relation.0)?;
                writeln!(w, "  |y''' - y x y''|          {:.3e}", c.tangent_equation.0)?;
                writeln!(w, "  {} (tol {tol:e})", if pass { "PASS" } else { "FAIL" })?;
            }
        }
    }
    w.flush()?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Threshold("helix relations exceed the tolerance".into()))
    }
}

#[derive(Serialize)]
struct GeodesicReport {
    algebra: String,
    generator: Vec<Exact>,
    h: Exact,
    steps: usize,
    delta_alpha_sup: Exact,
    bitension_sup: Exact,
    tol: Exact,
    pass: bool,
}

fn geodesic(args: &GeodesicArgs, settings: &Settings) -> Outcome {
    let format = Format::resolve(settings.format, Format::Csv, &[Format::Csv, Format::Json])?;
    let tol = settings.tol.unwrap_or(GEODESIC_TOL);
    check_step(args.h)?;
    let basis = builtin_algebra(&args.algebra)?;
    let generator = AlgebraElement::new(basis.clone(), parse_list(&args.generator)?)?;
    let curve = geodesic_curve(&GroupElement::identity(basis.matrix_size()), &generator, args.h, args.steps)?;
    let delta_alpha = delta_alpha_1d(&curve)?;
    let bitension = bitension_theta_1d(&curve)?;
    let (da, bt) = (delta_alpha.sup_norm(), bitension.sup_norm());
    let pass = da <= tol && bt <= tol;

    let mut w = sink(args.out.as_deref())?;
    match format {
        Format::Json => {
            let report = GeodesicReport {
                algebra: basis.name().to_string(),
                generator: generator.coeffs().iter().copied().map(Exact).collect(),
                h: Exact(args.h),
                steps: args.steps,
                delta_alpha_sup: Exact(da),
                bitension_sup: Exact(bt),
                tol: Exact(tol),
                pass,
            };
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
        }
        _ => {
            let column = |f: &bhg_core::curves::CurveField| (0..curve.len()).map(|k| f.norm_at(k)).collect();
            write_curve_csv(
                &mut w,
                &curve,
                &[("delta_alpha_norm", column(&delta_alpha)), ("bitension_norm", column(&bitension))],
            )?;
        }
    }
    w.flush()?;
    eprintln!("delta alpha {da:.3e}, bitension {bt:.3e} (tol {tol:e})");
    if pass {
        Ok(())
    } else {
        Err(Failure::Threshold(format!("geodesic residuals {da:.3e}, {bt:.3e} exceed {tol:e}")))
    }
}
