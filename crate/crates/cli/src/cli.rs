// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Harmonic and biharmonic maps into compact matrix Lie groups.
#[derive(Debug, Parser)]
#[command(name = "bhg", version)]
pub struct Cli {
    /// Pass/fail threshold; each command has its own default.
    #[arg(long, env = "BHG_TOL", global = true)]
    pub tol: Option<f64>,

    /// Output format for the command's main output.
    #[arg(long, env = "BHG_FORMAT", global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print structure constants and check the basis invariants.
    Algebra(AlgebraArgs),
    /// Curve integration and closed-form checks.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Residuals of grid maps.
    #[command(subcommand)]
    Map(MapCommand),
    /// Flatness of the loop family built from a grid map.
    Loop(LoopArgs),
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// `su2`, `su3`, ...
    pub name: String,
}

#[derive(Debug, Subcommand)]
pub enum CurveCommand {
    /// RK4 trajectory of the third-order curve equation, written as CSV.
    Integrate(IntegrateArgs),
    /// Frenet data of the closed-form helix.
    Helix(HelixArgs),
    /// One-parameter subgroup with its tension and bitension.
    Geodesic(GeodesicArgs),
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    #[arg(long, default_value = "su2")]
    pub algebra: String,
    /// `helix:<a>` or `state:<y>;<y'>;<y''>` with comma-separated coefficients.
    #[arg(long)]
    pub init: String,
    #[arg(long, default_value_t = 1e-3)]
    pub h: f64,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HelixArgs {
    #[arg(long)]
    pub a: f64,
    /// Evaluate the curvature relation and the tangent equation along the curve.
    #[arg(long)]
    pub check: bool,
    /// Arc-length samples used by `--check`.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct GeodesicArgs {
    #[arg(long, default_value = "su2")]
    pub algebra: String,
    /// Generator coefficients, comma-separated.
    #[arg(long = "X", alias = "generator")]
    pub generator: String,
    #[arg(long, default_value_t = 1e-2)]
    pub h: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum MapCommand {
    /// Evaluate named residuals on one or more grid-map files.
    Residuals(ResidualArgs),
    /// Write the product-ansatz map of an integrated curve as grid-map JSON.
    Ansatz(AnsatzArgs),
}

#[derive(Debug, Args)]
pub struct ResidualArgs {
    /// Grid-map JSON; repeat for a refinement sequence.
    #[arg(long, required = true)]
    pub input: Vec<PathBuf>,
    /// A residual name or `all`.
    #[arg(long, default_value = "all")]
    pub which: String,
    /// Per-point CSV of every evaluated residual.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnsatzArgs {
    #[arg(long, default_value = "su2")]
    pub algebra: String,
    /// Curve initial data, as for `curve integrate`.
    #[arg(long)]
    pub init: String,
    #[arg(long, default_value_t = 1.0 / 512.0)]
    pub h: f64,
    #[arg(long, default_value_t = 4096)]
    pub steps: usize,
    /// Curve samples per grid step.
    #[arg(long, default_value_t = 32)]
    pub stride: usize,
    /// Grid columns; defaults to all that fit.
    #[arg(long)]
    pub nx: Option<usize>,
    #[arg(long, default_value_t = 9)]
    pub ny: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LoopArgs {
    /// Grid-map JSON.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = bhg_core::complex_loop::DEFAULT_LOOP_SAMPLES)]
    pub lambda_samples: usize,
    /// Form the family is built from.
    #[arg(long, value_enum, default_value_t = LoopSource::Pullback)]
    pub source: LoopSource,
    /// Also report the harmonic system for the induced form and the
    /// driven loop-family residuals.
    #[arg(long)]
    pub three_step: bool,
    /// Coefficient of the conjugate bracket in the driven equations.
    #[arg(long, value_enum, default_value_t = Coefficient::Unconjugated)]
    pub conjugate_coefficient: Coefficient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LoopSource {
    /// The pulled-back Maurer-Cartan form; flat for all parameters iff harmonic.
    Pullback,
    /// The complexified Theta form.
    Theta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coefficient {
    /// `(1 - nu)/2`.
    Unconjugated,
    /// `(1 - nu^-1)/2`.
    Conjugated,
}
