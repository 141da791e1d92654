//! Command-line front end: parse a request, run it, render the report.
//!
//! [`run`] never prints or exits; it returns the exit status and the text
//! destined for stdout, so the binary and the tests share one code path.

pub mod error;
pub mod format;
pub mod report;
pub mod reproduce;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use resistnet_core::identities::{
    finite_to_infinite_convergence, i1_closed, i1_direct, i2_closed, i2_direct, product_identity_free,
    product_identity_periodic, r_infinite_2d, r_infinite_3d,
};
use resistnet_core::{decompose, solve_exact, ExactRational, LatticeSpec, Network};

use crate::error::{CliError, CliResult};
use crate::format::{
    network_to_json, parse_bc, parse_coords, parse_dims, parse_network, parse_offsets, parse_rational, NetworkFormat,
};
use crate::report::{render, ConvergenceEntry, ConvergenceReport, IdentityReport, OutputFormat, Report};

/// Relative tolerance between floating and exact answers unless
/// `RESISTNET_TOL` says otherwise.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const AFTER_HELP: &str = "\
Lattice nodes are numbered x + M*y + M*N*z (x fastest) for dims MxNxL.
Exit codes: 0 ok, 2 parse error, 3 disconnected network, 4 index out of range,
5 numerical failure (including a tolerance violation or a failing reproduce row).
RESISTNET_TOL sets the float/exact comparison tolerance (default 1e-9).";

#[derive(Debug, Parser)]
#[command(
    name = "resistnet",
    version,
    about = "Two-point resistance in resistor networks and lattices"
)]
#[command(after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resistance between two nodes of a network file.
    Graph(GraphArgs),
    /// Resistance between two nodes of a regular lattice.
    Lattice(LatticeArgs),
    /// Evaluate one of the lattice-sum identities.
    Identity(IdentityArgs),
    /// Resistance on the infinite square or cubic lattice.
    Infinite(InfiniteArgs),
    /// Recompute every worked example.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Float,
    Exact,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FloatMethod {
    ClosedForm,
    Spectral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    I1,
    I2,
    ProductFree,
    ProductPeriodic,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Network file (JSON or `i j r` text); `-` reads stdin.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    /// Node labels in the file and in --from/--to start at 1.
    #[arg(long)]
    pub one_based: bool,
    #[arg(long, value_enum, default_value_t = Mode::Float)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// free, periodic, cylinder, moebius, klein (or free1d, periodic2d, ...).
    #[arg(long)]
    pub bc: String,
    /// Axis lengths, e.g. 5x4 or 5x5x4.
    #[arg(long)]
    pub dims: String,
    /// Resistance along x.
    #[arg(long, default_value = "1")]
    pub r: String,
    /// Resistance along y.
    #[arg(long, default_value = "1")]
    pub s: String,
    /// Resistance along z.
    #[arg(long, default_value = "1")]
    pub t: String,
    /// Comma-separated coordinates, e.g. 0,0.
    #[arg(long, required_unless_present = "emit_network")]
    pub from: Option<String>,
    #[arg(long, required_unless_present = "emit_network")]
    pub to: Option<String>,
    /// Floating-point method for float and both modes.
    #[arg(long, value_enum, default_value_t = FloatMethod::ClosedForm)]
    pub method: FloatMethod,
    /// Print the lattice as a JSON network file instead of solving.
    #[arg(long)]
    pub emit_network: bool,
    #[arg(long, value_enum, default_value_t = Mode::Float)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub ell: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct InfiniteArgs {
    /// Offset between the nodes: dx,dy or dx,dy,dz.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: String,
    #[arg(long, default_value = "1")]
    pub r: String,
    #[arg(long, default_value = "1")]
    pub s: String,
    #[arg(long, default_value = "1")]
    pub t: String,
    /// Compare unit N x N lattices of these sizes (e.g. 8,16,32) instead.
    #[arg(long)]
    pub sizes: Option<String>,
    /// Boundary condition for --sizes.
    #[arg(long, default_value = "periodic")]
    pub bc: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

/// Exit status and stdout text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Tolerance from the `RESISTNET_TOL` value, if any.
pub fn tolerance_from(var: Option<&str>) -> CliResult<f64> {
    match var {
        None => Ok(DEFAULT_TOLERANCE),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(CliError::Parse(format!(
                "RESISTNET_TOL must be a nonnegative number, got {s:?}"
            ))),
        },
    }
}

/// Run with `RESISTNET_TOL` taken from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let var = std::env::var("RESISTNET_TOL").ok();
    run_with(args, var.as_deref())
}

/// Run with an explicit `RESISTNET_TOL` value.
pub fn run_with<I, T>(args: I, tol_var: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    },
                    stdout: e.render().to_string(),
                },
                _ => failure(CliError::Parse(e.render().to_string().trim_end().to_string())),
            };
        }
    };
    match tolerance_from(tol_var).and_then(|tol| dispatch(&cli.command, tol)) {
        Ok(out) => out,
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Outcome {
    let mut stdout = e.to_json();
    stdout.push('\n');
    Outcome {
        code: e.exit_code(),
        stdout,
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome { code: 0, stdout }
}

fn dispatch(cmd: &Command, tol: f64) -> CliResult<Outcome> {
    match cmd {
        Command::Graph(a) => graph(a, tol),
        Command::Lattice(a) => lattice(a, tol),
        Command::Identity(a) => identity(a),
        Command::Infinite(a) => infinite(a),
        Command::Reproduce(a) => {
            let report = reproduce::reproduce(tol)?;
            let code = if report.all_passed() { 0 } else { 5 };
            Ok(Outcome {
                code,
                stdout: render(&report, a.output)?,
            })
        }
    }
}

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

/// Relative gap between a float answer and the exact one.
fn discrepancy(float: f64, exact: &ExactRational) -> f64 {
    let x = exact.to_f64();
    if x == 0.0 {
        float.abs()
    } else {
        (float - x).abs() / x.abs()
    }
}

/// Assemble a report from the float and exact answers a mode asks for.
fn finish_report(
    mode: Mode,
    float_method: &str,
    float: impl FnOnce() -> CliResult<f64>,
    exact: impl FnOnce() -> CliResult<ExactRational>,
    pair: (Vec<i64>, Vec<i64>),
    spec: String,
    tol: f64,
) -> CliResult<Report> {
    let report = match mode {
        Mode::Float => Report {
            method: float_method.into(),
            value_float: float()?,
            value_exact: None,
            pair,
            spec,
            discrepancy: None,
        },
        Mode::Exact => {
            let x = exact()?;
            Report {
                method: "oracle".into(),
                value_float: x.to_f64(),
                value_exact: Some(x.to_string()),
                pair,
                spec,
                discrepancy: None,
            }
        }
        Mode::Both => {
            let x = exact()?;
            let f = float()?;
            let d = discrepancy(f, &x);
            if d.is_nan() || d > tol {
                return Err(CliError::Numeric(format!(
                    "{float_method} value {f} differs from exact {x} by {d:e} (relative), above tolerance {tol:e}"
                )));
            }
            Report {
                method: format!("{float_method}+oracle"),
                value_float: f,
                value_exact: Some(x.to_string()),
                pair,
                spec,
                discrepancy: Some(d),
            }
        }
    };
    Ok(report)
}

fn graph(a: &GraphArgs, tol: f64) -> CliResult<Outcome> {
    let text = read_input(&a.input)?;
    let format = match a.input_format {
        InputFormat::Json => NetworkFormat::Json,
        InputFormat::Text => NetworkFormat::Text,
        InputFormat::Auto => NetworkFormat::detect((a.input != "-").then_some(a.input.as_str()), &text),
    };
    let base = usize::from(a.one_based);
    let net = parse_network(&text, format, base)?;
    let index = |label: usize| -> CliResult<usize> {
        let i = label
            .checked_sub(base)
            .ok_or_else(|| CliError::Range(format!("node label {label} is below {base}")))?;
        if i >= net.n_nodes() {
            return Err(CliError::Range(format!(
                "node label {label} is not in a {}-node network",
                net.n_nodes()
            )));
        }
        Ok(i)
    };
    let (alpha, beta) = (index(a.from)?, index(a.to)?);
    let spec = format!("network {} nodes {} edges", net.n_nodes(), net.edges().len());
    let report = finish_report(
        a.mode,
        "spectral",
        || spectral(&net, alpha, beta),
        || Ok(solve_exact(&net, alpha, beta)?),
        (vec![a.from as i64], vec![a.to as i64]),
        spec,
        tol,
    )?;
    Ok(ok(render(&report, a.output)?))
}

fn spectral(net: &Network, alpha: usize, beta: usize) -> CliResult<f64> {
    net.require_connected()?;
    Ok(decompose(&net.laplacian())?.two_point_resistance(alpha, beta)?)
}

fn lattice(a: &LatticeArgs, tol: f64) -> CliResult<Outcome> {
    let dims = parse_dims(&a.dims)?;
    let bc = parse_bc(&a.bc, dims.len())?;
    let res: Vec<ExactRational> = [&a.r, &a.s, &a.t]
        .iter()
        .take(dims.len())
        .map(|s| parse_rational(s))
        .collect::<CliResult<_>>()?;
    let spec = LatticeSpec::new(bc, dims, res)?;
    if a.emit_network {
        let mut s = network_to_json(&spec.network());
        s.push('\n');
        return Ok(ok(s));
    }
    let from = parse_coords(a.from.as_deref().unwrap_or_default())?;
    let to = parse_coords(a.to.as_deref().unwrap_or_default())?;
    let (alpha, beta) = (spec.index(&from)?, spec.index(&to)?);
    let pair = (
        from.iter().map(|&c| c as i64).collect(),
        to.iter().map(|&c| c as i64).collect(),
    );
    let (name, float): (&str, Box<dyn FnOnce() -> CliResult<f64>>) = match a.method {
        FloatMethod::ClosedForm => ("closed-form", Box::new(|| Ok(spec.closed_form(&from, &to)?))),
        FloatMethod::Spectral => ("spectral", Box::new(|| spectral(&spec.network(), alpha, beta))),
    };
    let report = finish_report(
        a.mode,
        name,
        float,
        || Ok(solve_exact(&spec.network(), alpha, beta)?),
        pair,
        spec.describe(&from, &to),
        tol,
    )?;
    Ok(ok(render(&report, a.output)?))
}

fn identity(a: &IdentityArgs) -> CliResult<Outcome> {
    let (lhs, rhs, ell, name) = match a.which {
        Which::I1 => (
            i1_direct(a.n, a.ell, a.lambda)?,
            i1_closed(a.n, a.ell, a.lambda)?,
            Some(a.ell),
            "i1",
        ),
        Which::I2 => (
            i2_direct(a.n, a.ell, a.lambda)?,
            i2_closed(a.n, a.ell, a.lambda)?,
            Some(a.ell),
            "i2",
        ),
        Which::ProductFree => {
            let (l, r) = product_identity_free(a.n, a.lambda)?;
            (l, r, None, "product-free")
        }
        Which::ProductPeriodic => {
            let (l, r) = product_identity_periodic(a.n, a.lambda)?;
            (l, r, None, "product-periodic")
        }
    };
    let difference = if lhs == rhs { 0.0 } else { (lhs - rhs).abs() };
    let report = IdentityReport {
        which: name.into(),
        n: a.n,
        ell,
        lambda: a.lambda,
        lhs,
        rhs,
        difference,
    };
    Ok(ok(render(&report, a.output)?))
}

fn infinite(a: &InfiniteArgs) -> CliResult<Outcome> {
    let delta = parse_offsets(&a.delta)?;
    let f = |s: &str| -> CliResult<f64> {
        let q = parse_rational(s)?;
        if !q.is_positive() {
            return Err(CliError::Parse(format!("resistance {q} must be positive")));
        }
        Ok(q.to_f64())
    };
    let (r, s, t) = (f(&a.r)?, f(&a.s)?, f(&a.t)?);
    if let Some(sizes) = &a.sizes {
        let sizes = parse_coords(sizes)?;
        if delta.len() != 2 {
            return Err(CliError::Parse("--sizes needs a 2D offset dx,dy".into()));
        }
        if (r, s) != (1.0, 1.0) {
            return Err(CliError::Parse("--sizes compares unit-resistance lattices only".into()));
        }
        let bc = parse_bc(&a.bc, 2)?;
        let table = finite_to_infinite_convergence(bc, (delta[0], delta[1]), &sizes)?;
        let report = ConvergenceReport {
            bc: table.bc.to_string(),
            delta: table.delta,
            limit: table.limit,
            rows: table
                .rows
                .iter()
                .map(|r| ConvergenceEntry {
                    size: r.size,
                    value: r.value,
                    difference: r.difference,
                    observed_order: r.observed_order,
                })
                .collect(),
        };
        return Ok(ok(render(&report, a.output)?));
    }
    let (value, spec) = match delta.as_slice() {
        [dx, dy] => (
            r_infinite_2d(*dx, *dy, r, s)?,
            format!("infinite square lattice r={} s={}", a.r, a.s),
        ),
        [dx, dy, dz] => (
            r_infinite_3d(*dx, *dy, *dz, r, s, t)?,
            format!("infinite cubic lattice r={} s={} t={}", a.r, a.s, a.t),
        ),
        _ => {
            return Err(CliError::Parse(format!(
                "--delta needs 2 or 3 components, got {}",
                delta.len()
            )))
        }
    };
    let origin = vec![0; delta.len()];
    let report = Report {
        method: "quadrature".into(),
        value_float: value,
        value_exact: None,
        pair: (origin, delta),
        spec,
        discrepancy: None,
    };
    Ok(ok(render(&report, a.output)?))
}
