//! Resistances on the infinite square and cubic lattices.
//!
//! With the x angle integrated in closed form through
//! `(1/π) ∫_0^π cos(ℓθ)/(cosh λ − cos θ) dθ = e^{−|ℓ|λ}/sinh λ`,
//!
//! ```text
//! R(Δ) = (r/π^{d−1}) ∫ [(1 − c) + c (1 − e^{−|Δx|λ})] / sinh λ
//! ```
//!
//! over the remaining angles in `[0, π]^{d−1}`, where `c` is the product of
//! `cos(Δ_k φ_k)` over those angles and `cosh λ = 1 + u` with
//! `u = r Σ_k 2 sin²(φ_k/2) / r_k`. The integrand is bounded but not smooth
//! where `u → 0`, so each angle is mapped through `φ = πw²` before adaptive
//! quadrature.

use std::cell::RefCell;
use std::f64::consts::PI;

use super::quadrature::{integrate, Tolerance};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lattice::{BoundaryCondition, LatticeSpec};
use crate::rational::ExactRational;
use crate::sum::{neumaier_sum, ModeSum};

const OUTER_PANELS: usize = 8;

fn vers(x: f64) -> f64 {
    let h = (0.5 * x).sin();
    2.0 * h * h
}

/// The x-integrated kernel for given `u` and the transverse factors
/// `A = 1 − c` and `c`.
fn kernel(u: f64, one_minus_c: f64, c: f64, dx: f64) -> f64 {
    let sh = (u * (2.0 + u)).sqrt();
    if sh == 0.0 {
        return dx;
    }
    let lambda = (u + sh).ln_1p();
    (one_minus_c - c * (-dx * lambda).exp_m1()) / sh
}

fn check_resistances(values: &[f64]) -> Result<()> {
    if values.iter().all(|r| r.is_finite() && *r > 0.0) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "resistances {values:?} must be finite and positive"
        )))
    }
}

/// Resistance between lattice points `Δ = (dx, dy)` apart on the infinite
/// square lattice with bond resistances `r` (x) and `s` (y).
pub fn r_infinite_2d(dx: i64, dy: i64, r: f64, s: f64) -> Result<f64> {
    check_resistances(&[r, s])?;
    if dx == 0 && dy == 0 {
        return Ok(0.0);
    }
    let (dxf, dyf) = (dx.unsigned_abs() as f64, dy as f64);
    let integrand = |w: f64| {
        let phi = PI * w * w;
        let u = r / s * vers(phi);
        2.0 * PI * w * kernel(u, vers(dyf * phi), (dyf * phi).cos(), dxf)
    };
    let tol = Tolerance {
        abs: 1e-13,
        rel: 1e-13,
        max_intervals: 4000,
    };
    Ok(r / PI * integrate(integrand, 0.0, 1.0, tol)?)
}

pub fn r_infinite_3d(dx: i64, dy: i64, dz: i64, r: f64, s: f64, t: f64) -> Result<f64> {
    r_infinite_3d_with(dx, dy, dz, r, s, t, Execution::default())
}

/// Resistance on the infinite cubic lattice with bond resistances `r`, `s`,
/// `t` along x, y, z. The outer angle is split into fixed panels that are
/// integrated independently and summed in order.
#[allow(clippy::too_many_arguments)]
pub fn r_infinite_3d_with(dx: i64, dy: i64, dz: i64, r: f64, s: f64, t: f64, exec: Execution) -> Result<f64> {
    check_resistances(&[r, s, t])?;
    if dx == 0 && dy == 0 && dz == 0 {
        return Ok(0.0);
    }
    let (dxf, dyf, dzf) = (dx.unsigned_abs() as f64, dy as f64, dz as f64);
    let inner_tol = Tolerance {
        abs: 1e-12,
        rel: 1e-12,
        max_intervals: 2000,
    };
    let outer_tol = Tolerance {
        abs: 1e-11 / OUTER_PANELS as f64,
        rel: 1e-12,
        max_intervals: 2000,
    };
    let inner = |phi: f64| -> Result<f64> {
        let a = vers(dyf * phi);
        let ca = (dyf * phi).cos();
        let u_phi = r / s * vers(phi);
        integrate(
            |w: f64| {
                let al = PI * w * w;
                let b = vers(dzf * al);
                let u = u_phi + r / t * vers(al);
                2.0 * PI * w * kernel(u, a + b - a * b, ca * (dzf * al).cos(), dxf)
            },
            0.0,
            1.0,
            inner_tol,
        )
    };
    let panels = exec.map(0..OUTER_PANELS, |k| -> Result<f64> {
        let lo = k as f64 / OUTER_PANELS as f64;
        let hi = (k + 1) as f64 / OUTER_PANELS as f64;
        let failure = RefCell::new(None);
        let v = integrate(
            |w: f64| {
                let phi = PI * w * w;
                match inner(phi) {
                    Ok(v) => 2.0 * PI * w * v,
                    Err(e) => {
                        failure.borrow_mut().get_or_insert(e);
                        f64::NAN
                    }
                }
            },
            lo,
            hi,
            outer_tol,
        );
        match (failure.into_inner(), v) {
            (Some(e), _) => Err(e),
            (None, v) => v,
        }
    });
    let values = panels.into_iter().collect::<Result<Vec<f64>>>()?;
    Ok(r / (PI * PI) * neumaier_sum(values))
}

pub fn periodic_3d_sum(n: usize, delta: (i64, i64, i64), res: (f64, f64, f64)) -> f64 {
    periodic_3d_sum_with(n, delta, res, Execution::default())
}

/// Resistance on the `n × n × n` torus; the finite-size stand-in for the
/// infinite cubic lattice.
pub fn periodic_3d_sum_with(n: usize, delta: (i64, i64, i64), res: (f64, f64, f64), exec: Execution) -> f64 {
    let step = 2.0 * PI / n as f64;
    let (ir, is, it) = (1.0 / res.0, 1.0 / res.1, 1.0 / res.2);
    let parts = exec.map(0..n, |i| {
        let a = i as f64 * step;
        let mut out = Vec::with_capacity(n * n);
        for j in 0..n {
            let b = j as f64 * step;
            for k in 0..n {
                if i == 0 && j == 0 && k == 0 {
                    continue;
                }
                let c = k as f64 * step;
                let lambda = ir * vers(a) + is * vers(b) + it * vers(c);
                let phase = delta.0 as f64 * a + delta.1 as f64 * b + delta.2 as f64 * c;
                out.push((lambda, vers(phase) / lambda));
            }
        }
        out
    });
    let mut total = ModeSum::new();
    for p in parts {
        total.extend(p);
    }
    total.total_with(exec) / (n * n * n) as f64
}

/// One finite lattice size in a [`ConvergenceTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub size: usize,
    pub value: f64,
    /// `value − limit`.
    pub difference: f64,
    /// `log(|d_prev| / |d|) / log(size / size_prev)`, the observed rate.
    pub observed_order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub bc: BoundaryCondition,
    pub delta: (i64, i64),
    pub limit: f64,
    pub rows: Vec<ConvergenceRow>,
}

/// Unit-resistance `N × N` lattices of increasing size, with the pair placed
/// as far from open edges as possible, compared against the infinite-lattice
/// value.
pub fn finite_to_infinite_convergence(
    bc: BoundaryCondition,
    delta: (i64, i64),
    sizes: &[usize],
) -> Result<ConvergenceTable> {
    if bc.dimension() != 2 {
        return Err(Error::InvalidLattice(format!(
            "convergence table needs a 2D lattice, got {bc}"
        )));
    }
    let limit = r_infinite_2d(delta.0, delta.1, 1.0, 1.0)?;
    let (ax, ay) = (delta.0.unsigned_abs() as usize, delta.1.unsigned_abs() as usize);
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        if n <= ax.max(ay) {
            return Err(Error::OutOfRange(format!(
                "size {n} cannot hold a pair {delta:?} apart"
            )));
        }
        let spec = LatticeSpec::new(bc, vec![n, n], vec![ExactRational::one(), ExactRational::one()])?;
        let closed_x = matches!(
            bc,
            BoundaryCondition::Periodic2D
                | BoundaryCondition::Cylinder
                | BoundaryCondition::Moebius
                | BoundaryCondition::Klein
        );
        let closed_y = matches!(bc, BoundaryCondition::Periodic2D | BoundaryCondition::Klein);
        let x0 = if closed_x { 0 } else { (n - ax) / 2 };
        let y0 = if closed_y { 0 } else { (n - ay) / 2 };
        let value = spec.closed_form(&[x0, y0], &[x0 + ax, y0 + ay])?;
        let difference = value - limit;
        let observed_order = rows.last().and_then(|p| {
            let ratio = p.difference.abs() / difference.abs();
            (ratio.is_finite() && ratio > 0.0).then(|| ratio.ln() / (n as f64 / p.size as f64).ln())
        });
        rows.push(ConvergenceRow {
            size: n,
            value,
            difference,
            observed_order,
        });
    }
    Ok(ConvergenceTable { bc, delta, limit, rows })
}
