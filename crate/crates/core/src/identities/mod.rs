//! Lattice-sum identities and infinite-lattice resistances.
//!
//! For `N ≥ 1`, `λ > 0` and `a = e^{−λ}`:
//!
//! ```text
//! I₁(ℓ) = (1/N) Σ_{n=0}^{N−1} cos(ℓnπ/N) / (cosh λ − cos(nπ/N))
//!       = cosh((N−ℓ)λ) / (sinh λ sinh Nλ)
//!         + (1/N) [1/sinh²λ + (1 − (−1)^ℓ) / (4 cosh²(λ/2))],   0 ≤ ℓ < 2N
//!
//! I₂(ℓ) = (1/N) Σ_{n=0}^{N−1} cos(2ℓnπ/N) / (cosh λ − cos(2nπ/N))
//!       = cosh((N/2−ℓ)λ) / (sinh λ sinh(Nλ/2)),                 0 ≤ ℓ < N
//! ```
//!
//! Closed forms are evaluated in terms of `a`, so large `Nλ` does not
//! overflow. Both sums diverge as `λ → 0` (the `n = 0` term), but the gaps
//! `I(0) − I(ℓ)` tend to [`f_sum`] and [`g_sum`].

mod infinite;
pub mod quadrature;

use std::f64::consts::PI;

pub use infinite::{
    finite_to_infinite_convergence, periodic_3d_sum, periodic_3d_sum_with, r_infinite_2d, r_infinite_3d,
    r_infinite_3d_with, ConvergenceRow, ConvergenceTable,
};

use crate::error::{Error, Result};
use crate::lattice::{f_sum, g_sum};
use crate::sum::neumaier_sum;

/// Which of the two sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    I1,
    I2,
}

/// A validated `(N, ℓ, λ)` triple for one of the sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityQuery {
    pub variant: Variant,
    pub n: usize,
    pub ell: i64,
    pub lambda: f64,
}

impl IdentityQuery {
    pub fn new(variant: Variant, n: usize, ell: i64, lambda: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("N must be at least 1".into()));
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::OutOfRange(format!(
                "lambda = {lambda} must be finite and non-negative"
            )));
        }
        let upper = match variant {
            Variant::I1 => 2 * n as i64,
            Variant::I2 => n as i64,
        };
        if !(0..upper).contains(&ell) {
            return Err(Error::OutOfRange(format!("ell = {ell} must lie in 0..{upper}")));
        }
        Ok(IdentityQuery {
            variant,
            n,
            ell,
            lambda,
        })
    }

    /// `e^{−λ}`.
    pub fn a(&self) -> f64 {
        (-self.lambda).exp()
    }

    pub fn closed(&self) -> f64 {
        match self.variant {
            Variant::I1 => i1_closed_unchecked(self.n, self.ell, self.lambda),
            Variant::I2 => i2_closed_unchecked(self.n, self.ell, self.lambda),
        }
    }

    pub fn direct(&self) -> f64 {
        match self.variant {
            Variant::I1 => direct_sum(self.n, self.ell, self.lambda, 1),
            Variant::I2 => direct_sum(self.n, self.ell, self.lambda, 2),
        }
    }

    /// `I(0) − I(ℓ)`, finite at `λ = 0`.
    pub fn gap(&self) -> f64 {
        match self.variant {
            Variant::I1 => i1_gap_unchecked(self.n, self.ell, self.lambda),
            Variant::I2 => i2_gap_unchecked(self.n, self.ell, self.lambda),
        }
    }
}

/// `cosh λ − cos x = 2 sinh²(λ/2) + 2 sin²(x/2)`, free of cancellation.
fn cosh_minus_cos(lambda: f64, x: f64) -> f64 {
    let sh = (0.5 * lambda).sinh();
    let s = (0.5 * x).sin();
    2.0 * (sh * sh + s * s)
}

/// `sinh a · sinh b / sinh c` for `a, b ≥ 0`, `c > 0`, without overflow.
fn sinh_product_ratio(a: f64, b: f64, c: f64) -> f64 {
    0.5 * (a + b - c).exp() * (-2.0 * a).exp_m1() * (-2.0 * b).exp_m1() / -(-2.0 * c).exp_m1()
}

fn direct_sum(n: usize, ell: i64, lambda: f64, k: usize) -> f64 {
    let step = k as f64 * PI / n as f64;
    let terms = (0..n).map(|j| {
        let x = j as f64 * step;
        (ell as f64 * x).cos() / cosh_minus_cos(lambda, x)
    });
    neumaier_sum(terms) / n as f64
}

fn i1_boundary_unchecked(n: usize, ell: i64, lambda: f64) -> f64 {
    let odd = if ell % 2 == 0 { 0.0 } else { 2.0 };
    let sh = lambda.sinh();
    let ch = (0.5 * lambda).cosh();
    (1.0 / (sh * sh) + odd / (4.0 * ch * ch)) / n as f64
}

fn i1_closed_unchecked(n: usize, ell: i64, lambda: f64) -> f64 {
    if lambda == 0.0 {
        return f64::INFINITY;
    }
    let a = (-lambda).exp();
    let two_n = 2 * n as i64;
    let head =
        (a.powi(ell as i32) + a.powi((two_n - ell) as i32)) / (-(-(two_n as f64) * lambda).exp_m1() * lambda.sinh());
    head + i1_boundary_unchecked(n, ell, lambda)
}

fn i2_closed_unchecked(n: usize, ell: i64, lambda: f64) -> f64 {
    if lambda == 0.0 {
        return f64::INFINITY;
    }
    let a = (-lambda).exp();
    let n_i = n as i64;
    (a.powi(ell as i32) + a.powi((n_i - ell) as i32)) / (-(-(n as f64) * lambda).exp_m1() * lambda.sinh())
}

fn i1_gap_unchecked(n: usize, ell: i64, lambda: f64) -> f64 {
    if lambda == 0.0 {
        return f_sum(n, ell);
    }
    let (nf, lf) = (n as f64, ell as f64);
    // [cosh Nλ − cosh((N−ℓ)λ)] / (sinh λ sinh Nλ) = 2 sinh(ℓλ/2) sinh((2N−ℓ)λ/2) / (sinh λ sinh Nλ)
    let main = 2.0 * sinh_product_ratio(0.5 * lf * lambda, 0.5 * (2.0 * nf - lf) * lambda, nf * lambda) / lambda.sinh();
    let odd = if ell % 2 == 0 { 0.0 } else { 2.0 };
    let ch = (0.5 * lambda).cosh();
    main - odd / (4.0 * ch * ch * nf)
}

fn i2_gap_unchecked(n: usize, ell: i64, lambda: f64) -> f64 {
    if lambda == 0.0 {
        return g_sum(n, ell);
    }
    let (nf, lf) = (n as f64, ell as f64);
    2.0 * sinh_product_ratio(0.5 * lf * lambda, 0.5 * (nf - lf) * lambda, 0.5 * nf * lambda) / lambda.sinh()
}

/// Closed form of `I₁(ℓ)`; `+∞` at `λ = 0`.
pub fn i1_closed(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    Ok(IdentityQuery::new(Variant::I1, n, ell, lambda)?.closed())
}

/// Defining sum of `I₁(ℓ)`.
pub fn i1_direct(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    Ok(IdentityQuery::new(Variant::I1, n, ell, lambda)?.direct())
}

/// Closed form of `I₂(ℓ)`; `+∞` at `λ = 0`.
pub fn i2_closed(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    Ok(IdentityQuery::new(Variant::I2, n, ell, lambda)?.closed())
}

/// Defining sum of `I₂(ℓ)`.
pub fn i2_direct(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    Ok(IdentityQuery::new(Variant::I2, n, ell, lambda)?.direct())
}

/// `I₁(0) − I₁(ℓ)`; equals `F_N(ℓ)` at `λ = 0`.
pub fn i1_gap(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    Ok(IdentityQuery::new(Variant::I1, n, ell, lambda)?.gap())
}

/// `I₂(0) − I₂(ℓ)`; equals `G_N(ℓ)` at `λ = 0`.
pub fn i2_gap(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    Ok(IdentityQuery::new(Variant::I2, n, ell, lambda)?.gap())
}

/// The explicit `1/N` part of the `I₁` closed form.
pub fn i1_boundary_term(n: usize, ell: i64, lambda: f64) -> Result<f64> {
    IdentityQuery::new(Variant::I1, n, ell, lambda)?;
    Ok(i1_boundary_unchecked(n, ell, lambda))
}

/// `(1/π) ∫_0^π cos(ℓθ) / (cosh λ − cos θ) dθ = e^{−|ℓ|λ} / sinh λ`, the
/// `N → ∞` limit of both sums.
pub fn integral_limit(ell: i64, lambda: f64) -> f64 {
    (-(ell.unsigned_abs() as f64) * lambda).exp() / lambda.sinh()
}

fn check_product_args(n: usize, lambda: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::OutOfRange(format!(
            "lambda = {lambda} must be finite and positive"
        )));
    }
    Ok(())
}

/// `Π_{n=0}^{N−1} (cosh λ − cos(nπ/N))` and `2^{1−N} sinh(Nλ) tanh(λ/2)`.
pub fn product_identity_free(n: usize, lambda: f64) -> Result<(f64, f64)> {
    check_product_args(n, lambda)?;
    let step = PI / n as f64;
    let lhs = (0..n).map(|j| cosh_minus_cos(lambda, j as f64 * step)).product();
    let rhs = 2f64.powi(1 - n as i32) * (n as f64 * lambda).sinh() * (0.5 * lambda).tanh();
    Ok((lhs, rhs))
}

/// `Π_{n=0}^{N−1} (cosh λ − cos(2nπ/N))` and `2^{2−N} sinh²(Nλ/2)`.
pub fn product_identity_periodic(n: usize, lambda: f64) -> Result<(f64, f64)> {
    check_product_args(n, lambda)?;
    let step = 2.0 * PI / n as f64;
    let lhs = (0..n).map(|j| cosh_minus_cos(lambda, j as f64 * step)).product();
    let sh = (0.5 * n as f64 * lambda).sinh();
    let rhs = 2f64.powi(2 - n as i32) * sh * sh;
    Ok((lhs, rhs))
}
