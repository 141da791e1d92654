//! Closed-form mode sums for lattice resistances.
//!
//! Each sum runs over the nonzero analytic modes. The modes of one x index
//! `m` form a work unit (run in parallel under [`Execution::Parallel`]); all
//! `(eigenvalue, term)` pairs are then reduced by [`ModeSum`], whose fixed
//! ordering makes the result independent of scheduling.

use std::f64::consts::PI;

use super::modes::moebius_phase;
use super::sums::g_sum;
use crate::exec::Execution;
use crate::sum::ModeSum;

type P2 = (usize, usize);
type P3 = (usize, usize, usize);

/// `1 − cos x` without cancellation near zero.
fn vers(x: f64) -> f64 {
    let h = (0.5 * x).sin();
    2.0 * h * h
}

/// `cos((x + ½)θ)`, the open-chain eigenvector factor.
fn chain(x: usize, angle: f64) -> f64 {
    ((x as f64 + 0.5) * angle).cos()
}

fn diff(a: usize, b: usize) -> i64 {
    a as i64 - b as i64
}

fn mode_sum<F>(exec: Execution, rows: std::ops::Range<usize>, row: F) -> f64
where
    F: Fn(usize, &mut Vec<(f64, f64)>) + Sync + Send,
{
    let parts = exec.map(rows, |m| {
        let mut terms = Vec::new();
        row(m, &mut terms);
        terms
    });
    let mut total = ModeSum::with_capacity(parts.iter().map(Vec::len).sum());
    for p in parts {
        total.extend(p);
    }
    total.total_with(exec)
}

/// Open chain of `n` resistors `r`: `r|x₁ − x₂|`.
pub fn r_1d_free(n: usize, r: f64, x1: usize, x2: usize) -> f64 {
    debug_assert!(x1 < n && x2 < n);
    r * x1.abs_diff(x2) as f64
}

/// Ring of `n` resistors `r`: the two arcs in parallel, `r·d(1 − d/n)`.
pub fn r_1d_periodic(n: usize, r: f64, x1: usize, x2: usize) -> f64 {
    debug_assert!(x1 < n && x2 < n);
    r * g_sum(n, diff(x1, x2))
}

pub fn r_2d_free(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2) -> f64 {
    r_2d_free_with(m_len, n_len, r, s, p1, p2, Execution::default())
}

/// Open `M × N` grid.
pub fn r_2d_free_with(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2, exec: Execution) -> f64 {
    let (mf, nf) = (m_len as f64, n_len as f64);
    let ((x1, y1), (x2, y2)) = (p1, p2);
    let (ir, is) = (1.0 / r, 1.0 / s);
    let linear = r * x1.abs_diff(x2) as f64 / nf + s * y1.abs_diff(y2) as f64 / mf;
    let modes = mode_sum(exec, 1..m_len, |m, out| {
        let th = m as f64 * PI / mf;
        let (a1, a2) = (chain(x1, th), chain(x2, th));
        for n in 1..n_len {
            let ph = n as f64 * PI / nf;
            let d = a1 * chain(y1, ph) - a2 * chain(y2, ph);
            let lambda = ir * vers(th) + is * vers(ph);
            out.push((lambda, d * d / lambda));
        }
    });
    linear + 2.0 / (mf * nf) * modes
}

pub fn r_2d_periodic(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2) -> f64 {
    r_2d_periodic_with(m_len, n_len, r, s, p1, p2, Execution::default())
}

/// `M × N` torus; depends only on the coordinate differences.
pub fn r_2d_periodic_with(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2, exec: Execution) -> f64 {
    let (mf, nf) = (m_len as f64, n_len as f64);
    let (dx, dy) = (diff(p1.0, p2.0), diff(p1.1, p2.1));
    let (ir, is) = (1.0 / r, 1.0 / s);
    let linear = r * g_sum(m_len, dx) / nf + s * g_sum(n_len, dy) / mf;
    let modes = mode_sum(exec, 1..m_len, |m, out| {
        let th = 2.0 * m as f64 * PI / mf;
        for n in 1..n_len {
            let ph = 2.0 * n as f64 * PI / nf;
            let lambda = ir * vers(th) + is * vers(ph);
            out.push((lambda, vers(dx as f64 * th + dy as f64 * ph) / lambda));
        }
    });
    linear + modes / (mf * nf)
}

/// `C₁² + C₂² − 2C₁C₂ cos a`, written to avoid cancellation when `C₁ ≈ C₂`.
fn mixed(c1: f64, c2: f64, a: f64) -> f64 {
    let d = c1 - c2;
    d * d + 2.0 * c1 * c2 * vers(a)
}

pub fn r_2d_cylinder(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2) -> f64 {
    r_2d_cylinder_with(m_len, n_len, r, s, p1, p2, Execution::default())
}

/// Closed along x (length `M`), open along y (width `N`).
pub fn r_2d_cylinder_with(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2, exec: Execution) -> f64 {
    let (mf, nf) = (m_len as f64, n_len as f64);
    let ((x1, y1), (x2, y2)) = (p1, p2);
    let dx = diff(x1, x2) as f64;
    let (ir, is) = (1.0 / r, 1.0 / s);
    let linear = r * g_sum(m_len, diff(x1, x2)) / nf + s * y1.abs_diff(y2) as f64 / mf;
    let modes = mode_sum(exec, 1..m_len, |m, out| {
        let th = 2.0 * m as f64 * PI / mf;
        for n in 1..n_len {
            let ph = n as f64 * PI / nf;
            let lambda = ir * vers(th) + is * vers(ph);
            out.push((lambda, mixed(chain(y1, ph), chain(y2, ph), dx * th) / lambda));
        }
    });
    linear + modes / (mf * nf)
}

pub fn r_2d_moebius(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2) -> f64 {
    r_2d_moebius_with(m_len, n_len, r, s, p1, p2, Execution::default())
}

/// Möbius strip: length `M` closed with a twist, width `N` open.
pub fn r_2d_moebius_with(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2, exec: Execution) -> f64 {
    let (mf, nf) = (m_len as f64, n_len as f64);
    let ((x1, y1), (x2, y2)) = (p1, p2);
    let dx = diff(x1, x2) as f64;
    let (ir, is) = (1.0 / r, 1.0 / s);
    let linear = r * g_sum(m_len, diff(x1, x2)) / nf;
    let modes = mode_sum(exec, 0..m_len, |m, out| {
        for n in 1..n_len {
            let th = moebius_phase(m_len, m, n);
            let ph = n as f64 * PI / nf;
            let lambda = ir * vers(th) + is * vers(ph);
            out.push((lambda, mixed(chain(y1, ph), chain(y2, ph), dx * th) / lambda));
        }
    });
    linear + modes / (mf * nf)
}

pub fn r_2d_klein(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2) -> f64 {
    r_2d_klein_with(m_len, n_len, r, s, p1, p2, Execution::default())
}

/// Klein bottle: length `M` closed with a twist, width `N` closed.
pub fn r_2d_klein_with(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2, exec: Execution) -> f64 {
    let (mf, nf) = (m_len as f64, n_len as f64);
    let ((x1, y1), (x2, y2)) = (p1, p2);
    let dx = diff(x1, x2) as f64;
    let (ir, is) = (1.0 / r, 1.0 / s);
    let linear = r * g_sum(m_len, diff(x1, x2)) / nf;
    let modes = mode_sum(exec, 0..m_len, |m, out| {
        for n in 1..=(n_len - 1) / 2 {
            let ph = 2.0 * n as f64 * PI / nf;
            let y_angle = n as f64 * PI / nf;
            let w1 = (2 * y1 + 1) as f64 * y_angle;
            let w2 = (2 * y2 + 1) as f64 * y_angle;
            for (tau, f1, f2) in [(0, w1.cos(), w2.cos()), (1, w1.sin(), w2.sin())] {
                let th = (2 * m + tau) as f64 * PI / mf;
                let lambda = ir * vers(th) + is * vers(ph);
                out.push((lambda, mixed(f1, f2, dx * th) / lambda));
            }
        }
    });
    linear + modes / (mf * nf) + klein_delta(m_len, n_len, r, s, p1, p2)
}

/// Contribution of the reflection-odd `n = N/2` modes, which exist only for
/// even `N`; zero when `N` is odd.
pub fn klein_delta(m_len: usize, n_len: usize, r: f64, s: f64, p1: P2, p2: P2) -> f64 {
    if n_len % 2 == 1 {
        return 0.0;
    }
    let (mf, nf) = (m_len as f64, n_len as f64);
    let dx = diff(p1.0, p2.0) as f64;
    let sign = if diff(p1.1, p2.1).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let terms = (0..m_len).map(|m| {
        let th = (2 * m + 1) as f64 * PI / mf;
        let lambda = 2.0 * vers(th) / r + 4.0 / s;
        // 1 − σ cos(dx θ), kept cancellation-free for σ = +1.
        let num = if sign > 0.0 {
            vers(dx * th)
        } else {
            1.0 + (dx * th).cos()
        };
        (lambda, num / lambda)
    });
    2.0 / (mf * nf) * terms.collect::<ModeSum>().total()
}

#[allow(clippy::too_many_arguments)]
pub fn r_3d_free(m_len: usize, n_len: usize, l_len: usize, r: f64, s: f64, t: f64, p1: P3, p2: P3) -> f64 {
    r_3d_free_with(m_len, n_len, l_len, r, s, t, p1, p2, Execution::default())
}

/// Open `M × N × L` box: the triple mode sum plus the three face sums
/// (each a 2D free resistance spread over the third axis) minus the
/// doubly counted edge terms.
#[allow(clippy::too_many_arguments)]
pub fn r_3d_free_with(
    m_len: usize,
    n_len: usize,
    l_len: usize,
    r: f64,
    s: f64,
    t: f64,
    p1: P3,
    p2: P3,
    exec: Execution,
) -> f64 {
    let (mf, nf, lf) = (m_len as f64, n_len as f64, l_len as f64);
    let ((x1, y1, z1), (x2, y2, z2)) = (p1, p2);
    let (ir, is, it) = (1.0 / r, 1.0 / s, 1.0 / t);

    let faces = r_2d_free_with(m_len, n_len, r, s, (x1, y1), (x2, y2), exec) / lf
        + r_2d_free_with(n_len, l_len, s, t, (y1, z1), (y2, z2), exec) / mf
        + r_2d_free_with(l_len, m_len, t, r, (z1, x1), (z2, x2), exec) / nf;
    let edges = r * x1.abs_diff(x2) as f64 / (nf * lf)
        + s * y1.abs_diff(y2) as f64 / (lf * mf)
        + t * z1.abs_diff(z2) as f64 / (mf * nf);

    let modes = mode_sum(exec, 1..m_len, |m, out| {
        let th = m as f64 * PI / mf;
        let (a1, a2) = (chain(x1, th), chain(x2, th));
        for n in 1..n_len {
            let ph = n as f64 * PI / nf;
            let (b1, b2) = (a1 * chain(y1, ph), a2 * chain(y2, ph));
            for l in 1..l_len {
                let al = l as f64 * PI / lf;
                let d = b1 * chain(z1, al) - b2 * chain(z2, al);
                let lambda = ir * vers(th) + is * vers(ph) + it * vers(al);
                out.push((lambda, d * d / lambda));
            }
        }
    });
    4.0 / (mf * nf * lf) * modes + faces - edges
}
