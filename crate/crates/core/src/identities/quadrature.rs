//! Globally adaptive Gauss–Kronrod (7, 15) quadrature.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::sum::neumaier_sum;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// Gauss weights for the odd-indexed Kronrod nodes and the centre.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Stopping rule for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-12,
            rel: 1e-12,
            max_intervals: 2000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        e = res_asc * (200.0 * e / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kronrod.abs();
    let mut fv = [(0.0, 0.0); 7];
    for (j, slot) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let (f1, f2) = (f(centre - dx), f(centre + dx));
        *slot = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let scale = half.abs();
    Panel {
        a,
        b,
        value: kronrod * half,
        error: rescale_error((kronrod - gauss) * half, res_abs * scale, res_asc * scale),
    }
}

/// `∫_a^b f`, bisecting the panel with the largest error estimate until the
/// summed estimate meets `max(tol.abs, tol.rel · |I|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64> {
    let mut panels = vec![gk15(&f, a, b)];
    loop {
        let value = neumaier_sum(panels.iter().map(|p| p.value));
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if !value.is_finite() {
            return Err(Error::QuadratureFailure(format!("non-finite integrand on [{a}, {b}]")));
        }
        if error <= tol.abs.max(tol.rel * value.abs()) {
            return Ok(value);
        }
        if panels.len() >= tol.max_intervals {
            return Err(Error::QuadratureFailure(format!(
                "error estimate {error:.3e} above tolerance after {} panels on [{a}, {b}]",
                panels.len()
            )));
        }
        let worst = (0..panels.len())
            .max_by(|&i, &j| panels[i].error.total_cmp(&panels[j].error).then(j.cmp(&i)))
            .expect("at least one panel");
        let p = panels[worst];
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            return Err(Error::QuadratureFailure(format!(
                "panel [{}, {}] cannot be split further",
                p.a, p.b
            )));
        }
        panels[worst] = gk15(&f, p.a, mid);
        panels.insert(worst + 1, gk15(&f, mid, p.b));
    }
}
