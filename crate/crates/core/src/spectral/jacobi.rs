//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use crate::error::{Error, Result};

pub(crate) const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and eigenvectors of a symmetric `n × n` matrix
/// given in row-major order. Eigenvector `k` occupies
/// `vectors[k * n..(k + 1) * n]`.
///
/// Rotations are applied in a fixed row-cyclic order and ties in the final
/// sort are broken by original position, so the output is a pure function of
/// the input bits.
pub(crate) fn eigh(n: usize, matrix: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    debug_assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    // v is stored column-major in the usual sense: v[r * n + k] is component
    // r of eigenvector k.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let stop = 1e-17 * fro;
    let negligible = 1e-20 * fro;

    let mut converged = n < 2 || fro == 0.0;
    let mut sweep = 0;
    while !converged {
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
        sweep += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= negligible {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                rotate(n, &mut a, &mut v, p, q);
            }
        }
        converged = off_norm(n, &a) <= stop;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let values = order.iter().map(|&k| a[k * n + k]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        vectors.extend((0..n).map(|r| v[r * n + k]));
    }
    Ok((values, vectors))
}

fn off_norm(n: usize, a: &[f64]) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

fn rotate(n: usize, a: &mut [f64], v: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let g = a[r * n + p];
        let h = a[r * n + q];
        let rp = g - s * (h + g * tau);
        let rq = h + s * (g - h * tau);
        a[r * n + p] = rp;
        a[p * n + r] = rp;
        a[r * n + q] = rq;
        a[q * n + r] = rq;
    }
    for r in 0..n {
        let g = v[r * n + p];
        let h = v[r * n + q];
        v[r * n + p] = g - s * (h + g * tau);
        v[r * n + q] = h + s * (g - h * tau);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let (vals, vecs) = eigh(2, &[2.0, 1.0, 1.0, 2.0]).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-15 && (vals[1] - 3.0).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((vecs[0].abs() - h).abs() < 1e-15);
        assert!((vecs[0] + vecs[1]).abs() < 1e-15);
    }

    #[test]
    fn diagonal_and_empty_inputs() {
        assert_eq!(eigh(0, &[]).unwrap(), (vec![], vec![]));
        let (vals, _) = eigh(3, &[3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0]).unwrap();
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
    }

    #[test]
    fn reconstructs_a_dense_matrix() {
        let n = 7;
        let m: Vec<f64> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                let (lo, hi) = (i.min(j), i.max(j));
                ((lo * 13 + hi * 7) % 11) as f64 - 5.0
            })
            .collect();
        let (vals, vecs) = eigh(n, &m).unwrap();
        for i in 0..n {
            for j in 0..n {
                let back: f64 = (0..n).map(|k| vals[k] * vecs[k * n + i] * vecs[k * n + j]).sum();
                assert!((back - m[i * n + j]).abs() < 1e-12, "{i} {j}");
            }
        }
    }
}
