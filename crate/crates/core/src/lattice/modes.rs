use std::f64::consts::PI;

use super::{BoundaryCondition, LatticeSpec};

/// Analytic eigenmodes of a lattice Laplacian.
///
/// The one-dimensional building blocks are
///
/// - open chain of length `M`: `2r⁻¹(1 − cos θ_m)`, `θ_m = mπ/M`, with
///   eigenvector factor `cos((x + ½)θ_m)`;
/// - ring: `2r⁻¹(1 − cos 2θ_m)`;
/// - twisted ring (Möbius): the y mode `n` decides whether the x factor is
///   periodic or antiperiodic, giving the phase `(4m + 1 − (−1)ⁿ)π/(2M)`;
/// - Klein bottle: the y ring splits into reflection-even modes
///   `cos((2y + 1)nπ/N)` (x periodic, `τ = 0`) and reflection-odd modes
///   `sin((2y + 1)nπ/N)` (x antiperiodic, `τ = 1`), with x phase
///   `(2m + τ)π/M`.
#[derive(Debug, Clone)]
pub struct ModeSpectrum {
    bc: BoundaryCondition,
    dims: Vec<usize>,
    inv_r: Vec<f64>,
}

impl ModeSpectrum {
    pub fn new(spec: &LatticeSpec) -> Self {
        ModeSpectrum {
            bc: spec.bc(),
            dims: spec.dims().to_vec(),
            inv_r: spec.resistances().iter().map(|r| r.recip().to_f64()).collect(),
        }
    }

    /// `θ_m = mπ/M` on the x axis.
    pub fn theta(&self, m: usize) -> f64 {
        m as f64 * PI / self.dims[0] as f64
    }

    /// `φ_n = nπ/N` on the y axis.
    pub fn phi(&self, n: usize) -> f64 {
        n as f64 * PI / self.dims[1] as f64
    }

    /// `α_ℓ = ℓπ/L` on the z axis.
    pub fn alpha(&self, l: usize) -> f64 {
        l as f64 * PI / self.dims[2] as f64
    }

    /// x phase of Möbius mode `(m, n)`.
    pub fn moebius_phase(&self, m: usize, n: usize) -> f64 {
        moebius_phase(self.dims[0], m, n)
    }

    /// x phase of Klein mode `m` in sector `tau`.
    pub fn klein_phase(&self, m: usize, tau: usize) -> f64 {
        (2 * m + tau) as f64 * PI / self.dims[0] as f64
    }

    /// `C = cos((y + ½)φ_n)`.
    pub fn c_factor(&self, y: usize, n: usize) -> f64 {
        ((y as f64 + 0.5) * self.phi(n)).cos()
    }

    /// Every eigenvalue with multiplicity, sorted ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        use BoundaryCondition::*;
        let d = &self.dims;
        let w = |axis: usize, angle: f64| 2.0 * self.inv_r[axis] * (1.0 - angle.cos());
        let mut out = Vec::new();
        match self.bc {
            Free1D => out.extend((0..d[0]).map(|m| w(0, self.theta(m)))),
            Periodic1D => out.extend((0..d[0]).map(|m| w(0, 2.0 * self.theta(m)))),
            Free2D | Periodic2D | Cylinder => {
                let fx = if self.bc == Free2D { 1.0 } else { 2.0 };
                let fy = if self.bc == Periodic2D { 2.0 } else { 1.0 };
                for n in 0..d[1] {
                    for m in 0..d[0] {
                        out.push(w(0, fx * self.theta(m)) + w(1, fy * self.phi(n)));
                    }
                }
            }
            Moebius => {
                for n in 0..d[1] {
                    for m in 0..d[0] {
                        out.push(w(0, self.moebius_phase(m, n)) + w(1, self.phi(n)));
                    }
                }
            }
            Klein => {
                let n_len = d[1];
                // Reflection-even y modes: n = 0..ceil(N/2) − 1; odd: n = 1..floor(N/2).
                let even = 0..n_len.div_ceil(2);
                let odd = 1..n_len / 2 + 1;
                for (tau, range) in [(0, even), (1, odd)] {
                    for n in range {
                        for m in 0..d[0] {
                            out.push(w(0, self.klein_phase(m, tau)) + w(1, 2.0 * self.phi(n)));
                        }
                    }
                }
            }
            Free3D => {
                for l in 0..d[2] {
                    for n in 0..d[1] {
                        for m in 0..d[0] {
                            out.push(w(0, self.theta(m)) + w(1, self.phi(n)) + w(2, self.alpha(l)));
                        }
                    }
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

pub(super) fn moebius_phase(m_len: usize, m: usize, n: usize) -> f64 {
    let sector = if n % 2 == 0 { 0 } else { 2 };
    (4 * m + sector) as f64 * PI / (2 * m_len) as f64
}
