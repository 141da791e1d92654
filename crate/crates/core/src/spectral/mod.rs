//! Two-point resistance as a sum over the nonzero Laplacian eigenmodes.
//!
//! For a connected network with Laplacian eigenpairs `(λ_i, ψ_i)`,
//!
//! ```text
//! R_αβ = Σ_{λ_i ≠ 0} (ψ_iα − ψ_iβ)² / λ_i
//! ```

mod jacobi;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::network::{Laplacian, Network};
use crate::sum::neumaier_sum;

/// Relative threshold below which an eigenvalue counts as a zero mode.
pub const ZERO_MODE_THRESHOLD: f64 = 1e-9;

/// Eigen-decomposition of a Laplacian.
#[derive(Debug, Clone)]
pub struct Spectrum {
    n: usize,
    values: Vec<f64>,
    vectors: Vec<f64>,
    zero_modes: usize,
    components: usize,
}

/// Diagonalise a Laplacian.
///
/// Fails with `MultipleZeroModes` if the number of eigenvalues below
/// `ZERO_MODE_THRESHOLD · λ_max` differs from the number of connected
/// components read off the matrix sparsity.
pub fn decompose(lap: &Laplacian) -> Result<Spectrum> {
    let n = lap.dim();
    let (values, vectors) = jacobi::eigh(n, lap.as_slice())?;
    let lambda_max = values.last().copied().unwrap_or(0.0).max(0.0);
    let cutoff = ZERO_MODE_THRESHOLD * lambda_max;
    let zero_modes = values.iter().take_while(|&&v| v < cutoff || lambda_max == 0.0).count();
    let components = count_components(lap);
    if zero_modes != components {
        return Err(Error::MultipleZeroModes {
            found: zero_modes,
            components,
        });
    }
    Ok(Spectrum {
        n,
        values,
        vectors,
        zero_modes,
        components,
    })
}

fn count_components(lap: &Laplacian) -> usize {
    let n = lap.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if lap.get(i, j) != 0.0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.values
    }

    /// Unit eigenvector belonging to `eigenvalues()[k]`.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }

    /// Number of leading eigenvalues treated as zero (dropped from sums).
    pub fn zero_modes(&self) -> usize {
        self.zero_modes
    }

    pub fn components(&self) -> usize {
        self.components
    }

    fn check(&self, alpha: usize, beta: usize) -> Result<()> {
        for node in [alpha, beta] {
            if node >= self.n {
                return Err(Error::OutOfRange(format!(
                    "node {node} is out of range for a {}-node network",
                    self.n
                )));
            }
        }
        if self.components != 1 {
            return Err(Error::Disconnected {
                components: self.components,
            });
        }
        Ok(())
    }

    /// Resistance between `alpha` and `beta`; zero when they coincide.
    ///
    /// Terms are added from the largest eigenvalue down with compensation,
    /// and each summand is symmetric in the two nodes, so
    /// `R(α, β) == R(β, α)` bit for bit.
    pub fn two_point_resistance(&self, alpha: usize, beta: usize) -> Result<f64> {
        self.check(alpha, beta)?;
        if alpha == beta {
            return Ok(0.0);
        }
        Ok(self.pair_unchecked(alpha, beta))
    }

    fn pair_unchecked(&self, alpha: usize, beta: usize) -> f64 {
        let n = self.n;
        neumaier_sum((self.zero_modes..n).rev().map(|k| {
            let d = self.vectors[k * n + alpha] - self.vectors[k * n + beta];
            d * d / self.values[k]
        }))
    }

    /// All-pairs resistance table using the default execution policy.
    pub fn resistance_matrix(&self) -> Result<ResistanceMatrix> {
        self.resistance_matrix_with(Execution::default())
    }

    /// All-pairs resistance table. Rows are computed independently, possibly
    /// in parallel; the upper triangle is mirrored into the lower one.
    pub fn resistance_matrix_with(&self, exec: Execution) -> Result<ResistanceMatrix> {
        let n = self.n;
        if n > 0 {
            self.check(0, 0)?;
        }
        let rows = exec.map(0..n, |i| {
            (i + 1..n).map(|j| self.pair_unchecked(i, j)).collect::<Vec<_>>()
        });
        let mut data = vec![0.0; n * n];
        for (i, row) in rows.into_iter().enumerate() {
            for (k, r) in row.into_iter().enumerate() {
                let j = i + 1 + k;
                data[i * n + j] = r;
                data[j * n + i] = r;
            }
        }
        Ok(ResistanceMatrix { n, data })
    }
}

/// Resistance between `alpha` and `beta` by diagonalising the network.
pub fn two_point_resistance(net: &Network, alpha: usize, beta: usize) -> Result<f64> {
    net.check_node(alpha)?;
    net.check_node(beta)?;
    net.require_connected()?;
    decompose(&net.laplacian())?.two_point_resistance(alpha, beta)
}

/// Symmetric table of pairwise resistances with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl ResistanceMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}
