//! Regular lattices: generators and closed-form two-point resistances.
//!
//! Nodes are numbered `x + M·y + M·N·z` with `x` fastest. The x axis uses
//! resistance `r` and has length `M`; y uses `s` and `N`; z uses `t` and `L`.
//!
//! | boundary     | x (length M) | y (length N) | z (length L) |
//! |--------------|--------------|--------------|--------------|
//! | `Free1D`     | open         |              |              |
//! | `Periodic1D` | ring         |              |              |
//! | `Free2D`     | open         | open         |              |
//! | `Periodic2D` | ring         | ring         |              |
//! | `Cylinder`   | ring         | open         |              |
//! | `Moebius`    | twisted ring | open         |              |
//! | `Klein`      | twisted ring | ring         |              |
//! | `Free3D`     | open         | open         | open         |
//!
//! A twisted ring joins `(M−1, y)` to `(0, N−1−y)`.

mod closed_form;
mod generate;
mod modes;
mod sums;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::network::Network;
use crate::rational::ExactRational;

pub use closed_form::{
    klein_delta, r_1d_free, r_1d_periodic, r_2d_cylinder, r_2d_cylinder_with, r_2d_free, r_2d_free_with, r_2d_klein,
    r_2d_klein_with, r_2d_moebius, r_2d_moebius_with, r_2d_periodic, r_2d_periodic_with, r_3d_free, r_3d_free_with,
};
pub use modes::ModeSpectrum;
pub use sums::{f_sum, g_sum};

/// How lattice edges wrap at the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryCondition {
    Free1D,
    Periodic1D,
    Free2D,
    Periodic2D,
    Cylinder,
    Moebius,
    Klein,
    Free3D,
}

impl BoundaryCondition {
    pub const ALL: [BoundaryCondition; 8] = [
        BoundaryCondition::Free1D,
        BoundaryCondition::Periodic1D,
        BoundaryCondition::Free2D,
        BoundaryCondition::Periodic2D,
        BoundaryCondition::Cylinder,
        BoundaryCondition::Moebius,
        BoundaryCondition::Klein,
        BoundaryCondition::Free3D,
    ];

    /// Number of lattice axes.
    pub fn dimension(self) -> usize {
        use BoundaryCondition::*;
        match self {
            Free1D | Periodic1D => 1,
            Free2D | Periodic2D | Cylinder | Moebius | Klein => 2,
            Free3D => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        use BoundaryCondition::*;
        match self {
            Free1D => "free1d",
            Periodic1D => "periodic1d",
            Free2D => "free2d",
            Periodic2D => "periodic2d",
            Cylinder => "cylinder",
            Moebius => "moebius",
            Klein => "klein",
            Free3D => "free3d",
        }
    }

    /// Whether the axis closes on itself, and whether it does so with the
    /// reflection twist.
    fn wrap(self, axis: usize) -> Wrap {
        use BoundaryCondition::*;
        match (self, axis) {
            (Periodic1D | Periodic2D | Cylinder, 0) => Wrap::Ring,
            (Moebius | Klein, 0) => Wrap::Twisted,
            (Periodic2D | Klein, 1) => Wrap::Ring,
            _ => Wrap::Open,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wrap {
    Open,
    Ring,
    Twisted,
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .to_lowercase()
            .replace('ö', "o")
            .chars()
            .filter(char::is_ascii_alphanumeric)
            .collect();
        BoundaryCondition::ALL
            .into_iter()
            .find(|bc| bc.as_str() == key)
            .or((key == "mobius").then_some(BoundaryCondition::Moebius))
            .ok_or_else(|| Error::InvalidLattice(format!("unknown boundary condition {s:?}")))
    }
}

/// Dimensions, per-axis resistances and boundary condition of a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    bc: BoundaryCondition,
    dims: Vec<usize>,
    resistances: Vec<ExactRational>,
}

impl LatticeSpec {
    /// `dims` and `resistances` must each have one entry per axis.
    pub fn new(bc: BoundaryCondition, dims: Vec<usize>, resistances: Vec<ExactRational>) -> Result<Self> {
        let d = bc.dimension();
        if dims.len() != d {
            return Err(Error::InvalidLattice(format!(
                "{bc} needs {d} dimensions, got {}",
                dims.len()
            )));
        }
        if resistances.len() != d {
            return Err(Error::InvalidLattice(format!(
                "{bc} needs {d} resistances, got {}",
                resistances.len()
            )));
        }
        if let Some(k) = dims.iter().position(|&m| m == 0) {
            return Err(Error::InvalidLattice(format!("axis {k} has length 0")));
        }
        if let Some(r) = resistances.iter().find(|r| !r.is_positive()) {
            return Err(Error::InvalidLattice(format!("resistance {r} must be positive")));
        }
        dims.iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m))
            .ok_or_else(|| Error::InvalidLattice("too many nodes".into()))?;
        Ok(LatticeSpec { bc, dims, resistances })
    }

    pub fn bc(&self) -> BoundaryCondition {
        self.bc
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn resistances(&self) -> &[ExactRational] {
        &self.resistances
    }

    pub fn resistances_f64(&self) -> Vec<f64> {
        self.resistances.iter().map(ExactRational::to_f64).collect()
    }

    pub fn n_nodes(&self) -> usize {
        self.dims.iter().product()
    }

    /// Node index of `coords` (x fastest).
    pub fn index(&self, coords: &[usize]) -> Result<usize> {
        self.check_coords(coords)?;
        Ok(coords.iter().zip(&self.dims).rev().fold(0, |acc, (&c, &m)| acc * m + c))
    }

    /// Coordinates of node `index`.
    pub fn coords(&self, index: usize) -> Result<Vec<usize>> {
        if index >= self.n_nodes() {
            return Err(Error::OutOfRange(format!(
                "node {index} is out of range for a {}-node lattice",
                self.n_nodes()
            )));
        }
        let mut rest = index;
        Ok(self
            .dims
            .iter()
            .map(|&m| {
                let c = rest % m;
                rest /= m;
                c
            })
            .collect())
    }

    fn check_coords(&self, coords: &[usize]) -> Result<()> {
        if coords.len() != self.dims.len() {
            return Err(Error::OutOfRange(format!(
                "expected {} coordinates, got {}",
                self.dims.len(),
                coords.len()
            )));
        }
        for (k, (&c, &m)) in coords.iter().zip(&self.dims).enumerate() {
            if c >= m {
                return Err(Error::OutOfRange(format!(
                    "coordinate {c} on axis {k} exceeds length {m}"
                )));
            }
        }
        Ok(())
    }

    /// Move `coords` by `shift` steps along a closed axis, following the
    /// twist when crossing a twisted seam. Fails on an open axis.
    pub fn translate(&self, coords: &[usize], axis: usize, shift: i64) -> Result<Vec<usize>> {
        self.check_coords(coords)?;
        let wrap = if axis < self.dims.len() {
            self.bc.wrap(axis)
        } else {
            Wrap::Open
        };
        if wrap == Wrap::Open {
            return Err(Error::OutOfRange(format!(
                "axis {axis} of a {} lattice is not closed",
                self.bc
            )));
        }
        let m = self.dims[axis] as i64;
        let moved = coords[axis] as i64 + shift;
        let laps = moved.div_euclid(m);
        let mut out = coords.to_vec();
        out[axis] = moved.rem_euclid(m) as usize;
        if wrap == Wrap::Twisted && laps.rem_euclid(2) == 1 {
            out[1] = self.dims[1] - 1 - out[1];
        }
        Ok(out)
    }

    /// The lattice as an explicit resistor network.
    pub fn network(&self) -> Network {
        generate::lattice_network(self)
    }

    /// Closed-form resistance between two nodes.
    pub fn closed_form(&self, from: &[usize], to: &[usize]) -> Result<f64> {
        self.closed_form_with(from, to, Execution::default())
    }

    pub fn closed_form_with(&self, from: &[usize], to: &[usize], exec: Execution) -> Result<f64> {
        use BoundaryCondition::*;
        self.check_coords(from)?;
        self.check_coords(to)?;
        let d = &self.dims;
        let r = self.resistances_f64();
        let p2 = |c: &[usize]| (c[0], c[1]);
        Ok(match self.bc {
            Free1D => r_1d_free(d[0], r[0], from[0], to[0]),
            Periodic1D => r_1d_periodic(d[0], r[0], from[0], to[0]),
            Free2D => r_2d_free_with(d[0], d[1], r[0], r[1], p2(from), p2(to), exec),
            Periodic2D => r_2d_periodic_with(d[0], d[1], r[0], r[1], p2(from), p2(to), exec),
            Cylinder => r_2d_cylinder_with(d[0], d[1], r[0], r[1], p2(from), p2(to), exec),
            Moebius => r_2d_moebius_with(d[0], d[1], r[0], r[1], p2(from), p2(to), exec),
            Klein => r_2d_klein_with(d[0], d[1], r[0], r[1], p2(from), p2(to), exec),
            Free3D => r_3d_free_with(
                d[0],
                d[1],
                d[2],
                r[0],
                r[1],
                r[2],
                (from[0], from[1], from[2]),
                (to[0], to[1], to[2]),
                exec,
            ),
        })
    }

    /// Analytic eigenvalues of this lattice's Laplacian.
    pub fn mode_spectrum(&self) -> ModeSpectrum {
        ModeSpectrum::new(self)
    }

    /// One-line human description, e.g. `free2d 5x4 r=1 s=1 (0,0)->(3,3)`.
    pub fn describe(&self, from: &[usize], to: &[usize]) -> String {
        let dims = self.dims.iter().map(usize::to_string).collect::<Vec<_>>().join("x");
        let res = ["r", "s", "t"]
            .iter()
            .zip(&self.resistances)
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let pt = |c: &[usize]| c.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        format!("{} {dims} {res} ({})->({})", self.bc, pt(from), pt(to))
    }
}

/// The lattice described by `spec` as a resistor network.
pub fn make_lattice(spec: &LatticeSpec) -> Network {
    spec.network()
}
