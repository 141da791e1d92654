//! Two-point resistances of finite resistor networks.
//!
//! The resistance between two nodes is computed three independent ways:
//!
//! - [`spectral`]: as a sum over the nonzero eigenmodes of the network
//!   Laplacian, `R = Σ |ψ_iα − ψ_iβ|² / λ_i`.
//! - [`exact`]: by solving the grounded Kirchhoff system in exact rational
//!   arithmetic with fraction-free elimination.
//! - [`lattice`]: closed-form mode sums for regular lattices under free,
//!   periodic, cylindrical, Möbius-strip and Klein-bottle boundaries.
//!
//! [`identities`] holds the lattice-sum and product identities used to reduce
//! those mode sums, and the infinite-lattice resistance integrals.
//!
//! Batch work (all-pairs tables, mode sums, quadrature panels) runs on rayon
//! when the default `parallel` feature is enabled. Every reduction is done in
//! a fixed order, so results are bit-identical with and without it; see
//! [`Execution`].

mod error;
mod exec;
mod sum;

pub mod exact;
pub mod identities;
pub mod lattice;
pub mod network;
pub mod rational;
pub mod spectral;

pub use error::{Error, Result};
pub use exec::Execution;
pub use sum::{neumaier_sum, ModeSum};

pub use exact::{solve_exact, KirchhoffSystem};
pub use lattice::{make_lattice, BoundaryCondition, LatticeSpec};
pub use network::{build_network, Components, Edge, Laplacian, Network, RandomWalkView};
pub use rational::ExactRational;
pub use spectral::{decompose, ResistanceMatrix, Spectrum};
