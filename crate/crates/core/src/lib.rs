//! Lattice energies on the moduli space of unit-density planar lattices.
//!
//! The central object is `R(α;z) = Σ |P|⁴ e^{-πα|P|²}`, summed over the lattice
//! attached to `z` in the upper half-plane. The crate evaluates it together with
//! the one- and two-dimensional theta functions it is built from, the analytic
//! derivative decompositions used to locate its minimizer, numeric checks of
//! the inequalities that control those decompositions, and a small optimizer.
//!
//! Everything is `no_std` with `alloc`; the `hexmin` crate adds the CLI.

#![no_std]
// `!(a > b)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod energy;
pub mod error;
mod math;
pub mod moduli;
pub mod optimize;
pub mod quadrature;
pub mod series;
pub mod theta1d;
pub mod theta2d;

pub use error::{Error, Result};
pub use moduli::{GroupGenerator, ModuliPoint, ReductionTrace};
pub use series::SeriesTruncation;
