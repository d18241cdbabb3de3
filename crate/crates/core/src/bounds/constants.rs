//! Recomputation of the printed numerical constants.

use alloc::vec::Vec;

use super::functions::{aux_ratios, g_minimum, psi, HEX_Y};
use crate::error::Result;
use crate::series::SeriesTruncation;

/// One recomputed constant next to its printed value.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantRow {
    pub name: &'static str,
    pub computed: f64,
    pub printed: f64,
    pub abs_diff: f64,
    /// Largest deviation accepted as a reproduction.
    pub tolerance: f64,
}

impl ConstantRow {
    fn new(name: &'static str, computed: f64, printed: f64, tolerance: f64) -> Self {
        Self {
            name,
            computed,
            printed,
            abs_diff: (computed - printed).abs(),
            tolerance,
        }
    }

    pub fn reproduced(&self) -> bool {
        self.abs_diff <= self.tolerance
    }
}

/// The seven printed constants, each recomputed from its defining formula.
pub fn paper_constants(trunc: &SeriesTruncation) -> Result<Vec<ConstantRow>> {
    trunc.validate()?;
    let (nu_half, om_half) = aux_ratios(0.5, trunc)?;
    let (nu_third, om_third) = aux_ratios(1.0 / 3.0, trunc)?;
    let (t0, g0) = g_minimum(trunc)?;
    Ok(alloc::vec![
        ConstantRow::new("(1+nu(1/2))/(1+mu(1/2))", nu_half, 1.104299511, 1e-8),
        ConstantRow::new("(1+omega_hat(1/2))/(1+mu_hat(1/2))", om_half, 0.4435351039, 1e-8),
        ConstantRow::new("(1+nu(1/3))/(1+mu(1/3))", nu_third, 1.455483937, 1e-8),
        ConstantRow::new("(1+omega_hat(1/3))/(1+mu_hat(1/3))", om_third, -1.927931130, 1e-8),
        ConstantRow::new("psi(sqrt(3)/2)", psi(HEX_Y, trunc)?, 10.90887470, 1e-6),
        ConstantRow::new("t0", t0, 1.781450608, 1e-6),
        ConstantRow::new("g(t0)", g0, 0.2141862029, 1e-6),
    ])
}
