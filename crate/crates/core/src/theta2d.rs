//! The lattice theta function `θ(α;z) = Σ_{(m,n)} e^{-πα|mz+n|²/y}`.

use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::moduli::{gram_min_eigenvalue, lattice_norm_sq, ModuliPoint};
use crate::series::{sum_tail, SeriesTruncation};
use crate::theta1d::{theta1, ThetaDerivativeOrder};

/// Smallest and largest half-width of the square summation window.
pub const MIN_CUTOFF: i64 = 6;
pub const MAX_CUTOFF: i64 = 200;

/// Arguments shared by the two-dimensional sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaParams {
    pub alpha: f64,
    pub z: ModuliPoint,
    pub trunc: SeriesTruncation,
}

impl ThetaParams {
    pub fn new(alpha: f64, z: ModuliPoint) -> Self {
        Self {
            alpha,
            z,
            trunc: SeriesTruncation::default(),
        }
    }

    pub fn with_trunc(mut self, trunc: SeriesTruncation) -> Self {
        self.trunc = trunc;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        if !self.z.is_valid() {
            return Err(Error::InvalidPoint {
                x: self.z.x,
                y: self.z.y,
            });
        }
        self.trunc.validate()
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveAlpha(alpha))
    }
}

/// Half-width `M` of the window `|m|, |n| <= M` for weights `Q^k e^{-παQ}`.
///
/// Every lattice vector outside the window has `Q >= λ(M+1)²` with `λ` the
/// smallest Gram eigenvalue, and the shell of radius `r` holds `8r` points. `M`
/// is the first value past the weight's peak whose shell bound, with a factor
/// four for the remaining shells, drops below the tolerance.
pub(crate) fn square_cutoff(alpha: f64, z: ModuliPoint, k: u32, trunc: &SeriesTruncation) -> Result<i64> {
    let lam = gram_min_eigenvalue(z);
    let peak = k as f64 / (PI * alpha);
    let mut m = MIN_CUTOFF;
    while m <= MAX_CUTOFF {
        let r = (m + 1) as f64;
        let q = lam * r * r;
        let w = math::powi(q, k as i32) * math::exp(-PI * alpha * q);
        if q >= peak && 32.0 * r * w < trunc.abs_tolerance {
            return Ok(m);
        }
        m += 1;
    }
    Err(Error::TruncationNotReached {
        terms: MAX_CUTOFF as usize,
    })
}

/// `Σ_{(m,n) != 0} Q^k e^{-παQ}` over the square window, plus `zero` for the origin.
pub(crate) fn weighted_lattice_sum(
    alpha: f64,
    z: ModuliPoint,
    k: u32,
    zero: f64,
    trunc: &SeriesTruncation,
) -> Result<f64> {
    let cut = square_cutoff(alpha, z, k, trunc)?;
    let mut acc = zero;
    for m in -cut..=cut {
        let mut row = 0.0;
        for n in -cut..=cut {
            if m == 0 && n == 0 {
                continue;
            }
            let q = lattice_norm_sq(z, m, n);
            row += math::powi(q, k as i32) * math::exp(-PI * alpha * q);
        }
        acc += row;
    }
    Ok(acc)
}

/// Direct double sum over a square window.
pub fn theta2_direct(p: &ThetaParams) -> Result<f64> {
    p.validate()?;
    weighted_lattice_sum(p.alpha, p.z, 0, 1.0, &p.trunc)
}

/// One-dimensional expansion `√X [ϑ(X;0) + 2 Σ_{n>=1} e^{-απyn²} ϑ(X;nx)]`, `X = y/α`.
pub fn theta2_expansion(p: &ThetaParams) -> Result<f64> {
    p.validate()?;
    let (x, y, a) = (p.z.x, p.z.y, p.alpha);
    let big_x = y / a;
    let t0 = theta1(ThetaDerivativeOrder::THETA, big_x, 0.0, &p.trunc)?;
    let tail = sum_tail(&p.trunc, 1, |n| {
        let nf = n as f64;
        let e = math::exp(-a * PI * y * nf * nf);
        // |ϑ(X;Y)| <= ϑ(X;0), so the envelope needs no further theta call.
        let v = theta1(ThetaDerivativeOrder::THETA, big_x, nf * x, &p.trunc).unwrap_or(f64::NAN);
        (2.0 * e * v, 2.0 * e * t0)
    })?;
    let s = t0 + tail;
    if s.is_nan() {
        return Err(Error::TruncationNotReached {
            terms: p.trunc.max_terms,
        });
    }
    Ok(math::sqrt(big_x) * s)
}
