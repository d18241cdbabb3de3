//! Truncation policy shared by every infinite series in the crate.

use crate::error::{Error, Result};

/// Absolute tail target and term cap for a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTruncation {
    pub abs_tolerance: f64,
    pub max_terms: usize,
}

impl Default for SeriesTruncation {
    fn default() -> Self {
        Self {
            abs_tolerance: 1e-14,
            max_terms: 64,
        }
    }
}

impl SeriesTruncation {
    pub fn new(abs_tolerance: f64, max_terms: usize) -> Result<Self> {
        let t = Self {
            abs_tolerance,
            max_terms,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.abs_tolerance > 0.0 && self.abs_tolerance.is_finite() && self.max_terms >= 4 {
            Ok(())
        } else {
            Err(Error::InvalidTruncation)
        }
    }
}

/// Sums `term(n)` for `n = start, start + 1, ...`.
///
/// `term` returns `(value, envelope)` where `envelope >= |value|` bounds the
/// term independently of oscillating factors. The sum stops once the envelope
/// is below a tenth of the tolerance and no larger than its predecessor.
pub(crate) fn sum_tail<F>(trunc: &SeriesTruncation, start: i64, mut term: F) -> Result<f64>
where
    F: FnMut(i64) -> (f64, f64),
{
    let target = 0.1 * trunc.abs_tolerance;
    let mut acc = 0.0;
    let mut prev = f64::INFINITY;
    for i in 0..trunc.max_terms {
        let n = start + i as i64;
        let (v, env) = term(n);
        acc += v;
        if env < target && env <= prev {
            return Ok(acc);
        }
        prev = env;
    }
    Err(Error::TruncationNotReached { terms: trunc.max_terms })
}
