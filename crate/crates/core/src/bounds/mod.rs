//! Grid checks of the inequalities behind the minimality argument.
//!
//! Each lemma id names one inequality together with its parameters, its
//! region and a signed slack: positive means the inequality holds with room
//! to spare. Where the bound is a small constant or an exponentially small
//! function the slack is measured in units of the bound, so that the fixed
//! tolerance stays meaningful.

mod constants;
mod functions;
mod lemmas;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::{Error, Result};
use crate::series::SeriesTruncation;

pub use constants::{paper_constants, ConstantRow};
pub use functions::*;
pub use lemmas::{lemma, lemma_ids, LemmaSpec, CONCAVITY_STEP, MONOTONE_STEP};

/// Default number of grid points per axis.
pub const DEFAULT_RESOLUTION: usize = 64;
/// Default allowance for negative slack.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Upper clip applied to `alpha`, `y` and similar unbounded axes.
pub const AXIS_CLIP: f64 = 12.0;
/// Closed region inequalities are relaxed by this much against rounding.
const EDGE_SLACK: f64 = 1e-12;

/// Named parameter regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionId {
    /// `y >= √3/2`, `α >= 3/2`, `y >= α/2`.
    Aa,
    /// `y >= 1`, `2y <= α <= 3y`.
    Ab,
    /// `√3/2 <= y <= 1`, `2y <= α <= 3y`.
    Ac,
    /// `y >= √3/2`, `α >= 3y`.
    Ad,
    /// `y >= √3/2`, `α >= 2y`: the union of `A_b`, `A_c`, `A_d`.
    Abcd,
    /// `α >= 3/2`, `y >= 4α/5`.
    Omega1,
    /// `α >= 3/2`, `√3/2 <= y <= 4α/5`.
    Omega2,
    /// `0 < x < 1/2`, `x² + y² > 1`, with `α >= 3/2` when `α` is sampled.
    DG,
    /// The line `x = 1/2`, `y >= √3/2`, with `α >= 3/2` when sampled.
    Gamma,
    /// A rectangle in the theta variables, `X > 0`.
    XYrect,
    /// Only the lemma's own constraints.
    Custom,
}

impl RegionId {
    pub const ALL: [RegionId; 11] = [
        RegionId::Aa,
        RegionId::Ab,
        RegionId::Ac,
        RegionId::Ad,
        RegionId::Abcd,
        RegionId::Omega1,
        RegionId::Omega2,
        RegionId::DG,
        RegionId::Gamma,
        RegionId::XYrect,
        RegionId::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionId::Aa => "Aa",
            RegionId::Ab => "Ab",
            RegionId::Ac => "Ac",
            RegionId::Ad => "Ad",
            RegionId::Abcd => "Abcd",
            RegionId::Omega1 => "Omega1",
            RegionId::Omega2 => "Omega2",
            RegionId::DG => "DG",
            RegionId::Gamma => "Gamma",
            RegionId::XYrect => "XYrect",
            RegionId::Custom => "custom",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name().eq_ignore_ascii_case(s))
    }

    /// Whether the named point satisfies this region's constraints.
    ///
    /// Constraints on parameters that are not sampled are skipped. Any
    /// sampled `x` must also lie in `D_G`.
    pub fn contains(self, names: &[String], values: &[f64]) -> bool {
        let get = |n: &str| names.iter().position(|m| m == n).map(|i| values[i]);
        let s = EDGE_SLACK;
        let hy = HEX_Y - s;
        let (alpha, y, x) = (get("alpha"), get("y"), get("x"));
        let ay = |f: &dyn Fn(f64, f64) -> bool| match (alpha, y) {
            (Some(a), Some(y)) => f(a, y),
            _ => true,
        };
        let alpha_ok = alpha.map_or(true, |a| a >= 1.5 - s);
        let y_ok = y.map_or(true, |y| y >= hy);
        let in_dg = match (x, y) {
            (Some(x), Some(y)) => x > 0.0 && x < 0.5 && x * x + y * y > 1.0,
            (Some(x), None) => x > 0.0 && x < 0.5,
            _ => true,
        };
        let own = match self {
            RegionId::Aa => alpha_ok && y_ok && ay(&|a, y| y >= 0.5 * a - s),
            RegionId::Ab => y.map_or(true, |y| y >= 1.0 - s) && ay(&|a, y| 2.0 * y <= a + s && a <= 3.0 * y + s),
            RegionId::Ac => {
                y_ok && y.map_or(true, |y| y <= 1.0 + s) && ay(&|a, y| 2.0 * y <= a + s && a <= 3.0 * y + s)
            }
            RegionId::Ad => y_ok && ay(&|a, y| a >= 3.0 * y - s),
            RegionId::Abcd => y_ok && ay(&|a, y| a >= 2.0 * y - s),
            RegionId::Omega1 => alpha_ok && ay(&|a, y| y >= 0.8 * a - s),
            RegionId::Omega2 => alpha_ok && y_ok && ay(&|a, y| y <= 0.8 * a + s),
            RegionId::DG | RegionId::Gamma => alpha_ok && y_ok,
            RegionId::XYrect => get("X").map_or(true, |v| v > 0.0),
            RegionId::Custom => true,
        };
        own && in_dg
    }
}

/// One sampled axis.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamRange {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
}

impl ParamRange {
    pub fn new(name: &str, lo: f64, hi: f64) -> Self {
        Self {
            name: name.to_string(),
            lo,
            hi,
        }
    }
}

/// A rectangular grid of `resolution` points per axis, filtered by a region.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionSpec {
    pub param_ranges: Vec<ParamRange>,
    pub resolution: usize,
    pub region_id: RegionId,
}

impl RegionSpec {
    pub fn validate(&self) -> Result<()> {
        if self.resolution < 2 {
            return Err(Error::InvalidArgument("grid resolution must be at least 2"));
        }
        if self.param_ranges.is_empty() {
            return Err(Error::InvalidArgument("a region needs at least one parameter"));
        }
        for r in &self.param_ranges {
            if !(r.lo.is_finite() && r.hi.is_finite() && r.lo < r.hi) {
                return Err(Error::InvalidArgument("each parameter range needs finite lo < hi"));
            }
        }
        Ok(())
    }

    pub fn names(&self) -> Vec<String> {
        self.param_ranges.iter().map(|r| r.name.clone()).collect()
    }

    /// Grid points in row-major order, first parameter outermost, each axis
    /// ascending from `lo` to `hi` inclusive; points outside the region are
    /// dropped.
    pub fn points(&self) -> Result<Vec<Vec<f64>>> {
        self.validate()?;
        let names = self.names();
        let n = self.resolution;
        let axes: Vec<Vec<f64>> = self
            .param_ranges
            .iter()
            .map(|r| {
                (0..n)
                    .map(|i| {
                        if i + 1 == n {
                            r.hi
                        } else {
                            r.lo + (r.hi - r.lo) * i as f64 / (n - 1) as f64
                        }
                    })
                    .collect()
            })
            .collect();
        let dim = axes.len();
        let mut idx = vec![0usize; dim];
        let mut out = Vec::new();
        loop {
            let p: Vec<f64> = (0..dim).map(|d| axes[d][idx[d]]).collect();
            if self.region_id.contains(&names, &p) {
                out.push(p);
            }
            let mut d = dim;
            loop {
                if d == 0 {
                    return Ok(out);
                }
                d -= 1;
                idx[d] += 1;
                if idx[d] < n {
                    break;
                }
                idx[d] = 0;
            }
        }
    }
}

/// Outcome of a grid check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub lemma_id: String,
    pub param_names: Vec<String>,
    pub points_tested: usize,
    /// Smallest slack seen; `-inf` when some evaluation produced NaN.
    pub min_slack: f64,
    pub worst_point: Vec<f64>,
    /// Points whose slack is below `-tolerance`, in grid order.
    pub violations: Vec<(Vec<f64>, f64)>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Builds a report from per-point slacks; NaN counts as `-inf`.
    pub fn from_slacks(
        lemma_id: &str,
        param_names: Vec<String>,
        points: &[Vec<f64>],
        slacks: &[f64],
        tolerance: f64,
    ) -> Self {
        let mut min_slack = f64::INFINITY;
        let mut worst = 0;
        let mut violations = Vec::new();
        for (i, (p, &s)) in points.iter().zip(slacks).enumerate() {
            let s = if s.is_nan() { f64::NEG_INFINITY } else { s };
            if s < min_slack || i == 0 {
                min_slack = s;
                worst = i;
            }
            if s < -tolerance {
                violations.push((p.clone(), s));
            }
        }
        Self {
            lemma_id: lemma_id.to_string(),
            param_names,
            points_tested: points.len(),
            min_slack,
            worst_point: points.get(worst).cloned().unwrap_or_default(),
            violations,
        }
    }
}

/// The default region of a lemma at `resolution` points per axis.
pub fn default_region(lemma_id: &str, resolution: usize) -> Result<RegionSpec> {
    let l = lemma(lemma_id)?;
    Ok(RegionSpec {
        param_ranges: l
            .params
            .iter()
            .zip(l.default)
            .map(|(n, &(lo, hi))| ParamRange::new(n, lo, hi))
            .collect(),
        resolution,
        region_id: l.region,
    })
}

/// Validates `region` against the lemma and returns its grid points.
pub fn prepare(lemma_id: &str, region: &RegionSpec) -> Result<(&'static LemmaSpec, Vec<Vec<f64>>)> {
    let l = lemma(lemma_id)?;
    region.validate()?;
    let names = region.names();
    if names.len() != l.params.len() || names.iter().zip(l.params).any(|(a, b)| a != b) {
        return Err(Error::RegionMismatch(format!(
            "`{}` samples ({}), got ({})",
            l.id,
            l.params.join(", "),
            names.join(", ")
        )));
    }
    if region.region_id != l.region && region.region_id != RegionId::Custom {
        return Err(Error::RegionMismatch(format!(
            "`{}` lives on {}, not {}",
            l.id,
            l.region.name(),
            region.region_id.name()
        )));
    }
    for (r, &(lo, hi)) in region.param_ranges.iter().zip(l.allowed) {
        if r.lo < lo || r.hi > hi {
            return Err(Error::RegionMismatch(format!(
                "`{}` needs {} in [{lo}, {hi}], got [{}, {}]",
                l.id, r.name, r.lo, r.hi
            )));
        }
    }
    let grid = RegionSpec {
        region_id: l.region,
        ..region.clone()
    };
    let points = grid.points()?;
    if points.is_empty() {
        return Err(Error::RegionMismatch(format!(
            "no grid point of `{}` lies in {}",
            l.id,
            l.region.name()
        )));
    }
    Ok((l, points))
}

/// Samples the lemma's slack on `region` and reports violations below `-tolerance`.
pub fn check_inequality(
    lemma_id: &str,
    region: &RegionSpec,
    trunc: &SeriesTruncation,
    tolerance: f64,
) -> Result<CheckReport> {
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidArgument("tolerance must be finite and nonnegative"));
    }
    trunc.validate()?;
    let (l, points) = prepare(lemma_id, region)?;
    let slacks = points.iter().map(|p| l.slack(p, trunc)).collect::<Result<Vec<f64>>>()?;
    Ok(CheckReport::from_slacks(
        l.id,
        region.names(),
        &points,
        &slacks,
        tolerance,
    ))
}
