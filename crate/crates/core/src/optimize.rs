//! Minimization of lattice functionals over the fundamental domain and along
//! its right boundary `x = 1/2`.

use alloc::vec::Vec;

use crate::energy::{energy_corollary, energy_generalized, energy_r};
use crate::error::{Error, Result};
use crate::math::{self, HEX_Y};
use crate::moduli::{reduce_to_fundamental, ModuliPoint};
use crate::series::SeriesTruncation;
use crate::theta2d::{theta2_direct, ThetaParams};

/// A lattice functional of `z` at fixed `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Functional {
    /// `θ(α;z)`
    Theta,
    /// `R(α;z)`
    R,
    /// `Σ |P|^{2k} e^{-πα|P|²}`
    Generalized { k: u32 },
    /// `Σ |P|² (e^{-πα|P|²} - e^{-πβ|P|²})`
    Corollary { beta: f64 },
}

impl Functional {
    pub fn id(&self) -> &'static str {
        match self {
            Functional::Theta => "theta",
            Functional::R => "R",
            Functional::Generalized { .. } => "generalized",
            Functional::Corollary { .. } => "corollary",
        }
    }

    /// Value at `z`, which need not be reduced.
    pub fn eval(&self, alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
        match *self {
            Functional::Theta => theta2_direct(&ThetaParams::new(alpha, z).with_trunc(*trunc)),
            Functional::R => energy_r(alpha, z, trunc),
            Functional::Generalized { k } => energy_generalized(k, alpha, z, trunc),
            Functional::Corollary { beta } => energy_corollary(alpha, beta, z, trunc),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizeOptions {
    /// Upper end of the `y` search range.
    pub y_max: f64,
    /// Coarse grid points per axis.
    pub grid: usize,
    /// Simplex iteration cap.
    pub max_iterations: usize,
    /// The simplex has converged once its diameter is below this.
    pub diameter_tol: f64,
    /// Bracket width at which golden-section search stops.
    pub bracket_tol: f64,
    pub trunc: SeriesTruncation,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        Self {
            y_max: 4.0,
            grid: 48,
            max_iterations: 5000,
            diameter_tol: 1e-7,
            bracket_tol: 1e-9,
            trunc: SeriesTruncation::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizeResult {
    /// Minimizer, reduced to the closed fundamental domain.
    pub argmin: ModuliPoint,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    pub functional: Functional,
    pub alpha: f64,
}

fn validate(functional: Functional, alpha: f64, opts: &MinimizeOptions) -> Result<()> {
    // One evaluation surfaces every parameter error the functional can raise.
    functional.eval(alpha, ModuliPoint::hexagonal(), &opts.trunc)?;
    if !(opts.y_max > 1.0) || opts.grid < 2 || !(opts.diameter_tol > 0.0) || !(opts.bracket_tol > 0.0) {
        return Err(Error::InvalidArgument("minimize options out of range"));
    }
    Ok(())
}

/// Objective on the whole plane: reduce, then evaluate; `+∞` off the half-plane.
fn objective(functional: Functional, alpha: f64, p: [f64; 2], trunc: &SeriesTruncation) -> f64 {
    if !(p[1] > 0.0) || !p[0].is_finite() || !p[1].is_finite() {
        return f64::INFINITY;
    }
    match reduce_to_fundamental(ModuliPoint { x: p[0], y: p[1] }) {
        Ok((r, _)) => functional.eval(alpha, r, trunc).unwrap_or(f64::INFINITY),
        Err(_) => f64::INFINITY,
    }
}

/// Best node of the coarse grid over `{0 <= x <= 1/2, 0.9·√3/2 <= y <= y_max, |z| >= 0.98}`.
pub fn coarse_grid_start(functional: Functional, alpha: f64, opts: &MinimizeOptions) -> Result<ModuliPoint> {
    validate(functional, alpha, opts)?;
    let n = opts.grid;
    let y_lo = 0.9 * HEX_Y;
    let mut best = (f64::INFINITY, ModuliPoint::hexagonal());
    for j in 0..n {
        let y = y_lo + (opts.y_max - y_lo) * j as f64 / (n - 1) as f64;
        for i in 0..n {
            let x = 0.5 * i as f64 / (n - 1) as f64;
            if x * x + y * y < 0.98 * 0.98 {
                continue;
            }
            let v = objective(functional, alpha, [x, y], &opts.trunc);
            if v < best.0 {
                best = (v, ModuliPoint { x, y });
            }
        }
    }
    Ok(best.1)
}

/// Coarse grid followed by simplex refinement.
pub fn minimize(functional: Functional, alpha: f64, opts: &MinimizeOptions) -> Result<MinimizeResult> {
    let start = coarse_grid_start(functional, alpha, opts)?;
    minimize_from(functional, alpha, start, opts)
}

/// Simplex refinement from `start` alone.
pub fn minimize_from(
    functional: Functional,
    alpha: f64,
    start: ModuliPoint,
    opts: &MinimizeOptions,
) -> Result<MinimizeResult> {
    validate(functional, alpha, opts)?;
    let f = |p: [f64; 2]| objective(functional, alpha, p, &opts.trunc);
    let step = 0.5 * (opts.y_max - 0.9 * HEX_Y) / opts.grid as f64;
    let (best, iterations) = nelder_mead(f, [start.x, start.y], step, opts.diameter_tol, opts.max_iterations).ok_or(
        Error::NoConvergence {
            iterations: opts.max_iterations,
        },
    )?;
    let (argmin, _) = reduce_to_fundamental(ModuliPoint { x: best[0], y: best[1] })?;
    let value = functional.eval(alpha, argmin, &opts.trunc)?;
    Ok(MinimizeResult {
        argmin,
        value,
        iterations,
        converged: true,
        functional,
        alpha,
    })
}

/// Two-dimensional Nelder–Mead; `None` if the diameter target is not met in time.
fn nelder_mead<F>(mut f: F, start: [f64; 2], step: f64, tol: f64, max_iter: usize) -> Option<([f64; 2], usize)>
where
    F: FnMut([f64; 2]) -> f64,
{
    let mut s: Vec<([f64; 2], f64)> = [start, [start[0] + step, start[1]], [start[0], start[1] + step]]
        .into_iter()
        .map(|p| (p, f(p)))
        .collect();
    let lerp = |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
    for it in 0..max_iter {
        s.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .map(|(i, j)| {
                let (dx, dy) = (s[i].0[0] - s[j].0[0], s[i].0[1] - s[j].0[1]);
                math::sqrt(dx * dx + dy * dy)
            })
            .fold(0.0, f64::max);
        if diameter < tol {
            return Some((s[0].0, it));
        }
        let centroid = lerp(s[0].0, s[1].0, 0.5);
        let worst = s[2];
        let reflected = lerp(worst.0, centroid, 2.0);
        let fr = f(reflected);
        if fr < s[0].1 {
            let expanded = lerp(worst.0, centroid, 3.0);
            let fe = f(expanded);
            s[2] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < s[1].1 {
            s[2] = (reflected, fr);
        } else {
            let (contracted, fc) = if fr < worst.1 {
                let c = lerp(worst.0, centroid, 1.5);
                (c, f(c))
            } else {
                let c = lerp(worst.0, centroid, 0.5);
                (c, f(c))
            };
            if fc < worst.1.min(fr) {
                s[2] = (contracted, fc);
            } else {
                let best = s[0].0;
                for v in s.iter_mut().skip(1) {
                    v.0 = lerp(best, v.0, 0.5);
                    v.1 = f(v.0);
                }
            }
        }
    }
    None
}

/// Golden-section search for the minimum of `y ↦ f(1/2 + iy)` on `[√3/2, y_max]`.
///
/// Returns `(y*, value)`; the endpoints are compared with the bracket result
/// so a boundary minimum is reported exactly.
pub fn minimize_on_gamma(functional: Functional, alpha: f64, opts: &MinimizeOptions) -> Result<(f64, f64)> {
    validate(functional, alpha, opts)?;
    let g = |y: f64| functional.eval(alpha, ModuliPoint { x: 0.5, y }, &opts.trunc);
    let inv_phi = (math::sqrt(5.0) - 1.0) / 2.0;
    let (mut lo, mut hi) = (HEX_Y, opts.y_max);
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (g(c)?, g(d)?);
    while hi - lo > opts.bracket_tol {
        if fc <= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = g(c)?;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = g(d)?;
        }
    }
    let mid = 0.5 * (lo + hi);
    let mut best = (mid, g(mid)?);
    for y in [HEX_Y, opts.y_max] {
        let v = g(y)?;
        if v < best.1 {
            best = (y, v);
        }
    }
    Ok(best)
}

/// `f(z) - f(e^{iπ/3})`; exactly zero at the hexagonal point.
pub fn hexagonal_gap(functional: Functional, alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    let v = functional.eval(alpha, z, trunc)?;
    let h = functional.eval(alpha, ModuliPoint::hexagonal(), trunc)?;
    Ok(v - h)
}
