//! The registry of checkable inequalities and their slack functions.

use alloc::vec::Vec;

use super::functions::*;
use super::RegionId;
use crate::energy::{dr_dy_line, neg_theta_y, phi_a, phi_b, radial_operator};
use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::moduli::ModuliPoint;
use crate::series::SeriesTruncation;
use crate::theta1d::{
    aux_series, comb_ratio, limit_parts, theta_quotient, theta_quotient_limit_fourier, AuxSeries, LimitPoint,
    QuotientKind,
};

/// Central-difference step for monotonicity claims.
pub const MONOTONE_STEP: f64 = 1e-4;
/// Second-difference step for the concavity claim; `1e-4` would leave
/// rounding noise of order `1e-7`.
pub const CONCAVITY_STEP: f64 = 1e-3;
/// Multipliers `k` sampled by the `ϑ_Y(X;kY)` quotient bounds.
const K_VALUES: [u32; 6] = [1, 2, 3, 4, 5, 6];

const INF: f64 = f64::INFINITY;
const AXIS: f64 = super::AXIS_CLIP;

type Eval = fn(&[f64], &SeriesTruncation) -> Result<f64>;

/// One checkable inequality.
#[derive(Debug)]
pub struct LemmaSpec {
    pub id: &'static str,
    /// Sampled parameters, outermost first.
    pub params: &'static [&'static str],
    pub region: RegionId,
    /// Closed box every sampling range must stay inside.
    pub allowed: &'static [(f64, f64)],
    /// Ranges used by the default grid.
    pub default: &'static [(f64, f64)],
    /// The inequality and the unit of its slack.
    pub claim: &'static str,
    eval: Eval,
}

impl LemmaSpec {
    /// Signed slack at `point`; nonnegative where the inequality holds.
    pub fn slack(&self, point: &[f64], trunc: &SeriesTruncation) -> Result<f64> {
        (self.eval)(point, trunc)
    }
}

/// Looks up a lemma by id.
pub fn lemma(id: &str) -> Result<&'static LemmaSpec> {
    LEMMAS
        .iter()
        .find(|l| l.id == id)
        .ok_or_else(|| Error::UnknownLemma(id.into()))
}

/// All lemma ids in registry order.
pub fn lemma_ids() -> Vec<&'static str> {
    LEMMAS.iter().map(|l| l.id).collect()
}

fn q(dx: u8, k: u32, x: f64, y: f64, tr: &SeriesTruncation) -> Result<f64> {
    theta_quotient(dx, k, x, y, tr)
}

/// `1 - |value|/bound`: the slack of `|value| <= bound` in units of the bound.
fn rel_upper(value: f64, bound: f64) -> f64 {
    1.0 - math::abs(value) / bound
}

/// Slack of `lo <= v <= hi` in units of `scale`.
fn two_sided(v: f64, lo: f64, hi: f64, scale: f64) -> f64 {
    (v - lo).min(hi - v) / scale
}

/// Central difference of `f` at `x`, with the stencil shifted to stay below `hi`.
fn slope(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64, hi: f64) -> Result<f64> {
    let c = x.min(hi - h);
    Ok((f(c + h)? - f(c - h)?) / (2.0 * h))
}

fn min_over_k(f: impl Fn(u32) -> Result<f64>) -> Result<f64> {
    let mut m = INF;
    for k in K_VALUES {
        m = m.min(f(k)?);
    }
    Ok(m)
}

fn mu_nu_om(x: f64, tr: &SeriesTruncation) -> Result<(f64, f64, f64)> {
    Ok((
        aux_series(AuxSeries::Mu, x, tr)?,
        aux_series(AuxSeries::Nu, x, tr)?,
        aux_series(AuxSeries::Omega, x, tr)?,
    ))
}

fn moist1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (mu, _, _) = mu_nu_om(p[0], tr)?;
    let b = (1.0 + mu) / (1.0 - mu);
    min_over_k(|k| Ok(rel_upper(q(0, k, p[0], p[1], tr)?, k as f64 * b)))
}

fn moist2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let b = math::exp(PI / (4.0 * p[0])) / PI;
    min_over_k(|k| Ok(rel_upper(q(0, k, p[0], p[1], tr)?, k as f64 * b)))
}

fn moistt1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (mu, nu, _) = mu_nu_om(p[0], tr)?;
    let b = PI * (1.0 + nu) / (1.0 - mu);
    min_over_k(|k| Ok(rel_upper(q(1, k, p[0], p[1], tr)?, k as f64 * b)))
}

fn moistt2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (mu, nu, _) = mu_nu_om(p[0], tr)?;
    Ok(rel_upper(q(1, 1, p[0], p[1], tr)?, PI * (1.0 + nu) / (1.0 + mu)))
}

fn moistt3(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    let b = 1.5 / (PI * x) * (1.0 + PI / (6.0 * x)) * math::exp(PI / (4.0 * x));
    min_over_k(|k| Ok(rel_upper(q(1, k, x, p[1], tr)?, k as f64 * b)))
}

fn moistt4(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    Ok(rel_upper(q(1, 1, x, p[1], tr)?, 1.5 / x * (1.0 + PI / (6.0 * x))))
}

fn time1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    let lo = theta_quotient_limit_fourier(QuotientKind::XyOverY, x, LimitPoint::Zero, tr)?;
    let hi = theta_quotient_limit_fourier(QuotientKind::XyOverY, x, LimitPoint::Half, tr)?;
    Ok(two_sided(q(1, 1, x, p[1], tr)?, lo, hi, PI))
}

fn time2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    let e = math::exp(-PI / x);
    let lo = (0.75 * x * x + 2.0 * PI * PI * e) / (-0.5 * x * x * x + 2.0 * PI * x * x * e);
    let hi = PI / (4.0 * x * x);
    Ok(two_sided(q(1, 1, x, p[1], tr)?, lo, hi, hi.max(1.0)))
}

fn time_eye(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(eye_a_scaled(p[0], tr)?.min(eye_b_scaled(p[0], tr)?))
}

fn var2_1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    let (mu, _, om) = mu_nu_om(x, tr)?;
    let mu_hat = aux_series(AuxSeries::MuHat, x, tr)?;
    let om_hat = aux_series(AuxSeries::OmegaHat, x, tr)?;
    let p2 = PI * PI;
    Ok(two_sided(
        q(2, 1, x, p[1], tr)?,
        p2 * (1.0 + om_hat) / (1.0 + mu_hat),
        p2 * (1.0 + om) / (1.0 + mu),
        p2,
    ))
}

fn var2_2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    let base = 3.75 / (x * x);
    let spread = PI / (3.0 * x) + PI * PI / (60.0 * x * x);
    Ok(two_sided(
        q(2, 1, x, p[1], tr)?,
        base * (1.0 - spread),
        base * (1.0 + spread),
        base * (1.0 + spread),
    ))
}

fn var1_1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (mu, _, om) = mu_nu_om(p[0], tr)?;
    let b = PI * PI * (1.0 + om) / (1.0 - mu);
    min_over_k(|k| Ok(rel_upper(q(2, k, p[0], p[1], tr)?, k as f64 * b)))
}

fn var1_2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let x = p[0];
    let b = 3.75 / (PI * x * x) * (1.0 + PI / (3.0 * x) + PI * PI / (60.0 * x * x)) * math::exp(PI / (4.0 * x));
    min_over_k(|k| Ok(rel_upper(q(2, k, x, p[1], tr)?, k as f64 * b)))
}

fn mono(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (x, y) = (p[0], p[1]);
    let f = |v: f64| q(1, 1, x, v, tr);
    let frac = y - math::floor(y);
    let sign = if frac <= 0.5 { 1.0 } else { -1.0 };
    Ok(sign * slope(f, y, MONOTONE_STEP, INF)? / math::abs(f(y)?).max(1.0))
}

fn monoo(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (x, y) = (p[0], p[1]);
    let f = |v: f64| q(2, 1, x, v, tr);
    Ok(-slope(f, y, MONOTONE_STEP, INF)? / math::abs(f(y)?).max(1.0))
}

fn air1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for at in [LimitPoint::Zero, LimitPoint::Half] {
        let f = theta_quotient_limit_fourier(QuotientKind::XyOverY, p[0], at, tr)?;
        let (n, d) = limit_parts(p[0], at, tr)?;
        let c = n / d;
        worst = worst.max(math::abs(f - c) / math::abs(c).max(1.0));
    }
    Ok(-worst)
}

fn four(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(rel_upper(comb_ratio(3, p[0], p[1], tr)?, 0.25))
}

fn sixteen(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(rel_upper(comb_ratio(5, p[0], p[1], tr)?, 0.0625))
}

fn auxi(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(1.0 - auxi_ratio(p[0], tr)?)
}

fn z(p: &[f64]) -> ModuliPoint {
    ModuliPoint { x: p[2], y: p[1] }
}

/// `πα⁴y²`, the scale of `Φ_A`.
fn phi_scale(a: f64, y: f64) -> f64 {
    PI * math::powi(a, 4) * y * y
}

fn l31(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let big_x = p[1] / p[0];
    Ok(neg_theta_y(big_x, p[2], tr)? * math::exp(PI * big_x) / (4.0 * PI))
}

fn l33(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(phi_a(p[0], z(p), tr)? / phi_scale(p[0], p[1]))
}

fn l33_with(p: &[f64], tr: &SeriesTruncation, d: f64, floor: f64) -> Result<f64> {
    let gap = (phi_a(p[0], z(p), tr)? - d) / phi_scale(p[0], p[1]);
    Ok(gap.min(d - floor))
}

fn l33_1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    l33_with(p, tr, d1(p[0], p[1], tr)?, 21.0 / 50.0)
}

fn l33_2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    l33_with(p, tr, d2(p[0], p[1], tr)?, 39.0 / 5.0)
}

fn l33_3(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    l33_with(p, tr, d3(p[0], p[1], tr)?, 109.0 / 10.0)
}

fn l33_4(p: &[f64], _tr: &SeriesTruncation) -> Result<f64> {
    l33_with(p, _tr, d4(p[0], p[1]), 38.0)
}

fn phi_parts(p: &[f64], tr: &SeriesTruncation) -> Result<(f64, [f64; 3])> {
    Ok((phi_a(p[0], z(p), tr)?, phi_b(p[0], z(p), tr)?))
}

fn ratio_bound(p: &[f64], tr: &SeriesTruncation, bound: f64) -> Result<f64> {
    let (a, b) = phi_parts(p, tr)?;
    Ok(rel_upper((b[0] + b[1] + b[2]) / a, bound))
}

fn gorgeous1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    ratio_bound(p, tr, 1.0 / 77.0)
}

fn good(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    ratio_bound(p, tr, 1e-3)
}

/// Printed values of `E₁, E₂, E₃` at the corner of `A_a`.
const E_CORNER: [f64; 3] = [1.0 / 235.0, 1.0 / 920.0, 1e-4];
/// Printed values of `Ẽ₁, Ẽ₂, Ẽ₃` at the corner of `A_b ∪ A_c ∪ A_d`.
const E_TILDE_CORNER: [f64; 3] = [2e-3, 6e-4, 6e-5];

fn chain(b: [f64; 3], e: [f64; 3], corner: [f64; 3]) -> f64 {
    let mut m = INF;
    for i in 0..3 {
        m = m.min(rel_upper(b[i], e[i])).min(rel_upper(e[i], corner[i]));
    }
    m
}

fn splendid_chain(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let b = phi_b(p[0], z(p), tr)?;
    Ok(chain(b, e_terms(p[0], p[1], tr)?, E_CORNER))
}

fn good_chain(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let b = phi_b(p[0], z(p), tr)?;
    Ok(chain(b, e_tilde_terms(p[0], p[1], tr)?, E_TILDE_CORNER))
}

fn th2(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (a, b) = phi_parts(p, tr)?;
    Ok((a + b[0] + b[1] + b[2]) / math::abs(a).max(1.0))
}

fn psi_lower(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let at_hex = psi(HEX_Y, tr)?;
    Ok((psi(p[0], tr)? - at_hex).min(at_hex - 109.0 / 10.0))
}

fn d3_monotone(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let y = p[1];
    let f = |a: f64| d3(a, y, tr);
    Ok(slope(f, p[0], MONOTONE_STEP, INF)? / math::abs(f(p[0])?).max(1.0))
}

fn psi_concave(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let h = CONCAVITY_STEP;
    let c = p[0].min(1.0 - h);
    let (m, o, u) = (psi(c - h, tr)?, psi(c, tr)?, psi(c + h, tr)?);
    Ok(-(m - 2.0 * o + u) / (h * h) / math::abs(o).max(1.0))
}

/// `(I_a + I_b)/α²`, the sign of `∂R/∂y` on `x = 1/2`.
fn dy_sign(a: f64, y: f64, tr: &SeriesTruncation) -> Result<f64> {
    let (_, d) = dr_dy_line(a, y, tr)?;
    Ok((d.i_a_total() + d.i_b_total()) / (a * a))
}

fn restart(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    dy_sign(p[0], p[1], tr)
}

fn lematem(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(-math::abs(dy_sign(p[0], HEX_Y, tr)?))
}

fn maea3(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (_, d) = dr_dy_line(p[0], p[1], tr)?;
    Ok(d.i_a_total() / (p[0] * p[0]) - 3.0 / 40.0)
}

fn add1(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (a, y) = (p[0], p[1]);
    let (_, d) = dr_dy_line(a, y, tr)?;
    let lower = i_a_lower(a, y, tr)?;
    let mut m = INF;
    for (v, lo) in d.i_a.iter().zip(lower) {
        m = m.min((v - lo) / (a * a));
    }
    let eb = eps_bar(y / a, tr)?;
    for (v, b) in eb.into_iter().zip(EPS_BAR_BOUNDS) {
        m = m.min(rel_upper(v, b));
    }
    Ok(m)
}

fn addadd(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(p_cal(p[0], p[1], tr)? - 0.2)
}

fn maea3_chain(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (_, d) = dr_dy_line(p[0], p[1], tr)?;
    Ok(d.i_a_total() / (p[0] * p[0]) - 0.375 * p_cal(p[0], p[1], tr)?)
}

fn g_lower(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (_, g0) = g_minimum(tr)?;
    Ok((g_fn(p[0], tr)? - g0).min(g0 - 0.2))
}

/// With `h = e^{-πtr²} H`, `∂h/∂r / |h| = (H' - 2πtr H)/|H|`.
fn h_monotone(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (r, t) = (p[0], p[1]);
    let eb = eps_bar(t, tr)?;
    let f = |v: f64| Ok(h_scaled(v, t, &eb));
    let big_h = h_scaled(r, t, &eb);
    let d = slope(f, r, MONOTONE_STEP, INF)? - 2.0 * PI * t * r * big_h;
    Ok(d / math::abs(big_h).max(f64::MIN_POSITIVE))
}

fn mean4(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (_, d) = dr_dy_line(p[0], p[1], tr)?;
    Ok(rel_upper(d.i_b_total() / d.i_a_total(), 1e-4))
}

fn add5(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let j = j_terms(p[0], p[1], tr)?;
    let mut m = INF;
    for k in 0..4 {
        m = m.min(rel_upper(j[k], J_BOUNDS[k]));
    }
    Ok(m)
}

/// `(y⁴/4) e^{πα/y}`, the inverse scale of the radial operator on `Ω₂`.
fn radial_unit(a: f64, y: f64) -> f64 {
    math::powi(y, 4) / 4.0 * math::exp(PI * a / y)
}

fn lemm10(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (a, y) = (p[0], p[1]);
    let (r, _) = radial_operator(a, y, tr)?;
    Ok(r * radial_unit(a, y) - y_cal(a, y, tr)?)
}

fn lema11(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (ea, eb, ec) = eps_abc(p[0], p[1], tr)?;
    Ok(rel_upper(ea, EPS_ABC_BOUNDS[0])
        .min(rel_upper(eb, EPS_ABC_BOUNDS[1]))
        .min(rel_upper(ec, EPS_ABC_BOUNDS[2])))
}

fn lema12(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    Ok(y_cal(p[0], p[1], tr)? - 77.0 / 200.0)
}

fn lema13(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    let (a, y) = (p[0], p[1]);
    let (r, _) = radial_operator(a, y, tr)?;
    Ok(r * 4.0 * radial_unit(a, y) - 77.0 / 50.0)
}

fn w_check(p: &[f64], tr: &SeriesTruncation, k: usize) -> Result<f64> {
    let w = w_values(p[0], p[1], tr)?;
    let b = w_bounds(p[0], p[1], tr)?;
    Ok(if k < 3 { w[k] / b[k] - 1.0 } else { 1.0 - w[k] / b[k] })
}

fn lema4(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    w_check(p, tr, 0)
}
fn lema5(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    w_check(p, tr, 1)
}
fn lema6(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    w_check(p, tr, 2)
}
fn lema8(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    w_check(p, tr, 3)
}
fn lema(p: &[f64], tr: &SeriesTruncation) -> Result<f64> {
    w_check(p, tr, 4)
}

const XY: &[&str] = &["X", "Y"];
const AYX: &[&str] = &["alpha", "y", "x"];
const AY: &[&str] = &["alpha", "y"];

const Y01: (f64, f64) = (0.0, 1.0);
const ANY: (f64, f64) = (-INF, INF);
const X_FIFTH: (f64, f64) = (0.2, INF);
const X_HALF: (f64, f64) = (0.0, 0.5);
const X_VAR2: (f64, f64) = (59.0 / 250.0, INF);
const X_MOIST2: (f64, f64) = (0.0, PI / (PI + 2.0));
const ALPHA: (f64, f64) = (1.5, INF);
const POS: (f64, f64) = (0.0, INF);
const XSTRIP: (f64, f64) = (0.0, 0.5);

const D_X_FIFTH: (f64, f64) = (0.2, 3.0);
const D_X_HALF: (f64, f64) = (0.02, 0.5);
const D_ALPHA: (f64, f64) = (1.5, AXIS);
const D_Y: (f64, f64) = (HEX_Y, AXIS);
const D_DG: &[(f64, f64)] = &[D_ALPHA, D_Y, XSTRIP];
const D_AA: &[(f64, f64)] = &[D_ALPHA, D_Y, XSTRIP];
const D_AB: &[(f64, f64)] = &[(2.0, AXIS), (1.0, AXIS), XSTRIP];
const D_AC: &[(f64, f64)] = &[(SQRT3, 3.0), (HEX_Y, 1.0), XSTRIP];
const D_AD: &[(f64, f64)] = &[(1.5 * SQRT3, AXIS), (HEX_Y, 4.0), XSTRIP];
const D_ABCD: &[(f64, f64)] = &[(SQRT3, AXIS), (HEX_Y, 6.0), XSTRIP];
const D_OMEGA1: &[(f64, f64)] = &[D_ALPHA, (1.2, AXIS)];
const D_OMEGA2: &[(f64, f64)] = &[D_ALPHA, (HEX_Y, 0.8 * AXIS)];
const A_3D: &[(f64, f64)] = &[ALPHA, (HEX_Y, INF), XSTRIP];
const A_2D: &[(f64, f64)] = &[ALPHA, (HEX_Y, INF)];

macro_rules! lemma {
    ($id:expr, $params:expr, $region:expr, $allowed:expr, $default:expr, $claim:expr, $eval:expr) => {
        LemmaSpec {
            id: $id,
            params: $params,
            region: $region,
            allowed: $allowed,
            default: $default,
            claim: $claim,
            eval: $eval,
        }
    };
}

static LEMMAS: &[LemmaSpec] = &[
    lemma!("Lemmamoist1", XY, RegionId::XYrect, &[X_FIFTH, ANY], &[D_X_FIFTH, Y01],
        "|ϑ_Y(X;kY)/ϑ_Y(X;Y)| <= k(1+μ)/(1-μ) for X >= 1/5, k <= 6; slack in units of the bound", moist1),
    lemma!("Lemmamoist2", XY, RegionId::XYrect, &[X_MOIST2, ANY], &[(0.02, 0.61), Y01],
        "|ϑ_Y(X;kY)/ϑ_Y(X;Y)| <= (k/π) e^{π/(4X)} for X < π/(π+2), k <= 6; slack in units of the bound", moist2),
    lemma!("Lemmamoistt1", XY, RegionId::XYrect, &[X_FIFTH, ANY], &[D_X_FIFTH, Y01],
        "|ϑ_XY(X;kY)/ϑ_Y(X;Y)| <= kπ(1+ν)/(1-μ) for X >= 1/5, k <= 6; slack in units of the bound", moistt1),
    lemma!("Lemmamoistt2", XY, RegionId::XYrect, &[X_FIFTH, ANY], &[D_X_FIFTH, Y01],
        "|ϑ_XY/ϑ_Y| <= π(1+ν)/(1+μ) for X >= 1/5; slack in units of the bound", moistt2),
    lemma!("Lemmamoistt3", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "|ϑ_XY(X;kY)/ϑ_Y(X;Y)| <= (3k/(2π)) X^{-1}(1+π/(6X)) e^{π/(4X)} for X <= 1/2, k <= 6; slack in units of the bound", moistt3),
    lemma!("Lemmamoistt4", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "|ϑ_XY/ϑ_Y| <= (3/2) X^{-1}(1+π/(6X)) for X <= 1/2; slack in units of the bound", moistt4),
    lemma!("Lemmatime1", XY, RegionId::XYrect, &[X_FIFTH, ANY], &[D_X_FIFTH, Y01],
        "-π(1+ν)/(1+μ) <= ϑ_XY/ϑ_Y <= -π(1+ν̂)/(1+μ̂) for X >= 1/5; slack in units of π", time1),
    lemma!("Lemmatime2", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "c₁/c₂ <= ϑ_XY/ϑ_Y <= π/(4X²) for 0 < X <= 1/2; slack in units of max(1, π/(4X²))", time2),
    lemma!("Lemmatime_eye", &["X"], RegionId::XYrect, &[X_HALF], &[D_X_HALF],
        "a₁c₂ - a₂c₁ >= 0 and πb₂ - 4X²b₁ >= 0 for 0 < X <= 1/2, scaled by X⁴e^{-π/X} and X³e^{-π/(4X)}", time_eye),
    lemma!("Lemmavar2_1", XY, RegionId::XYrect, &[X_VAR2, ANY], &[(59.0 / 250.0, 3.0), Y01],
        "π²(1+ω̂)/(1+μ̂) <= ϑ_XXY/ϑ_Y <= π²(1+ω)/(1+μ) for X >= 59/250; slack in units of π²", var2_1),
    lemma!("Lemmavar2_2", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "ϑ_XXY/ϑ_Y within (15/4)X^{-2}(1 ± π/(3X) ± π²/(60X²)) for X <= 1/2; slack in units of the upper bound", var2_2),
    lemma!("Lemmavar1_1", XY, RegionId::XYrect, &[X_FIFTH, ANY], &[D_X_FIFTH, Y01],
        "|ϑ_XXY(X;kY)/ϑ_Y(X;Y)| <= kπ²(1+ω)/(1-μ) for X >= 1/5, k <= 6; slack in units of the bound", var1_1),
    lemma!("Lemmavar1_2", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "|ϑ_XXY(X;kY)/ϑ_Y(X;Y)| <= (15k/(4π))X^{-2}(1+π/(3X)+π²/(60X²))e^{π/(4X)} for X <= 1/2, k <= 6; slack in units of the bound", var1_2),
    lemma!("mono", XY, RegionId::XYrect, &[POS, ANY], &[(0.02, 3.0), Y01],
        "∂_Y(ϑ_XY/ϑ_Y) >= 0 on [k, k+1/2] and <= 0 on [k+1/2, k+1]; slack is the signed slope over max(1, |quotient|)", mono),
    lemma!("monoo", XY, RegionId::XYrect, &[X_VAR2, (0.0, 0.5)], &[(59.0 / 250.0, 3.0), (0.0, 0.5)],
        "∂_Y(ϑ_XXY/ϑ_Y) <= 0 on [0, 1/2] for X >= 59/250; slack is minus the slope over max(1, |quotient|)", monoo),
    lemma!("Lemmaair1", &["X"], RegionId::XYrect, &[(0.1, INF)], &[(0.1, 3.0)],
        "the tail-series limits of ϑ_XY/ϑ_Y at Y = 0, 1/2 equal a₁/a₂ and b₁/b₂; slack is minus the relative gap", air1),
    lemma!("Lemmafour", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "|Σ(n-Y)³e^{-π(n-Y)²/X} / Σ(n-Y)e^{-π(n-Y)²/X}| <= 1/4 for X <= 1/2; slack in units of 1/4", four),
    lemma!("Lemmasixteen", XY, RegionId::XYrect, &[X_HALF, ANY], &[D_X_HALF, Y01],
        "|Σ(n-Y)⁵e^{-π(n-Y)²/X} / Σ(n-Y)e^{-π(n-Y)²/X}| <= 1/16 for X <= 1/2; slack in units of 1/16", sixteen),
    lemma!("Lemmaauxi", &["a"], RegionId::Custom, &[(2.0, INF)], &[(2.0, 40.0)],
        "|(aπ-10)/(aπ-2)| |(1+σ_{a1})/(1+σ_{a2})| <= 1 for a >= 2", auxi),
    lemma!("l31", AYX, RegionId::DG, &[(1e-3, INF), (HEX_Y, INF), XSTRIP], &[(0.1, AXIS), D_Y, XSTRIP],
        "-ϑ_Y(y/α; x) > 0 on D_G; slack is -ϑ_Y e^{πy/α}/(4π)", l31),
    lemma!("l33", AYX, RegionId::DG, A_3D, D_DG,
        "Φ_A > 0 on D_G with α >= 3/2; slack in units of πα⁴y²", l33),
    lemma!("l33+1", AYX, RegionId::Aa, A_3D, D_AA,
        "Φ_A >= D₁ >= 21/50 on A_a; first gap in units of πα⁴y²", l33_1),
    lemma!("l33+2", AYX, RegionId::Ab, A_3D, D_AB,
        "Φ_A >= D₂ >= 39/5 on A_b; first gap in units of πα⁴y²", l33_2),
    lemma!("l33+3", AYX, RegionId::Ac, A_3D, D_AC,
        "Φ_A >= D₃ >= 109/10 on A_c; first gap in units of πα⁴y²", l33_3),
    lemma!("133+4", AYX, RegionId::Ad, A_3D, D_AD,
        "Φ_A >= D₄ >= 38 on A_d; first gap in units of πα⁴y²", l33_4),
    lemma!("gorgeous1", AYX, RegionId::DG, A_3D, D_DG,
        "|Φ_B/Φ_A| <= 1/77 on D_G with α >= 3/2; slack in units of 1/77", gorgeous1),
    lemma!("splendid", AYX, RegionId::Aa, A_3D, D_AA,
        "|Φ_B/Φ_A| <= 1/77 on A_a; slack in units of 1/77", gorgeous1),
    lemma!("splendid_chain", AYX, RegionId::Aa, A_3D, D_AA,
        "|Φ_B^i| <= E_i(α;y) <= E_i(3/2;√3/2) <= 1/235, 1/920, 1e-4 on A_a; slack in units of each bound", splendid_chain),
    lemma!("good", AYX, RegionId::Abcd, A_3D, D_ABCD,
        "|Φ_B/Φ_A| <= 1e-3 for α >= 2y, y >= √3/2; slack in units of 1e-3", good),
    lemma!("good_chain", AYX, RegionId::Abcd, A_3D, D_ABCD,
        "|Φ_B^i| <= Ẽ_i(α;y) <= 2e-3, 6e-4, 6e-5 for α >= 2y, y >= √3/2; slack in units of each bound", good_chain),
    lemma!("2Th2", AYX, RegionId::DG, A_3D, D_DG,
        "∂R/∂x < 0 on D_G for α >= 3/2, i.e. Φ_A + Φ_B > 0; slack in units of max(1, Φ_A)", th2),
    lemma!("Lemmafuture", &["y"], RegionId::Custom, &[(HEX_Y, 1.0)], &[(HEX_Y, 1.0)],
        "ψ(y) >= ψ(√3/2) >= 109/10 on [√3/2, 1]", psi_lower),
    lemma!("D3_monotone_alpha", AY, RegionId::Ac, &[ALPHA, (HEX_Y, 1.0)], &[(SQRT3, 3.0), (HEX_Y, 1.0)],
        "∂D₃/∂α >= 0 on A_c; slack is the slope over max(1, D₃)", d3_monotone),
    lemma!("psi_concave", &["y"], RegionId::Custom, &[(HEX_Y, 1.0)], &[(HEX_Y, 1.0)],
        "ψ'' <= 0 on [√3/2, 1]; slack is -ψ'' over max(1, ψ)", psi_concave),
    lemma!("restart", AY, RegionId::Gamma, A_2D, &[D_ALPHA, D_Y],
        "∂_y R(α; 1/2 + iy) >= 0 for α >= 3/2, y >= √3/2; slack is (I_a + I_b)/α²", restart),
    lemma!("4lematem", &["alpha"], RegionId::Gamma, &[ALPHA], &[D_ALPHA],
        "∂_y R(α; 1/2 + i√3/2) = 0 for α >= 3/2; slack is -|I_a + I_b|/α²", lematem),
    lemma!("maea3", AY, RegionId::Omega1, A_2D, D_OMEGA1,
        "I_a >= (3/40)α² on Ω₁; slack is I_a/α² - 3/40", maea3),
    lemma!("maea3_chain", AY, RegionId::Omega1, A_2D, D_OMEGA1,
        "I_a >= (3/8)α² 𝒫 on Ω₁; slack in units of α²", maea3_chain),
    lemma!("4add1", AY, RegionId::Omega1, A_2D, D_OMEGA1,
        "I_{a,k} above the four closed-form minorants and ε̄₀..ε̄₄ below 9/50, 1/470, 1/470, 1/29, 1/29 on Ω₁", add1),
    lemma!("addadd", AY, RegionId::Omega1, A_2D, D_OMEGA1,
        "𝒫(α;y) >= 1/5 on Ω₁", addadd),
    lemma!("g_lower", &["t"], RegionId::Custom, &[(T_MIN, INF)], &[(T_MIN, AXIS)],
        "g(t) >= g(t₀) >= 1/5 for t >= 4/5", g_lower),
    lemma!("h_monotone_r", &["r", "t"], RegionId::Custom, &[(1.5, INF), (T_MIN, INF)], &[(1.5, AXIS), (T_MIN, AXIS)],
        "∂h/∂r >= 0 for r >= 3/2, t >= 4/5; slack is the slope over |h|", h_monotone),
    lemma!("mean4", AY, RegionId::Omega1, A_2D, D_OMEGA1,
        "|I_b/I_a| <= 1e-4 on Ω₁; slack in units of 1e-4", mean4),
    lemma!("4add5", AY, RegionId::Omega1, A_2D, D_OMEGA1,
        "|J₁..J₄| <= 1e-5, 1e-7, 1e-8, 1e-8 on Ω₁; slack in units of each bound", add5),
    lemma!("4lemm10", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "radial operator >= (4/y⁴)e^{-πα/y} 𝒴 on Ω₂; slack in units of (4/y⁴)e^{-πα/y}", lemm10),
    lemma!("4lema11", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "ε_a <= 1/980, ε_b <= 101/2100, ε_c <= 4/5 on Ω₂; slack in units of each bound", lema11),
    lemma!("4lema12", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "𝒴 >= 77/200 on Ω₂", lema12),
    lemma!("4lema13", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "radial operator >= (77/50) y^{-4} e^{-πα/y} on Ω₂; slack in units of y^{-4}e^{-πα/y}", lema13),
    lemma!("4lema4", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "W_a >= (2/y⁶)e^{-πα/y} + 4y²(1-1/(16y⁴))²e^{-πα(y+1/(4y))}; slack in units of the bound", lema4),
    lemma!("4lema5", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "W_b >= (2/y⁴)e^{-πα/y} + 4(1-1/(4y²))²e^{-πα(y+1/(4y))}; slack in units of the bound", lema5),
    lemma!("4lema6", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "W_c >= (4y + 1/y)e^{-πα(y+1/(4y))}; slack in units of the bound", lema6),
    lemma!("4lema8", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "W_d <= (2/y⁵)e^{-πα/y}(1+ε_a) + 4y e^{-πα(y+1/(4y))}(1-1/(4y²)-1/(16y⁴)+ε_b); slack in units of the bound", lema8),
    lemma!("4lema", AY, RegionId::Omega2, A_2D, D_OMEGA2,
        "W_e <= 4y² e^{-πα(y+1/(4y))}(1+ε_c); slack in units of the bound", lema),
];
