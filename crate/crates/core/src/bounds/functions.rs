//! Closed-form comparison functions used by the inequality checks.
//!
//! Every function here evaluates a displayed bound exactly as written, apart
//! from the corrections listed on the individual items.

use alloc::format;

use crate::energy::{dr_dy_line, radial_sums};
use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::series::{sum_tail, SeriesTruncation};
use crate::theta1d::{aux_series, classical_theta, theta_quotient, AuxSeries, ClassicalKind};

/// `√3/2`
pub const HEX_Y: f64 = 0.866_025_403_784_438_6;
/// `√3`
pub const SQRT3: f64 = 1.732_050_807_568_877_2;
/// Lower end of the `t = y/α` range on `Ω₁`.
pub const T_MIN: f64 = 0.8;

/// Sums a nonnegative series from `start`.
fn pos_tail<F: FnMut(f64) -> f64>(trunc: &SeriesTruncation, start: i64, mut f: F) -> Result<f64> {
    sum_tail(trunc, start, |n| {
        let v = f(n as f64);
        (v, math::abs(v))
    })
}

/// `(1 + ν(X))/(1 + μ(X))` and `(1 + ω̂(X))/(1 + μ̂(X))`.
pub fn aux_ratios(x: f64, trunc: &SeriesTruncation) -> Result<(f64, f64)> {
    let mu = aux_series(AuxSeries::Mu, x, trunc)?;
    let nu = aux_series(AuxSeries::Nu, x, trunc)?;
    let mu_hat = aux_series(AuxSeries::MuHat, x, trunc)?;
    let om_hat = aux_series(AuxSeries::OmegaHat, x, trunc)?;
    Ok(((1.0 + nu) / (1.0 + mu), (1.0 + om_hat) / (1.0 + mu_hat)))
}

/// The common leading part `πα⁴y² + α³y + 3α²/(4π)`.
fn lead(a: f64, y: f64) -> f64 {
    PI * math::powi(a, 4) * y * y + math::powi(a, 3) * y + 3.0 * a * a / (4.0 * PI)
}

fn d_aux(a: f64, y: f64, at: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let (r_nu, r_om) = aux_ratios(at, trunc)?;
    Ok(lead(a, y) - (3.0 * a * y + 2.0 * PI * a * a * y * y) * r_nu + PI * y * y * r_om)
}

/// Lower bound of `Φ_A` on `A_a`, built from the auxiliary ratios at `1/2`.
pub fn d1(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    d_aux(a, y, 0.5, trunc)
}

/// Lower bound of `Φ_A` on `A_b`, built from the auxiliary ratios at `1/3`.
pub fn d2(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    d_aux(a, y, 1.0 / 3.0, trunc)
}

/// Lower bound of `Φ_A` on `A_c`: the `X`-quotient frozen at the arc, the
/// `XX`-quotient at `x = 1/2`. Needs `y <= 1`.
pub fn d3(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let big_x = y / a;
    let arc = math::sqrt((1.0 - y * y).max(0.0));
    let q1 = theta_quotient(1, 1, big_x, arc, trunc)?;
    let q2 = theta_quotient(2, 1, big_x, 0.5, trunc)?;
    Ok(lead(a, y) + (3.0 * a * y / PI + 2.0 * a * a * y * y) * q1 + y * y / PI * q2)
}

/// `ψ(y) = D₃(√3, y)` on `[√3/2, 1]`.
pub fn psi(y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    d3(SQRT3, y, trunc)
}

/// Lower bound of `Φ_A` on `A_d`, from the small-`X` quotient bounds.
pub fn d4(a: f64, y: f64) -> f64 {
    let e = math::exp(-PI * a / y);
    let num = 3.0 * y * y / (4.0 * a * a) + 2.0 * PI * PI * e;
    let den = math::powi(y, 3) / (2.0 * math::powi(a, 3)) - 2.0 * PI * y * y / (a * a) * e;
    lead(a, y) - (3.0 * a * y / PI + 2.0 * a * a * y * y) * num / den
        + 15.0 / (4.0 * PI) * a * a * (1.0 - PI * a / (3.0 * y) - PI * PI * a * a / (60.0 * y * y))
}

/// Majorants `E₁, E₂, E₃` of `|Φ_B¹|, |Φ_B²|, |Φ_B³|` for `X >= 1/5`.
pub fn e_terms(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 3]> {
    let mu = aux_series(AuxSeries::Mu, 0.5, trunc)?;
    let nu = aux_series(AuxSeries::Nu, 0.5, trunc)?;
    let om = aux_series(AuxSeries::Omega, 0.5, trunc)?;
    let e = |n: f64| math::exp(-a * PI * y * (n * n - 1.0));
    let s1 = pos_tail(trunc, 2, |n| {
        (PI * math::powi(a, 4) * y * y * math::powi(n, 6)
            + math::powi(a, 3) * y * math::powi(n, 4)
            + 3.0 / (4.0 * PI) * a * a * n * n)
            * e(n)
    })?;
    let s2 = pos_tail(trunc, 2, |n| {
        (3.0 * a * y * n * n + 2.0 * PI * a * a * y * y * math::powi(n, 4)) * e(n)
    })?;
    let s3 = pos_tail(trunc, 2, |n| PI * y * y * n * n * e(n))?;
    let d = 1.0 - mu;
    Ok([(1.0 + mu) / d * s1, (1.0 + nu) / d * s2, (1.0 + om) / d * s3])
}

/// Majorants `Ẽ₁, Ẽ₂, Ẽ₃` of `|Φ_B^j/Φ_A|`-type terms for `X <= 1/2`.
pub fn e_tilde_terms(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 3]> {
    let e = |n: f64| math::exp(-a * PI * (y * (n * n - 1.0) - 0.25 / y));
    let pi2 = PI * PI;
    let s1 = pos_tail(trunc, 2, |n| {
        (math::powi(a, 4) * y * y * math::powi(n, 6)
            + math::powi(a, 3) * y * math::powi(n, 4) / PI
            + 3.0 * a * a * n * n / (4.0 * pi2))
            * e(n)
    })?;
    let f2 = 1.0 + PI * a / (6.0 * y);
    let s2 = pos_tail(trunc, 2, |n| {
        (4.5 / pi2 * a * a * n * n + 3.0 / PI * math::powi(a, 3) * y * math::powi(n, 4)) * f2 * e(n)
    })?;
    let f3 = 1.0 + PI * a / (3.0 * y) + pi2 * a * a / (60.0 * y * y);
    let s3 = pos_tail(trunc, 2, |n| 15.0 / (4.0 * pi2) * a * a * n * n * f3 * e(n))?;
    Ok([s1, s2, s3])
}

/// The five tails `ε̄₀..ε̄₄` at `t = y/α`.
pub fn eps_bar(t: f64, trunc: &SeriesTruncation) -> Result<[f64; 5]> {
    let e0 = 2.0
        * sum_tail(trunc, 1, |n| {
            let nf = n as f64;
            let m = math::exp(-PI * nf * nf * t);
            (if n % 2 == 1 { m } else { -m }, m)
        })?;
    Ok([
        e0,
        -aux_series(AuxSeries::MuHat, t, trunc)?,
        aux_series(AuxSeries::Mu, t, trunc)?,
        aux_series(AuxSeries::Omega, t, trunc)?,
        -aux_series(AuxSeries::OmegaHat, t, trunc)?,
    ])
}

/// Printed upper bounds of `ε̄₀..ε̄₄` on `t >= 4/5`.
pub const EPS_BAR_BOUNDS: [f64; 5] = [9.0 / 50.0, 1.0 / 470.0, 1.0 / 470.0, 1.0 / 29.0, 1.0 / 29.0];

/// Lower bounds of `I_{a,1}..I_{a,4}`.
pub fn i_a_lower(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 4]> {
    let eb = eps_bar(y / a, trunc)?;
    let p3 = math::powi(PI, 3);
    let e_in = math::exp(-PI * y / a);
    let e_out = math::exp(-PI * a * y);
    let e_mix = math::exp(-PI * y * (a + 1.0 / a));
    let (y2, y3) = (y * y, math::powi(y, 3));
    Ok([
        0.375 * a * a
            + 0.75 * a * a * e_in
            + ((3.0 * PI * PI * math::powi(a, 4) * y2 + 1.5 * PI * math::powi(a, 3) * y + 0.75 * a * a)
                * (1.0 - eb[0])
                - 2.0 * p3 * math::powi(a, 5) * y3)
                * e_out,
        -10.5 * PI * a * y * e_in * (1.0 + eb[2])
            + ((12.0 * PI * PI * a * a * y2 + 21.0 * PI * a * y) * (1.0 - eb[1]) - 4.0 * p3 * math::powi(a, 3) * y3)
                * e_mix,
        11.0 * PI * PI * y2 * e_in - (4.0 * p3 * a * y3 + 22.0 * PI * PI * y2) * e_mix,
        -2.0 * p3 / a * y3 * e_in * (1.0 + eb[3]) + 4.0 * p3 / a * y3 * e_mix * (1.0 - eb[4]),
    ])
}

/// `𝒫(α;y)`, with `I_a >= (3/8)α² 𝒫` on `Ω₁`. Evaluated as displayed, so the
/// `12π²y²` term carries no `(1 - ε̄₁)` factor.
pub fn p_cal(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let eb = eps_bar(y / a, trunc)?;
    let p3 = math::powi(PI, 3);
    let t = y / a;
    let y3 = math::powi(y, 3);
    let first = 2.0
        * math::exp(-PI * t)
        * (1.0 + 44.0 / 3.0 * PI * PI * t * t
            - 14.0 * PI * t * (1.0 + eb[2])
            - 8.0 / 3.0 * p3 * math::powi(t, 3) * (1.0 + eb[3]));
    let second = 8.0 / 3.0
        * math::exp(-PI * y * (a + 1.0 / a))
        * (4.0 * p3 * math::powi(t, 3) * (1.0 - eb[4]) + 12.0 * PI * PI * y * y + 21.0 * PI * t * (1.0 - eb[1])
            - 4.0 * p3 * a * y3
            - 4.0 * p3 * y3 / a
            - 22.0 * PI * PI * t * t);
    let third = 8.0 / 3.0
        * math::exp(-PI * a * y)
        * ((3.0 * PI * PI * a * a * y * y + 1.5 * PI * a * y + 0.75) * (1.0 - eb[0]) - 2.0 * p3 * math::powi(a * y, 3));
    Ok(1.0 + first + second + third)
}

/// `h(r;t)` with the tails `ε̄` supplied. As displayed, the `(3/2)r²t` term
/// has no factor `π`.
pub fn h_with(r: f64, t: f64, eb: &[f64; 5]) -> f64 {
    math::exp(-PI * t * r * r) * h_scaled(r, t, eb)
}

/// `h(r;t) e^{πtr²}`, free of underflow for large `tr²`.
pub fn h_scaled(r: f64, t: f64, eb: &[f64; 5]) -> f64 {
    let p3 = math::powi(PI, 3);
    let (r2, t2, t3) = (r * r, t * t, math::powi(t, 3));
    8.0 / 3.0
        * math::exp(-PI * t)
        * (4.0 * p3 * t3 * (1.0 - eb[4]) + 12.0 * PI * PI * r2 * t2 + 21.0 * PI * t * (1.0 - eb[1])
            - 4.0 * p3 * r2 * r2 * t3
            - 4.0 * p3 * r2 * t3
            - 22.0 * PI * PI * t2)
        + 8.0 / 3.0
            * ((3.0 * PI * PI * r2 * r2 * t2 + 1.5 * r2 * t + 0.75) * (1.0 - eb[0]) - 2.0 * p3 * r2 * r2 * r2 * t3)
}

/// `h(r;t)` with `ε̄` evaluated at `t`.
pub fn h_fn(r: f64, t: f64, trunc: &SeriesTruncation) -> Result<f64> {
    Ok(h_with(r, t, &eps_bar(t, trunc)?))
}

/// `g(t)`, the one-variable minorant of `𝒫` on `Ω₁`.
///
/// The tails are frozen at `t = 4/5`, where each attains its supremum over
/// `t >= 4/5`; every one enters with the unfavourable sign, so `g` bounds `𝒫`
/// from below uniformly.
pub fn g_fn(t: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let eb = eps_bar(T_MIN, trunc)?;
    let p3 = math::powi(PI, 3);
    Ok(1.0
        + 2.0
            * math::exp(-PI * t)
            * (1.0 + 44.0 / 3.0 * PI * PI * t * t
                - 14.0 * PI * t * (1.0 + eb[2])
                - 8.0 / 3.0 * p3 * math::powi(t, 3) * (1.0 + eb[3]))
        + h_with(1.5, t, &eb))
}

/// Smallest value of `g` on `t >= 4/5`: the stationary point `t₀` and `g(t₀)`.
///
/// `g` is decreasing on `[4/5, 1.5]`, has one interior minimum and tends to
/// `1`; the minimum is located by bisection on a central difference of `g`.
pub fn g_minimum(trunc: &SeriesTruncation) -> Result<(f64, f64)> {
    let h = 1e-6;
    let slope = |t: f64| -> Result<f64> { Ok(g_fn(t + h, trunc)? - g_fn(t - h, trunc)?) };
    let (mut lo, mut hi) = (1.5, 2.5);
    if !(slope(lo)? < 0.0 && slope(hi)? > 0.0) {
        return Err(Error::InvalidArgument("g has no stationary point in [1.5, 2.5]"));
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if slope(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t0 = 0.5 * (lo + hi);
    Ok((t0, g_fn(t0, trunc)?))
}

/// `J₁..J₄ = α^{-2} I_{b,k}`.
pub fn j_terms(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 4]> {
    let (_, d) = dr_dy_line(a, y, trunc)?;
    let s = 1.0 / (a * a);
    Ok([d.i_b[0] * s, d.i_b[1] * s, d.i_b[2] * s, d.i_b[3] * s])
}

/// Printed bounds on `|J₁|..|J₄|` over `Ω₁`.
pub const J_BOUNDS: [f64; 4] = [1e-5, 1e-7, 1e-8, 1e-8];

/// The parts `ε_{a,1}..ε_{a,4}`. The last carries the weight `n⁶` in its
/// inner sum, as its derivation from `W_d` requires.
pub fn eps_a_parts(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 4]> {
    let a1 = 2.0 * pos_tail(trunc, 1, |n| math::exp(-4.0 * PI * a * y * n * n))?;
    let a2 = pos_tail(trunc, 2, |n| math::powi(n, 6) * math::exp(-PI * a * (n * n - 1.0) / y))?;
    let inner = pos_tail(trunc, 2, |n| {
        math::powi(n, 6) * math::exp(-4.0 * PI * a * y * (n * n - 1.0))
    })?;
    let th3 = classical_theta(ClassicalKind::Three, a / y, 0, trunc)?;
    let a4 = 64.0 * math::powi(y, 6) * math::exp(-PI * a * (4.0 * y - 1.0 / y)) * (1.0 + inner) * th3;
    Ok([a1, a2, a1 * a2, a4])
}

fn sum_odd(trunc: &SeriesTruncation, p: i32, rate: f64) -> Result<f64> {
    pos_tail(trunc, 2, |n| {
        math::powi(2.0 * n - 1.0, p) * math::exp(-rate * (n - 1.0) * n)
    })
}

fn sum_sq(trunc: &SeriesTruncation, p: i32, rate: f64) -> Result<f64> {
    pos_tail(trunc, 2, |n| math::powi(n, p) * math::exp(-rate * (n * n - 1.0)))
}

/// The parts `ε_{b,1}..ε_{b,4}`.
pub fn eps_b_parts(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 4]> {
    let (fast, slow) = (4.0 * PI * a * y, PI * a / y);
    let b1 = sum_odd(trunc, 6, fast)?;
    let b2 = sum_odd(trunc, 0, slow)?;
    let b4 = (1.0 + sum_odd(trunc, 0, fast)?) * (1.0 + sum_odd(trunc, 6, slow)?) / (64.0 * math::powi(y, 6));
    Ok([b1, b2, b1 * b2, b4])
}

/// The parts `ε_{c,1}..ε_{c,5}`; `ε_c` adds `ε_{b,1} + ε_{b,2} + ε_{b,3}`.
pub fn eps_c_parts(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 5]> {
    let (fast, slow) = (4.0 * PI * a * y, PI * a / y);
    let th3 = classical_theta(ClassicalKind::Three, a / y, 0, trunc)?;
    let mixed = math::exp(-3.0 * PI * a * (y + 0.25 / y));
    let c1 = 32.0 * math::exp(-PI * a * (3.0 * y - 0.25 / y)) * (1.0 + sum_sq(trunc, 6, fast)?) * th3;
    let c2 = 4.0 / math::powi(y, 4) * mixed * (1.0 + sum_sq(trunc, 2, fast)?) * (1.0 + sum_sq(trunc, 4, slow)?);
    let c3 = (1.0 + sum_odd(trunc, 2, fast)?) * (1.0 + sum_odd(trunc, 4, slow)?) / (16.0 * math::powi(y, 4));
    let c4 = 32.0 / (y * y) * mixed * (1.0 + sum_sq(trunc, 4, fast)?) * (1.0 + sum_sq(trunc, 2, slow)?);
    let c5 = (1.0 + sum_odd(trunc, 4, fast)?) * (1.0 + sum_odd(trunc, 2, slow)?) / (2.0 * y * y);
    Ok([c1, c2, c3, c4, c5])
}

/// `(ε_a, ε_b, ε_c)`.
pub fn eps_abc(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<(f64, f64, f64)> {
    let pa = eps_a_parts(a, y, trunc)?;
    let pb = eps_b_parts(a, y, trunc)?;
    let pc = eps_c_parts(a, y, trunc)?;
    let ea = pa.iter().sum();
    let eb = pb.iter().sum();
    let ec = pb[0] + pb[1] + pb[2] + pc.iter().sum::<f64>();
    Ok((ea, eb, ec))
}

/// Printed bounds on `ε_a, ε_b, ε_c` over `Ω₂`.
pub const EPS_ABC_BOUNDS: [f64; 3] = [1.0 / 980.0, 101.0 / 2100.0, 0.8];

/// `𝒴(α;y)`, with the radial operator `>= (4/y⁴) e^{-πα/y} 𝒴` on `Ω₂`.
pub fn y_cal(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let (ea, eb, ec) = eps_abc(a, y, trunc)?;
    let q = 1.0 - 1.0 / (16.0 * math::powi(y, 4));
    let p = 1.0 - 1.0 / (4.0 * y * y);
    let bracket = PI * PI * a * a * y * y * q * q
        + 2.0 * p * p
        + 4.0
        + PI * a / y
        + 1.0 / (y * y)
        + PI * a / (4.0 * math::powi(y, 3))
        - 4.0 * PI * a * y * (1.0 + eb)
        - 2.0 * PI * a * y * (1.0 + ec);
    Ok(1.0 + PI * PI * a * a / (2.0 * y * y) - 2.0 * PI * a / y * (1.0 + ea)
        + math::powi(y, 4) * math::exp(-PI * a * (y - 0.75 / y)) * bracket)
}

/// Lower bounds of `W_a, W_b, W_c` and upper bounds of `W_d, W_e`.
pub fn w_bounds(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 5]> {
    let (ea, eb, ec) = eps_abc(a, y, trunc)?;
    let e1 = math::exp(-PI * a / y);
    let e2 = math::exp(-PI * a * (y + 0.25 / y));
    let q = 1.0 - 1.0 / (16.0 * math::powi(y, 4));
    let p = 1.0 - 1.0 / (4.0 * y * y);
    Ok([
        2.0 / math::powi(y, 6) * e1 + 4.0 * y * y * q * q * e2,
        2.0 / math::powi(y, 4) * e1 + 4.0 * p * p * e2,
        (4.0 * y + 1.0 / y) * e2,
        2.0 / math::powi(y, 5) * e1 * (1.0 + ea)
            + 4.0 * y * e2 * (1.0 - 1.0 / (4.0 * y * y) - 1.0 / (16.0 * math::powi(y, 4)) + eb),
        4.0 * y * y * e2 * (1.0 + ec),
    ])
}

/// The actual sums `W_a..W_e` in the same order as [`w_bounds`].
pub fn w_values(a: f64, y: f64, trunc: &SeriesTruncation) -> Result<[f64; 5]> {
    let r = radial_sums(a, y, trunc)?;
    Ok([r.w_a, r.w_b, r.w_c, r.w_d, r.w_e])
}

fn aux_sums(a: f64, trunc: &SeriesTruncation) -> Result<(f64, f64)> {
    let e = |n: f64| math::exp(-a * PI * (n * n - n));
    let s1 = sum_tail(trunc, 2, |n| {
        let h = n as f64 - 0.5;
        let v = (2.0 * a * PI * math::powi(h, 6) - 5.0 * math::powi(h, 4)) * e(n as f64);
        (v, math::abs(v))
    })?;
    let s2 = sum_tail(trunc, 2, |n| {
        let h = n as f64 - 0.5;
        let v = (2.0 * a * PI * h * h - 1.0) * e(n as f64);
        (v, math::abs(v))
    })?;
    Ok((s1, s2))
}

/// `σ_{a1}`, singular at `a = 10/π`.
pub fn sigma_a1(a: f64, trunc: &SeriesTruncation) -> Result<f64> {
    Ok(aux_sums(a, trunc)?.0 / (a * PI / 32.0 - 5.0 / 16.0))
}

/// `σ_{a2}`.
pub fn sigma_a2(a: f64, trunc: &SeriesTruncation) -> Result<f64> {
    Ok(aux_sums(a, trunc)?.1 / (a * PI / 2.0 - 1.0))
}

/// `|(aπ-10)/(aπ-2)| |(1+σ_{a1})/(1+σ_{a2})|`, cleared of the removable
/// singularity at `a = 10/π`.
pub fn auxi_ratio(a: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let (s1, s2) = aux_sums(a, trunc)?;
    Ok(math::abs(a * PI - 10.0 + 32.0 * s1) / math::abs(a * PI - 2.0 + 2.0 * s2))
}

/// `T(X)`.
pub fn t_fn(x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    Ok(math::powi(x, 4) * math::exp(-PI / x) * t_scaled(x, trunc)?)
}

/// `T(X) / (X⁴ e^{-π/X})`, free of underflow for small `X`.
fn t_scaled(x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let (p2, p3) = (PI * PI, math::powi(PI, 3));
    sum_tail(trunc, 2, |n| {
        let nf = n as f64;
        let n2 = nf * nf;
        let a = (3.0 * PI + 2.0 * p2 / x + 4.0 * p3 * n2 * n2 / (x * x) - 4.0 * p3 * n2 / (x * x) - 12.0 * p2 * n2 / x)
            * math::exp(-PI * n2 / x);
        let b = (1.5 * PI * n2 - p2 * n2 * n2 / x) * math::exp(-PI * (n2 - 1.0) / x);
        (a + b, math::abs(a) + math::abs(b))
    })
}

/// `d(n;X)`.
pub fn d_fn(n: f64, x: f64) -> f64 {
    let h = n - 0.5;
    let h2 = h * h;
    (2.0 * PI * PI * x * x + 24.0 * PI * math::powi(x, 3)) * h2
        - 8.0 * PI * PI * x * x * h2 * h2
        - PI * math::powi(x, 3)
        - 6.0 * math::powi(x, 4)
}

/// `(a₁c₂ - a₂c₁) / (X⁴ e^{-π/X})` through the closed form with `T`.
pub fn eye_a_scaled(x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    Ok(3.0 * PI + (3.0 * PI - 10.0 * PI * PI / x) * math::exp(-PI / x) + t_scaled(x, trunc)?)
}

/// `(πb₂ - 4X²b₁) / (X³ e^{-π/(4X)})` through the closed form with `d(n;X)`.
pub fn eye_b_scaled(x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let tail = sum_tail(trunc, 2, |n| {
        let nf = n as f64;
        let h = nf - 0.5;
        let v = d_fn(nf, x) / math::powi(x, 3) * math::exp(-PI * (h * h - 0.25) / x);
        (v, math::abs(v))
    })?;
    Ok(5.0 * PI - 6.0 * x + tail)
}

/// Number of arguments and domain of each named region function.
struct Signature {
    name: &'static str,
    arity: usize,
    domain: fn(&[f64]) -> bool,
    what: &'static str,
}

fn in_aa(v: &[f64]) -> bool {
    v[0] >= 1.5 && v[1] >= HEX_Y && v[1] >= 0.5 * v[0]
}
fn in_ab(v: &[f64]) -> bool {
    v[1] >= 1.0 && 2.0 * v[1] <= v[0] && v[0] <= 3.0 * v[1]
}
fn in_ac(v: &[f64]) -> bool {
    v[1] >= HEX_Y && v[1] <= 1.0 && 2.0 * v[1] <= v[0] && v[0] <= 3.0 * v[1]
}
fn in_ad(v: &[f64]) -> bool {
    v[1] >= HEX_Y && v[0] >= 3.0 * v[1]
}
fn in_abcd(v: &[f64]) -> bool {
    v[1] >= HEX_Y && v[0] >= 2.0 * v[1]
}
fn in_omega1(v: &[f64]) -> bool {
    v[0] >= 1.5 && v[1] >= 0.8 * v[0]
}
fn in_omega2(v: &[f64]) -> bool {
    v[0] >= 1.5 && v[1] >= HEX_Y && v[1] <= 0.8 * v[0]
}
fn in_psi(v: &[f64]) -> bool {
    v[0] >= HEX_Y && v[0] <= 1.0
}
fn in_t(v: &[f64]) -> bool {
    v[0] >= T_MIN
}
fn in_rt(v: &[f64]) -> bool {
    v[0] >= 1.5 && v[1] >= T_MIN
}
fn positive(v: &[f64]) -> bool {
    v.iter().all(|&a| a > 0.0)
}
fn in_a(v: &[f64]) -> bool {
    v[0] >= 2.0
}
fn in_nx(v: &[f64]) -> bool {
    v[0] >= 1.0 && v[1] > 0.0
}

const SIGNATURES: &[Signature] = &[
    Signature {
        name: "D1",
        arity: 2,
        domain: in_aa,
        what: "(alpha, y) in A_a",
    },
    Signature {
        name: "D2",
        arity: 2,
        domain: in_ab,
        what: "(alpha, y) in A_b",
    },
    Signature {
        name: "D3",
        arity: 2,
        domain: in_ac,
        what: "(alpha, y) in A_c",
    },
    Signature {
        name: "D4",
        arity: 2,
        domain: in_ad,
        what: "(alpha, y) in A_d",
    },
    Signature {
        name: "psi",
        arity: 1,
        domain: in_psi,
        what: "y in [sqrt(3)/2, 1]",
    },
    Signature {
        name: "E1",
        arity: 2,
        domain: in_aa,
        what: "(alpha, y) in A_a",
    },
    Signature {
        name: "E2",
        arity: 2,
        domain: in_aa,
        what: "(alpha, y) in A_a",
    },
    Signature {
        name: "E3",
        arity: 2,
        domain: in_aa,
        what: "(alpha, y) in A_a",
    },
    Signature {
        name: "E1_tilde",
        arity: 2,
        domain: in_abcd,
        what: "alpha >= 2y, y >= sqrt(3)/2",
    },
    Signature {
        name: "E2_tilde",
        arity: 2,
        domain: in_abcd,
        what: "alpha >= 2y, y >= sqrt(3)/2",
    },
    Signature {
        name: "E3_tilde",
        arity: 2,
        domain: in_abcd,
        what: "alpha >= 2y, y >= sqrt(3)/2",
    },
    Signature {
        name: "eps_bar0",
        arity: 1,
        domain: positive,
        what: "t > 0",
    },
    Signature {
        name: "eps_bar1",
        arity: 1,
        domain: positive,
        what: "t > 0",
    },
    Signature {
        name: "eps_bar2",
        arity: 1,
        domain: positive,
        what: "t > 0",
    },
    Signature {
        name: "eps_bar3",
        arity: 1,
        domain: positive,
        what: "t > 0",
    },
    Signature {
        name: "eps_bar4",
        arity: 1,
        domain: positive,
        what: "t > 0",
    },
    Signature {
        name: "P",
        arity: 2,
        domain: in_omega1,
        what: "(alpha, y) in Omega1",
    },
    Signature {
        name: "g",
        arity: 1,
        domain: in_t,
        what: "t >= 4/5",
    },
    Signature {
        name: "h",
        arity: 2,
        domain: in_rt,
        what: "r >= 3/2, t >= 4/5",
    },
    Signature {
        name: "J1",
        arity: 2,
        domain: in_omega1,
        what: "(alpha, y) in Omega1",
    },
    Signature {
        name: "J2",
        arity: 2,
        domain: in_omega1,
        what: "(alpha, y) in Omega1",
    },
    Signature {
        name: "J3",
        arity: 2,
        domain: in_omega1,
        what: "(alpha, y) in Omega1",
    },
    Signature {
        name: "J4",
        arity: 2,
        domain: in_omega1,
        what: "(alpha, y) in Omega1",
    },
    Signature {
        name: "Y",
        arity: 2,
        domain: in_omega2,
        what: "(alpha, y) in Omega2",
    },
    Signature {
        name: "eps_a",
        arity: 2,
        domain: in_omega2,
        what: "(alpha, y) in Omega2",
    },
    Signature {
        name: "eps_b",
        arity: 2,
        domain: in_omega2,
        what: "(alpha, y) in Omega2",
    },
    Signature {
        name: "eps_c",
        arity: 2,
        domain: in_omega2,
        what: "(alpha, y) in Omega2",
    },
    Signature {
        name: "Wa_lower",
        arity: 2,
        domain: positive,
        what: "alpha, y > 0",
    },
    Signature {
        name: "Wb_lower",
        arity: 2,
        domain: positive,
        what: "alpha, y > 0",
    },
    Signature {
        name: "Wc_lower",
        arity: 2,
        domain: positive,
        what: "alpha, y > 0",
    },
    Signature {
        name: "Wd_upper",
        arity: 2,
        domain: positive,
        what: "alpha, y > 0",
    },
    Signature {
        name: "We_upper",
        arity: 2,
        domain: positive,
        what: "alpha, y > 0",
    },
    Signature {
        name: "sigma_a1",
        arity: 1,
        domain: in_a,
        what: "a >= 2",
    },
    Signature {
        name: "sigma_a2",
        arity: 1,
        domain: in_a,
        what: "a >= 2",
    },
    Signature {
        name: "auxi",
        arity: 1,
        domain: in_a,
        what: "a >= 2",
    },
    Signature {
        name: "T",
        arity: 1,
        domain: positive,
        what: "X > 0",
    },
    Signature {
        name: "d",
        arity: 2,
        domain: in_nx,
        what: "n >= 1, X > 0",
    },
    Signature {
        name: "eye_a",
        arity: 1,
        domain: positive,
        what: "X > 0",
    },
    Signature {
        name: "eye_b",
        arity: 1,
        domain: positive,
        what: "X > 0",
    },
];

/// Names accepted by [`region_function`].
pub fn function_names() -> impl Iterator<Item = &'static str> {
    SIGNATURES.iter().map(|s| s.name)
}

/// Evaluates the named comparison function.
///
/// Two-argument functions of the energy take `(alpha, y)`; `h` takes
/// `(r, t)`; `d` takes `(n, X)`.
pub fn region_function(name: &str, args: &[f64], trunc: &SeriesTruncation) -> Result<f64> {
    let sig = SIGNATURES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownFunction(name.into()))?;
    trunc.validate()?;
    if args.len() != sig.arity {
        return Err(Error::OutOfRegion(format!(
            "`{name}` takes {} argument(s), got {}",
            sig.arity,
            args.len()
        )));
    }
    if args.iter().any(|v| !v.is_finite()) || !(sig.domain)(args) {
        return Err(Error::OutOfRegion(format!("`{name}` needs {}, got {args:?}", sig.what)));
    }
    let tr = trunc;
    let v = match name {
        "D1" => d1(args[0], args[1], tr)?,
        "D2" => d2(args[0], args[1], tr)?,
        "D3" => d3(args[0], args[1], tr)?,
        "D4" => d4(args[0], args[1]),
        "psi" => psi(args[0], tr)?,
        "E1" | "E2" | "E3" => e_terms(args[0], args[1], tr)?[index_suffix(name)],
        "E1_tilde" | "E2_tilde" | "E3_tilde" => e_tilde_terms(args[0], args[1], tr)?[index_suffix(name)],
        "eps_bar0" | "eps_bar1" | "eps_bar2" | "eps_bar3" | "eps_bar4" => eps_bar(args[0], tr)?[digit(name)],
        "P" => p_cal(args[0], args[1], tr)?,
        "g" => g_fn(args[0], tr)?,
        "h" => h_fn(args[0], args[1], tr)?,
        "J1" | "J2" | "J3" | "J4" => j_terms(args[0], args[1], tr)?[index_suffix(name)],
        "Y" => y_cal(args[0], args[1], tr)?,
        "eps_a" => eps_abc(args[0], args[1], tr)?.0,
        "eps_b" => eps_abc(args[0], args[1], tr)?.1,
        "eps_c" => eps_abc(args[0], args[1], tr)?.2,
        "Wa_lower" => w_bounds(args[0], args[1], tr)?[0],
        "Wb_lower" => w_bounds(args[0], args[1], tr)?[1],
        "Wc_lower" => w_bounds(args[0], args[1], tr)?[2],
        "Wd_upper" => w_bounds(args[0], args[1], tr)?[3],
        "We_upper" => w_bounds(args[0], args[1], tr)?[4],
        "sigma_a1" => sigma_a1(args[0], tr)?,
        "sigma_a2" => sigma_a2(args[0], tr)?,
        "auxi" => auxi_ratio(args[0], tr)?,
        "T" => t_fn(args[0], tr)?,
        "d" => d_fn(args[0], args[1]),
        "eye_a" => eye_a_scaled(args[0], tr)?,
        "eye_b" => eye_b_scaled(args[0], tr)?,
        _ => return Err(Error::UnknownFunction(name.into())),
    };
    Ok(v)
}

/// First decimal digit in `name`.
fn digit(name: &str) -> usize {
    name.bytes().find(u8::is_ascii_digit).map_or(0, |d| (d - b'0') as usize)
}

/// Zero-based index for names numbered from one.
fn index_suffix(name: &str) -> usize {
    digit(name).saturating_sub(1)
}
