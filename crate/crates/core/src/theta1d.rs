//! The one-dimensional theta function `ϑ(X;Y) = Σ_n e^{-πn²X} e^{2πinY}` and
//! the quantities built from it.
//!
//! Two representations are kept side by side. The Fourier series converges
//! fast for large `X`; its Poisson dual
//! `X^{-1/2} Σ_n e^{-π(n-Y)²/X}` converges fast for small `X`. Every
//! derivative of the dual is a finite sum of terms
//! `c_k π^k X^{-1/2-dx-k} u^{2k-dy} e^{-πu²/X}` with `u = n - Y`, and the
//! coefficients `c_k` are tabulated below.

use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::series::{sum_tail, SeriesTruncation};

/// `X` at and above which `theta1` uses the Fourier series.
pub const X_SWITCH: f64 = 1.0;

/// `X` at and above which quotients use the Chebyshev form of the Fourier series.
pub const QUOTIENT_SWITCH: f64 = 0.25;

/// Quotients whose denominator vanishes switch to the derivative ratio when
/// `Y` is this close to a half-integer.
pub const LIMIT_BAND: f64 = 1e-6;

/// Number of `X` and `Y` derivatives applied to `ϑ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaDerivativeOrder {
    dx: u8,
    dy: u8,
}

impl ThetaDerivativeOrder {
    pub const THETA: Self = Self { dx: 0, dy: 0 };
    pub const X: Self = Self { dx: 1, dy: 0 };
    pub const XX: Self = Self { dx: 2, dy: 0 };
    pub const XXX: Self = Self { dx: 3, dy: 0 };
    pub const Y: Self = Self { dx: 0, dy: 1 };
    pub const XY: Self = Self { dx: 1, dy: 1 };
    pub const XXY: Self = Self { dx: 2, dy: 1 };

    /// Accepts `dx` in `0..=3` with `dy = 0`, or `dx` in `0..=2` with `dy = 1`.
    pub fn new(dx: u8, dy: u8) -> Result<Self> {
        match (dx, dy) {
            (0..=3, 0) | (0..=2, 1) => Ok(Self { dx, dy }),
            _ => Err(Error::InvalidArgument(
                "theta derivative order outside the supported set",
            )),
        }
    }

    pub fn dx(self) -> u8 {
        self.dx
    }

    pub fn dy(self) -> u8 {
        self.dy
    }
}

/// `POISSON[dx][dy][k]`: coefficient of `π^k X^{-1/2-dx-k} u^{2k-dy} e^{-πu²/X}`.
const POISSON: [[&[f64]; 3]; 4] = [
    [&[1.0], &[0.0, 2.0], &[0.0, -2.0, 4.0]],
    [&[-0.5, 1.0], &[0.0, -3.0, 2.0], &[0.0, 3.0, -12.0, 4.0]],
    [
        &[0.75, -3.0, 1.0],
        &[0.0, 7.5, -10.0, 2.0],
        &[0.0, -7.5, 45.0, -30.0, 4.0],
    ],
    [
        &[-1.875, 11.25, -7.5, 1.0],
        &[0.0, -26.25, 52.5, -21.0, 2.0],
        &[0.0, 26.25, -210.0, 210.0, -56.0, 4.0],
    ],
];

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveX(x))
    }
}

/// `Y - round(Y)`, in `[-1/2, 1/2]`.
fn wrap(y: f64) -> f64 {
    y - libm::round(y)
}

/// Fourier series for `dx <= 3`, `dy <= 2`.
pub(crate) fn fourier_raw(dx: u8, dy: u8, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    let y0 = wrap(y);
    let tail = sum_tail(trunc, 1, |n| {
        let nf = n as f64;
        let mag = 2.0
            * math::powi(-PI * nf * nf, dx as i32)
            * math::powi(2.0 * PI * nf, dy as i32)
            * math::exp(-PI * nf * nf * x);
        let a = 2.0 * PI * nf * y0;
        let trig = match dy {
            0 => math::cos(a),
            1 => -math::sin(a),
            _ => -math::cos(a),
        };
        (mag * trig, math::abs(mag))
    })?;
    Ok(if dx == 0 && dy == 0 { 1.0 + tail } else { tail })
}

/// Poisson-dual series for `dx <= 3`, `dy <= 2`.
pub(crate) fn poisson_raw(dx: u8, dy: u8, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    let coef = POISSON[dx as usize][dy as usize];
    let y0 = wrap(y);
    let term = |u: f64| -> (f64, f64) {
        let g = math::exp(-PI * u * u / x);
        let mut v = 0.0;
        let mut env = 0.0;
        for (k, &c) in coef.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let p = 2 * k as i32 - dy as i32;
            let t = c * math::powi(PI, k as i32) * math::powf(x, -0.5 - dx as f64 - k as f64) * math::powi(u, p) * g;
            v += t;
            env += math::abs(t);
        }
        (v, env)
    };
    let centre = term(-y0).0;
    let tail = sum_tail(trunc, 1, |j| {
        let j = j as f64;
        let (a, ea) = term(j - y0);
        let (b, eb) = term(-j - y0);
        (a + b, ea + eb)
    })?;
    Ok(centre + tail)
}

/// Representation chosen by `X`, for `dx <= 3`, `dy <= 2`.
pub(crate) fn theta_raw(dx: u8, dy: u8, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    if x >= X_SWITCH {
        fourier_raw(dx, dy, x, y, trunc)
    } else {
        poisson_raw(dx, dy, x, y, trunc)
    }
}

/// `∂_X^{dx} ∂_Y^{dy} ϑ(X;Y)`, Fourier series for `X >= 1` and Poisson dual below.
pub fn theta1(order: ThetaDerivativeOrder, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    theta_raw(order.dx, order.dy, x, y, trunc)
}

/// `theta1` forced through the Fourier series.
pub fn theta1_fourier(order: ThetaDerivativeOrder, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    fourier_raw(order.dx, order.dy, x, y, trunc)
}

/// `theta1` forced through the Poisson-dual series.
pub fn theta1_poisson(order: ThetaDerivativeOrder, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    poisson_raw(order.dx, order.dy, x, y, trunc)
}

/// Triple-product form `Π (1 - q^{2n})(1 + q^{2(2n-1)} + 2 q^{2n-1} cos 2πY)`, `q = e^{-πX}`.
pub fn theta1_product(x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    let (c, _) = math::cos_sin_2pi(y);
    let q = math::exp(-PI * x);
    let target = 0.1 * trunc.abs_tolerance;
    let mut prod = 1.0;
    for i in 1..=trunc.max_terms {
        let n = i as i32;
        let q_odd = math::powi(q, 2 * n - 1);
        let q_even = math::powi(q, 2 * n);
        prod *= (1.0 - q_even) * (1.0 + q_odd * q_odd + 2.0 * q_odd * c);
        if q_even + 3.0 * q_odd < target {
            return Ok(prod);
        }
    }
    Err(Error::TruncationNotReached { terms: trunc.max_terms })
}

/// The classical theta constants, summed directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    /// `ϑ₂(X) = Σ e^{-π(n-1/2)²X}`
    Two,
    /// `ϑ₃(X) = Σ e^{-πn²X}`
    Three,
    /// `ϑ₄(X) = Σ (-1)^n e^{-πn²X}`
    Four,
}

/// `order`-th `X` derivative of `ϑ₂`, `ϑ₃` or `ϑ₄`, with `order <= 2`.
pub fn classical_theta(kind: ClassicalKind, x: f64, order: u8, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    if order > 2 {
        return Err(Error::InvalidArgument("classical theta order must be at most 2"));
    }
    let tail = sum_tail(trunc, 1, |n| {
        let nf = n as f64;
        let s = match kind {
            ClassicalKind::Two => (nf - 0.5) * (nf - 0.5),
            _ => nf * nf,
        };
        let mag = 2.0 * math::powi(-PI * s, order as i32) * math::exp(-PI * s * x);
        let sign = if kind == ClassicalKind::Four && n % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        (sign * mag, math::abs(mag))
    })?;
    let constant = match kind {
        ClassicalKind::Two => 0.0,
        _ if order == 0 => 1.0,
        _ => 0.0,
    };
    Ok(constant + tail)
}

/// Tail series `Σ_{n>=2} n^p e^{-π(n²-1)X}`, hatted ones weighted by `(-1)^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxSeries {
    Mu,
    MuHat,
    Nu,
    NuHat,
    Omega,
    OmegaHat,
}

impl AuxSeries {
    pub const ALL: [AuxSeries; 6] = [
        AuxSeries::Mu,
        AuxSeries::MuHat,
        AuxSeries::Nu,
        AuxSeries::NuHat,
        AuxSeries::Omega,
        AuxSeries::OmegaHat,
    ];

    fn power(self) -> i32 {
        match self {
            AuxSeries::Mu | AuxSeries::MuHat => 2,
            AuxSeries::Nu | AuxSeries::NuHat => 4,
            AuxSeries::Omega | AuxSeries::OmegaHat => 6,
        }
    }

    fn alternating(self) -> bool {
        matches!(self, AuxSeries::MuHat | AuxSeries::NuHat | AuxSeries::OmegaHat)
    }

    pub fn name(self) -> &'static str {
        match self {
            AuxSeries::Mu => "mu",
            AuxSeries::MuHat => "mu_hat",
            AuxSeries::Nu => "nu",
            AuxSeries::NuHat => "nu_hat",
            AuxSeries::Omega => "omega",
            AuxSeries::OmegaHat => "omega_hat",
        }
    }
}

pub fn aux_series(name: AuxSeries, x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    let p = name.power();
    let alt = name.alternating();
    sum_tail(trunc, 2, |n| {
        let nf = n as f64;
        let mag = math::powi(nf, p) * math::exp(-PI * (nf * nf - 1.0) * x);
        let sign = if alt && n % 2 == 0 { -1.0 } else { 1.0 };
        (sign * mag, mag)
    })
}

/// `U_{n-1}(c)` for `n >= 1`, i.e. `sin(2πnY)/sin(2πY)` when `c = cos 2πY`.
pub(crate) fn chebyshev_u(n: u32, c: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 1..n {
        let next = 2.0 * c * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `∂_X^{dx} ϑ_Y(X;Y) / sin(2πY) = -4π Σ n(-πn²)^{dx} e^{-πn²X} U_{n-1}(cos 2πY)`.
///
/// Smooth through `Y ∈ Z/2`, where the numerator and `sin` both vanish.
pub(crate) fn reduced_y(dx: u8, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    let (c, _) = math::cos_sin_2pi(y);
    let (mut u_prev, mut u_cur) = (0.0, 1.0);
    let s = sum_tail(trunc, 1, |n| {
        if n > 1 {
            let next = 2.0 * c * u_cur - u_prev;
            u_prev = u_cur;
            u_cur = next;
        }
        let nf = n as f64;
        let mag = 4.0 * PI * nf * math::powi(-PI * nf * nf, dx as i32) * math::exp(-PI * nf * nf * x);
        (-mag * u_cur, math::abs(mag) * nf)
    })?;
    Ok(s)
}

/// `∂_X^{dx} ϑ_Y(X;kY) / ϑ_Y(X;Y)` for `dx <= 2`, `k >= 1`.
///
/// Large `X` uses the Chebyshev form, so `Y` near a half-integer is harmless.
/// Small `X` divides Poisson sums and, within `LIMIT_BAND` of a half-integer,
/// replaces the quotient by its limit `k ∂_X^{dx}ϑ_YY(X;kY) / ϑ_YY(X;Y)`.
pub fn theta_quotient(dx: u8, k: u32, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    if dx > 2 {
        return Err(Error::InvalidArgument("quotient order dx must be at most 2"));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("quotient multiplier k must be positive"));
    }
    let ky = k as f64 * y;
    if x >= QUOTIENT_SWITCH {
        let (c, _) = math::cos_sin_2pi(y);
        let num = reduced_y(dx, x, ky, trunc)? * chebyshev_u(k, c);
        return Ok(num / reduced_y(0, x, y, trunc)?);
    }
    if math::dist_to_half_lattice(y) < LIMIT_BAND {
        let num = poisson_raw(dx, 2, x, ky, trunc)?;
        let den = poisson_raw(0, 2, x, y, trunc)?;
        return Ok(k as f64 * num / den);
    }
    Ok(poisson_raw(dx, 1, x, ky, trunc)? / poisson_raw(0, 1, x, y, trunc)?)
}

/// `Σ_n (n-Y)^p e^{-π(n-Y)²/X} / Σ_n (n-Y) e^{-π(n-Y)²/X}` for odd `p >= 3`,
/// with the derivative ratio near half-integers.
pub fn comb_ratio(p: u32, x: f64, y: f64, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidArgument("comb ratio power must be odd and at least 3"));
    }
    let y0 = wrap(y);
    let limit = math::dist_to_half_lattice(y) < LIMIT_BAND;
    let a = 2.0 * PI / x;
    let pi_ = p as i32;
    // Sums of (num, den) over the pair u = j - y0 and u = -j - y0.
    let pair = |u: f64| -> (f64, f64, f64) {
        let g = math::exp(-PI * u * u / x);
        if limit {
            let num = (p as f64 * math::powi(u, pi_ - 1) - a * math::powi(u, pi_ + 1)) * g;
            let den = (1.0 - a * u * u) * g;
            (num, den, math::abs(num) + math::abs(den))
        } else {
            let num = math::powi(u, pi_) * g;
            let den = u * g;
            (num, den, math::abs(num) + math::abs(den))
        }
    };
    let (n0, d0, _) = pair(-y0);
    let mut den_acc = d0;
    let num = n0
        + sum_tail(trunc, 1, |j| {
            let j = j as f64;
            let (na, da, ea) = pair(j - y0);
            let (nb, db, eb) = pair(-j - y0);
            den_acc += da + db;
            (na + nb, ea + eb)
        })?;
    Ok(num / den_acc)
}

/// The two quotients whose limits at `Y -> 0` and `Y -> 1/2` are needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientKind {
    /// `ϑ_XY / ϑ_Y`
    XyOverY,
    /// `ϑ_XXY / ϑ_Y`
    XxyOverY,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitPoint {
    Zero,
    Half,
}

/// Limit written with the tail series `μ, ν, ω` and their hatted forms.
pub fn theta_quotient_limit_fourier(
    which: QuotientKind,
    x: f64,
    at: LimitPoint,
    trunc: &SeriesTruncation,
) -> Result<f64> {
    let (den, num) = match at {
        LimitPoint::Zero => (AuxSeries::Mu, AuxSeries::Nu),
        LimitPoint::Half => (AuxSeries::MuHat, AuxSeries::NuHat),
    };
    let den = 1.0 + aux_series(den, x, trunc)?;
    match which {
        QuotientKind::XyOverY => Ok(-PI * (1.0 + aux_series(num, x, trunc)?) / den),
        QuotientKind::XxyOverY => {
            let w = match at {
                LimitPoint::Zero => AuxSeries::Omega,
                LimitPoint::Half => AuxSeries::OmegaHat,
            };
            Ok(PI * PI * (1.0 + aux_series(w, x, trunc)?) / den)
        }
    }
}

/// Gaussian-comb sums `Σ_n s^p e^{-πs²/X}` over `s = n` or `s = n - 1/2`, for `p = 0, 2, 4`.
fn comb_moments(x: f64, shift: f64, trunc: &SeriesTruncation) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (i, p) in [0, 2, 4].into_iter().enumerate() {
        let centre = if shift == 0.0 && p == 0 { 1.0 } else { 0.0 };
        let t = sum_tail(trunc, 1, |n| {
            let a = n as f64 - shift;
            let b = -(n as f64) + 1.0 - shift;
            let f = |s: f64| math::powi(s, p) * math::exp(-PI * s * s / x);
            let v = if shift == 0.0 { 2.0 * f(a) } else { f(a) + f(b) };
            (v, v)
        })?;
        out[i] = centre + t;
    }
    Ok(out)
}

/// Numerator and denominator of the Poisson-side limit of `ϑ_XY / ϑ_Y`.
///
/// At `Y -> 0` these are `(a₁, a₂)`; at `Y -> 1/2` they are `(b₁, b₂)`.
pub fn limit_parts(x: f64, at: LimitPoint, trunc: &SeriesTruncation) -> Result<(f64, f64)> {
    check_x(x)?;
    let shift = match at {
        LimitPoint::Zero => 0.0,
        LimitPoint::Half => 0.5,
    };
    let [s0, s2, s4] = comb_moments(x, shift, trunc)?;
    let num = 0.75 * x * x * s0 - 3.0 * PI * x * s2 + PI * PI * s4;
    let den = PI * x * x * s2 - 0.5 * x * x * x * s0;
    Ok((num, den))
}

/// Limit written with Gaussian-comb sums, well conditioned for small `X`.
pub fn theta_quotient_limit_poisson(
    which: QuotientKind,
    x: f64,
    at: LimitPoint,
    trunc: &SeriesTruncation,
) -> Result<f64> {
    check_x(x)?;
    let y = match at {
        LimitPoint::Zero => 0.0,
        LimitPoint::Half => 0.5,
    };
    match which {
        QuotientKind::XyOverY => {
            let (n, d) = limit_parts(x, at, trunc)?;
            Ok(n / d)
        }
        QuotientKind::XxyOverY => Ok(poisson_raw(2, 2, x, y, trunc)? / poisson_raw(0, 2, x, y, trunc)?),
    }
}

/// Limit of `which` as `Y` tends to `at`.
///
/// Uses the tail-series form for `X >= 1/4` and the Gaussian-comb form below,
/// where the hatted series cancel badly.
pub fn theta_quotient_limit(which: QuotientKind, x: f64, at: LimitPoint, trunc: &SeriesTruncation) -> Result<f64> {
    check_x(x)?;
    if x >= QUOTIENT_SWITCH {
        theta_quotient_limit_fourier(which, x, at, trunc)
    } else {
        theta_quotient_limit_poisson(which, x, at, trunc)
    }
}
