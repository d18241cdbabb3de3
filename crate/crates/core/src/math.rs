//! Thin wrappers over `libm` so the rest of the crate reads like ordinary float code.

pub(crate) const PI: f64 = core::f64::consts::PI;
/// √3/2, the height of the hexagonal point.
pub(crate) const HEX_Y: f64 = 0.866_025_403_784_438_6;

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

#[inline]
pub(crate) fn powf(x: f64, e: f64) -> f64 {
    libm::pow(x, e)
}

/// Integer power by repeated squaring; exact for small exponents.
pub(crate) fn powi(mut base: f64, exp: i32) -> f64 {
    let mut n = exp.unsigned_abs();
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    if exp < 0 {
        1.0 / acc
    } else {
        acc
    }
}

/// Nearest integer with exact half-integers rounded toward zero.
pub(crate) fn round_half_toward_zero(x: f64) -> f64 {
    let r = libm::round(x);
    if abs(r - x) == 0.5 {
        libm::trunc(x)
    } else {
        r
    }
}

/// `cos(2πY)` and `sin(2πY)` with `Y` first reduced to `[-1/2, 1/2]`.
pub(crate) fn cos_sin_2pi(y: f64) -> (f64, f64) {
    let r = y - libm::round(y);
    let a = 2.0 * PI * r;
    (cos(a), sin(a))
}

/// Distance from `y` to the nearest half-integer lattice point `k/2`.
pub(crate) fn dist_to_half_lattice(y: f64) -> f64 {
    let t = 2.0 * y;
    abs(t - libm::round(t)) / 2.0
}
