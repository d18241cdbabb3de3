//! The quartic lattice energy `R(α;z) = Σ |P|⁴ e^{-πα|P|²}`, its relatives, and
//! the decompositions of its derivatives into a dominant part and a remainder.

use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::moduli::{lattice_norm_sq, ModuliPoint};
use crate::quadrature;
use crate::series::SeriesTruncation;
use crate::theta1d::{aux_series, reduced_y, theta_quotient, theta_raw, AuxSeries};
use crate::theta2d::{check_alpha, square_cutoff, weighted_lattice_sum};

/// `dR_dx` refuses `x` within this distance of `0` or `1/2`.
pub const BOUNDARY_GUARD: f64 = 1e-9;

/// Gauss–Legendre nodes used for the integral form of the corollary energy.
pub const COROLLARY_NODES: usize = 32;

fn check_point(z: ModuliPoint) -> Result<()> {
    if z.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidPoint { x: z.x, y: z.y })
    }
}

/// `R(α;z)`.
pub fn energy_r(alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    energy_generalized(2, alpha, z, trunc)
}

/// `Σ |P|^{2k} e^{-πα|P|²}` for `k >= 1`.
pub fn energy_generalized(k: u32, alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    if k == 0 {
        return Err(Error::NonPositiveK(k));
    }
    check_alpha(alpha)?;
    check_point(z)?;
    trunc.validate()?;
    weighted_lattice_sum(alpha, z, k, 0.0, trunc)
}

/// `Σ |P|² (e^{-πα|P|²} - e^{-πβ|P|²})` for `β > α`.
pub fn energy_corollary(alpha: f64, beta: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    check_alpha(alpha)?;
    if !(beta > alpha) || !beta.is_finite() {
        return Err(Error::OrderViolation { alpha, beta });
    }
    check_point(z)?;
    trunc.validate()?;
    let cut = square_cutoff(alpha, z, 1, trunc)?;
    let gap = beta - alpha;
    let mut acc = 0.0;
    for m in -cut..=cut {
        let mut row = 0.0;
        for n in -cut..=cut {
            if m == 0 && n == 0 {
                continue;
            }
            let q = lattice_norm_sq(z, m, n);
            // e^{-παq} - e^{-πβq} without cancellation when β is close to α.
            row += -q * math::exp(-PI * alpha * q) * libm::expm1(-PI * gap * q);
        }
        acc += row;
    }
    Ok(acc)
}

/// `π ∫_α^β R(γ;z) dγ`, which equals `energy_corollary(α, β, z)`.
pub fn energy_corollary_quadrature(alpha: f64, beta: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    check_alpha(alpha)?;
    if !(beta > alpha) || !beta.is_finite() {
        return Err(Error::OrderViolation { alpha, beta });
    }
    let v = quadrature::integrate(|g| energy_r(g, z, trunc), alpha, beta, COROLLARY_NODES)?;
    Ok(PI * v)
}

/// Pieces of `-∂R/∂x = C (Φ_A + Φ_B¹ + Φ_B² + Φ_B³)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyDecompositionX {
    pub c: f64,
    pub phi_a: f64,
    pub phi_b: [f64; 3],
}

impl EnergyDecompositionX {
    pub fn phi_b_total(&self) -> f64 {
        self.phi_b[0] + self.phi_b[1] + self.phi_b[2]
    }

    /// `∂R/∂x` rebuilt from the pieces.
    pub fn assemble(&self) -> f64 {
        -self.c * (self.phi_a + self.phi_b_total())
    }
}

/// Upper bound on `|∂_X^j ϑ_Y(X;kY) / (k ϑ_Y(X;Y))|`, doubled.
///
/// Used only to decide where a remainder series may stop, so it must not
/// depend on `Y`: individual terms can vanish when `kY` hits a half-integer.
pub(crate) fn quotient_envelope(j: u8, x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    let mut best = f64::INFINITY;
    if x > 0.2 {
        let mu = aux_series(AuxSeries::Mu, x, trunc)?;
        if mu < 1.0 {
            let top = match j {
                0 => 1.0,
                1 => PI * (1.0 + aux_series(AuxSeries::Nu, x, trunc)?),
                _ => PI * PI * (1.0 + aux_series(AuxSeries::Omega, x, trunc)?),
            };
            best = top / (1.0 - mu);
        }
    }
    if x < 0.61 {
        let g = math::exp(PI / (4.0 * x));
        let small = match j {
            0 => g / PI,
            1 => 1.5 / (PI * x) * (1.0 + PI / (6.0 * x)) * g,
            _ => 15.0 / (4.0 * PI * x * x) * (1.0 + PI / (3.0 * x) + PI * PI / (60.0 * x * x)) * g,
        };
        best = best.min(small);
    }
    Ok(2.0 * best)
}

/// `sin(2πx)` for `x` in `(0, 1/2)`, accurate near both ends.
fn sin_2pi_inner(x: f64) -> f64 {
    math::sin(2.0 * PI * x.min(0.5 - x))
}

/// `-ϑ_Y(X;x)` for `x` in `(0, 1/2)`, positive there.
pub(crate) fn neg_theta_y(big_x: f64, x: f64, trunc: &SeriesTruncation) -> Result<f64> {
    if big_x >= crate::theta1d::QUOTIENT_SWITCH {
        Ok(-reduced_y(0, big_x, x, trunc)? * sin_2pi_inner(x))
    } else {
        Ok(-theta_raw(0, 1, big_x, x, trunc)?)
    }
}

/// `C(α;z) = (2/π) y^{1/2} α^{-9/2} (-ϑ_Y(y/α;x)) e^{-παy}`.
pub fn prefactor_c(alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    check_alpha(alpha)?;
    check_point(z)?;
    let big_x = z.y / alpha;
    Ok(2.0 / PI
        * math::sqrt(z.y)
        * math::powf(alpha, -4.5)
        * neg_theta_y(big_x, z.x, trunc)?
        * math::exp(-PI * alpha * z.y))
}

/// `Φ_A(z)`, the dominant part of `-∂R/∂x` after dividing by `C`.
pub fn phi_a(alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<f64> {
    check_alpha(alpha)?;
    check_point(z)?;
    let (x, y, a) = (z.x, z.y, alpha);
    let big_x = y / a;
    let q1 = theta_quotient(1, 1, big_x, x, trunc)?;
    let q2 = theta_quotient(2, 1, big_x, x, trunc)?;
    Ok(PI * math::powi(a, 4) * y * y
        + math::powi(a, 3) * y
        + 3.0 / (4.0 * PI) * a * a
        + (3.0 / PI * a * y + 2.0 * a * a * y * y) * q1
        + y * y / PI * q2)
}

/// The three remainder series `Φ_B¹, Φ_B², Φ_B³`.
pub fn phi_b(alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<[f64; 3]> {
    check_alpha(alpha)?;
    check_point(z)?;
    let (x, y, a) = (z.x, z.y, alpha);
    let big_x = y / a;
    let env = [
        quotient_envelope(0, big_x, trunc)?,
        quotient_envelope(1, big_x, trunc)?,
        quotient_envelope(2, big_x, trunc)?,
    ];
    let target = 0.1 * trunc.abs_tolerance;
    let mut out = [0.0; 3];
    let mut prev = f64::INFINITY;
    for i in 0..trunc.max_terms {
        let n = 2 + i as u32;
        let nf = n as f64;
        let e = math::exp(-a * PI * y * (nf * nf - 1.0));
        let w = [
            (PI * math::powi(a, 4) * y * y * math::powi(nf, 5)
                + math::powi(a, 3) * y * math::powi(nf, 3)
                + 3.0 / (4.0 * PI) * a * a * nf)
                * e,
            (3.0 / PI * a * y * nf + 2.0 * a * a * y * y * math::powi(nf, 3)) * e,
            y * y / PI * nf * e,
        ];
        let mut bound = 0.0;
        for j in 0..3 {
            out[j] += w[j] * theta_quotient(j as u8, n, big_x, x, trunc)?;
            bound += w[j] * nf * env[j];
        }
        if bound < target && bound <= prev {
            return Ok(out);
        }
        prev = bound;
    }
    Err(Error::TruncationNotReached { terms: trunc.max_terms })
}

/// `∂R/∂x` at `z` with `0 < x < 1/2`, and its decomposition.
pub fn dr_dx(alpha: f64, z: ModuliPoint, trunc: &SeriesTruncation) -> Result<(f64, EnergyDecompositionX)> {
    check_alpha(alpha)?;
    check_point(z)?;
    trunc.validate()?;
    if !(z.x > BOUNDARY_GUARD && z.x < 0.5 - BOUNDARY_GUARD) {
        return Err(Error::BoundaryX(z.x));
    }
    let d = EnergyDecompositionX {
        c: prefactor_c(alpha, z, trunc)?,
        phi_a: phi_a(alpha, z, trunc)?,
        phi_b: phi_b(alpha, z, trunc)?,
    };
    Ok((d.assemble(), d))
}

/// Pieces of `∂R/∂y` on the line `x = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyDecompositionY {
    pub i_a: [f64; 4],
    pub i_b: [f64; 4],
    /// `(1/π²) α^{-9/2} y^{-1/2}`
    pub prefactor: f64,
}

impl EnergyDecompositionY {
    pub fn i_a_total(&self) -> f64 {
        self.i_a[0] + self.i_a[1] + self.i_a[2] + self.i_a[3]
    }

    pub fn i_b_total(&self) -> f64 {
        self.i_b[0] + self.i_b[1] + self.i_b[2] + self.i_b[3]
    }

    pub fn assemble(&self) -> f64 {
        self.prefactor * (self.i_a_total() + self.i_b_total())
    }
}

/// Polynomial weights of the four pieces of `∂R/∂y` at index `n`.
fn dy_weights(a: f64, y: f64, n: f64) -> [f64; 4] {
    let n2 = n * n;
    [
        -math::powi(PI, 3) * math::powi(a, 5) * math::powi(y, 3) * n2 * n2 * n2
            + 1.5 * PI * PI * math::powi(a, 4) * y * y * n2 * n2
            + 0.75 * PI * math::powi(a, 3) * y * n2
            + 0.375 * a * a,
        -PI * PI * math::powi(a, 3) * math::powi(y, 3) * n2 * n2 + 3.0 * PI * a * a * y * y * n2 + 5.25 * a * y,
        PI * a * math::powi(y, 3) * n2 + 5.5 * y * y,
        math::powi(y, 3) / a,
    ]
}

/// `∂R/∂y` at `1/2 + iy`, split into `|n| <= 1` and `|n| >= 2` pieces.
pub fn dr_dy_line(alpha: f64, y: f64, trunc: &SeriesTruncation) -> Result<(f64, EnergyDecompositionY)> {
    check_alpha(alpha)?;
    check_point(ModuliPoint { x: 0.5, y })?;
    trunc.validate()?;
    let a = alpha;
    let big_x = y / a;
    let piece = |n: i64| -> Result<[f64; 4]> {
        let nf = n as f64;
        let w = dy_weights(a, y, nf);
        let e = math::exp(-PI * a * y * nf * nf);
        let mut out = [0.0; 4];
        for (k, o) in out.iter_mut().enumerate() {
            *o = w[k] * e * theta_raw(k as u8, 0, big_x, 0.5 * nf, trunc)?;
        }
        Ok(out)
    };
    let p0 = piece(0)?;
    let p1 = piece(1)?;
    let mut i_a = [0.0; 4];
    for k in 0..4 {
        i_a[k] = p0[k] + 2.0 * p1[k];
    }
    // |∂_X^k ϑ(X;Y)| is largest at Y = 0, where all terms share a sign.
    let mut sup = [0.0; 4];
    for (k, s) in sup.iter_mut().enumerate() {
        *s = math::abs(theta_raw(k as u8, 0, big_x, 0.0, trunc)?);
    }
    let mut i_b = [0.0; 4];
    let target = 0.1 * trunc.abs_tolerance;
    let mut prev = f64::INFINITY;
    let mut done = false;
    for i in 0..trunc.max_terms {
        let n = 2 + i as i64;
        let p = piece(n)?;
        let w = dy_weights(a, y, n as f64);
        let e = math::exp(-PI * a * y * (n * n) as f64);
        let mut bound = 0.0;
        for k in 0..4 {
            i_b[k] += 2.0 * p[k];
            bound += 2.0 * math::abs(w[k]) * e * sup[k];
        }
        if bound < target && bound <= prev {
            done = true;
            break;
        }
        prev = bound;
    }
    if !done {
        return Err(Error::TruncationNotReached { terms: trunc.max_terms });
    }
    let d = EnergyDecompositionY {
        i_a,
        i_b,
        prefactor: math::powf(a, -4.5) / (PI * PI * math::sqrt(y)),
    };
    Ok((d.assemble(), d))
}

/// The five double sums behind `(∂²/∂y² + (2/y)∂/∂y) R` on `x = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialDecomposition {
    pub w_a: f64,
    pub w_b: f64,
    pub w_c: f64,
    pub w_d: f64,
    pub w_e: f64,
    pub alpha: f64,
    pub y: f64,
}

impl RadialDecomposition {
    pub fn assemble(&self) -> f64 {
        let (a, y) = (self.alpha, self.y);
        PI * PI * a * a * self.w_a + 2.0 * self.w_b + 4.0 / y * self.w_c
            - 4.0 * PI * a * self.w_d
            - 2.0 * PI * a / y * self.w_e
    }
}

/// `W_a..W_e` at `1/2 + iy`.
///
/// With `u = (m + n/2)²` and `s = yn² + u/y`, terms are kept while `παs`
/// exceeds the leading exponent of both the `n = 0` and the `n != 0` family
/// by at most `2 ln(1/tol)`, so each sum is resolved relative to its own
/// leading term; `W_c` and `W_e` contain only the second family.
pub fn radial_sums(alpha: f64, y: f64, trunc: &SeriesTruncation) -> Result<RadialDecomposition> {
    check_alpha(alpha)?;
    check_point(ModuliPoint { x: 0.5, y })?;
    trunc.validate()?;
    let a = alpha;
    let s_min = (1.0 / y).max(y + 0.25 / y);
    let margin = 2.0 * math::ln(1.0 / trunc.abs_tolerance);
    let s_max = s_min + margin / (PI * a);
    let n_max = math::floor(math::sqrt(s_max / y)) as i64;
    let mut r = RadialDecomposition {
        w_a: 0.0,
        w_b: 0.0,
        w_c: 0.0,
        w_d: 0.0,
        w_e: 0.0,
        alpha,
        y,
    };
    for n in -n_max..=n_max {
        let nf = n as f64;
        let room = y * (s_max - y * nf * nf);
        if room < 0.0 {
            continue;
        }
        // (m + n/2)² <= room
        let half = math::sqrt(room);
        let m_lo = math::ceil(-half - 0.5 * nf) as i64;
        let m_hi = math::floor(half - 0.5 * nf) as i64;
        for m in m_lo..=m_hi {
            let t = m as f64 + 0.5 * nf;
            let u = t * t;
            let d = nf * nf - u / (y * y);
            let s = y * nf * nf + u / y;
            let e = math::exp(-PI * a * s);
            r.w_a += d * d * s * s * e;
            r.w_b += d * d * e;
            r.w_c += nf * nf * s * e;
            r.w_d += d * d * s * e;
            r.w_e += nf * nf * s * s * e;
        }
    }
    Ok(r)
}

/// `(∂²/∂y² + (2/y)∂/∂y) R(α; 1/2 + iy)` and its five sums.
pub fn radial_operator(alpha: f64, y: f64, trunc: &SeriesTruncation) -> Result<(f64, RadialDecomposition)> {
    let r = radial_sums(alpha, y, trunc)?;
    Ok((r.assemble(), r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr() -> SeriesTruncation {
        SeriesTruncation::default()
    }

    fn fine() -> SeriesTruncation {
        SeriesTruncation::new(1e-20, 64).unwrap()
    }

    #[test]
    fn hexagonal_beats_square() {
        let h = energy_r(1.5, ModuliPoint::hexagonal(), &tr()).unwrap();
        let s = energy_r(1.5, ModuliPoint::square(), &tr()).unwrap();
        assert!(h < s);
    }

    #[test]
    fn generalized_two_is_r() {
        let z = ModuliPoint::new(0.21, 1.3).unwrap();
        assert_eq!(
            energy_generalized(2, 1.7, z, &tr()).unwrap(),
            energy_r(1.7, z, &tr()).unwrap()
        );
        assert!(matches!(
            energy_generalized(0, 1.7, z, &tr()),
            Err(Error::NonPositiveK(0))
        ));
    }

    #[test]
    fn corollary_matches_integral() {
        let z = ModuliPoint::hexagonal();
        let d = energy_corollary(1.5, 2.5, z, &tr()).unwrap();
        let q = energy_corollary_quadrature(1.5, 2.5, z, &tr()).unwrap();
        assert!(math::abs(d - q) <= 1e-7 * d);
        assert!(matches!(
            energy_corollary(2.0, 2.0, z, &tr()),
            Err(Error::OrderViolation { .. })
        ));
    }

    #[test]
    fn dr_dx_matches_finite_difference() {
        let z = ModuliPoint::new(0.25, 1.3).unwrap();
        let t = fine();
        let (d, parts) = dr_dx(2.0, z, &t).unwrap();
        let h = 1e-5;
        let f = |x: f64| energy_r(2.0, ModuliPoint::new(x, 1.3).unwrap(), &t).unwrap();
        let fd = (f(0.25 + h) - f(0.25 - h)) / (2.0 * h);
        assert!(math::abs(d - fd) <= 1e-6 * math::abs(fd), "{d} vs {fd}");
        assert!(d < 0.0);
        assert!(parts.phi_a > 0.0);
        assert!(math::abs(parts.phi_b_total() / parts.phi_a) <= 1.0 / 77.0);
    }

    #[test]
    fn dr_dx_rejects_boundary() {
        let z = ModuliPoint::new(0.5, 1.3).unwrap();
        assert!(matches!(dr_dx(2.0, z, &tr()), Err(Error::BoundaryX(_))));
    }

    #[test]
    fn dr_dy_vanishes_at_hexagonal_point() {
        let (d, _) = dr_dy_line(1.5, math::HEX_Y, &tr()).unwrap();
        assert!(math::abs(d) < 1e-8);
    }

    #[test]
    fn dr_dy_matches_finite_difference() {
        let t = fine();
        let (d, _) = dr_dy_line(2.0, 1.1, &t).unwrap();
        let h = 1e-5;
        let f = |y: f64| energy_r(2.0, ModuliPoint::new(0.5, y).unwrap(), &t).unwrap();
        let fd = (f(1.1 + h) - f(1.1 - h)) / (2.0 * h);
        assert!(math::abs(d - fd) <= 1e-6 * math::abs(fd));
        assert!(d > 0.0);
    }

    #[test]
    fn radial_matches_finite_difference() {
        let t = fine();
        let (a, y, h) = (1.5, 0.9, 1e-3);
        let (op, _) = radial_operator(a, y, &t).unwrap();
        let f = |y: f64| energy_r(a, ModuliPoint::new(0.5, y).unwrap(), &t).unwrap();
        let (fm2, fm1, f0, fp1, fp2) = (f(y - 2.0 * h), f(y - h), f(y), f(y + h), f(y + 2.0 * h));
        let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        let fd = d2 + 2.0 / y * d1;
        assert!(math::abs(op - fd) <= 1e-5 * math::abs(fd), "{op} vs {fd}");
        assert!(op >= 77.0 / (50.0 * math::powi(y, 4)) * math::exp(-PI * a / y));
    }
}
