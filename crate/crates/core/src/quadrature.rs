//! Gauss–Legendre quadrature.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{self, PI};

/// Nodes and weights of the `n`-point rule on `[-1, 1]`, nodes ascending.
///
/// Each node is found by Newton's method on `P_n` from the Chebyshev-like
/// initial guess `cos(π(i - 1/4)/(n + 1/2))`.
pub fn gauss_legendre(n: usize) -> Result<Vec<(f64, f64)>> {
    if n == 0 {
        return Err(Error::InvalidArgument("quadrature needs at least one node"));
    }
    let mut rule = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = math::cos(PI * (i as f64 - 0.25) / (n as f64 + 0.5));
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if math::abs(dx) < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule.reverse();
    Ok(rule)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// `∫_a^b f` by the `n`-point rule; the first error from `f` is returned.
pub fn integrate<F>(mut f: F, a: f64, b: f64, n: usize) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let rule = gauss_legendre(n)?;
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    let mut acc = 0.0;
    for (x, w) in rule {
        acc += w * f(mid + half * x)?;
    }
    Ok(half * acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two_and_nodes_are_symmetric() {
        let r = gauss_legendre(32).unwrap();
        let s: f64 = r.iter().map(|p| p.1).sum();
        assert!(math::abs(s - 2.0) < 1e-14);
        for i in 0..16 {
            assert!(math::abs(r[i].0 + r[31 - i].0) < 1e-15);
        }
    }

    #[test]
    fn integrates_polynomials_exactly() {
        let v = integrate(|x| Ok(math::powi(x, 10) - 3.0 * x * x), 0.0, 2.0, 8).unwrap();
        let exact = 2048.0 / 11.0 - 8.0;
        assert!(math::abs(v - exact) < 1e-12);
    }

    #[test]
    fn integrates_exponential() {
        let v = integrate(|x| Ok(math::exp(x)), 0.0, 1.0, 16).unwrap();
        assert!(math::abs(v - (core::f64::consts::E - 1.0)) < 1e-15);
    }
}
