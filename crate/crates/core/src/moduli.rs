//! Unit-density planar lattices as points of the upper half-plane.
//!
//! The lattice attached to `z = x + iy` is `y^{-1/2}(Z ⊕ zZ)`; the squared
//! length of `m z + n` in it is `((m x + n)^2 + m^2 y^2) / y`. The symmetry
//! group is generated by `τ ↦ τ ± 1`, `τ ↦ -1/τ` and `τ ↦ -τ̄`, and every orbit
//! meets the closed fundamental domain `{0 <= x <= 1/2, |z| >= 1}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{self, HEX_Y};

/// Reduction gives up after this many translate/invert rounds.
pub const MAX_REDUCTION_STEPS: usize = 64;

/// Points closer than this to the real axis are rejected by reduction.
pub const REAL_AXIS_GUARD: f64 = 1e-14;

/// `|z|² >= 1 - UNIT_CIRCLE_SLACK` counts as being on or outside the unit circle,
/// so boundary points such as `e^{iπ/3}` survive rounding.
pub const UNIT_CIRCLE_SLACK: f64 = 1e-13;

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliPoint {
    pub x: f64,
    pub y: f64,
}

impl ModuliPoint {
    /// Validated constructor: both parts finite and `y > 0`.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && y > 0.0 {
            Ok(Self { x, y })
        } else {
            Err(Error::InvalidPoint { x, y })
        }
    }

    /// The hexagonal point `e^{iπ/3}`.
    pub const fn hexagonal() -> Self {
        Self { x: 0.5, y: HEX_Y }
    }

    /// The square lattice point `i`.
    pub const fn square() -> Self {
        Self { x: 0.0, y: 1.0 }
    }

    pub fn abs_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn is_valid(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.y > 0.0
    }
}

/// Squared length `|m z + n|^2 / y` of a lattice vector.
pub fn lattice_norm_sq(z: ModuliPoint, m: i64, n: i64) -> f64 {
    let (m, n) = (m as f64, n as f64);
    let a = m * z.x + n;
    (a * a + m * m * z.y * z.y) / z.y
}

/// Smallest eigenvalue of the Gram form `(m, n) ↦ lattice_norm_sq(z, m, n)`.
///
/// The form has determinant one, so the eigenvalues are `t/2 ± sqrt(t^2/4 - 1)`
/// with `t = (x^2 + y^2 + 1) / y`.
pub(crate) fn gram_min_eigenvalue(z: ModuliPoint) -> f64 {
    let t = (z.abs_sq() + 1.0) / z.y;
    let disc = math::sqrt((t * t - 4.0).max(0.0));
    2.0 / (t + disc)
}

/// Generators of the symmetry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupGenerator {
    /// `τ ↦ τ + 1`
    TranslatePlus,
    /// `τ ↦ τ - 1`
    TranslateMinus,
    /// `τ ↦ -1/τ`
    Invert,
    /// `τ ↦ -τ̄`
    Reflect,
}

impl GroupGenerator {
    pub const ALL: [GroupGenerator; 4] = [
        GroupGenerator::TranslatePlus,
        GroupGenerator::TranslateMinus,
        GroupGenerator::Invert,
        GroupGenerator::Reflect,
    ];

    /// One-letter code used in printed generator words.
    pub fn symbol(self) -> char {
        match self {
            GroupGenerator::TranslatePlus => 'T',
            GroupGenerator::TranslateMinus => 't',
            GroupGenerator::Invert => 'S',
            GroupGenerator::Reflect => 'R',
        }
    }
}

/// Applies one generator.
pub fn apply_generator(g: GroupGenerator, z: ModuliPoint) -> ModuliPoint {
    match g {
        GroupGenerator::TranslatePlus => ModuliPoint { x: z.x + 1.0, y: z.y },
        GroupGenerator::TranslateMinus => ModuliPoint { x: z.x - 1.0, y: z.y },
        GroupGenerator::Invert => {
            let r = z.abs_sq();
            ModuliPoint {
                x: -z.x / r,
                y: z.y / r,
            }
        }
        GroupGenerator::Reflect => ModuliPoint { x: -z.x, y: z.y },
    }
}

/// Applies a word left to right.
pub fn apply_word(word: &[GroupGenerator], z: ModuliPoint) -> ModuliPoint {
    word.iter().fold(z, |acc, &g| apply_generator(g, acc))
}

/// Record of a reduction: replaying `steps` on `input` gives `output`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace {
    pub steps: Vec<GroupGenerator>,
    pub input: ModuliPoint,
    pub output: ModuliPoint,
}

impl ReductionTrace {
    pub fn replay(&self) -> ModuliPoint {
        apply_word(&self.steps, self.input)
    }

    /// The generator word as a string of one-letter codes, `"-"` when empty.
    pub fn word(&self) -> alloc::string::String {
        if self.steps.is_empty() {
            return "-".into();
        }
        self.steps.iter().map(|g| g.symbol()).collect()
    }
}

/// Maps `z` to the closed fundamental domain `{0 <= x <= 1/2, |z| >= 1}`.
///
/// Translations bring `x` into `[-1/2, 1/2]` (half-integers round toward zero),
/// an inversion is applied while `|z| < 1`, and a final reflection makes
/// `x >= 0`; `x = -1/2` therefore lands on `+1/2`.
pub fn reduce_to_fundamental(z: ModuliPoint) -> Result<(ModuliPoint, ReductionTrace)> {
    if !z.is_valid() {
        return Err(Error::InvalidPoint { x: z.x, y: z.y });
    }
    if z.y < REAL_AXIS_GUARD {
        return Err(Error::NearRealAxis { y: z.y });
    }
    let mut steps = Vec::new();
    let mut w = z;
    let mut settled = false;
    for _ in 0..MAX_REDUCTION_STEPS {
        let mut changed = false;
        let k = math::round_half_toward_zero(w.x);
        if k != 0.0 {
            let g = if k > 0.0 {
                GroupGenerator::TranslateMinus
            } else {
                GroupGenerator::TranslatePlus
            };
            let count = math::abs(k) as usize;
            steps.extend(core::iter::repeat(g).take(count));
            w.x -= k;
            changed = true;
        }
        if w.abs_sq() < 1.0 - UNIT_CIRCLE_SLACK {
            w = apply_generator(GroupGenerator::Invert, w);
            steps.push(GroupGenerator::Invert);
            changed = true;
        }
        if !changed {
            settled = true;
            break;
        }
    }
    if !settled {
        return Err(Error::IterationLimitExceeded {
            steps: MAX_REDUCTION_STEPS,
        });
    }
    if w.x < 0.0 {
        w = apply_generator(GroupGenerator::Reflect, w);
        steps.push(GroupGenerator::Reflect);
    }
    Ok((
        w,
        ReductionTrace {
            steps,
            input: z,
            output: w,
        },
    ))
}

/// Membership in the fundamental domain.
///
/// The open variant is `0 < x < 1/2, |z| > 1`; the closed one relaxes all three
/// inequalities, with `UNIT_CIRCLE_SLACK` on the last.
pub fn in_fundamental_domain(z: ModuliPoint, closed: bool) -> bool {
    if !z.is_valid() {
        return false;
    }
    let r = z.abs_sq();
    if closed {
        z.x >= 0.0 && z.x <= 0.5 && r >= 1.0 - UNIT_CIRCLE_SLACK
    } else {
        z.x > 0.0 && z.x < 0.5 && r > 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        math::abs(a - b) <= tol
    }

    #[test]
    fn norm_examples() {
        assert_eq!(lattice_norm_sq(ModuliPoint::square(), 1, 0), 1.0);
        let h = ModuliPoint::hexagonal();
        assert!(close(lattice_norm_sq(h, 1, 0), 2.0 / crate::bounds::SQRT3, 1e-15));
        assert!(close(lattice_norm_sq(h, 1, -1), 2.0 / crate::bounds::SQRT3, 1e-15));
        assert_eq!(lattice_norm_sq(h, 0, 0), 0.0);
    }

    #[test]
    fn generator_examples() {
        let i = ModuliPoint::square();
        let s = apply_generator(GroupGenerator::Invert, i);
        assert!(close(s.x, 0.0, 1e-15) && close(s.y, 1.0, 1e-15));
        let z = ModuliPoint::new(0.3, 0.8).unwrap();
        let t = apply_generator(GroupGenerator::TranslatePlus, z);
        assert!(close(t.x, 1.3, 1e-15) && t.y == 0.8);
        let w = apply_generator(GroupGenerator::Invert, z);
        assert!(close(w.x, -0.410_958_904_109_589, 1e-12));
        assert!(close(w.y, 1.095_890_410_958_904, 1e-12));
    }

    #[test]
    fn reduce_examples() {
        let (h, trace) = reduce_to_fundamental(ModuliPoint::hexagonal()).unwrap();
        assert_eq!(h, ModuliPoint::hexagonal());
        assert!(trace.steps.is_empty());

        let (r, trace) = reduce_to_fundamental(ModuliPoint::new(1.7, 0.8).unwrap()).unwrap();
        assert!(close(r.x, 0.410_958_904_109_589, 1e-12));
        assert!(close(r.y, 1.095_890_410_958_904, 1e-12));
        let replay = trace.replay();
        assert!(close(replay.x, r.x, 1e-12) && close(replay.y, r.y, 1e-12));

        let z = ModuliPoint::new(0.25, 5.0).unwrap();
        assert_eq!(reduce_to_fundamental(z).unwrap().0, z);
    }

    #[test]
    fn reduce_ties_land_on_right_boundary() {
        let (r, _) = reduce_to_fundamental(ModuliPoint::new(-0.5, 2.0).unwrap()).unwrap();
        assert_eq!(r.x, 0.5);
        let (r, _) = reduce_to_fundamental(ModuliPoint::new(1.5, 2.0).unwrap()).unwrap();
        assert_eq!(r.x, 0.5);
    }

    #[test]
    fn reduce_rejects_real_axis() {
        let z = ModuliPoint { x: 0.3, y: 1e-15 };
        assert!(matches!(reduce_to_fundamental(z), Err(Error::NearRealAxis { .. })));
    }

    #[test]
    fn domain_membership() {
        assert!(in_fundamental_domain(ModuliPoint::new(0.25, 2.0).unwrap(), false));
        let h = ModuliPoint::hexagonal();
        assert!(!in_fundamental_domain(h, false));
        assert!(in_fundamental_domain(h, true));
        assert!(!in_fundamental_domain(ModuliPoint::new(0.6, 2.0).unwrap(), true));
    }

    #[test]
    fn gram_eigenvalue_is_a_lower_bound() {
        let z = ModuliPoint::new(0.37, 0.91).unwrap();
        let lam = gram_min_eigenvalue(z);
        for m in -5i64..=5 {
            for n in -5i64..=5 {
                let q = lattice_norm_sq(z, m, n);
                let r2 = (m * m + n * n) as f64;
                assert!(q >= lam * r2 - 1e-12);
            }
        }
    }
}
