use alloc::string::String;
use core::fmt;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A theta argument `X` was not strictly positive.
    NonPositiveX(f64),
    /// A Gaussian sharpness `alpha` was not strictly positive.
    NonPositiveAlpha(f64),
    /// The exponent of a generalized energy was zero.
    NonPositiveK(u32),
    /// A point was not finite or did not lie in the upper half-plane.
    InvalidPoint { x: f64, y: f64 },
    /// A point lies too close to the real axis to reduce reliably.
    NearRealAxis { y: f64 },
    /// Fundamental-domain reduction did not settle within the step cap.
    IterationLimitExceeded { steps: usize },
    /// A series hit its term cap before the tail dropped below tolerance.
    TruncationNotReached { terms: usize },
    /// The truncation policy itself is malformed.
    InvalidTruncation,
    /// `x` sits within the guard band of `0` or `1/2`, or outside `(0, 1/2)`.
    BoundaryX(f64),
    /// `beta` must exceed `alpha`.
    OrderViolation { alpha: f64, beta: f64 },
    /// No region function with this name exists.
    UnknownFunction(String),
    /// Arguments fall outside a region function's stated domain.
    OutOfRegion(String),
    /// No lemma check with this id exists.
    UnknownLemma(String),
    /// The sampling region is incompatible with the lemma's domain.
    RegionMismatch(String),
    /// An optimizer hit its iteration cap.
    NoConvergence { iterations: usize },
    /// A free-form argument was rejected.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveX(x) => write!(f, "theta argument X must be positive, got {x}"),
            Error::NonPositiveAlpha(a) => write!(f, "alpha must be positive, got {a}"),
            Error::NonPositiveK(k) => write!(f, "energy exponent k must be at least 1, got {k}"),
            Error::InvalidPoint { x, y } => {
                write!(f, "({x}, {y}) is not a finite point of the upper half-plane")
            }
            Error::NearRealAxis { y } => {
                write!(f, "imaginary part {y} is too close to the real axis to reduce")
            }
            Error::IterationLimitExceeded { steps } => {
                write!(f, "reduction did not settle within {steps} steps")
            }
            Error::TruncationNotReached { terms } => {
                write!(f, "series tail above tolerance after {terms} terms")
            }
            Error::InvalidTruncation => {
                write!(f, "truncation needs abs_tolerance > 0 and max_terms >= 4")
            }
            Error::BoundaryX(x) => write!(f, "x = {x} is not strictly inside (0, 1/2)"),
            Error::OrderViolation { alpha, beta } => {
                write!(f, "beta = {beta} must exceed alpha = {alpha}")
            }
            Error::UnknownFunction(name) => write!(f, "unknown region function `{name}`"),
            Error::OutOfRegion(msg) => write!(f, "arguments out of region: {msg}"),
            Error::UnknownLemma(id) => write!(f, "unknown lemma id `{id}`"),
            Error::RegionMismatch(msg) => write!(f, "region mismatch: {msg}"),
            Error::NoConvergence { iterations } => {
                write!(f, "optimizer did not converge in {iterations} iterations")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
