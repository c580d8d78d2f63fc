//! Scalar traits.
//!
//! Two tiers: [`Scalar`] covers every field the algebraic code runs over,
//! including exact rationals, and [`Real`] adds the floating-point surface
//! needed by finite differences, quadrature and least squares.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, Num, Zero};

/// Coefficient field for algebra elements, polynomials and frame conversion.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Num + Neg<Output = Self> + Debug + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// True when a coefficient should be dropped from a sparse polynomial.
    fn is_negligible(&self) -> bool;
}

/// Absolute prune threshold for floating-point polynomial coefficients.
pub const PRUNE_THRESHOLD: f64 = 1e-15;

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() <= PRUNE_THRESHOLD
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }

    fn is_negligible(&self) -> bool {
        (self.abs() as f64) <= PRUNE_THRESHOLD
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

/// Floating-point scalars (`f32`, `f64`).
pub trait Real: Scalar + Float + FloatConst + FromPrimitive + Display + Default {
    /// Converts an `f64` literal. Panics only for non-representable values,
    /// which never happens for `f32`/`f64`.
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 literal fits the scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Real for f64 {}
impl Real for f32 {}
