//! Scalar traits shared by the generic numeric code.

use num_traits::{Float, FloatConst, FromPrimitive, One, Zero};
use std::ops::{Add, Mul};

/// Anything polynomial evaluation can run over: exact rationals, big
/// integers, or machine floats.
pub trait Scalar: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {}

impl<T> Scalar for T where T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> {}

/// Floating point type usable by the quadrature: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + std::fmt::Debug + Send + Sync {
    /// Converts an `f64` constant, rounding to the nearest representable value.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("every f64 literal converts")
    }
}

impl Real for f32 {}
impl Real for f64 {}
