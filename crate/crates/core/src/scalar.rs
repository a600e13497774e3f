//! Scalar traits the kernel is generic over.
//!
//! The product machinery only needs ring operations, so it runs over exact
//! rationals as well as `f32`/`f64`. Everything that takes square roots,
//! compares against tolerances or evaluates series needs [`Real`].

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Float, FloatConst, Num};

/// Ring-level coefficient type for multivectors.
pub trait Scalar: Copy + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Copy + PartialEq + Debug + Num + Neg<Output = T> {}

/// Floating point coefficient type.
pub trait Real: Scalar + Float + FloatConst {
    /// Converts an `f64` literal into `Self`.
    fn lit(x: f64) -> Self {
        Self::from(x).expect("literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Numeric tolerances used by classification and zero tests.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance<T> {
    /// Absolute tolerance for coefficient zero tests, scaled by the
    /// geometric scale of the configuration where applicable.
    pub eps: T,
}

impl<T: Real> Tolerance<T> {
    pub fn new(eps: T) -> Self {
        Self { eps }
    }

    /// `eps * scale`, with the scale clamped below at one so that tiny
    /// configurations still get an absolute floor.
    pub fn scaled(&self, scale: T) -> T {
        self.eps * scale.abs().max(T::one())
    }
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self { eps: T::lit(1e-9) }
    }
}
