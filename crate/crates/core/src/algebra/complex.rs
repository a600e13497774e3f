use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Element of the `{1, I}` sub-algebra: `re + I im`, with `I² = -1`.
///
/// Both 1 and the pseudoscalar `I` are central in Cl(4,1), so these behave
/// exactly like ordinary complex numbers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexScalar<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> ComplexScalar<T> {
    pub fn new(re: T, im: T) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero())
    }

    /// The pseudoscalar `I`.
    pub fn i_unit() -> Self {
        Self::new(T::zero(), T::one())
    }

    pub fn scale(self, c: T) -> Self {
        Self::new(self.re * c, self.im * c)
    }

    /// Multiplication by `I`: `(re, im) -> (-im, re)`.
    pub fn mul_i(self) -> Self {
        Self::new(-self.im, self.re)
    }

    pub fn is_zero(&self) -> bool {
        self.re == T::zero() && self.im == T::zero()
    }
}

impl<T: Scalar> Add for ComplexScalar<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl<T: Scalar> Sub for ComplexScalar<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl<T: Scalar> Neg for ComplexScalar<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<T: Scalar> Mul for ComplexScalar<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}
