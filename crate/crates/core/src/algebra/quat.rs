use std::ops::{Add, Mul, Neg, Sub};

use super::complex::ComplexScalar;
use crate::scalar::Scalar;

/// Complex quaternion `s + v1 i1 + v2 i2 + v3 i3` with complex coefficients.
///
/// The units follow the quaternionic table `i1 i2 = i3`, `i2 i3 = i1`,
/// `i3 i1 = i2`, `ik² = -1`. The Euclidean bivectors realising them are
/// `i1 = e2e3`, `i2 = e1e3`, `i3 = e1e2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexQuat<T> {
    pub s: ComplexScalar<T>,
    pub v: [ComplexScalar<T>; 3],
}

impl<T: Scalar> ComplexQuat<T> {
    pub fn new(s: ComplexScalar<T>, v: [ComplexScalar<T>; 3]) -> Self {
        Self { s, v }
    }

    pub fn zero() -> Self {
        Self::new(ComplexScalar::zero(), [ComplexScalar::zero(); 3])
    }

    pub fn from_scalar(s: ComplexScalar<T>) -> Self {
        Self::new(s, [ComplexScalar::zero(); 3])
    }

    /// Reads the eight real coefficients in the order
    /// `s.re, s.im, v1.re, v1.im, v2.re, v2.im, v3.re, v3.im`.
    pub fn from_reals(c: [T; 8]) -> Self {
        Self::new(
            ComplexScalar::new(c[0], c[1]),
            [
                ComplexScalar::new(c[2], c[3]),
                ComplexScalar::new(c[4], c[5]),
                ComplexScalar::new(c[6], c[7]),
            ],
        )
    }

    pub fn to_reals(&self) -> [T; 8] {
        [
            self.s.re, self.s.im, self.v[0].re, self.v[0].im, self.v[1].re, self.v[1].im,
            self.v[2].re, self.v[2].im,
        ]
    }

    pub fn scale(self, c: T) -> Self {
        Self::new(self.s.scale(c), self.v.map(|x| x.scale(c)))
    }

    pub fn mul_i(self) -> Self {
        Self::new(self.s.mul_i(), self.v.map(ComplexScalar::mul_i))
    }

    pub fn map(self, mut f: impl FnMut(ComplexScalar<T>) -> ComplexScalar<T>) -> Self {
        Self::new(f(self.s), self.v.map(f))
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.v.iter().all(ComplexScalar::is_zero)
    }
}

impl<T: Scalar> Add for ComplexQuat<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.s + o.s,
            [self.v[0] + o.v[0], self.v[1] + o.v[1], self.v[2] + o.v[2]],
        )
    }
}

impl<T: Scalar> Sub for ComplexQuat<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.s - o.s,
            [self.v[0] - o.v[0], self.v[1] - o.v[1], self.v[2] - o.v[2]],
        )
    }
}

impl<T: Scalar> Neg for ComplexQuat<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(Neg::neg)
    }
}

impl<T: Scalar> Mul for ComplexQuat<T> {
    type Output = Self;

    fn mul(self, q: Self) -> Self {
        let p = self;
        let [p1, p2, p3] = p.v;
        let [q1, q2, q3] = q.v;
        let s = p.s * q.s - (p1 * q1 + p2 * q2 + p3 * q3);
        let v = [
            p.s * q1 + p1 * q.s + (p2 * q3 - p3 * q2),
            p.s * q2 + p2 * q.s + (p3 * q1 - p1 * q3),
            p.s * q3 + p3 * q.s + (p1 * q2 - p2 * q1),
        ];
        Self::new(s, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(k: usize) -> ComplexQuat<i64> {
        let mut c = [0; 8];
        c[k] = 1;
        ComplexQuat::from_reals(c)
    }

    #[test]
    fn quaternion_table() {
        let one = unit(0);
        let (i1, i2, i3) = (unit(2), unit(4), unit(6));
        for u in [i1, i2, i3] {
            assert_eq!(u * u, -one);
            assert_eq!(one * u, u);
            assert_eq!(u * one, u);
        }
        assert_eq!(i1 * i2, i3);
        assert_eq!(i2 * i3, i1);
        assert_eq!(i3 * i1, i2);
        assert_eq!(i2 * i1, -i3);
        assert_eq!(i3 * i2, -i1);
        assert_eq!(i1 * i3, -i2);
    }

    #[test]
    fn complex_coefficients_are_central() {
        let big_i = unit(1);
        let i2 = unit(4);
        assert_eq!(big_i * i2, i2 * big_i);
        assert_eq!(big_i * i2, unit(5));
    }

    #[test]
    fn reals_round_trip() {
        let c = [1, 2, 3, 4, 5, 6, 7, 8];
        assert_eq!(ComplexQuat::from_reals(c).to_reals(), c);
    }
}
