//! Plain Euclidean 3-vectors and bivectors used at the API boundary.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::Multivector;
use crate::scalar::{Real, Scalar};

/// Euclidean vector `x e1 + y e2 + z e3`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct EuclideanVector<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> EuclideanVector<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm_squared(self) -> T {
        self.dot(self)
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn scale(self, c: T) -> Self {
        Self::new(self.x * c, self.y * c, self.z * c)
    }

    pub fn to_multivector(self) -> Multivector<T> {
        Multivector::from_vector(self.to_array())
    }

    /// Euclidean part (`e1, e2, e3` coefficients) of `m`.
    pub fn from_multivector(m: &Multivector<T>) -> Self {
        Self::from_array(m.vector_part())
    }
}

impl<T: Real> EuclideanVector<T> {
    pub fn norm(self) -> T {
        self.norm_squared().sqrt()
    }

    pub fn normalized(self) -> Option<Self> {
        let l = self.norm();
        (l > T::zero()).then(|| self.scale(l.recip()))
    }

    /// Largest absolute coordinate.
    pub fn max_abs(self) -> T {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn distance(self, o: Self) -> T {
        (self - o).norm()
    }
}

impl<T: Scalar> Add for EuclideanVector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> Sub for EuclideanVector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Neg for EuclideanVector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> Mul<T> for EuclideanVector<T> {
    type Output = Self;
    fn mul(self, c: T) -> Self {
        self.scale(c)
    }
}

/// Euclidean bivector `b1 i1 + b2 i2 + b3 i3` with `i1 = e2e3`,
/// `i2 = e1e3`, `i3 = e1e2`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct EuclideanBivector<T> {
    pub b1: T,
    pub b2: T,
    pub b3: T,
}

impl<T: Scalar> EuclideanBivector<T> {
    pub fn new(b1: T, b2: T, b3: T) -> Self {
        Self { b1, b2, b3 }
    }

    /// `a ∧ b`.
    pub fn wedge(a: EuclideanVector<T>, b: EuclideanVector<T>) -> Self {
        Self::new(
            a.y * b.z - a.z * b.y,
            a.x * b.z - a.z * b.x,
            a.x * b.y - a.y * b.x,
        )
    }

    /// Right-handed normal: `e1e2 -> e3`, `e2e3 -> e1`, `e3e1 -> e2`.
    pub fn normal(self) -> EuclideanVector<T> {
        EuclideanVector::new(self.b1, -self.b2, self.b3)
    }

    pub fn from_normal(v: EuclideanVector<T>) -> Self {
        Self::new(v.x, -v.y, v.z)
    }

    pub fn scale(self, c: T) -> Self {
        Self::new(self.b1 * c, self.b2 * c, self.b3 * c)
    }

    pub fn to_multivector(self) -> Multivector<T> {
        let mut m = Multivector::zero();
        m.q.v[0].re = self.b1;
        m.q.v[1].re = self.b2;
        m.q.v[2].re = self.b3;
        m
    }

    /// The `i1, i2, i3` coefficients of `m`.
    pub fn from_multivector(m: &Multivector<T>) -> Self {
        let [b1, b2, b3] = m.bivector_part();
        Self::new(b1, b2, b3)
    }
}

impl<T: Real> EuclideanBivector<T> {
    pub fn norm(self) -> T {
        (self.b1 * self.b1 + self.b2 * self.b2 + self.b3 * self.b3).sqrt()
    }

    pub fn normalized(self) -> Option<Self> {
        let l = self.norm();
        (l > T::zero()).then(|| self.scale(l.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis;

    #[test]
    fn bivector_wedge_matches_kernel() {
        let a = EuclideanVector::new(1.0, 2.0, -0.5);
        let b = EuclideanVector::new(-3.0, 0.25, 4.0);
        let kernel = a.to_multivector() ^ b.to_multivector();
        assert_eq!(EuclideanBivector::wedge(a, b).to_multivector(), kernel);
    }

    #[test]
    fn normal_is_dual_direction() {
        let x = EuclideanVector::new(1.0, 0.0, 0.0);
        let y = EuclideanVector::new(0.0, 1.0, 0.0);
        let z = EuclideanVector::new(0.0, 0.0, 1.0);
        assert_eq!(EuclideanBivector::wedge(x, y).normal(), z);
        assert_eq!(EuclideanBivector::wedge(y, z).normal(), x);
        assert_eq!(EuclideanBivector::wedge(z, x).normal(), y);
        assert_eq!(
            EuclideanBivector::wedge(x, y).to_multivector(),
            basis::i3::<f64>()
        );
    }
}
