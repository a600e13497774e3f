//! Named basis constants.

use super::multivector::Multivector;
use crate::scalar::Scalar;

pub fn one<T: Scalar>() -> Multivector<T> {
    Multivector::scalar(T::one())
}

pub fn e1<T: Scalar>() -> Multivector<T> {
    Multivector::from_vector([T::one(), T::zero(), T::zero()])
}

pub fn e2<T: Scalar>() -> Multivector<T> {
    Multivector::from_vector([T::zero(), T::one(), T::zero()])
}

pub fn e3<T: Scalar>() -> Multivector<T> {
    Multivector::from_vector([T::zero(), T::zero(), T::one()])
}

/// Infinity vector `n`.
pub fn n<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(8)
}

/// Origin vector `nbar`.
pub fn nbar<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(16)
}

/// `N = n ∧ nbar`.
pub fn big_n<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(24)
}

/// Pseudoscalar `I = i N`.
pub fn pseudoscalar<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(1)
}

/// `i1 = e2 e3`.
pub fn i1<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(2)
}

/// `i2 = e1 e3`.
pub fn i2<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(4)
}

/// `i3 = e1 e2`.
pub fn i3<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(6)
}

/// Euclidean pseudoscalar `i = e1 e2 e3 = I N`.
pub fn i<T: Scalar>() -> Multivector<T> {
    Multivector::basis_slot(25)
}

/// All named constants at once.
#[derive(Clone, Copy, Debug)]
pub struct BasisConstants<T: Scalar> {
    pub one: Multivector<T>,
    pub e1: Multivector<T>,
    pub e2: Multivector<T>,
    pub e3: Multivector<T>,
    pub n: Multivector<T>,
    pub nbar: Multivector<T>,
    pub big_n: Multivector<T>,
    pub pseudoscalar: Multivector<T>,
    pub i1: Multivector<T>,
    pub i2: Multivector<T>,
    pub i3: Multivector<T>,
    pub i: Multivector<T>,
}

pub fn basis_constants<T: Scalar>() -> BasisConstants<T> {
    BasisConstants {
        one: one(),
        e1: e1(),
        e2: e2(),
        e3: e3(),
        n: n(),
        nbar: nbar(),
        big_n: big_n(),
        pseudoscalar: pseudoscalar(),
        i1: i1(),
        i2: i2(),
        i3: i3(),
        i: i(),
    }
}
