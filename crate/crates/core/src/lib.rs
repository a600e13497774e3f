//! Conformal geometric algebra Cl(4,1) on complex quaternion blocks.
//!
//! A multivector is stored as `q + qn n + qnbar nbar + qnn N` where each
//! block is a complex quaternion. Points, point pairs, lines, circles and
//! spheres are blades built by wedging conformal points, and rigid motions
//! are applied with the sandwich product.
//!
//! Everything is generic over the coefficient type. Products work over any
//! [`Scalar`] (including exact rationals); metric operations need [`Real`].

pub mod algebra;
pub mod entities;
pub mod error;
pub mod incidence;
pub mod scalar;
pub mod transforms;
pub mod vector;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use algebra::{basis, ComplexQuat, ComplexScalar, Multivector};
pub use error::{Error, Result};
pub use scalar::{Real, Scalar, Tolerance};
pub use vector::{EuclideanBivector, EuclideanVector};

pub type Multivector64 = Multivector<f64>;
pub type Multivector32 = Multivector<f32>;
pub type Vector64 = EuclideanVector<f64>;
pub type Vector32 = EuclideanVector<f32>;
pub type Bivector64 = EuclideanBivector<f64>;
pub type Tolerance64 = Tolerance<f64>;
pub type Point64 = entities::ConformalPoint<f64>;
