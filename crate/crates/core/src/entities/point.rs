use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar, Tolerance};
use crate::vector::EuclideanVector;

/// Null vector `X = x + ½x² n + nbar` representing a Euclidean point.
///
/// The `nbar` coefficient is always exactly one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConformalPoint<T: Scalar>(Multivector<T>);

impl<T: Real> ConformalPoint<T> {
    pub fn embed(x: EuclideanVector<T>) -> Self {
        let mut m = x.to_multivector();
        m.q_n.s.re = x.norm_squared() * T::lit(0.5);
        m.q_nbar.s.re = T::one();
        Self(m)
    }

    /// Normalizes any nonzero multiple of a conformal point.
    pub fn from_multivector(m: &Multivector<T>) -> Result<Self> {
        extract_point(m).map(Self::embed)
    }

    pub fn euclidean(&self) -> EuclideanVector<T> {
        EuclideanVector::from_multivector(&self.0)
    }

    pub fn as_multivector(&self) -> &Multivector<T> {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector<T> {
        self.0
    }
}

/// Euclidean position of a (possibly scaled) conformal point: the vector
/// part divided by the `nbar` coefficient.
pub fn extract_point<T: Real>(m: &Multivector<T>) -> Result<EuclideanVector<T>> {
    let w = m.nbar_coefficient();
    let tol = Tolerance::<T>::default().eps * m.max_abs();
    if w.abs() <= tol || w == T::zero() {
        return Err(Error::PointAtInfinity);
    }
    Ok(EuclideanVector::from_multivector(m).scale(w.recip()))
}

/// `|a - b| = sqrt(-2 A·B)` for normalized points.
pub fn point_distance<T: Real>(a: &ConformalPoint<T>, b: &ConformalPoint<T>) -> Result<T> {
    let d2 = a.0.scalar_product(&b.0) * T::lit(-2.0);
    let scale = a.euclidean().max_abs().max(b.euclidean().max_abs()).max(T::one());
    if d2 < -Tolerance::<T>::default().eps * scale * scale {
        return Err(Error::NegativeDistance(d2.as_f64()));
    }
    Ok(d2.max(T::zero()).sqrt())
}
