//! Magnitude, inverse and exponential: operations that need a real field.

use super::multivector::{Multivector, SLOT_GRADES};
use crate::error::{Error, Result};
use crate::scalar::{Real, Tolerance};

/// Maximum number of series terms evaluated by [`Multivector::exp`].
pub const EXP_MAX_TERMS: usize = 64;
/// The series stops once the next term's largest coefficient drops below this.
pub const EXP_TERM_TOLERANCE: f64 = 1e-15;

impl<T: Real> Multivector<T> {
    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> T {
        self.to_array().iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    /// Euclidean norm of the 32 coefficients.
    pub fn coefficient_norm(&self) -> T {
        self.to_array().iter().fold(T::zero(), |m, x| m + *x * *x).sqrt()
    }

    pub fn approx_eq(&self, o: &Self, tol: T) -> bool {
        (*self - *o).max_abs() <= tol
    }

    /// Drops coefficients with magnitude at or below `tol`.
    pub fn chop(&self, tol: T) -> Self {
        self.map_slots(|_, x| if x.abs() <= tol { T::zero() } else { x })
    }

    /// `|m|² = reverse(m) * m`; may be negative or zero for non-Euclidean elements.
    pub fn magnitude_squared(&self) -> T {
        self.reverse().scalar_product(self)
    }

    /// `sqrt(|m|²)`. Negative squares beyond the default tolerance are
    /// reported as indefinite rather than producing NaN.
    pub fn magnitude(&self) -> Result<T> {
        let m2 = self.magnitude_squared();
        let tol = Tolerance::<T>::default().eps;
        if m2 < -tol {
            return Err(Error::IndefiniteMagnitude(m2.as_f64()));
        }
        Ok(m2.max(T::zero()).sqrt())
    }

    pub fn normalize(&self) -> Result<Self> {
        self.normalize_with(Tolerance::default())
    }

    pub fn normalize_with(&self, tol: Tolerance<T>) -> Result<Self> {
        let m2 = self.magnitude_squared();
        if m2 <= tol.eps {
            return Err(Error::Normalize(m2.as_f64()));
        }
        Ok(self.scale(m2.sqrt().recip()))
    }

    /// The unique grade carrying coefficients above `tol`, if any.
    /// Zero multivectors report `None`, mixed ones `None` as well.
    pub fn single_grade(&self, tol: T) -> Option<usize> {
        let mut found = None;
        for (k, x) in self.to_array().iter().enumerate() {
            if x.abs() > tol {
                let g = SLOT_GRADES[k] as usize;
                match found {
                    None => found = Some(g),
                    Some(h) if h != g => return None,
                    _ => {}
                }
            }
        }
        found
    }

    /// Inverse of a single-grade element: `reverse(m) / |m|²`.
    pub fn blade_inverse(&self) -> Result<Self> {
        self.blade_inverse_with(Tolerance::default())
    }

    pub fn blade_inverse_with(&self, tol: Tolerance<T>) -> Result<Self> {
        let scale = self.max_abs();
        if self.single_grade(tol.eps * scale.max(T::one())).is_none() {
            return Err(Error::NotInvertible("element is not single-grade"));
        }
        let m2 = self.magnitude_squared();
        if m2.abs() <= tol.eps * (scale * scale).max(T::min_positive_value()) {
            return Err(Error::NotInvertible("null blade"));
        }
        Ok(self.reverse().scale(m2.recip()))
    }

    /// Power series `Σ m^k / k!`.
    ///
    /// Stops when the next term's largest coefficient is below
    /// [`EXP_TERM_TOLERANCE`]; fails if that does not happen within
    /// [`EXP_MAX_TERMS`] terms. Nilpotent arguments terminate exactly.
    pub fn exp(&self) -> Result<Self> {
        let tol = T::lit(EXP_TERM_TOLERANCE);
        let mut sum = Self::scalar(T::one());
        let mut term = sum;
        for k in 1..=EXP_MAX_TERMS {
            term = term.gp(self).scale(T::lit(k as f64).recip());
            if term.max_abs() < tol {
                return Ok(sum);
            }
            sum += term;
        }
        Err(Error::NoConvergence(EXP_MAX_TERMS))
    }
}
