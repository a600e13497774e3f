//! Rotors, translators and motors applied by the sandwich product.

use crate::algebra::{basis, Multivector};
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar, Tolerance};
use crate::vector::{EuclideanBivector, EuclideanVector};

/// Tolerance on `|V Ṽ - 1|` for accepting a multivector as a versor.
pub const UNIT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VersorKind {
    Rotor,
    Translator,
    Motor,
}

/// Unit even element applied as `V m Ṽ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Versor<T: Scalar> {
    mv: Multivector<T>,
    kind: VersorKind,
}

/// Rotation in plane `plane` by `angle` radians about `center`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotorSpec<T> {
    pub plane: EuclideanBivector<T>,
    pub angle: T,
    pub center: EuclideanVector<T>,
}

fn unit_plane<T: Real>(b: EuclideanBivector<T>) -> Result<EuclideanBivector<T>> {
    let tol = Tolerance::<T>::default().eps;
    if (b.norm() - T::one()).abs() > tol {
        return Err(Error::Domain("rotation plane bivector must have unit magnitude"));
    }
    Ok(b)
}

/// `R = exp(-θ b / 2) = cos(θ/2) - sin(θ/2) b`.
///
/// With `b = e1e2` and `θ > 0`, `e1` turns toward `e2`.
pub fn make_rotor<T: Real>(plane: EuclideanBivector<T>, angle: T) -> Result<Versor<T>> {
    let b = unit_plane(plane)?;
    let half = angle * T::lit(0.5);
    let mv = Multivector::scalar(half.cos()) - b.to_multivector().scale(half.sin());
    Ok(Versor { mv, kind: VersorKind::Rotor })
}

/// `T = 1 + n a / 2`; the series stops after two terms because `n² = 0`.
pub fn make_translator<T: Real>(a: EuclideanVector<T>) -> Versor<T> {
    let na = basis::n::<T>() * a.to_multivector();
    Versor {
        mv: basis::one::<T>() + na.scale(T::lit(0.5)),
        kind: VersorKind::Translator,
    }
}

/// `R' = T(c) R T̃(c)`: rotation about an arbitrary center.
pub fn make_rotor_about<T: Real>(
    plane: EuclideanBivector<T>,
    angle: T,
    center: EuclideanVector<T>,
) -> Result<Versor<T>> {
    let r = make_rotor(plane, angle)?;
    let t = make_translator(center);
    Ok(Versor {
        mv: t.mv.sandwich(&r.mv),
        kind: VersorKind::Rotor,
    })
}

/// `D = T(t) R'(spec)`.
pub fn compose_motor<T: Real>(t: EuclideanVector<T>, spec: RotorSpec<T>) -> Result<Versor<T>> {
    let r = make_rotor_about(spec.plane, spec.angle, spec.center)?;
    Ok(Versor {
        mv: make_translator(t).mv * r.mv,
        kind: VersorKind::Motor,
    })
}

/// Applies `v` to `m`; equivalent to [`Versor::apply`].
pub fn apply_versor<T: Real>(v: &Versor<T>, m: &Multivector<T>) -> Multivector<T> {
    v.apply(m)
}

impl<T: Real> Versor<T> {
    pub fn identity() -> Self {
        Self { mv: basis::one(), kind: VersorKind::Motor }
    }

    /// Accepts `m` if it is even and `m m̃ = 1` within [`UNIT_TOLERANCE`].
    pub fn try_from_multivector(m: Multivector<T>, kind: VersorKind) -> Result<Self> {
        let grades = m.populated_grades();
        if grades[1] || grades[3] || grades[5] {
            let odd = m.grade_part(1) + m.grade_part(3) + m.grade_part(5);
            if odd.max_abs() > T::lit(UNIT_TOLERANCE) {
                return Err(Error::Domain("versor must be an even element"));
            }
        }
        let v = Self { mv: m, kind };
        if v.unit_error() > T::lit(UNIT_TOLERANCE) {
            return Err(Error::Domain("versor is not unit: V Ṽ != 1"));
        }
        Ok(v)
    }

    pub fn as_multivector(&self) -> &Multivector<T> {
        &self.mv
    }

    pub fn kind(&self) -> VersorKind {
        self.kind
    }

    pub fn reverse(&self) -> Self {
        Self { mv: self.mv.reverse(), kind: self.kind }
    }

    /// Largest coefficient of `V Ṽ - 1`.
    pub fn unit_error(&self) -> T {
        (self.mv * self.mv.reverse() - basis::one()).max_abs()
    }

    /// `V m Ṽ`.
    pub fn apply(&self, m: &Multivector<T>) -> Multivector<T> {
        self.mv.sandwich(m)
    }

    pub fn apply_point(&self, x: EuclideanVector<T>) -> Result<EuclideanVector<T>> {
        let p = crate::entities::ConformalPoint::embed(x);
        crate::entities::ConformalPoint::from_multivector(&self.apply(p.as_multivector()))
            .map(|p| p.euclidean())
    }

    /// `self` after `first`: `apply(self.then_after(first), m) = apply(self, apply(first, m))`.
    pub fn then_after(&self, first: &Self) -> Self {
        let kind = if self.kind == first.kind { self.kind } else { VersorKind::Motor };
        Self { mv: self.mv * first.mv, kind }.renormalized()
    }

    /// Rescales by `sqrt(<V Ṽ>_0)` once drift exceeds [`UNIT_TOLERANCE`].
    pub fn renormalized(self) -> Self {
        if self.unit_error() <= T::lit(UNIT_TOLERANCE) {
            return self;
        }
        let s = self.mv.scalar_product(&self.mv.reverse());
        if s <= T::zero() {
            return self;
        }
        Self { mv: self.mv.scale(s.sqrt().recip()), kind: self.kind }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn v(x: f64, y: f64, z: f64) -> EuclideanVector<f64> {
        EuclideanVector::new(x, y, z)
    }

    fn e12() -> EuclideanBivector<f64> {
        EuclideanBivector::new(0.0, 0.0, 1.0)
    }

    fn close(a: EuclideanVector<f64>, b: EuclideanVector<f64>, tol: f64) -> bool {
        (a - b).max_abs() <= tol
    }

    #[test]
    fn zero_angle_is_identity() {
        let r = make_rotor(e12(), 0.0).unwrap();
        assert_eq!(*r.as_multivector(), basis::one());
        assert_eq!(*make_translator(v(0.0, 0.0, 0.0)).as_multivector(), basis::one());
    }

    #[test]
    fn quarter_turn_moves_x_to_y() {
        let r = make_rotor(e12(), FRAC_PI_2).unwrap();
        assert!(close(r.apply_point(v(1.0, 0.0, 0.0)).unwrap(), v(0.0, 1.0, 0.0), 1e-15));
    }

    #[test]
    fn non_unit_plane_rejected() {
        assert!(make_rotor(EuclideanBivector::new(0.0, 0.0, 2.0), 1.0).is_err());
    }

    #[test]
    fn translator_moves_origin() {
        let t = make_translator(v(1.0, 0.0, 0.0));
        let moved = t.apply(&basis::nbar());
        let expected = crate::entities::ConformalPoint::embed(v(1.0, 0.0, 0.0));
        assert!(moved.approx_eq(expected.as_multivector(), 1e-15));
    }

    #[test]
    fn translators_compose_additively() {
        let a = v(1.0, -2.0, 0.5);
        let b = v(0.25, 3.0, -1.0);
        let ab = *make_translator(a).as_multivector() * *make_translator(b).as_multivector();
        assert!(ab.approx_eq(make_translator(a + b).as_multivector(), 1e-15));
    }

    #[test]
    fn half_turn_about_center() {
        let r = make_rotor_about(e12(), PI, v(1.0, 0.0, 0.0)).unwrap();
        assert!(close(r.apply_point(v(0.0, 0.0, 0.0)).unwrap(), v(2.0, 0.0, 0.0), 1e-14));
        assert!(close(r.apply_point(v(1.0, 0.0, 0.0)).unwrap(), v(1.0, 0.0, 0.0), 1e-14));
    }

    #[test]
    fn rotor_fixes_infinity() {
        let r = make_rotor(EuclideanBivector::new(0.6, 0.0, 0.8), 0.7).unwrap();
        assert!(r.apply(&basis::n()).approx_eq(&basis::n(), 1e-15));
        assert!(r.apply(&basis::nbar()).approx_eq(&basis::nbar(), 1e-15));
    }

    #[test]
    fn rotor_closed_form_matches_series() {
        let b = EuclideanBivector::new(0.48, 0.6, 0.64);
        for theta in [-2.5, -0.3, 0.0, 1.1, 3.0] {
            let closed = make_rotor(b, theta).unwrap();
            let series = b.to_multivector().scale(-0.5 * theta).exp().unwrap();
            assert!(closed.as_multivector().approx_eq(&series, 1e-12));
        }
    }

    #[test]
    fn try_from_rejects_non_unit() {
        let m = basis::one::<f64>().scale(2.0);
        assert!(Versor::try_from_multivector(m, VersorKind::Rotor).is_err());
        assert!(Versor::try_from_multivector(basis::e1::<f64>(), VersorKind::Rotor).is_err());
        let r = make_rotor(e12(), 0.4).unwrap();
        assert!(Versor::try_from_multivector(*r.as_multivector(), VersorKind::Rotor).is_ok());
    }

    #[test]
    fn renormalize_after_drift() {
        let r = make_rotor(e12(), 0.4).unwrap();
        let drifted = Versor { mv: r.mv.scale(1.0 + 1e-6), kind: VersorKind::Rotor };
        assert!(drifted.unit_error() > 1e-9);
        assert!(drifted.renormalized().unit_error() < 1e-12);
    }
}
