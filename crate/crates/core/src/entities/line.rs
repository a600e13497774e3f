use super::geometric_scale;
use super::point::ConformalPoint;
use super::round::CircleOrLine;
use crate::algebra::{basis, Multivector};
use crate::error::{Error, Result};
use crate::scalar::{Real, Tolerance};
use crate::vector::{EuclideanBivector, EuclideanVector};

/// `A1 ∧ A2 ∧ n = (a1∧a2) n + (a2 - a1) N`.
pub fn line_through<T: Real>(
    a1: EuclideanVector<T>,
    a2: EuclideanVector<T>,
    tol: Tolerance<T>,
) -> Result<CircleOrLine<T>> {
    if a1.distance(a2) <= tol.scaled(geometric_scale(&[a1, a2])) {
        return Err(Error::Degenerate("coincident points"));
    }
    let p1 = ConformalPoint::embed(a1).into_multivector();
    let p2 = ConformalPoint::embed(a2).into_multivector();
    Ok(CircleOrLine(p1.wedge(&p2).wedge(&basis::n())))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineParams<T> {
    /// Moment bivector `a1 ∧ a2` (for the blade's own scale).
    pub moment: EuclideanBivector<T>,
    /// Direction `a2 - a1` (for the blade's own scale).
    pub direction: EuclideanVector<T>,
    /// Point of the line closest to the origin.
    pub base: EuclideanVector<T>,
}

impl<T: Real> LineParams<T> {
    pub fn unit_direction(&self) -> EuclideanVector<T> {
        self.direction.scale(self.direction.norm().recip())
    }

    /// `base + t * unit_direction`.
    pub fn point_at(&self, t: T) -> EuclideanVector<T> {
        self.base + self.unit_direction().scale(t)
    }

    /// Signed parameter of the foot of `x` along the unit direction.
    pub fn parameter_of(&self, x: EuclideanVector<T>) -> T {
        (x - self.base).dot(self.unit_direction())
    }
}

/// Moment, direction and closest point to the origin of a line blade.
pub fn line_params<T: Real>(v: &CircleOrLine<T>, tol: Tolerance<T>) -> Result<LineParams<T>> {
    let v = &v.0;
    if !v.wedge(&basis::n()).max_abs().le(&(tol.eps * v.max_abs())) {
        return Err(Error::NotALine);
    }
    let moment = EuclideanBivector::new(v.q_n.v[0].re, v.q_n.v[1].re, v.q_n.v[2].re);
    let direction = EuclideanVector::from_array(v.vector_nn_part());
    if direction.norm() <= tol.eps * v.max_abs() || direction.norm() == T::zero() {
        return Err(Error::Degenerate("line with zero direction"));
    }
    let u = direction.to_multivector();
    let base = moment.to_multivector() * u.blade_inverse()?;
    Ok(LineParams { moment, direction, base: EuclideanVector::from_multivector(&base) })
}

/// Vector from the line to `x` (perpendicular to the line) and its length.
pub fn point_line_distance<T: Real>(
    x: EuclideanVector<T>,
    line: &CircleOrLine<T>,
    tol: Tolerance<T>,
) -> Result<(EuclideanVector<T>, T)> {
    let p = line_params(line, tol)?;
    let u = p.direction.to_multivector();
    let d = (x.to_multivector().wedge(&u) - p.moment.to_multivector()) * u.blade_inverse()?;
    let d = EuclideanVector::from_multivector(&d);
    Ok((d, d.norm()))
}

/// Position of a flat point `λ (x ∧ n - N)`, as produced by meeting two
/// intersecting lines.
pub fn flat_point_position<T: Real>(f: &Multivector<T>, tol: Tolerance<T>) -> Result<EuclideanVector<T>> {
    let w = -f.nn_coefficient();
    if w.abs() <= tol.eps * f.max_abs() || w == T::zero() {
        return Err(Error::PointAtInfinity);
    }
    Ok(EuclideanVector::from_array(f.vector_n_part()).scale(w.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: f64, y: f64, z: f64) -> EuclideanVector<f64> {
        EuclideanVector::new(x, y, z)
    }

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    #[test]
    fn line_parts() {
        let (a, b) = (v(0.0, 1.0, 0.0), v(1.0, 1.0, 0.0));
        let l = line_through(a, b, tol()).unwrap();
        let p = line_params(&l, tol()).unwrap();
        assert_eq!(p.direction, v(1.0, 0.0, 0.0));
        assert_eq!(p.moment, EuclideanBivector::wedge(a, b));
        assert!(p.base.distance(v(0.0, 1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn distance_to_line() {
        let l = line_through(v(1.0, 2.0, 3.0), v(2.0, 2.0, 3.0), tol()).unwrap();
        let (d, len) = point_line_distance(v(5.0, 5.0, 7.0), &l, tol()).unwrap();
        assert!(d.distance(v(0.0, 3.0, 4.0)) < 1e-12);
        assert!((len - 5.0).abs() < 1e-12);
    }

    #[test]
    fn base_is_closest_point() {
        let l = line_through(v(3.0, -1.0, 2.0), v(-1.0, 4.0, 0.5), tol()).unwrap();
        let p = line_params(&l, tol()).unwrap();
        assert!(p.base.dot(p.direction).abs() < 1e-12);
        let (_, d) = point_line_distance(p.base, &l, tol()).unwrap();
        assert!(d < 1e-12);
    }

    #[test]
    fn circle_is_not_line() {
        let c = super::super::circle_through(v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(-1.0, 0.0, 0.0), tol()).unwrap();
        assert_eq!(line_params(&c, tol()), Err(Error::NotALine));
        assert!(line_through(v(1.0, 0.0, 0.0), v(1.0, 0.0, 0.0), tol()).is_err());
    }

    #[test]
    fn flat_point() {
        let x = v(1.0, -2.0, 0.5);
        let f = ConformalPoint::embed(x).as_multivector().wedge(&basis::n()).scale(3.0);
        assert!(flat_point_position(&f, tol()).unwrap().distance(x) < 1e-12);
    }
}
