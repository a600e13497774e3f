use super::geometric_scale;
use super::point::{extract_point, ConformalPoint};
use crate::algebra::{basis, Multivector};
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar, Tolerance};
use crate::vector::{EuclideanBivector, EuclideanVector};

/// Grade-3 blade through three points: a circle, or a line when the points
/// are collinear.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleOrLine<T: Scalar>(pub Multivector<T>);

/// Grade-4 blade through four points: a sphere, or a plane when the points
/// are coplanar.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereOrPlane<T: Scalar>(pub Multivector<T>);

/// True when `V ∧ n` vanishes relative to `V`: the blade passes through
/// infinity.
fn is_flat<T: Real>(v: &Multivector<T>, tol: Tolerance<T>) -> bool {
    v.wedge(&basis::n()).max_abs() <= tol.eps * v.max_abs()
}

impl<T: Real> CircleOrLine<T> {
    pub fn is_line(&self, tol: Tolerance<T>) -> bool {
        is_flat(&self.0, tol)
    }
}

impl<T: Real> SphereOrPlane<T> {
    pub fn is_plane(&self, tol: Tolerance<T>) -> bool {
        is_flat(&self.0, tol)
    }
}

fn reject_repeats<T: Real>(points: &[EuclideanVector<T>], tol: Tolerance<T>) -> Result<()> {
    let eps = tol.scaled(geometric_scale(points));
    for (i, a) in points.iter().enumerate() {
        if points[i + 1..].iter().any(|b| a.distance(*b) <= eps) {
            return Err(Error::Degenerate("coincident points"));
        }
    }
    Ok(())
}

fn wedge_points<T: Real>(points: &[EuclideanVector<T>]) -> Multivector<T> {
    points
        .iter()
        .map(|p| ConformalPoint::embed(*p).into_multivector())
        .reduce(|acc, p| acc.wedge(&p))
        .unwrap_or_else(basis::one)
}

/// `A1 ∧ A2 ∧ A3`. Collinear points give the line through them.
pub fn circle_through<T: Real>(
    a1: EuclideanVector<T>,
    a2: EuclideanVector<T>,
    a3: EuclideanVector<T>,
    tol: Tolerance<T>,
) -> Result<CircleOrLine<T>> {
    reject_repeats(&[a1, a2, a3], tol)?;
    Ok(CircleOrLine(wedge_points(&[a1, a2, a3])))
}

/// `A1 ∧ A2 ∧ A3 ∧ A4`. Coplanar points on a circle give a plane.
pub fn sphere_through<T: Real>(points: [EuclideanVector<T>; 4], tol: Tolerance<T>) -> Result<SphereOrPlane<T>> {
    reject_repeats(&points, tol)?;
    let v = wedge_points(&points);
    let scale = geometric_scale(&points);
    if v.max_abs() <= tol.scaled(scale) {
        return Err(Error::Degenerate("four points lie on one circle or line"));
    }
    Ok(SphereOrPlane(v))
}

/// `|A1 ∧ A2 ∧ A3 ∧ n| < ε·scale`.
pub fn is_collinear<T: Real>(
    a1: EuclideanVector<T>,
    a2: EuclideanVector<T>,
    a3: EuclideanVector<T>,
    tol: Tolerance<T>,
) -> bool {
    let w = wedge_points(&[a1, a2, a3]).wedge(&basis::n());
    w.max_abs() < tol.scaled(geometric_scale(&[a1, a2, a3]))
}

/// `|A1 ∧ A2 ∧ A3 ∧ A4 ∧ n| < ε·scale`.
pub fn is_coplanar<T: Real>(points: [EuclideanVector<T>; 4], tol: Tolerance<T>) -> bool {
    let w = wedge_points(&points).wedge(&basis::n());
    w.max_abs() < tol.scaled(geometric_scale(&points))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleParams<T> {
    pub center: EuclideanVector<T>,
    pub radius: T,
    /// Unit bivector of the circle's plane.
    pub plane: EuclideanBivector<T>,
}

impl<T: Real> CircleParams<T> {
    pub fn normal(&self) -> EuclideanVector<T> {
        self.plane.normal()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereParams<T> {
    pub center: EuclideanVector<T>,
    pub radius: T,
}

/// Squared radius `±<V V>_0 / <(V∧n)²>_0`, negated for circles.
fn squared_radius<T: Real>(v: &Multivector<T>, w: &Multivector<T>, sign: T) -> T {
    sign * v.scalar_product(v) / w.scalar_product(w)
}

/// Center, radius and plane of a circle blade.
pub fn circle_params<T: Real>(v: &CircleOrLine<T>, tol: Tolerance<T>) -> Result<CircleParams<T>> {
    let v = &v.0;
    if is_flat(v, tol) {
        return Err(Error::LineNotCircle);
    }
    let w = v.wedge(&basis::n());
    let r2 = squared_radius(v, &w, -T::one());
    check_radius("circle", r2, tol)?;
    let radius = r2.max(T::zero()).sqrt();

    // V ∧ n is the plane of the circle; its i_k N coefficients carry the
    // plane bivector and its dual is the normal plus offset.
    let plane = EuclideanBivector::new(w.q_nn.v[0].re, w.q_nn.v[1].re, w.q_nn.v[2].re)
        .normalized()
        .ok_or(Error::Degenerate("circle has no plane"))?;
    let dual_plane = w.dual();
    let normal_raw = EuclideanVector::from_multivector(&dual_plane);
    let len = normal_raw.norm();
    let normal = normal_raw.scale(len.recip());
    let offset = dual_plane.n_coefficient() / len;

    // Complete a sphere with a point off the plane; the circle's center is
    // the foot of that sphere's center on the plane.
    let off = normal.scale(offset + radius.max(T::one()));
    let sphere = SphereOrPlane(v.wedge(ConformalPoint::embed(off).as_multivector()));
    let s = sphere_params(&sphere, tol)?;
    let center = s.center - normal.scale(s.center.dot(normal) - offset);
    Ok(CircleParams { center, radius, plane })
}

fn check_radius<T: Real>(what: &'static str, r2: T, tol: Tolerance<T>) -> Result<()> {
    if !r2.is_finite() {
        return Err(Error::Degenerate("non-finite radius"));
    }
    if r2 < -tol.eps * r2.abs().max(T::one()) {
        return Err(Error::Imaginary(what, r2.as_f64()));
    }
    Ok(())
}

/// Center and radius of a sphere blade.
pub fn sphere_params<T: Real>(v: &SphereOrPlane<T>, tol: Tolerance<T>) -> Result<SphereParams<T>> {
    let v = &v.0;
    if is_flat(v, tol) {
        return Err(Error::PlaneNotSphere);
    }
    let w = v.wedge(&basis::n());
    let r2 = squared_radius(v, &w, T::one());
    check_radius("sphere", r2, tol)?;

    // Scaled so that |V ∧ n| = 1, the dual of V is the dual sphere with unit
    // nbar coefficient (up to sign).
    let wn = w.scalar_product(&w.reverse()).abs().sqrt();
    let mut sigma = v.scale(wn.recip()).dual();
    if sigma.nbar_coefficient() < T::zero() {
        sigma = -sigma;
    }
    let conformal_center = sigma + basis::n::<T>().scale(r2 * T::lit(0.5));
    Ok(SphereParams {
        center: extract_point(&conformal_center)?,
        radius: r2.max(T::zero()).sqrt(),
    })
}

/// Sphere blade with the given center and radius.
pub fn sphere_from_center_radius<T: Real>(center: EuclideanVector<T>, radius: T) -> Result<SphereOrPlane<T>> {
    if radius <= T::zero() || !radius.is_finite() {
        return Err(Error::Domain("sphere radius must be positive"));
    }
    // Dual sphere σ = C - ½r² n; the sphere blade is its dual (up to scale).
    let c = ConformalPoint::embed(center).into_multivector();
    let sigma = c - basis::n::<T>().scale(radius * radius * T::lit(0.5));
    Ok(SphereOrPlane(-sigma.dual()))
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
    fn unit_circle_in_xy() {
        let c = circle_through(v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(-1.0, 0.0, 0.0), tol()).unwrap();
        let p = circle_params(&c, tol()).unwrap();
        assert!(p.center.max_abs() < 1e-12);
        assert!((p.radius - 1.0).abs() < 1e-12);
        assert!((p.normal().z.abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn offset_circle() {
        let c = circle_through(v(3.0, 1.0, 2.0), v(1.0, 3.0, 2.0), v(1.0, 1.0, 4.0), tol()).unwrap();
        let p = circle_params(&c, tol()).unwrap();
        for q in [v(3.0, 1.0, 2.0), v(1.0, 3.0, 2.0), v(1.0, 1.0, 4.0)] {
            assert!((q.distance(p.center) - p.radius).abs() < 1e-9);
            assert!((q - p.center).dot(p.normal()).abs() < 1e-9);
        }
    }

    #[test]
    fn collinear_is_line() {
        let c = circle_through(v(0.0, 0.0, 0.0), v(1.0, 1.0, 1.0), v(2.0, 2.0, 2.0), tol()).unwrap();
        assert!(c.is_line(tol()));
        assert_eq!(circle_params(&c, tol()), Err(Error::LineNotCircle));
        assert!(is_collinear(v(0.0, 0.0, 0.0), v(1.0, 1.0, 1.0), v(2.0, 2.0, 2.0), tol()));
        assert!(!is_collinear(v(0.0, 0.0, 0.0), v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), tol()));
    }

    #[test]
    fn coincident_points_rejected() {
        let r = circle_through(v(1.0, 0.0, 0.0), v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), tol());
        assert!(matches!(r, Err(Error::Degenerate(_))));
    }

    #[test]
    fn unit_sphere() {
        let pts = [v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(-1.0, 0.0, 0.0), v(0.0, 0.0, 1.0)];
        let s = sphere_params(&sphere_through(pts, tol()).unwrap(), tol()).unwrap();
        assert!(s.center.max_abs() < 1e-12);
        assert!((s.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn offset_sphere_and_center_form() {
        let c = v(1.0, -2.0, 0.5);
        let pts = [c + v(2.0, 0.0, 0.0), c + v(0.0, 2.0, 0.0), c - v(2.0, 0.0, 0.0), c + v(0.0, 0.0, 2.0)];
        let a = sphere_through(pts, tol()).unwrap();
        let s = sphere_params(&a, tol()).unwrap();
        assert!(s.center.distance(c) < 1e-9);
        assert!((s.radius - 2.0).abs() < 1e-9);
        let b = sphere_from_center_radius(c, 2.0).unwrap();
        let sb = sphere_params(&b, tol()).unwrap();
        assert!(sb.center.distance(c) < 1e-12 && (sb.radius - 2.0).abs() < 1e-12);
        // Same blade up to scale.
        let ratio = a.0.scalar_product(&b.0) / b.0.scalar_product(&b.0);
        assert!((a.0 - b.0.scale(ratio)).max_abs() < 1e-9 * a.0.max_abs());
        for p in pts {
            let x = ConformalPoint::embed(p).into_multivector();
            assert!(x.wedge(&b.0).max_abs() < 1e-9);
        }
    }

    #[test]
    fn coplanar_is_plane() {
        let pts = [v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(-1.0, 0.0, 0.0), v(0.0, -2.0, 0.0)];
        let s = sphere_through(pts, tol()).unwrap();
        assert!(s.is_plane(tol()));
        assert!(is_coplanar(pts, tol()));
        assert_eq!(sphere_params(&s, tol()), Err(Error::PlaneNotSphere));
        let concyclic = [v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(-1.0, 0.0, 0.0), v(0.0, -1.0, 0.0)];
        assert!(matches!(sphere_through(concyclic, tol()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn bad_radius() {
        assert!(sphere_from_center_radius(v(0.0, 0.0, 0.0), 0.0).is_err());
        assert!(sphere_from_center_radius(v(0.0, 0.0, 0.0), -1.0).is_err());
    }
}
