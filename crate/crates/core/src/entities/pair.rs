use super::point::ConformalPoint;
use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar, Tolerance};
use crate::transforms::make_translator;
use crate::vector::EuclideanVector;

/// Grade-2 blade `A ∧ B` of two conformal points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointPair<T: Scalar>(Multivector<T>);

impl<T: Real> PointPair<T> {
    pub fn from_points(a: &ConformalPoint<T>, b: &ConformalPoint<T>) -> Self {
        Self(a.as_multivector().wedge(b.as_multivector()))
    }

    /// Wraps `m` after checking that only grade 2 is populated.
    pub fn from_multivector(m: Multivector<T>) -> Result<Self> {
        let tol = Tolerance::<T>::default().eps * m.max_abs().max(T::one());
        match m.single_grade(tol) {
            Some(2) => Ok(Self(m.grade_part(2))),
            Some(g) => Err(Error::WrongGrade { expected: 2, found: format!("grade {g}") }),
            None if m.max_abs() <= tol => Err(Error::Degenerate("zero point pair")),
            None => Err(Error::WrongGrade { expected: 2, found: "mixed grades".into() }),
        }
    }

    pub fn as_multivector(&self) -> &Multivector<T> {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector<T> {
        self.0
    }
}

/// For `P = λ A ∧ B`, `P = λ (a∧b - ½ v∧n + u∧nbar + ½γ N)` with
/// `u = a - b`, `v = a²b - b²a`, `γ = a² - b²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairCoefficients<T> {
    pub u: EuclideanVector<T>,
    pub v: EuclideanVector<T>,
    pub gamma: T,
}

pub fn pair_coefficients<T: Real>(p: &Multivector<T>) -> PairCoefficients<T> {
    let two = T::lit(2.0);
    PairCoefficients {
        u: EuclideanVector::from_array(p.vector_nbar_part()),
        v: EuclideanVector::from_array(p.vector_n_part()).scale(-two),
        gamma: p.nn_coefficient() * two,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PairDecomposition<T> {
    /// Two distinct real points. The order is not tied to the order of the
    /// points the pair was built from.
    Two([EuclideanVector<T>; 2]),
    /// Double point: a tangency.
    Tangent(EuclideanVector<T>),
    /// The pair is imaginary; it has no real points.
    Imaginary,
}

impl<T> PairDecomposition<T> {
    pub fn count(&self) -> usize {
        match self {
            Self::Two(_) => 2,
            Self::Tangent(_) => 1,
            Self::Imaginary => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairAnalysis<T> {
    pub decomposition: PairDecomposition<T>,
    /// Discriminant `σ² - u²v²`, evaluated after scaling so that `|u| = 1`
    /// and, when `γ` was too small, after shifting the pair.
    pub discriminant: T,
    /// Offset used to move the pair away from `γ = 0`; zero if unused.
    pub shift: EuclideanVector<T>,
    /// Length scale used for the tangency threshold.
    pub scale: T,
}

/// Splits a point pair into its Euclidean points.
///
/// The length scale for thresholds is estimated from the pair itself.
pub fn decompose_point_pair<T: Real>(p: &Multivector<T>, tol: Tolerance<T>) -> Result<PairAnalysis<T>> {
    decompose_point_pair_scaled(p, tol, None)
}

/// As [`decompose_point_pair`], with an optional length scale hint (for
/// example the extent of the construction the pair came from).
pub fn decompose_point_pair_scaled<T: Real>(
    p: &Multivector<T>,
    tol: Tolerance<T>,
    scale_hint: Option<T>,
) -> Result<PairAnalysis<T>> {
    let raw = pair_coefficients(p);
    let lambda = raw.u.norm();
    let size = p.max_abs();
    if !lambda.is_finite() || lambda <= tol.eps * size || lambda == T::zero() {
        return Err(if raw.v.max_abs() <= tol.eps * size.max(T::one()) {
            Error::Degenerate("point pair with u = 0 and v = 0")
        } else {
            Error::Degenerate("flat point, not a point pair")
        });
    }
    let mut pair = p.scale(lambda.recip());
    let mut c = pair_coefficients(&pair);
    let scale = scale_hint
        .unwrap_or_else(|| c.v.norm().sqrt())
        .max(T::one());

    // The points come out as (a²u + v)/γ, so γ must not be small. Shifting
    // by t along the dominant axis of u changes γ by 2 t·u.
    let mut shift = EuclideanVector::zero();
    if c.gamma.abs() < scale {
        let u = c.u.to_array();
        let k = (0..3).fold(0, |k, j| if u[j].abs() > u[k].abs() { j } else { k });
        let toward = if c.gamma * u[k] < T::zero() { -T::one() } else { T::one() };
        let mut t = [T::zero(); 3];
        t[k] = toward * scale;
        shift = EuclideanVector::from_array(t);
        pair = make_translator(shift).apply(&pair);
        c = pair_coefficients(&pair);
    }

    let u2 = c.u.norm_squared();
    let sigma = c.gamma * c.gamma * T::lit(0.5) - c.u.dot(c.v);
    let disc = sigma * sigma - u2 * c.v.norm_squared();
    let s2 = scale * scale;
    let threshold = tol.eps * s2 * s2;
    let point = |a2: T| (c.u.scale(a2) + c.v).scale(c.gamma.recip()) - shift;

    let decomposition = if disc < -threshold {
        PairDecomposition::Imaginary
    } else if disc <= threshold {
        PairDecomposition::Tangent(point(sigma / u2))
    } else {
        let rho = disc.sqrt();
        PairDecomposition::Two([point((sigma + rho) / u2), point((sigma - rho) / u2)])
    };
    Ok(PairAnalysis { decomposition, discriminant: disc, shift, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis;

    fn v(x: f64, y: f64, z: f64) -> EuclideanVector<f64> {
        EuclideanVector::new(x, y, z)
    }

    fn pair(a: EuclideanVector<f64>, b: EuclideanVector<f64>) -> Multivector<f64> {
        *PointPair::from_points(&ConformalPoint::embed(a), &ConformalPoint::embed(b)).as_multivector()
    }

    fn assert_points(got: PairDecomposition<f64>, a: EuclideanVector<f64>, b: EuclideanVector<f64>) {
        let PairDecomposition::Two([p, q]) = got else {
            panic!("expected two points, got {got:?}");
        };
        let direct = p.distance(a) < 1e-9 && q.distance(b) < 1e-9;
        let swapped = p.distance(b) < 1e-9 && q.distance(a) < 1e-9;
        assert!(direct || swapped, "{p:?} {q:?}");
    }

    #[test]
    fn coefficients_match_construction() {
        let (a, b) = (v(1.0, 2.0, 3.0), v(-1.0, 0.5, 2.0));
        let c = pair_coefficients(&pair(a, b));
        assert!((c.u - (a - b)).max_abs() < 1e-12);
        let vv = b.scale(a.norm_squared()) - a.scale(b.norm_squared());
        assert!((c.v - vv).max_abs() < 1e-12);
        assert!((c.gamma - (a.norm_squared() - b.norm_squared())).abs() < 1e-12);
    }

    #[test]
    fn recovers_generic_pair() {
        let (a, b) = (v(1.0, 2.0, 3.0), v(-1.0, 0.5, 2.0));
        let r = decompose_point_pair(&pair(a, b).scale(-3.5), Tolerance::default()).unwrap();
        assert_points(r.decomposition, a, b);
    }

    #[test]
    fn recovers_pair_on_origin_sphere() {
        let (a, b) = (v(1.0, 0.0, 0.0), v(-1.0, 0.0, 0.0));
        let r = decompose_point_pair(&pair(a, b), Tolerance::default()).unwrap();
        assert_ne!(r.shift, v(0.0, 0.0, 0.0));
        assert_points(r.decomposition, a, b);
        let (a, b) = (v(0.0, 3.0, 4.0), v(5.0, 0.0, 0.0));
        assert_points(decompose_point_pair(&pair(a, b), Tolerance::default()).unwrap().decomposition, a, b);
    }

    #[test]
    fn rejects_flat_point_and_zero() {
        let flat = ConformalPoint::embed(v(1.0, 2.0, 0.0)).as_multivector().wedge(&basis::n());
        assert!(matches!(decompose_point_pair(&flat, Tolerance::default()), Err(Error::Degenerate(_))));
        assert!(decompose_point_pair(&Multivector::<f64>::zero(), Tolerance::default()).is_err());
    }

    #[test]
    fn grade_check() {
        assert!(PointPair::from_multivector(basis::e1::<f64>()).is_err());
        assert!(PointPair::from_multivector(pair(v(0.0, 0.0, 0.0), v(1.0, 0.0, 0.0))).is_ok());
    }
}
