//! Geometric entities as blades: points, point pairs, lines, circles,
//! spheres, and the extraction of their Euclidean parameters.

mod line;
mod pair;
mod point;
mod round;

pub use line::{flat_point_position, line_params, line_through, point_line_distance, LineParams};
pub use pair::{
    decompose_point_pair, decompose_point_pair_scaled, pair_coefficients, PairAnalysis,
    PairCoefficients, PairDecomposition, PointPair,
};
pub use point::{extract_point, point_distance, ConformalPoint};
pub use round::{
    circle_params, circle_through, is_collinear, is_coplanar, sphere_from_center_radius,
    sphere_params, sphere_through, CircleOrLine, CircleParams, SphereOrPlane, SphereParams,
};

use crate::scalar::Real;
use crate::vector::EuclideanVector;

/// Largest absolute coordinate among `points`, at least one.
pub fn geometric_scale<T: Real>(points: &[EuclideanVector<T>]) -> T {
    points.iter().fold(T::one(), |s, p| s.max(p.max_abs()))
}
