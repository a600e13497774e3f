//! Join, meet and projection of blades, and the sphere–line intersection
//! built on them.

use crate::algebra::{basis, Multivector};
use crate::entities::{
    decompose_point_pair_scaled, line_params, sphere_params, CircleOrLine, PairDecomposition, SphereOrPlane,
};
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar, Tolerance};
use crate::vector::EuclideanVector;

fn blade_grade<T: Real>(m: &Multivector<T>, tol: Tolerance<T>) -> Result<usize> {
    let size = m.max_abs();
    if size == T::zero() {
        return Err(Error::Degenerate("zero blade"));
    }
    m.single_grade(tol.eps * size).ok_or(Error::WrongGrade {
        expected: 0,
        found: "mixed grades".into(),
    })
}

/// Basis vectors `e0 = ½n + nbar, e1, e2, e3, e4 = ½n - nbar` used to probe
/// a blade for its factors.
fn probe_vectors<T: Real>() -> [Multivector<T>; 5] {
    let half_n = basis::n::<T>().scale(T::lit(0.5));
    [half_n + basis::nbar(), basis::e1(), basis::e2(), basis::e3(), half_n - basis::nbar()]
}

/// Vectors spanning the subspace of a `k`-blade: `X ⌋ B` for every wedge `X`
/// of `k - 1` probe vectors.
fn spanning_vectors<T: Real>(b: &Multivector<T>, k: usize) -> Vec<Multivector<T>> {
    let probes = probe_vectors::<T>();
    let mut out = Vec::new();
    for mask in 0u32..32 {
        if mask.count_ones() as usize + 1 != k {
            continue;
        }
        let x = (0..5)
            .filter(|j| mask & (1 << j) != 0)
            .fold(basis::one::<T>(), |acc, j| acc.wedge(&probes[j]));
        let f = x.left_contract(b);
        if f.max_abs() > T::zero() {
            out.push(f);
        }
    }
    out
}

/// Smallest blade containing both `a` and `b`.
///
/// Returns `a ∧ b` when that is nonzero; otherwise extends `a` by factors of
/// `b` that are not already in it.
pub fn join<T: Real>(a: &Multivector<T>, b: &Multivector<T>, tol: Tolerance<T>) -> Result<Multivector<T>> {
    let ga = blade_grade(a, tol)?;
    let gb = blade_grade(b, tol)?;
    let a = a.scale(a.max_abs().recip());
    let b = b.scale(b.max_abs().recip());
    let direct = a.wedge(&b);
    if direct.max_abs() > tol.eps {
        return Ok(direct);
    }
    if gb == 0 {
        return Ok(a);
    }
    if ga == 0 {
        return Ok(b);
    }
    let mut j = a;
    let mut candidates: Vec<_> = spanning_vectors(&b, gb)
        .into_iter()
        .map(|f| f.scale(f.max_abs().recip()))
        .collect();
    loop {
        let best = candidates
            .iter()
            .enumerate()
            .map(|(i, f)| (i, j.wedge(f)))
            .max_by(|x, y| x.1.max_abs().partial_cmp(&y.1.max_abs()).unwrap_or(std::cmp::Ordering::Equal));
        match best {
            Some((i, w)) if w.max_abs() > tol.eps * j.max_abs() => {
                j = w.scale(w.max_abs().recip());
                candidates.swap_remove(i);
            }
            _ => return Ok(j),
        }
    }
}

/// `(b ⌋ J⁻¹) ⌋ a` for a given invertible blade `J` containing both.
pub fn meet_within<T: Real>(
    a: &Multivector<T>,
    b: &Multivector<T>,
    j: &Multivector<T>,
    tol: Tolerance<T>,
) -> Result<Multivector<T>> {
    let j_inv = j.blade_inverse_with(tol)?;
    Ok(b.left_contract(&j_inv).left_contract(a))
}

/// Largest common sub-blade of `a` and `b`, relative to their join.
pub fn meet<T: Real>(a: &Multivector<T>, b: &Multivector<T>, tol: Tolerance<T>) -> Result<Multivector<T>> {
    let j = join(a, b, tol)?;
    meet_within(a, b, &j, tol)
}

/// `(m ⌋ B) ⌋ B⁻¹`: the part of `m` lying in blade `b`.
pub fn project<T: Real>(m: &Multivector<T>, b: &Multivector<T>, tol: Tolerance<T>) -> Result<Multivector<T>> {
    Ok(m.left_contract(b).left_contract(&b.blade_inverse_with(tol)?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SphereLineIntersection<T: Scalar> {
    /// Points ordered by increasing parameter along the line direction.
    pub points: PairDecomposition<T>,
    /// The grade-2 meet the points were read from.
    pub pair: Multivector<T>,
}

/// Meets a sphere with a line, classifying the result as two points, a
/// tangency or no real intersection.
pub fn sphere_line_intersect<T: Real>(
    sphere: &SphereOrPlane<T>,
    line: &CircleOrLine<T>,
    tol: Tolerance<T>,
) -> Result<SphereLineIntersection<T>> {
    let s = sphere_params(sphere, tol)?;
    let l = line_params(line, tol)?;
    let scale = T::one().max(s.center.max_abs()).max(s.radius).max(l.base.max_abs());

    let sphere_n = sphere.0.scale(sphere.0.max_abs().recip());
    let line_n = line.0.scale(line.0.max_abs().recip());
    let pair = meet_within(&sphere_n, &line_n, &basis::pseudoscalar(), tol)?.grade_part(2);
    let analysis = decompose_point_pair_scaled(&pair, tol, Some(scale))?;

    let points = match analysis.decomposition {
        PairDecomposition::Two([p, q]) => {
            if l.parameter_of(p) <= l.parameter_of(q) {
                PairDecomposition::Two([p, q])
            } else {
                PairDecomposition::Two([q, p])
            }
        }
        PairDecomposition::Tangent(p) => PairDecomposition::Tangent(snap_to_line(p, &l)),
        PairDecomposition::Imaginary => PairDecomposition::Imaginary,
    };
    Ok(SphereLineIntersection { points, pair })
}

fn snap_to_line<T: Real>(p: EuclideanVector<T>, l: &crate::entities::LineParams<T>) -> EuclideanVector<T> {
    l.point_at(l.parameter_of(p))
}
