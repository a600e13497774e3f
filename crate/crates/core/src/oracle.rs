//! Independent reference implementations for tests.
//!
//! [`BladeAlgebra`] is a brute-force Clifford algebra on the orthonormal
//! basis `e0..e4` with `e0² = -1`, indexed by bitmask. It shares no code
//! with the block-structured kernel, so it can check every product entry.
//! [`euclid`] holds plain linear-algebra answers for the geometric queries.

use crate::algebra::{Multivector, SLOTS};
use crate::scalar::Scalar;

const DIM: usize = 5;
const BLADES: usize = 1 << DIM;

/// Multivector on the orthonormal basis; bit `k` of an index stands for `ek`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BladeAlgebra<T> {
    pub c: [T; BLADES],
}

fn metric<T: Scalar>(k: usize) -> T {
    if k == 0 {
        -T::one()
    } else {
        T::one()
    }
}

/// Sign from moving the factors of `b` past those of `a` into canonical order.
fn reorder_sign(a: usize, b: usize) -> bool {
    let mut swaps = 0;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps % 2 == 1
}

impl<T: Scalar> BladeAlgebra<T> {
    pub fn zero() -> Self {
        Self { c: [T::zero(); BLADES] }
    }

    pub fn scalar(x: T) -> Self {
        let mut m = Self::zero();
        m.c[0] = x;
        m
    }

    /// Basis vector `ek`, `k` in `0..5`.
    pub fn e(k: usize) -> Self {
        let mut m = Self::zero();
        m.c[1 << k] = T::one();
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = *self;
        for k in 0..BLADES {
            m.c[k] = m.c[k] + o.c[k];
        }
        m
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-T::one()))
    }

    pub fn scale(&self, s: T) -> Self {
        let mut m = *self;
        for x in m.c.iter_mut() {
            *x = *x * s;
        }
        m
    }

    fn product_by(&self, o: &Self, keep: impl Fn(usize, usize) -> bool) -> Self {
        let mut out = Self::zero();
        for a in 0..BLADES {
            if self.c[a] == T::zero() {
                continue;
            }
            for b in 0..BLADES {
                if o.c[b] == T::zero() || !keep(a, b) {
                    continue;
                }
                let mut coef = self.c[a] * o.c[b];
                if reorder_sign(a, b) {
                    coef = -coef;
                }
                let common = a & b;
                for k in 0..DIM {
                    if common & (1 << k) != 0 {
                        coef = coef * metric::<T>(k);
                    }
                }
                let idx = a ^ b;
                out.c[idx] = out.c[idx] + coef;
            }
        }
        out
    }

    pub fn gp(&self, o: &Self) -> Self {
        self.product_by(o, |_, _| true)
    }

    pub fn wedge(&self, o: &Self) -> Self {
        self.product_by(o, |a, b| a & b == 0)
    }

    /// Left contraction: keeps terms of grade `grade(b) - grade(a)`.
    pub fn left_contract(&self, o: &Self) -> Self {
        self.product_by(o, |a, b| a & b == a)
    }

    pub fn right_contract(&self, o: &Self) -> Self {
        self.product_by(o, |a, b| a & b == b)
    }

    pub fn grade(&self, g: usize) -> Self {
        let mut m = *self;
        for (k, x) in m.c.iter_mut().enumerate() {
            if k.count_ones() as usize != g {
                *x = T::zero();
            }
        }
        m
    }

    pub fn reverse(&self) -> Self {
        let mut m = *self;
        for (k, x) in m.c.iter_mut().enumerate() {
            let g = k.count_ones();
            if (g * g.saturating_sub(1) / 2) % 2 == 1 {
                *x = -*x;
            }
        }
        m
    }

    pub fn n() -> Self {
        Self::e(0).add(&Self::e(4))
    }

    pub fn nbar() -> Self {
        let two = T::one() + T::one();
        Self::e(0).sub(&Self::e(4)).scale(T::one() / two)
    }

    pub fn big_n() -> Self {
        Self::n().wedge(&Self::nbar())
    }

    /// `i = e1 e2 e3`.
    pub fn euclidean_pseudoscalar() -> Self {
        Self::e(1).gp(&Self::e(2)).gp(&Self::e(3))
    }

    /// `I = i N`.
    pub fn pseudoscalar() -> Self {
        Self::euclidean_pseudoscalar().gp(&Self::big_n())
    }

    /// Basis element of each kernel slot, built from oracle products.
    pub fn slot_elements() -> [Self; SLOTS] {
        let (e1, e2, e3) = (Self::e(1), Self::e(2), Self::e(3));
        let i = Self::pseudoscalar();
        let units = [e2.gp(&e3), e1.gp(&e3), e1.gp(&e2)];
        let blocks = [Self::scalar(T::one()), Self::n(), Self::nbar(), Self::big_n()];
        let mut out = [Self::zero(); SLOTS];
        for (b, block) in blocks.iter().enumerate() {
            let parts = [
                Self::scalar(T::one()),
                units[0],
                units[1],
                units[2],
            ];
            for (p, unit) in parts.iter().enumerate() {
                out[b * 8 + 2 * p] = unit.gp(block);
                out[b * 8 + 2 * p + 1] = i.gp(unit).gp(block);
            }
        }
        out
    }

    /// Maps a kernel multivector into the orthonormal basis.
    pub fn from_kernel(m: &Multivector<T>) -> Self {
        let elements = Self::slot_elements();
        m.to_array()
            .iter()
            .zip(elements.iter())
            .fold(Self::zero(), |acc, (c, e)| acc.add(&e.scale(*c)))
    }
}

/// Plain Euclidean reference computations in `f64`.
pub mod euclid {
    pub type V = [f64; 3];

    pub fn sub(a: V, b: V) -> V {
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    }

    pub fn add(a: V, b: V) -> V {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
    }

    pub fn scale(a: V, s: f64) -> V {
        [a[0] * s, a[1] * s, a[2] * s]
    }

    pub fn dot(a: V, b: V) -> f64 {
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    pub fn cross(a: V, b: V) -> V {
        [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    }

    pub fn norm(a: V) -> f64 {
        dot(a, a).sqrt()
    }

    pub fn dist(a: V, b: V) -> f64 {
        norm(sub(a, b))
    }

    /// Solves a 3x3 system by Cramer's rule.
    pub fn solve3(m: [V; 3], r: V) -> Option<V> {
        let det = dot(m[0], cross(m[1], m[2]));
        if det.abs() < 1e-300 {
            return None;
        }
        // Rows of m are the equations.
        let cols = [[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]];
        let d = dot(cols[0], cross(cols[1], cols[2]));
        let x = dot(r, cross(cols[1], cols[2])) / d;
        let y = dot(cols[0], cross(r, cols[2])) / d;
        let z = dot(cols[0], cross(cols[1], r)) / d;
        Some([x, y, z])
    }

    /// Circumcircle of a triangle: center, radius, unit normal.
    pub fn circumcircle(a: V, b: V, c: V) -> Option<(V, f64, V)> {
        let (ab, ac) = (sub(b, a), sub(c, a));
        let nrm = cross(ab, ac);
        let n2 = dot(nrm, nrm);
        if n2 < 1e-24 {
            return None;
        }
        let t = add(scale(cross(nrm, ab), dot(ac, ac)), scale(cross(ac, nrm), dot(ab, ab)));
        let center = add(a, scale(t, 0.5 / n2));
        Some((center, dist(center, a), scale(nrm, 1.0 / n2.sqrt())))
    }

    /// Sphere through four points: center and radius.
    pub fn circumsphere(p: [V; 4]) -> Option<(V, f64)> {
        let rows = [sub(p[1], p[0]), sub(p[2], p[0]), sub(p[3], p[0])];
        let rhs = [1, 2, 3].map(|k| 0.5 * (dot(p[k], p[k]) - dot(p[0], p[0])));
        let center = solve3(rows, rhs)?;
        Some((center, dist(center, p[0])))
    }

    /// Half-chord squared `r² - d²` of a line through `a` along `u` and a
    /// sphere, with the points at parameters `t0 ± sqrt(h²)/|u|`.
    pub fn line_sphere(a: V, u: V, center: V, radius: f64) -> (f64, Vec<V>) {
        let un = scale(u, 1.0 / norm(u));
        let t0 = dot(sub(center, a), un);
        let foot = add(a, scale(un, t0));
        let h2 = radius * radius - dot(sub(center, foot), sub(center, foot));
        let pts = if h2 > 0.0 {
            let h = h2.sqrt();
            vec![add(foot, scale(un, -h)), add(foot, scale(un, h))]
        } else if h2 == 0.0 {
            vec![foot]
        } else {
            vec![]
        };
        (h2, pts)
    }

    /// Distance from `x` to the line through `a` along `u`.
    pub fn point_line(x: V, a: V, u: V) -> f64 {
        norm(cross(sub(x, a), u)) / norm(u)
    }

    /// Rotation of `x` about the axis `axis` through `center` by `angle`
    /// (right-handed), via Rodrigues' formula.
    pub fn rotate(x: V, axis: V, angle: f64, center: V) -> V {
        let k = scale(axis, 1.0 / norm(axis));
        let p = sub(x, center);
        let (s, c) = angle.sin_cos();
        let r = add(add(scale(p, c), scale(cross(k, p), s)), scale(k, dot(k, p) * (1.0 - c)));
        add(r, center)
    }
}
