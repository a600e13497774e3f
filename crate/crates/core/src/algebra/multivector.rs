use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::complex::ComplexScalar;
use super::quat::ComplexQuat;
use crate::scalar::Scalar;

/// Number of real coefficients of a Cl(4,1) multivector.
pub const SLOTS: usize = 32;

/// Grade of the basis element stored in each of the 32 slots.
///
/// Block order is `1, n, nbar, N`; inside a block the slot order is
/// `s.re, s.im, v1.re, v1.im, v2.re, v2.im, v3.re, v3.im`, where `.im`
/// means "times the pseudoscalar `I`".
pub const SLOT_GRADES: [u8; SLOTS] = [
    0, 5, 2, 3, 2, 3, 2, 3, // 1, I, ik, I ik
    1, 4, 3, 2, 3, 2, 3, 2, // n, I n, ik n, I ik n
    1, 4, 3, 2, 3, 2, 3, 2, // nbar, I nbar, ik nbar, I ik nbar
    2, 3, 4, 1, 4, 1, 4, 1, // N, I N, ik N, I ik N
];

/// Textual label of each slot's basis element.
pub const SLOT_LABELS: [&str; SLOTS] = [
    "1", "I", "i1", "Ii1", "i2", "Ii2", "i3", "Ii3", //
    "n", "In", "i1n", "e1n", "i2n", "e2n", "i3n", "e3n", //
    "nbar", "Inbar", "i1nbar", "e1nbar", "i2nbar", "e2nbar", "i3nbar", "e3nbar", //
    "N", "i", "i1N", "e1", "i2N", "e2", "i3N", "e3",
];

/// `label element = sign * slot element`. Only the `I ik` slots of the
/// `n`, `nbar` and `N` blocks are labelled by a Euclidean vector factor and
/// may differ in sign from the stored element.
pub const SLOT_LABEL_SIGNS: [i8; SLOTS] = [
    1, 1, 1, 1, 1, 1, 1, 1, //
    1, 1, 1, 1, 1, -1, 1, 1, //
    1, 1, 1, -1, 1, 1, 1, -1, //
    1, 1, 1, -1, 1, 1, 1, -1,
];

/// `I ik N = VECTOR_SIGNS[k] * ek`; the same signs relate `I ik` to `ek N`
/// and `I ik nbar` to `ek nbar`, while `I ik n = -VECTOR_SIGNS[k] * ek n`.
pub(crate) const VECTOR_SIGNS: [i8; 3] = [-1, 1, -1];

pub(crate) fn signed<T: Scalar>(x: T, sign: i8) -> T {
    if sign < 0 {
        -x
    } else {
        x
    }
}

/// A general element of Cl(4,1), stored as `q + qn n + qnbar nbar + qnn N`
/// with four complex quaternion blocks.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector<T> {
    /// Block multiplying 1.
    pub q: ComplexQuat<T>,
    /// Block multiplying the infinity vector `n`.
    pub q_n: ComplexQuat<T>,
    /// Block multiplying the origin vector `nbar`.
    pub q_nbar: ComplexQuat<T>,
    /// Block multiplying `N = n ∧ nbar`.
    pub q_nn: ComplexQuat<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn from_blocks(
        q: ComplexQuat<T>,
        q_n: ComplexQuat<T>,
        q_nbar: ComplexQuat<T>,
        q_nn: ComplexQuat<T>,
    ) -> Self {
        Self { q, q_n, q_nbar, q_nn }
    }

    pub fn zero() -> Self {
        let z = ComplexQuat::zero();
        Self::from_blocks(z, z, z, z)
    }

    pub fn scalar(alpha: T) -> Self {
        let mut m = Self::zero();
        m.q.s.re = alpha;
        m
    }

    /// Multivector with a single unit coefficient in `slot`.
    pub fn basis_slot(slot: usize) -> Self {
        let mut c = [T::zero(); SLOTS];
        c[slot] = T::one();
        Self::from_array(c)
    }

    pub fn from_array(c: [T; SLOTS]) -> Self {
        let block = |b: usize| {
            let mut r = [T::zero(); 8];
            r.copy_from_slice(&c[b * 8..b * 8 + 8]);
            ComplexQuat::from_reals(r)
        };
        Self::from_blocks(block(0), block(1), block(2), block(3))
    }

    /// The 32 coefficients in canonical slot order.
    pub fn to_array(&self) -> [T; SLOTS] {
        let mut c = [T::zero(); SLOTS];
        for (b, q) in self.blocks().iter().enumerate() {
            c[b * 8..b * 8 + 8].copy_from_slice(&q.to_reals());
        }
        c
    }

    pub fn blocks(&self) -> [ComplexQuat<T>; 4] {
        [self.q, self.q_n, self.q_nbar, self.q_nn]
    }

    pub fn map_blocks(self, mut f: impl FnMut(ComplexQuat<T>) -> ComplexQuat<T>) -> Self {
        Self::from_blocks(f(self.q), f(self.q_n), f(self.q_nbar), f(self.q_nn))
    }

    /// Applies `f(slot, coefficient)` to every coefficient.
    pub fn map_slots(self, mut f: impl FnMut(usize, T) -> T) -> Self {
        let mut c = self.to_array();
        for (k, x) in c.iter_mut().enumerate() {
            *x = f(k, *x);
        }
        Self::from_array(c)
    }

    pub fn scale(self, c: T) -> Self {
        self.map_blocks(|q| q.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks().iter().all(ComplexQuat::is_zero)
    }

    /// Real (grade 0) coefficient.
    pub fn scalar_part(&self) -> T {
        self.q.s.re
    }

    /// Builds `x1 e1 + x2 e2 + x3 e3`.
    pub fn from_vector(x: [T; 3]) -> Self {
        let mut m = Self::zero();
        for k in 0..3 {
            m.q_nn.v[k].im = signed(x[k], VECTOR_SIGNS[k]);
        }
        m
    }

    /// Coefficients of `e1, e2, e3`.
    pub fn vector_part(&self) -> [T; 3] {
        [0, 1, 2].map(|k| signed(self.q_nn.v[k].im, VECTOR_SIGNS[k]))
    }

    /// Coefficients of `ek ∧ n`.
    pub fn vector_n_part(&self) -> [T; 3] {
        [0, 1, 2].map(|k| signed(self.q_n.v[k].im, -VECTOR_SIGNS[k]))
    }

    /// Coefficients of `ek ∧ nbar`.
    pub fn vector_nbar_part(&self) -> [T; 3] {
        [0, 1, 2].map(|k| signed(self.q_nbar.v[k].im, VECTOR_SIGNS[k]))
    }

    /// Coefficients of `ek N` (grade 3).
    pub fn vector_nn_part(&self) -> [T; 3] {
        [0, 1, 2].map(|k| signed(self.q.v[k].im, VECTOR_SIGNS[k]))
    }

    /// Coefficients of the Euclidean bivectors `i1, i2, i3`.
    pub fn bivector_part(&self) -> [T; 3] {
        self.q.v.map(|c| c.re)
    }

    /// Coefficient of `n`.
    pub fn n_coefficient(&self) -> T {
        self.q_n.s.re
    }

    /// Coefficient of `nbar`.
    pub fn nbar_coefficient(&self) -> T {
        self.q_nbar.s.re
    }

    /// Coefficient of `N`.
    pub fn nn_coefficient(&self) -> T {
        self.q_nn.s.re
    }

    /// Coefficient of each named basis label, as `(label, coefficient)`
    /// pairs in slot order.
    pub fn labelled_terms(&self) -> impl Iterator<Item = (&'static str, T)> {
        let c = self.to_array();
        (0..SLOTS).map(move |k| (SLOT_LABELS[k], signed(c[k], SLOT_LABEL_SIGNS[k])))
    }
}

impl<T: Scalar + fmt::Display> Multivector<T> {
    /// One line per nonzero slot: `<coefficient> <label>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (label, c) in self.labelled_terms() {
            if c != T::zero() {
                out.push_str(&format!("{c} {label}\n"));
            }
        }
        out
    }
}

impl<T: Scalar> Default for Multivector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> fmt::Debug for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = f.debug_map();
        for (label, c) in self.labelled_terms() {
            if c != T::zero() {
                terms.entry(&label, &c);
            }
        }
        terms.finish()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (label, c) in self.labelled_terms() {
            if c == T::zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c} {label}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_blocks(
            self.q + o.q,
            self.q_n + o.q_n,
            self.q_nbar + o.q_nbar,
            self.q_nn + o.q_nn,
        )
    }
}

impl<T: Scalar> AddAssign for Multivector<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_blocks(
            self.q - o.q,
            self.q_n - o.q_n,
            self.q_nbar - o.q_nbar,
            self.q_nn - o.q_nn,
        )
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_blocks(Neg::neg)
    }
}

impl<T: Scalar> std::iter::Sum for Multivector<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), Add::add)
    }
}

impl<T: Scalar + Serialize> Serialize for Multivector<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for Multivector<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<T>::deserialize(d)?;
        let c: [T; SLOTS] = v
            .try_into()
            .map_err(|v: Vec<T>| D::Error::invalid_length(v.len(), &"32 coefficients"))?;
        Ok(Self::from_array(c))
    }
}

impl<T: Scalar> From<ComplexScalar<T>> for Multivector<T> {
    fn from(c: ComplexScalar<T>) -> Self {
        let mut m = Self::zero();
        m.q.s = c;
        m
    }
}
