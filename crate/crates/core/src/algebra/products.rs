//! The geometric product and everything derived from it by grade selection.

use std::ops::{BitXor, Mul};

use super::multivector::{Multivector, SLOT_GRADES};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sign applied to each grade by reversion: `(-1)^(g(g-1)/2)`.
pub const REVERSE_SIGNS: [i8; 6] = [1, 1, -1, -1, 1, 1];

/// Sign applied to each grade by grade involution: `(-1)^g`.
pub const INVOLUTION_SIGNS: [i8; 6] = [1, -1, 1, -1, 1, -1];

impl<T: Scalar> Multivector<T> {
    /// Geometric product.
    ///
    /// Block-wise: the blocks commute with `n`, `nbar` and `N`, so
    /// `m m' = Σ (qa q'b)(xa xb)` with the `{1, n, nbar, N}` table
    /// `n nbar = -1 + N`, `nbar n = -1 - N`, `n N = n`, `N n = -n`,
    /// `nbar N = -nbar`, `N nbar = nbar`, `N² = 1`, `n² = nbar² = 0`.
    pub fn gp(&self, o: &Self) -> Self {
        let (q, qn, qb, qnn) = (self.q, self.q_n, self.q_nbar, self.q_nn);
        let (p, pn, pb, pnn) = (o.q, o.q_n, o.q_nbar, o.q_nn);
        Self::from_blocks(
            q * p + qnn * pnn - qn * pb - qb * pn,
            q * pn + qn * p + qn * pnn - qnn * pn,
            q * pb + qb * p - qb * pnn + qnn * pb,
            q * pnn + qnn * p + qn * pb - qb * pn,
        )
    }

    /// Grade-`g` part, rejecting grades outside `0..=5`.
    pub fn grade(&self, g: usize) -> Result<Self> {
        if g > 5 {
            return Err(Error::GradeOutOfRange(g));
        }
        Ok(self.grade_part(g))
    }

    /// Grade-`g` part; any `g > 5` yields zero.
    pub fn grade_part(&self, g: usize) -> Self {
        self.map_slots(|k, x| {
            if SLOT_GRADES[k] as usize == g {
                x
            } else {
                T::zero()
            }
        })
    }

    /// Grades with at least one nonzero coefficient.
    pub fn populated_grades(&self) -> [bool; 6] {
        let mut g = [false; 6];
        for (k, x) in self.to_array().iter().enumerate() {
            if *x != T::zero() {
                g[SLOT_GRADES[k] as usize] = true;
            }
        }
        g
    }

    fn map_grade_signs(&self, signs: &[i8; 6]) -> Self {
        self.map_slots(|k, x| {
            if signs[SLOT_GRADES[k] as usize] < 0 {
                -x
            } else {
                x
            }
        })
    }

    /// Reversion.
    pub fn reverse(&self) -> Self {
        self.map_grade_signs(&REVERSE_SIGNS)
    }

    /// Grade involution.
    pub fn involute(&self) -> Self {
        self.map_grade_signs(&INVOLUTION_SIGNS)
    }

    /// Scalar product `<m m'>_0`.
    pub fn scalar_product(&self, o: &Self) -> T {
        self.gp(o).scalar_part()
    }

    fn graded_sum(&self, o: &Self, target: impl Fn(usize, usize) -> Option<usize>) -> Self {
        let lhs = self.populated_grades();
        let rhs = o.populated_grades();
        let mut out = Self::zero();
        for r in (0..6).filter(|&r| lhs[r]) {
            let a = self.grade_part(r);
            for s in (0..6).filter(|&s| rhs[s]) {
                if let Some(g) = target(r, s) {
                    out += a.gp(&o.grade_part(s)).grade_part(g);
                }
            }
        }
        out
    }

    /// Outer product `Σ <<m>_r <m'>_s>_{r+s}`.
    pub fn wedge(&self, o: &Self) -> Self {
        self.graded_sum(o, |r, s| (r + s <= 5).then_some(r + s))
    }

    /// Left contraction `Σ <<m>_r <m'>_s>_{s-r}`, terms with `r > s` vanish.
    pub fn left_contract(&self, o: &Self) -> Self {
        self.graded_sum(o, |r, s| s.checked_sub(r))
    }

    /// Right contraction `Σ <<m>_r <m'>_s>_{r-s}`, terms with `s > r` vanish.
    pub fn right_contract(&self, o: &Self) -> Self {
        self.graded_sum(o, |r, s| r.checked_sub(s))
    }

    /// Dual `m I`.
    pub fn dual(&self) -> Self {
        self.map_blocks(|q| q.mul_i())
    }

    /// `k`-fold geometric product; `m^0 = 1`.
    pub fn power(&self, k: u32) -> Self {
        let mut out = Self::scalar(T::one());
        for _ in 0..k {
            out = out.gp(self);
        }
        out
    }

    /// Two-sided product `self m reverse(self)`.
    pub fn sandwich(&self, m: &Self) -> Self {
        self.gp(m).gp(&self.reverse())
    }
}

impl<T: Scalar> Mul for Multivector<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.gp(&o)
    }
}

impl<T: Scalar> BitXor for Multivector<T> {
    type Output = Self;
    fn bitxor(self, o: Self) -> Self {
        self.wedge(&o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis;

    type M = Multivector<f64>;

    #[test]
    fn null_vector_table() {
        let (one, n, nbar, nn) = (basis::one::<f64>(), basis::n(), basis::nbar(), basis::big_n());
        assert!((n * n).is_zero());
        assert!((nbar * nbar).is_zero());
        assert_eq!(n * nbar, nn - one);
        assert_eq!(nbar * n, -one - nn);
        assert_eq!(n * nn, n);
        assert_eq!(nn * n, -n);
        assert_eq!(nbar * nn, -nbar);
        assert_eq!(nn * nbar, nbar);
        assert_eq!(nn * nn, one);
    }

    #[test]
    fn grade_rejects_out_of_range() {
        assert_eq!(M::zero().grade(6), Err(Error::GradeOutOfRange(6)));
        let m = basis::one::<f64>() + basis::e1() + basis::big_n();
        assert_eq!(m.grade(2).unwrap(), basis::big_n());
        assert_eq!(basis::nbar::<f64>().grade(1).unwrap(), basis::nbar());
    }

    #[test]
    fn reverse_and_involution_examples() {
        assert_eq!(basis::i::<f64>().reverse(), -basis::i());
        assert_eq!(basis::one::<f64>().scale(3.0).reverse(), basis::one().scale(3.0));
        assert_eq!(basis::e1::<f64>().involute(), -basis::e1());
        assert_eq!(basis::big_n::<f64>().involute(), basis::big_n());
        assert_eq!(basis::pseudoscalar::<f64>().reverse(), basis::pseudoscalar());
    }

    #[test]
    fn wedge_and_contraction_examples() {
        let (e1, e2, i3) = (basis::e1::<f64>(), basis::e2(), basis::i3());
        assert!((e1 ^ e1).is_zero());
        assert_eq!(e1 ^ e2, i3);
        assert!(i3.left_contract(&e1).is_zero());
        assert_eq!(e1.left_contract(&i3), e2);
        assert!(e1.right_contract(&i3).is_zero());
        assert_eq!(i3.right_contract(&e1), -e2);
        assert_eq!(e1.scalar_product(&e1), 1.0);
        assert_eq!(basis::n::<f64>().scalar_product(&basis::nbar()), -1.0);
    }

    #[test]
    fn dual_examples() {
        let one = basis::one::<f64>();
        assert_eq!(one.dual(), basis::pseudoscalar());
        let i1n = basis::i1::<f64>() * basis::big_n();
        assert_eq!(i1n.dual(), -basis::e1());
        assert_eq!(one.dual().dual(), -one);
    }

    #[test]
    fn powers() {
        assert_eq!(basis::pseudoscalar::<f64>().power(2), -basis::one());
        assert_eq!(basis::big_n::<f64>().power(2), basis::one());
        assert_eq!(basis::e1::<f64>().power(0), basis::one());
    }
}
