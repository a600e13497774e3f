use conform_core::algebra::{basis, SLOTS};
use conform_core::oracle::BladeAlgebra;
use conform_core::{EuclideanBivector, Multivector};
use proptest::prelude::*;

type M = Multivector<f64>;

fn multivector() -> impl Strategy<Value = M> {
    prop::collection::vec(-1.0f64..1.0, SLOTS).prop_map(|v| {
        let mut c = [0.0; SLOTS];
        c.copy_from_slice(&v);
        M::from_array(c)
    })
}

fn close(a: &M, b: &M, tol: f64) -> bool {
    (*a - *b).max_abs() <= tol
}

proptest! {
    #[test]
    fn product_is_associative(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert!(close(&((a * b) * c), &(a * (b * c)), 1e-10));
    }

    #[test]
    fn product_is_bilinear(a in multivector(), b in multivector(), c in multivector(), s in -3.0f64..3.0) {
        prop_assert!(close(&(a * (b + c.scale(s))), &(a * b + (a * c).scale(s)), 1e-10));
        prop_assert!(close(&((b + c.scale(s)) * a), &(b * a + (c * a).scale(s)), 1e-10));
    }

    #[test]
    fn product_matches_oracle(a in multivector(), b in multivector()) {
        let want = BladeAlgebra::from_kernel(&a).gp(&BladeAlgebra::from_kernel(&b));
        let got = BladeAlgebra::from_kernel(&(a * b));
        for k in 0..32 {
            prop_assert!((got.c[k] - want.c[k]).abs() < 1e-10);
        }
    }

    #[test]
    fn reverse_is_antiautomorphism(a in multivector(), b in multivector()) {
        prop_assert!(close(&(a * b).reverse(), &(b.reverse() * a.reverse()), 1e-10));
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn involution_is_automorphism(a in multivector(), b in multivector()) {
        prop_assert!(close(&(a * b).involute(), &(a.involute() * b.involute()), 1e-10));
    }

    #[test]
    fn grade_parts_sum_to_whole(a in multivector()) {
        let sum: M = (0..6).map(|g| a.grade(g).unwrap()).sum();
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn double_dual_negates(a in multivector()) {
        prop_assert!(close(&a.dual().dual(), &-a, 1e-15));
    }

    #[test]
    fn wedge_is_associative(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert!(close(&a.wedge(&b).wedge(&c), &a.wedge(&b.wedge(&c)), 1e-10));
    }

    #[test]
    fn vectors_anticommute_under_wedge(x in multivector(), y in multivector()) {
        let (a, b) = (x.grade_part(1), y.grade_part(1));
        prop_assert!(close(&a.wedge(&b), &-b.wedge(&a), 1e-12));
        // a b = a·b + a∧b for vectors.
        let dot = (a * b + b * a).scale(0.5);
        prop_assert!(close(&(a * b), &(dot + a.wedge(&b)), 1e-12));
    }

    #[test]
    fn euclidean_bivector_exponential(b1 in -1.0f64..1.0, b2 in -1.0f64..1.0, b3 in -1.0f64..1.0, angle in -3.0f64..3.0) {
        prop_assume!(b1 * b1 + b2 * b2 + b3 * b3 > 1e-3);
        let b = EuclideanBivector::new(b1, b2, b3).normalized().unwrap();
        let series = b.to_multivector().scale(-angle / 2.0).exp().unwrap();
        let closed = M::scalar((angle / 2.0).cos()) - b.to_multivector().scale((angle / 2.0).sin());
        prop_assert!(close(&series, &closed, 1e-12));
    }

    #[test]
    fn serde_round_trip(a in multivector()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: M = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn null_exponential_is_exact() {
    let m = basis::n::<f64>().scale(3.0);
    assert_eq!(m.exp().unwrap(), basis::one::<f64>() + m);
}

#[test]
fn single_precision_instantiation() {
    let a = basis::e1::<f32>() * basis::e2::<f32>();
    assert_eq!(a, basis::i3::<f32>());
    assert!((a * a + basis::one()).max_abs() == 0.0);
}
