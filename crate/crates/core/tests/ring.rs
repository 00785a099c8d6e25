mod common;

use common::poly;
use conjrep::{LaurentPoly, ModularValue};
use num_complex::Complex64;
use proptest::prelude::*;

fn unit_point() -> impl Strategy<Value = ModularValue> {
    (2u64..1 << 40).prop_map(ModularValue::new)
}

proptest! {
    #[test]
    fn addition_is_abelian(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn multiplication_is_commutative_ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn monomials_are_units(c in prop::sample::select(vec![-1i64, 1]), k in -8i64..8, a in poly()) {
        let u = LaurentPoly::monomial(c, k);
        prop_assert!(u.is_unit());
        let inv = LaurentPoly::monomial(c, -k);
        prop_assert!((&u * &inv).is_one());
        prop_assert_eq!(a.shift(k), &a * &LaurentPoly::monomial(1, k));
    }

    #[test]
    fn modular_evaluation_is_a_ring_map(a in poly(), b in poly(), q0 in unit_point()) {
        let ea = a.eval_mod(q0).unwrap();
        let eb = b.eval_mod(q0).unwrap();
        prop_assert_eq!((&a + &b).eval_mod(q0).unwrap(), ea.add(eb));
        prop_assert_eq!((&a * &b).eval_mod(q0).unwrap(), ea.mul(eb));
    }

    #[test]
    fn complex_evaluation_is_a_ring_map(a in poly(), b in poly(), re in 0.5f64..1.5, im in -0.5f64..0.5) {
        let q0 = Complex64::new(re, im);
        let ea = a.eval_complex(q0).unwrap();
        let eb = b.eval_complex(q0).unwrap();
        let prod = (&a * &b).eval_complex(q0).unwrap();
        let sum = (&a + &b).eval_complex(q0).unwrap();
        let scale = 1.0 + ea.norm() * eb.norm();
        prop_assert!((prod - ea * eb).norm() <= 1e-9 * scale);
        prop_assert!((sum - (ea + eb)).norm() <= 1e-9 * (1.0 + ea.norm() + eb.norm()));
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn huge_coefficients_survive_json() {
    let big: LaurentPoly = "123456789012345678901234567890*q^-3 - q".parse().unwrap();
    let text = serde_json::to_string(&big).unwrap();
    assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), big);
}

#[test]
fn evaluating_at_zero_fails() {
    let q = LaurentPoly::q();
    assert!(q.eval_complex(Complex64::new(0.0, 0.0)).is_err());
    assert!(q.eval_mod(ModularValue::new(0)).is_err());
}
