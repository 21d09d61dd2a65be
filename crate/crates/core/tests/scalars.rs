use h3_dunkl::scalars::{pochhammer, GoldenNumber, ParamScalar, Rational};
use h3_dunkl::verify::random;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn g(a: i64, b: i64, c: i64, d: i64) -> GoldenNumber {
    GoldenNumber::new(Rational::new(a.into(), c.into()), Rational::new(b.into(), d.into()))
}

fn golden() -> impl Strategy<Value = GoldenNumber> {
    (-20i64..20, -20i64..20, 1i64..6, 1i64..6).prop_map(|(a, b, c, d)| g(a, b, c, d))
}

/// Denominators are κ-polynomials times a power of ω.
fn divisor() -> impl Strategy<Value = ParamScalar> {
    (any::<u64>(), 0u32..3).prop_map(|(s, j)| random::coeff(&mut random::rng(s), true).mul_ref(&ParamScalar::omega().pow(j)))
}

fn param() -> impl Strategy<Value = ParamScalar> {
    any::<u64>().prop_map(|s| {
        let mut r = random::rng(s);
        let a = random::coeff(&mut r, true);
        let b = random::coeff(&mut r, true);
        a.add_ref(&b.mul_ref(&ParamScalar::omega()))
    })
}

#[test]
fn tau_squared() {
    let t = GoldenNumber::tau();
    assert_eq!(&t * &t, &t + &GoldenNumber::one());
    assert_eq!(&t * &GoldenNumber::tau_inv(), GoldenNumber::one());
    assert!((t.to_f64() - 1.618033988749895).abs() < 1e-15);
}

#[test]
fn pochhammer_values() {
    let k = ParamScalar::kappa();
    assert_eq!(pochhammer(&k, 0), ParamScalar::one());
    let p3 = pochhammer(&k, 3);
    let want = k.mul_ref(&k.add_ref(&ParamScalar::one())).mul_ref(&k.add_ref(&ParamScalar::from_int(2)));
    assert_eq!(p3, want);
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(ParamScalar::zero().inv().is_err());
    assert!(GoldenNumber::zero().inv().is_none());
}

#[test]
fn parse_and_print() {
    let s = ParamScalar::parse("(2*k + 1)/(w^2*(k + 1/2))").unwrap();
    assert_eq!(s, ParamScalar::parse("2/w^2").unwrap());
    let t = ParamScalar::parse("tau*k - 3/4").unwrap();
    assert_eq!(ParamScalar::parse(&t.to_string()).unwrap(), t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn golden_field_laws(a in golden(), b in golden(), c in golden()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GoldenNumber::one());
        }
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert!(((&a * &b).to_f64() - a.to_f64() * b.to_f64()).abs() < 1e-9 * (1.0 + (a.to_f64() * b.to_f64()).abs()));
    }

    #[test]
    fn golden_order_matches_float(a in golden(), b in golden()) {
        if a != b {
            prop_assert_eq!(a < b, a.to_f64() < b.to_f64());
        }
    }

    #[test]
    fn param_field_laws(a in param(), b in param(), c in param(), d in divisor()) {
        prop_assert_eq!(a.add_ref(&b).mul_ref(&c), a.mul_ref(&c).add_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.div_ref(&d).unwrap().mul_ref(&d), a.clone());
        prop_assert_eq!(a.sub_ref(&a), ParamScalar::zero());
        prop_assert!(a.add_ref(&ParamScalar::kappa()).inv().is_err());
    }

    #[test]
    fn param_display_round_trips(a in param(), d in divisor()) {
        let q = a.div_ref(&d).unwrap();
        prop_assert_eq!(ParamScalar::parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in param(), b in param(), k in 0i64..5) {
        let kr = Rational::from_integer(k.into());
        let lhs = a.mul_ref(&b).substitute_kappa(&kr).unwrap();
        let rhs = a.substitute_kappa(&kr).unwrap().mul_ref(&b.substitute_kappa(&kr).unwrap());
        prop_assert_eq!(lhs, rhs);
        let f = a.add_ref(&b).to_f64(k as f64, 1.5);
        prop_assert!((f - a.to_f64(k as f64, 1.5) - b.to_f64(k as f64, 1.5)).abs() < 1e-9 * (1.0 + f.abs()));
    }
}
