use h3_dunkl::polyalg::MultiPoly;
use h3_dunkl::scalars::GoldenNumber;
use h3_dunkl::verify::random;
use proptest::prelude::*;

fn poly(d: u8) -> impl Strategy<Value = MultiPoly> {
    any::<u64>().prop_map(move |s| random::polynomial(&mut random::rng(s), d, 4, true))
}

#[test]
fn parse_basics() {
    let p = MultiPoly::parse("(x1 + x2)^2 - 2*x1*x2").unwrap();
    assert_eq!(p, MultiPoly::parse("x1^2 + x2^2").unwrap());
    assert_eq!(MultiPoly::norm_sq(3), MultiPoly::parse("x1^2+x2^2+x3^2").unwrap());
    assert!(MultiPoly::parse("x1 +").is_err());
    assert!(MultiPoly::parse("x1/x2").is_err());
}

#[test]
fn y_variables_raise_arity() {
    let p = MultiPoly::parse("x1*y2").unwrap();
    assert_eq!(p.arity(), 6);
}

#[test]
fn exact_division_by_linear_form() {
    let v = [GoldenNumber::from_int(1), GoldenNumber::tau(), GoldenNumber::from_int(0)];
    let l = MultiPoly::linear_form(3, &v);
    let q = MultiPoly::parse("x1^2 - tau*x3 + 2").unwrap();
    assert_eq!(l.mul(&q).exact_divide_linear(&v).unwrap(), q);
    assert!(q.exact_divide_linear(&v).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(3), b in poly(3), c in poly(2)) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.pow(2), a.mul(&a));
    }

    #[test]
    fn leibniz(a in poly(3), b in poly(3), i in 0usize..3) {
        prop_assert_eq!(a.mul(&b).partial(i), a.partial(i).mul(&b).add(&a.mul(&b.partial(i))));
    }

    #[test]
    fn homogeneous_components_sum_back(a in poly(4)) {
        let mut s = MultiPoly::zero(3);
        for k in 0..=a.degree() {
            let h = a.homogeneous_component(k);
            prop_assert!(h.is_zero() || h.homogeneous_degree().unwrap() == k);
            s = s.add(&h);
        }
        prop_assert_eq!(s, a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly(4)) {
        prop_assert_eq!(MultiPoly::parse(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(MultiPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(3), b in poly(3)) {
        let x = [GoldenNumber::from_int(2), GoldenNumber::tau(), GoldenNumber::from_frac(-1, 3)];
        prop_assert_eq!(a.mul(&b).eval_point(&x), a.eval_point(&x).mul_ref(&b.eval_point(&x)));
    }
}
