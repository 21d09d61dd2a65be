use std::sync::OnceLock;

use h3_dunkl::dunkl::{unit, DunklContext};
use h3_dunkl::polyalg::{vec_mat, MultiPoly};
use h3_dunkl::scalars::{ParamScalar, Rational};
use h3_dunkl::verify::random;
use h3_dunkl::waves::vertex_pair;
use proptest::prelude::*;

fn ctx() -> &'static DunklContext {
    static C: OnceLock<DunklContext> = OnceLock::new();
    C.get_or_init(|| DunklContext::new().unwrap())
}

fn poly(d: u8) -> impl Strategy<Value = MultiPoly> {
    any::<u64>().prop_map(move |s| random::polynomial(&mut random::rng(s), d, 4, true))
}

#[test]
fn laplacian_of_norm() {
    let c = ctx();
    let want = MultiPoly::parse("6 + 60*k").unwrap();
    assert_eq!(c.laplacian(&MultiPoly::norm_sq(3)).unwrap(), want);
    assert_eq!(c.gamma(), ParamScalar::kappa().mul_ref(&ParamScalar::from_int(15)));
}

#[test]
fn degree_one_pairing() {
    let c = ctx();
    let x1 = MultiPoly::var(3, 0);
    assert_eq!(c.pairing_kw(&x1, &x1).unwrap(), ParamScalar::parse("(10*k + 1)/(2*w)").unwrap());
    let c0 = c.at_kappa(Rational::from_integer(0.into()));
    assert_eq!(c0.pairing_kw(&x1, &x1).unwrap(), ParamScalar::parse("1/(2*w)").unwrap());
}

#[test]
fn dunkl_of_a_constant_vanishes() {
    assert!(ctx().dunkl(&unit(2), &MultiPoly::one(3)).unwrap().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dunkl_operators_commute(p in poly(4)) {
        let c = ctx();
        let (y0, _) = vertex_pair();
        let a = c.dunkl(&y0, &c.dunkl_i(1, &p).unwrap()).unwrap();
        let b = c.dunkl_i(1, &c.dunkl(&y0, &p).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn table_and_direct_routes_agree(p in poly(5), i in 0usize..3) {
        let c = ctx();
        prop_assert_eq!(c.dunkl_i(i, &p).unwrap(), c.dunkl_direct(&unit(i), &p).unwrap());
    }

    #[test]
    fn equivariance(p in poly(4), w in 0usize..120, i in 0usize..3) {
        let c = ctx();
        let u = unit(i);
        let uw = vec_mat(&u, &c.group().elements[w].matrix);
        prop_assert_eq!(c.dunkl(&u, &c.act(w, &p)).unwrap(), c.act(w, &c.dunkl(&uw, &p).unwrap()));
    }

    #[test]
    fn pairings_are_symmetric(p in poly(3), q in poly(3)) {
        let c = ctx();
        prop_assert_eq!(c.pairing_kw(&p, &q).unwrap(), c.pairing_kw(&q, &p).unwrap());
        prop_assert_eq!(c.pairing_l2(&p, &q).unwrap(), c.pairing_l2(&q, &p).unwrap());
    }

    #[test]
    fn heat_flow_inverts(p in poly(4)) {
        let c = ctx();
        prop_assert_eq!(c.heat_exp(&c.heat_exp(&p, 1).unwrap(), -1).unwrap(), p);
    }

    #[test]
    fn harmonic_decomposition(s in any::<u64>(), d in 0u8..6) {
        let c = ctx();
        let p = random::homogeneous(&mut random::rng(s), d, 4, true);
        let parts = c.harmonic_decompose(&p).unwrap();
        let mut sum = MultiPoly::zero(3);
        for (j, h) in &parts {
            prop_assert!(c.laplacian(h).unwrap().is_zero());
            sum = sum.add(&MultiPoly::norm_sq(3).pow(*j).mul(h));
        }
        prop_assert_eq!(sum, p.clone());
        prop_assert!(c.laplacian(&c.harmonic_project(&p).unwrap()).unwrap().is_zero());
    }
}
