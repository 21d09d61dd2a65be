use std::sync::OnceLock;

use h3_dunkl::dunkl::{unit, DunklContext};
use h3_dunkl::kernel::*;
use h3_dunkl::polyalg::MultiPoly;
use h3_dunkl::report::Status;
use h3_dunkl::verify::{random, run_suite, Suite, VerifyOptions};
use h3_dunkl::waves::vertex_pair;
use proptest::prelude::*;

fn ctx() -> &'static DunklContext {
    static C: OnceLock<DunklContext> = OnceLock::new();
    C.get_or_init(|| DunklContext::new().unwrap())
}

#[test]
fn kernel_collapses_to_one() {
    assert_eq!(KernelSum::kernel(ctx()).collapse_at_y_zero(), MultiPoly::one(3));
}

#[test]
fn j_square_on_kernel_at_kappa_zero() {
    let got = kappa0_check(ctx(), &OpExpr::gen(Gen::JSquare), &MultiPoly::one(6)).unwrap();
    assert_eq!(got, MultiPoly::parse("(x1^2+x2^2+x3^2)*(y1^2+y2^2+y3^2) - (x1*y1+x2*y2+x3*y3)*(x1*y1+x2*y2+x3*y3+2)").unwrap());
}

#[test]
fn cherednik_suite_passes() {
    let r = run_suite(ctx(), Suite::Cherednik, &VerifyOptions::default());
    for c in &r.checks {
        assert_ne!(c.status, Status::Fail, "{}: {:?}", c.id, c.witness);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn kernel_route_agrees_with_direct(s in any::<u64>(), w in 0usize..120) {
        let c = ctx();
        let (y0, _) = vertex_pair();
        let words = [
            OpWord::new(vec![Gen::Dunkl(y0.clone()), Gen::Group(w), Gen::Dunkl(unit(0))]),
            OpWord::new(vec![Gen::NormSq, Gen::Dunkl(unit(2))]),
            OpWord::single(Gen::Laplacian),
        ];
        let p = random::polynomial(&mut random::rng(s), 3, 4, true);
        for word in &words {
            let (ks, direct) = soundness_check(c, word, &p).unwrap();
            prop_assert_eq!(ks, direct, "{}", word);
        }
    }
}
