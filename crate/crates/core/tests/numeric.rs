use h3_dunkl::dunkl::DunklContext;
use h3_dunkl::numeric::{float_eval, mc_pairing, FloatPoly, WeightSampler};
use h3_dunkl::polyalg::MultiPoly;
use h3_dunkl::scalars::GoldenNumber;

#[test]
fn estimate_matches_exact_pairing() {
    let ctx = DunklContext::new().unwrap();
    let p = MultiPoly::parse("x1^2 - tau*x2*x3 + 1").unwrap();
    let q = MultiPoly::parse("x3^2 + x1").unwrap();
    for (k, w) in [(0.0, 1.0), (0.5, 2.0)] {
        let exact = ctx.pairing_l2(&p, &q).unwrap().to_f64(k, w);
        let e = mc_pairing(ctx.roots(), &p, &q, k, w, 200_000, 7).unwrap();
        assert!(e.within(exact, 4.0), "κ={} ω={}: {:?} vs {}", k, w, e, exact);
    }
}

#[test]
fn seeds() {
    let ctx = DunklContext::new().unwrap();
    let f = FloatPoly::from_poly(&MultiPoly::parse("x1^4").unwrap(), 0.5, 1.0).unwrap();
    let a = WeightSampler::new(ctx.roots(), 0.5, 1.0, 1).unwrap().estimate(&f, 50_000);
    let b = WeightSampler::new(ctx.roots(), 0.5, 1.0, 1).unwrap().estimate(&f, 50_000);
    let c = WeightSampler::new(ctx.roots(), 0.5, 1.0, 2).unwrap().estimate(&f, 50_000);
    assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
    assert_ne!(a.estimate.to_bits(), c.estimate.to_bits());
}

#[test]
fn invalid_inputs() {
    let ctx = DunklContext::new().unwrap();
    let one = MultiPoly::one(3);
    assert!(mc_pairing(ctx.roots(), &one, &one, 0.5, 1.0, 10, 1).is_err());
    assert!(mc_pairing(ctx.roots(), &one, &one, -0.5, 1.0, 100_000, 1).is_err());
    assert!(mc_pairing(ctx.roots(), &one, &one, 0.5, 0.0, 100_000, 1).is_err());
}

#[test]
fn float_evaluation_matches_exact() {
    let p = MultiPoly::parse("(2*k + 1)/w * x1^2*x3 - tau*x2").unwrap();
    let x = [GoldenNumber::from_int(1), GoldenNumber::tau(), GoldenNumber::from_frac(1, 2)];
    let exact = p.eval_point(&x).to_f64(0.25, 3.0);
    let fl = float_eval(&p, &[1.0, x[1].to_f64(), 0.5], 0.25, 3.0).unwrap();
    assert!((exact - fl).abs() < 1e-12);
}
