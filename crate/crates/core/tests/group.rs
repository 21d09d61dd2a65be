use h3_dunkl::dunkl::DunklContext;
use h3_dunkl::group::{norm_sq, ClassTag, H3Group};
use h3_dunkl::polyalg::Mat3;
use h3_dunkl::polyalg::MultiPoly;
use h3_dunkl::scalars::GoldenNumber;
use h3_dunkl::verify::random;
use h3_dunkl::waves::alternating_polynomial;
use proptest::prelude::*;
use std::sync::OnceLock;

fn ctx() -> &'static DunklContext {
    static C: OnceLock<DunklContext> = OnceLock::new();
    C.get_or_init(|| DunklContext::new().unwrap())
}

fn matmul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = GoldenNumber::from_int(0);
            for k in 0..3 {
                s = &s + &(&a[i][k] * &b[k][j]);
            }
            s
        })
    })
}

#[test]
fn census() {
    let g = H3Group::new().unwrap();
    let c = g.census();
    assert_eq!((c.order, c.reflections, c.rotations, c.improper_non_reflections), (120, 15, 59, 45));
    assert_eq!((c.rho2, c.rho3, c.rho5_1, c.rho5_2), (15, 20, 12, 12));
    assert_eq!(g.class_members(ClassTag::Rho51).len(), 12);
}

#[test]
fn roots_and_vertices() {
    let g = ctx().group();
    assert_eq!(ctx().roots().len(), 15);
    for v in ctx().roots() {
        assert_eq!(norm_sq(v), GoldenNumber::from_int(4));
    }
    assert_eq!(g.vertices.i.len(), 12);
    assert_eq!(g.vertices.k.len(), 20);
}

#[test]
fn norm_is_invariant_and_alternating_polynomial_transforms_by_det() {
    let c = ctx();
    let r = MultiPoly::norm_sq(3);
    let a = alternating_polynomial(c);
    assert_eq!(a.degree(), 15);
    for (w, e) in c.group().elements.iter().enumerate().step_by(7) {
        assert_eq!(c.act(w, &r), r);
        let sign = if e.det == 1 { a.clone() } else { a.neg() };
        assert_eq!(c.act(w, &a), sign);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn action_composes(a in 0usize..120, b in 0usize..120, s in any::<u64>()) {
        let c = ctx();
        let g = c.group();
        let p = random::polynomial(&mut random::rng(s), 3, 4, true);
        let ab = g.index_of(&matmul(&g.elements[a].matrix, &g.elements[b].matrix)).unwrap();
        prop_assert_eq!(c.act(a, &c.act(b, &p)), c.act(ab, &p));
        prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity);
    }

    #[test]
    fn reflections_are_involutions(r in 0usize..15, s in any::<u64>()) {
        let c = ctx();
        let p = random::polynomial(&mut random::rng(s), 4, 4, false);
        prop_assert_eq!(c.reflect(r, &c.reflect(r, &p)), p);
    }
}
