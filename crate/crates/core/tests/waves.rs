use h3_dunkl::dunkl::DunklContext;
use h3_dunkl::cli::closed_norm;
use h3_dunkl::error::Error;
use h3_dunkl::waves::{invariant_harmonic_dimension, q_at_vertex, vertex_pair, InvariantFamilies, QFamily, VertexCase};

#[test]
fn vertex_family_basics() {
    let ctx = DunklContext::new().unwrap();
    let (y0, _) = vertex_pair();
    let fam = QFamily::new(&ctx.group().vertices.i_plus, y0.clone(), 6);
    for n in 0..=6 {
        assert_eq!(fam.q(n).unwrap().eval_point(&y0), q_at_vertex(n as u32, VertexCase::Same), "q_{}(y0;y0)", n);
        let phi = fam.phi(n).unwrap();
        assert!(ctx.laplacian(&phi).unwrap().is_zero(), "φ_{} harmonic", n);
        assert_eq!(phi.homogeneous_degree().unwrap(), n as u32);
    }
    assert!(matches!(fam.q(7), Err(Error::DegreeCapExceeded { .. })));
}

#[test]
fn closed_norms_match_pairing() {
    let ctx = DunklContext::new().unwrap();
    let (y0, _) = vertex_pair();
    let fam = QFamily::new(&ctx.group().vertices.i_plus, y0, 4);
    for n in 1..=4 {
        for (kind, p) in [("w", fam.w(n).unwrap()), ("phi", fam.phi(n).unwrap())] {
            assert_eq!(ctx.pairing_l2(&p, &p).unwrap(), closed_norm(kind, n, false).unwrap(), "{} {}", kind, n);
        }
    }
}

#[test]
fn low_invariants_vanish() {
    let ctx = DunklContext::new().unwrap();
    let inv = InvariantFamilies::new(&ctx.group().vertices.i_plus, 6);
    for n in [2, 4] {
        assert!(inv.phi(n).unwrap().is_zero(), "φ^G_{}", n);
        assert_eq!(invariant_harmonic_dimension(n as u32), 0);
    }
    let p6 = inv.phi(6).unwrap();
    assert!(!p6.is_zero());
    for w in [3, 17, 64] {
        assert_eq!(ctx.act(w, &p6), p6);
    }
    assert!(inv.phi(5).is_err());
}
