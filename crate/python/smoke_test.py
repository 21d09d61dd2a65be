"""Smoke test for the h3dunkl extension module.

    pip install -e crates/python --no-build-isolation
    python python/smoke_test.py
"""

import h3dunkl as h


def main():
    ctx = h.Context()
    c = ctx.census()
    assert (c["order"], c["reflections"], c["rotations"], c["improper_non_reflections"]) == (120, 15, 59, 45), c
    assert len(ctx.roots()) == 15

    x = h.Poly("x1^3")
    want = h.Poly("(3 + 23*k/2)*x1^2 - (k/2)*(tau - 7)*x2^2 + (k/2)*(tau + 6)*x3^2")
    assert ctx.dunkl(1, x) == want

    assert ctx.laplacian(h.Poly.norm_sq()) == h.Poly("6 + 60*k")
    phi = h.Poly.family("phi", 4)
    assert ctx.laplacian(phi).is_zero()
    assert ctx.pairing_l2(phi, phi) == h.closed_norm_sq("phi", 4)

    p6 = h.Poly("phig:6")
    n6 = h.closed_norm_sq("phi", 6, invariant=True)
    exact = n6.to_float(0.5, 1.0)
    est, se = h.mc_pair(p6, p6, 0.5, 1.0, samples=200_000, seed=3)
    assert abs(est - exact) < 4 * se, (est, se, exact)

    k1 = h.Context("1")
    p, q = h.Poly("x1^2 + tau*x2"), h.Poly("x3^2 - x1*x2 + 1")
    assert k1.pairing_l2(p, q) == ctx.pairing_l2_moments(p, q, "1")

    r = h.verify("group")
    assert all(chk["status"] == "pass" for chk in r["checks"]), r

    try:
        h.Poly("x1 +")
    except ValueError:
        pass
    else:
        raise AssertionError("parse error not raised")

    print("ok: census, Dunkl, harmonic, norms, Monte-Carlo (z = %.2f), moments, verify" % ((est - exact) / se))


if __name__ == "__main__":
    main()
