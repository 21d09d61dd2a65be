use serde_json::json;

use super::random;
use super::{diff, failures, Checks};
use crate::dunkl::DunklContext;
use crate::group::norm_sq;
use crate::numeric::{float_eval, mc_pairing, vec_to_f64, FloatPoly, WeightSampler};
use crate::polyalg::{dot, vec_mat, MultiPoly};
use crate::scalars::{factorial, GoldenNumber, ParamScalar, Rational};
use crate::waves::{alternating_polynomial, macdonald_ratio_formula, macdonald_ratio_moments, macdonald_ratio_sides, norm_invariant_phi, tau_plus_2, vertex_pair, InvariantFamilies, MacdonaldMode, QFamily};

pub(crate) fn group(ctx: &DunklContext, c: &mut Checks) {
    let g = ctx.group();

    c.check("group.census", "|G| = 120: 15 reflections, 59 rotations, 45 improper non-reflections; ρ₂/ρ₃/ρ₅,₁/ρ₅,₂ = 15/20/12/12", || {
        let s = g.census();
        let got = [s.order, s.reflections, s.rotations, s.improper_non_reflections, s.rho2, s.rho3, s.rho5_1, s.rho5_2];
        let want = [120, 15, 59, 45, 15, 20, 12, 12];
        Ok(if got == want { None } else { Some(json!({ "got": got, "want": want })) })
    });

    c.check("group.roots", "15 positive roots with |v|² = 4; every σ_v permutes R up to sign", || {
        let mut bad = Vec::new();
        let roots = ctx.roots();
        if roots.len() != 15 {
            bad.push(json!({ "count": roots.len() }));
        }
        let four = GoldenNumber::from_int(4);
        for (i, v) in roots.iter().enumerate() {
            if norm_sq(v) != four {
                bad.push(json!({ "norm": i }));
            }
        }
        for &r in &g.reflections {
            let m = &g.elements[r].matrix;
            for v in roots {
                let img = vec_mat(v, m);
                if g.roots.root_index(&img).is_none() && g.roots.root_index(&crate::group::neg3(&img)).is_none() {
                    bad.push(json!({ "reflection": r }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("group.vertices", "|I| = 12, |K| = 20; ⟨y,y⟩ = τ+2; ⟨y,y₁⟩ over I₊ is ±(τ+2) once and τ, −τ five times in total", || {
        let v = &g.vertices;
        let mut bad = Vec::new();
        if (v.i.len(), v.i_plus.len(), v.k.len(), v.k_plus.len()) != (12, 6, 20, 10) {
            bad.push(json!({ "sizes": [v.i.len(), v.i_plus.len(), v.k.len(), v.k_plus.len()] }));
        }
        let t2 = GoldenNumber::ints(2, 1);
        let t = GoldenNumber::tau();
        for y in &v.i {
            if norm_sq(y) != t2 {
                bad.push(json!("vertex norm"));
            }
        }
        let (_, y1) = vertex_pair();
        let ips: Vec<GoldenNumber> = v.i_plus.iter().map(|y| dot(y, &y1)).collect();
        let abs = |x: &GoldenNumber| if x.to_f64() < 0.0 { x * &GoldenNumber::from_int(-1) } else { x.clone() };
        let n_t2 = ips.iter().filter(|x| abs(x) == t2).count();
        let n_t = ips.iter().filter(|x| abs(x) == t).count();
        if (n_t2, n_t) != (1, 5) {
            bad.push(json!({ "tau_plus_2": n_t2, "tau": n_t }));
        }
        Ok(failures(bad))
    });

    c.check("group.closure", "elements are orthogonal; multiplication and inverses stay in G", || {
        let mut bad = Vec::new();
        for (i, e) in g.elements.iter().enumerate() {
            if !e.is_orthogonal() {
                bad.push(json!({ "orthogonal": i }));
            }
            if g.mul(i, g.inverse(i)) != g.identity {
                bad.push(json!({ "inverse": i }));
            }
        }
        Ok(failures(bad))
    });
}

pub(crate) fn macdonald(ctx: &DunklContext, c: &mut Checks) {
    c.check("macdonald.kappa0", "at κ = 0 the ratio is 120/ω¹⁵ = Σ_a a!c_a²/(2ω)¹⁵ for a_G = Σ c_a x^a", || {
        let a = alternating_polynomial(ctx).substitute_kappa(&Rational::from_integer(0.into()))?;
        let mut acc = ParamScalar::zero();
        for (m, coef) in a.terms() {
            let f: num_bigint::BigInt = m.exps.iter().map(|&e| factorial(e as u32)).product();
            acc = acc.add_ref(&coef.mul_ref(coef).mul_ref(&ParamScalar::from_rational(Rational::from_integer(f))));
        }
        let fischer = acc.div_ref(&ParamScalar::omega().mul_ref(&ParamScalar::from_int(2)).pow(15))?;
        let formula = macdonald_ratio_formula().substitute_kappa(&Rational::from_integer(0.into()))?;
        Ok(diff(&fischer, &formula))
    });

    c.slow("macdonald.kappa1", "c_{κ,ω}/c_{κ+1,ω} = (120/ω¹⁵)(2κ+1)(6κ+1)₅(10κ+1)₉ at κ = 1: Dunkl pairing and Gaussian moments", || {
        let k1 = Rational::from_integer(1.into());
        let (l, r) = macdonald_ratio_sides(ctx, &MacdonaldMode::AtKappa(k1))?;
        let m = macdonald_ratio_moments(ctx, 1)?;
        Ok(if l == r && m == r {
            None
        } else {
            Some(json!({ "pairing": l.to_string(), "moments": m.to_string(), "formula": r.to_string() }))
        })
    });

    c.slow("macdonald.symbolic", "⟨a_G,a_G⟩_{κ,ω} = (120/ω¹⁵)(2κ+1)(6κ+1)₅(10κ+1)₉ identically in κ", || {
        let (l, r) = macdonald_ratio_sides(ctx, &MacdonaldMode::Symbolic)?;
        Ok(diff(&l, &r))
    });
}

pub(crate) fn numeric(ctx: &DunklContext, c: &mut Checks) {
    let seed = c.opts().seed;
    let roots = ctx.roots().to_vec();
    let one = MultiPoly::one(3);

    c.check("numeric.float_eval", "q₁(y₀;y₀) = τ+2; φ₂(y₀;y₀) float vs exact; |x|² = 1 on y/|y|", || {
        let (y0, _) = vertex_pair();
        let fam = QFamily::new(&ctx.group().vertices.i_plus, y0.clone(), 2);
        let y = vec_to_f64(&y0);
        let mut bad = Vec::new();
        let q1 = float_eval(&fam.q(1)?, &y, 0.5, 1.0)?;
        if (q1 - tau_plus_2().to_f64(0.5, 1.0)).abs() > 1e-12 {
            bad.push(json!({ "q1": q1 }));
        }
        for (k, w) in [(0.5, 1.0), (2.0, 0.25), (1.0 / 3.0, 3.0)] {
            let exact = fam.phi(2)?.eval_point(&y0).to_f64(k, w);
            let fl = float_eval(&fam.phi(2)?, &y, k, w)?;
            if ((fl - exact) / exact).abs() > 1e-10 {
                bad.push(json!({ "phi2": [k, w, fl, exact] }));
            }
        }
        let n = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        let u = [y[0] / n, y[1] / n, y[2] / n];
        if (float_eval(&MultiPoly::norm_sq(3), &u, 0.0, 1.0)? - 1.0).abs() > 1e-12 {
            bad.push(json!("unit norm"));
        }
        Ok(failures(bad))
    });

    c.check("numeric.one", "⟨1,1⟩₂ = 1 by self-normalization", || {
        let e = mc_pairing(&roots, &one, &one, 0.5, 1.0, 100_000, seed)?;
        Ok(if (e.estimate - 1.0).abs() < 1e-12 && e.std_error < 1e-12 { None } else { Some(json!(e)) })
    });

    c.check("numeric.x1", "⟨x₁,x₁⟩₂ = 1/2 at κ = 0, ω = 1, within 3 SE at 10⁶ samples", || {
        let x1 = MultiPoly::var(3, 0);
        let e = mc_pairing(&roots, &x1, &x1, 0.0, 1.0, 1_000_000, seed)?;
        Ok(if e.within(0.5, 3.0) { None } else { Some(json!(e)) })
    });

    let mut seen = None;
    let r = c.check("numeric.phi6G", "‖φ^G₆‖₂² at κ = 1/2, ω = 1 within 3 SE at 10⁶ samples", || {
        let inv = InvariantFamilies::new(&ctx.group().vertices.i_plus, 6);
        let p = inv.phi(6)?;
        let exact = norm_invariant_phi(3).to_f64(0.5, 1.0);
        let e = mc_pairing(&roots, &p, &p, 0.5, 1.0, 1_000_000, seed)?;
        let w = json!({ "exact": exact, "mc": e, "z": (e.estimate - exact) / e.std_error });
        seen = Some(w.clone());
        Ok(if e.within(exact, 3.0) { None } else { Some(w) })
    });
    if r.passed() {
        r.witness = seen;
    }

    c.check("numeric.moments", "at κ = 1 the estimate is within 3 SE of the exact Gaussian-moment pairing, random degree ≤ 4", || {
        let mut r = random::rng(seed ^ 0x31);
        let mut bad = Vec::new();
        for i in 0..3u64 {
            let p = random::polynomial(&mut r, 4, 3, false);
            let q = random::polynomial(&mut r, 4, 3, false);
            let exact = ctx.pairing_l2_moments(&p, &q, &Rational::from_integer(1.into()))?.to_f64(1.0, 1.0);
            let e = mc_pairing(&roots, &p, &q, 1.0, 1.0, 1_000_000, seed.wrapping_add(i))?;
            if !e.within(exact, 3.0) {
                bad.push(json!({ "pair": i, "exact": exact, "mc": e }));
            }
        }
        Ok(failures(bad))
    });

    c.check("numeric.reproducible", "a fixed seed gives bit-identical estimates", || {
        let f = FloatPoly::from_poly(&MultiPoly::norm_sq(3), 0.5, 1.0)?;
        let s = WeightSampler::new(&roots, 0.5, 1.0, seed)?;
        let (a, b) = (s.estimate(&f, 200_000), s.estimate(&f, 200_000));
        Ok(if a.estimate.to_bits() == b.estimate.to_bits() { None } else { Some(json!([a, b])) })
    });

}
