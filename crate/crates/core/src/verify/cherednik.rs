use serde_json::json;

use super::random;
use super::{diff, failures, Checks};
use crate::dunkl::{unit, DunklContext};
use crate::kernel::*;
use crate::polyalg::MultiPoly;
use crate::scalars::{GoldenNumber, ParamScalar};
use crate::waves::{tau_plus_2, vertex_pair, InvariantFamilies};

/// `[H̃⁽³⁾, 𝒥]1` at κ = 0, archived.
pub const H3_J_WITNESS: &str = include_str!("../../golden/h3_j_commutator_kappa0.txt");

fn ks_diff(l: &KernelSum, r: &KernelSum) -> Option<serde_json::Value> {
    if l == r {
        None
    } else {
        Some(json!({ "lhs": l.to_json(), "rhs": r.to_json() }))
    }
}

pub(crate) fn run(ctx: &DunklContext, c: &mut Checks) {
    let seed = c.opts().seed;
    let g = ctx.group();

    c.check("cherednik.h2action_poly", "H⁽²⁾ = 6(τ+1)𝓗² + 8ω²(τ+1)𝒥 − 24ω²(τ+1) − 32ω²(τ+1)κΣσ_v − 32ω²(τ+1)κ²Σρ₂ − 36ω²(τ+1)κ²Σρ₃ − 20ω²(τ+2)κ²Σρ₅,₁ − 20ω²(4τ+3)κ²Σρ₅,₂ on 𝒫≤3", || {
        let bad = h2action_polynomial(ctx, 3)?;
        Ok(failures(
            bad.iter().map(|(m, l, r)| json!({ "monomial": format!("{:?}", m.exps), "lhs": l.to_string(), "rhs": r.to_string() })).collect(),
        ))
    });

    c.check("cherednik.h2action_kernel", "the same relation as a kernel-sum identity on 1·K(x,y)", || {
        let (l, r) = h2action_kernel(ctx)?;
        Ok(ks_diff(&l, &r))
    });

    c.check("cherednik.h2action_invariant", "on invariants the group terms reduce to −24ω²(τ+1)(10κ+1)²", || {
        let mut bad = Vec::new();
        if let Some(d) = diff(&h2action_group_terms_on_invariants(ctx), &h2action_invariant_constant()) {
            bad.push(json!({ "class_sizes": d }));
        }
        let inv = InvariantFamilies::new(&ctx.group().vertices.i_plus, 6);
        for (name, f) in [("|x|²", MultiPoly::norm_sq(3)), ("|x|⁴", MultiPoly::norm_sq(3).pow(2)), ("φ^G₆", inv.phi(6)?)] {
            let (l, r) = h2action_invariant_reduction(ctx, &f)?;
            if let Some(d) = diff(&l, &r) {
                bad.push(json!({ "input": name, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("cherednik.h1_kernel", "H⁽¹⁾ − 2(τ+2)𝓗 annihilates 1·K(x,y)", || {
        let e = OpExpr::gen(Gen::Hk(1)).plus(OpExpr::gen(Gen::Hamiltonian).scaled(&tau_plus_2().mul_ref(&ParamScalar::from_int(-2))));
        let out = e.apply(ctx, &KernelSum::kernel(ctx))?;
        Ok(if out.is_empty() { None } else { Some(out.to_json()) })
    });

    c.check("cherednik.ks_dunkl", "𝒟ᵢ(1·K) = yᵢK; 𝒟ᵢ(xⱼK) = (xⱼyᵢ + δᵢⱼ)K + Σ_v κvᵢvⱼ/2 K(xσ_v,y)", || {
        let mut bad = Vec::new();
        let k = KernelSum::kernel(ctx);
        for i in 0..3 {
            let yi = MultiPoly::var(6, 3 + i);
            if ks_dunkl(ctx, &k, &unit(i))? != KernelSum::from_poly(ctx, &yi) {
                bad.push(json!({ "constant": i }));
            }
            for j in 0..3 {
                let xj = MultiPoly::var(6, j);
                let got = ks_dunkl(ctx, &KernelSum::from_poly(ctx, &xj), &unit(i))?;
                let mut want = KernelSum::from_poly(ctx, &xj.mul(&MultiPoly::var(6, 3 + i)));
                if i == j {
                    want.add_term(g.identity, &MultiPoly::one(6));
                }
                for (r, v) in ctx.roots().iter().enumerate() {
                    let c = &(&v[i] * &v[j]) * &GoldenNumber::from_frac(1, 2);
                    want.add_term(g.reflections[r], &MultiPoly::constant(6, ctx.kappa().scale_golden(&c)));
                }
                if got != want {
                    bad.push(json!({ "i": i, "j": j }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("cherednik.ks_equivariance", "𝒟_u(W·F) = W·𝒟_{uW}F for kernel sums F, since wK(x,y) = K(xw,y)", || {
        let mut r = random::rng(seed ^ 0x41);
        let (y0, _) = vertex_pair();
        let mut bad = Vec::new();
        let mut s = KernelSum::from_poly(ctx, &random::polynomial(&mut r, 2, 3, true));
        s.add_term(g.reflections[3], &MultiPoly::var(6, 4).mul(&MultiPoly::var(6, 0)));
        for (k, &w) in [g.reflections[0], g.class_members(crate::group::ClassTag::Rho51)[1], g.class_members(crate::group::ClassTag::Improper)[2]]
            .iter()
            .enumerate()
        {
            for u in [unit(0), y0.clone()] {
                let (l, rr) = ks_equivariance(ctx, &s, &u, w)?;
                if l != rr {
                    bad.push(json!({ "element": k, "u": u.iter().map(|x| x.to_string()).collect::<Vec<_>>() }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("cherednik.soundness", "for words with at most two Dunkl factors, the kernel route at y = 0 agrees with direct application", || {
        let mut r = random::rng(seed ^ 0x42);
        let (y0, y1) = vertex_pair();
        let words = [
            OpWord::single(Gen::Dunkl(unit(0))),
            OpWord::new(vec![Gen::Dunkl(y0.clone()), Gen::Dunkl(unit(2))]),
            OpWord::new(vec![Gen::MulLinear(y1.clone()), Gen::Dunkl(unit(1))]),
            OpWord::new(vec![Gen::Dunkl(unit(1)), Gen::Group(g.reflections[5]), Gen::Dunkl(y1.clone())]),
            OpWord::single(Gen::Laplacian),
            OpWord::new(vec![Gen::NormSq, Gen::Laplacian]),
            OpWord::single(Gen::SigmaSum),
        ];
        let mut bad = Vec::new();
        for (i, w) in words.iter().enumerate() {
            assert!(w.dunkl_count() <= 2);
            let p = random::polynomial(&mut r, 3, 4, true);
            let (ks, direct) = soundness_check(ctx, w, &p)?;
            if let Some(d) = diff(&ks, &direct) {
                bad.push(json!({ "word": w.to_string(), "input": p.to_string(), "diff": d, "index": i }));
            }
        }
        Ok(failures(bad))
    });

    c.check("cherednik.kappa0_j1", "at κ = 0: 𝒥1 = |x|²|y|² − ⟨x,y⟩(⟨x,y⟩+2)", || {
        Ok(diff(&kappa0_check(ctx, &OpExpr::gen(Gen::JSquare), &MultiPoly::one(6))?, &jsquare_one_kappa0_expected()))
    });

    c.check("cherednik.kappa0_hj", "at κ = 0: [𝓗, 𝒥]1 = 0", || {
        let e = OpExpr::commutator(&OpExpr::gen(Gen::Hamiltonian), &OpExpr::gen(Gen::JSquare));
        let out = kappa0_check(ctx, &e, &MultiPoly::one(6))?;
        Ok(if out.is_zero() { None } else { Some(json!(out.to_string())) })
    });

    let wit = c.check("cherednik.h3_j", "at κ = 0: [H̃⁽³⁾, 𝒥]1 ≠ 0, matching the archived witness", || {
        let w = h3_j_commutator_kappa0(ctx)?;
        let archived = MultiPoly::parse(H3_J_WITNESS.trim())?.with_arity(6);
        Ok(if w.is_zero() {
            Some(json!("commutator applied to 1 vanished"))
        } else {
            diff(&w, &archived)
        })
    });
    if wit.passed() {
        wit.witness = Some(json!({ "polynomial": H3_J_WITNESS.trim() }));
    }

    c.check("cherednik.kernel_vs_kappa0", "at κ = 0 the kernel-sum route keeps only K(x,y) and agrees with 𝒟ᵢ → ∂ᵢ + yᵢ", || {
        let (y0, _) = vertex_pair();
        let exprs = [
            OpExpr::gen(Gen::JSquare),
            OpExpr::gen(Gen::Hamiltonian),
            OpExpr::gen(Gen::HaTilde(y0.clone())),
            OpExpr::gen(Gen::Hk(2)),
            OpExpr::commutator(&OpExpr::gen(Gen::Laplacian), &OpExpr::gen(Gen::MulLinear(y0))),
        ];
        let mut bad = Vec::new();
        for (i, e) in exprs.iter().enumerate() {
            if !kernel_matches_kappa0(ctx, e)? {
                bad.push(json!(i));
            }
        }
        Ok(failures(bad))
    });

    c.slow("cherednik.h3_h5", "at κ = 0: [H̃⁽³⁾, H̃⁽⁵⁾]1 ≠ 0", || {
        let w = h3_h5_commutator_kappa0(ctx)?;
        Ok(if w.is_zero() { Some(json!("commutator applied to 1 vanished")) } else { None })
    });

}
