use serde_json::json;

use super::random;
use super::{diff, failures, Checks};
use crate::dunkl::{unit, DunklContext};
use crate::group::Vec3;
use crate::polyalg::{identity, MultiPoly, TruncatedSeries};
use crate::scalars::{factorial, pochhammer, GoldenNumber, ParamScalar, Rational};
use crate::waves::*;

fn int(n: i64) -> ParamScalar {
    ParamScalar::from_int(n)
}

fn kappa_lin(a: i64, b: ParamScalar) -> ParamScalar {
    ParamScalar::kappa().scale_golden(&GoldenNumber::from_int(a)).add_ref(&b)
}

fn inv_fact(m: u32) -> ParamScalar {
    ParamScalar::from_rational(Rational::new(1.into(), factorial(m)))
}

fn two_omega_pow(n: u32) -> ParamScalar {
    ParamScalar::omega().mul_ref(&int(2)).pow(n)
}

fn neg_identity(ctx: &DunklContext) -> usize {
    let mut m = identity();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = GoldenNumber::from_int(-1);
    }
    ctx.group().index_of(&m).expect("−I lies in the icosahedral group")
}

fn neg(v: &Vec3) -> Vec3 {
    let m = GoldenNumber::from_int(-1);
    [&v[0] * &m, &v[1] * &m, &v[2] * &m]
}

struct Families {
    y0: Vec3,
    y1: Vec3,
    f0: QFamily,
    f1: QFamily,
    inv: InvariantFamilies,
}

fn families(ctx: &DunklContext, cap: usize) -> Families {
    let (y0, y1) = vertex_pair();
    let ip = &ctx.group().vertices.i_plus;
    Families {
        f0: QFamily::new(ip, y0.clone(), cap),
        f1: QFamily::new(ip, y1.clone(), cap),
        inv: InvariantFamilies::new(ip, cap.max(16)),
        y0,
        y1,
    }
}

/// `q_n` from the twelve-factor product `(1−r⟨x,y₀⟩)^{−1}Π_{y∈I}(1−r⟨x,y⟩)^{−κ}`.
fn q_from_product(ctx: &DunklContext, y0: &Vec3, order: usize) -> Vec<MultiPoly> {
    let ip = &ctx.group().vertices.i_plus;
    let mut s = TruncatedSeries::binomial(&MultiPoly::linear_form(3, y0), &int(1), 1, order);
    for y in ip.iter().flat_map(|y| [y.clone(), neg(y)]) {
        s = s.product(&TruncatedSeries::binomial(&MultiPoly::linear_form(3, &y), &ParamScalar::kappa(), 1, order));
    }
    s.into_coeffs()
}

pub(crate) fn run(ctx: &DunklContext, c: &mut Checks) {
    let seed = c.opts().seed;
    let fm = families(ctx, 12);
    let (f0, f1, inv) = (&fm.f0, &fm.f1, &fm.inv);
    let (y0, y1) = (&fm.y0, &fm.y1);

    let q2 = c.check("waves.q2", "q₂(x;y₀) = ⟨x,y₀⟩² + 2κ(τ+2)|x|², the r² coefficient of F(r,x;y₀)", || {
        Ok(diff(&f0.q(2)?, &q2_generating(y0)))
    });
    if q2.passed() && q2_as_displayed(y0) != q2_generating(y0) {
        q2.note = Some("the printed q₂ omits κ on the |x|² term; the generating function fixes it as 2κ(τ+2)|x|²".into());
    }

    c.check("waves.genfn", "q_n agrees with the expanded twelve-factor product (1−r⟨x,y₀⟩)^{−1}Π_{y∈I}(1−r⟨x,y⟩)^{−κ}, n ≤ 10", || {
        let direct = q_from_product(ctx, y0, 10);
        let mut bad = Vec::new();
        for (n, d) in direct.iter().enumerate() {
            if let Some(x) = diff(&f0.q(n)?, d) {
                bad.push(json!({ "n": n, "diff": x }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.qderiv", "⟨u,∇_κ⟩q_{2n} = 2⟨u,y₀⟩(6κ+n)q_{2n−1}, ⟨u,∇_κ⟩q_{2n+1} = ⟨u,y₀⟩(10κ+2n+1)q_{2n}, n ≤ 6", || {
        let us = [unit(0), y1.clone(), [GoldenNumber::from_int(1), GoldenNumber::from_int(2), GoldenNumber::from_int(3)]];
        let mut bad = Vec::new();
        for n in 1..=6 {
            for (k, u) in us.iter().enumerate() {
                let w = verify_q_derivative(ctx, f0, n, u)?;
                if !(w.even && w.odd) {
                    bad.push(json!({ "n": n, "u": k, "even": w.even, "odd": w.odd }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.deltam", "Δ_κq_n = (τ+2)ν(n)/ν(n−2) q_{n−2}, n ≤ 12", || {
        let mut bad = Vec::new();
        for n in 2..=12 {
            let (l, r) = laplacian_q_sides(ctx, f0, n)?;
            if let Some(d) = diff(&l, &r) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.parity", "q_n(−x;y₀) = q_n(x;−y₀) = (−1)ⁿq_n(x;y₀)", || {
        let m = neg_identity(ctx);
        let fneg = QFamily::new(&ctx.group().vertices.i_plus, neg(y0), 6);
        let mut bad = Vec::new();
        for n in 0..=12 {
            let q = f0.q(n)?;
            let want = if n % 2 == 0 { q.clone() } else { q.neg() };
            if ctx.act(m, &q) != want {
                bad.push(json!({ "n": n, "case": "−x" }));
            }
            if n <= 6 && fneg.q(n)? != want {
                bad.push(json!({ "n": n, "case": "−y₀" }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.pdelq", "⟨p,q_n(·;y₀)⟩_{κ,ω} = (2ω)^{−n}ν(n)p(y₀) for p ∈ 𝒫_n, five random p per degree, n ≤ 12", || {
        let mut r = random::rng(seed ^ 0x21);
        let mut bad = Vec::new();
        for n in 1..=12u32 {
            let q = f0.q(n as usize)?;
            for k in 0..5 {
                let p = random::homogeneous(&mut r, n as u8, 3, k % 2 == 0);
                let lhs = ctx.pairing_kw(&p, &q)?;
                let rhs = NuSequence::nu(n).mul_ref(&p.eval_point(y0)).div_ref(&two_omega_pow(n))?;
                if let Some(d) = diff(&lhs, &rhs) {
                    bad.push(json!({ "n": n, "p": p.to_string(), "diff": d }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.nu", "ν(n) = 2ⁿ(6κ+1)_s(5κ+1/2)_t with s = ⌊n/2⌋, t = ⌊(n+1)/2⌋", || {
        let mut bad = Vec::new();
        for n in 0..=16u32 {
            let want = int(1 << n)
                .mul_ref(&pochhammer(&kappa_lin(6, int(1)), n / 2))
                .mul_ref(&pochhammer(&kappa_lin(5, ParamScalar::from_frac(1, 2)), n.div_ceil(2)));
            if NuSequence::nu(n) != want {
                bad.push(json!({ "n": n }));
            }
            if n >= 2 && NuSequence::ratio(n, 1) != want.div_ref(&NuSequence::nu(n - 2))? {
                bad.push(json!({ "ratio": n }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.yseq", "q_{2n}(y₀;y₀) = τ^{2n}Y_n⁽⁰⁾, q_{2n+1}(y₀;y₀) = τ^{2n}(τ+2)Y_n⁽⁰⁾, q_{2n}(y₀;y₁) = τ^{2n}Y_n⁽¹⁾, q_{2n+1}(y₀;y₁) = τ^{2n+1}Y_n⁽¹⁾, n ≤ 12", || {
        let mut bad = Vec::new();
        for n in 0..=12u32 {
            let q = f0.q(n as usize)?;
            if let Some(d) = diff(&q.eval_point(y0), &q_at_vertex(n, VertexCase::Same)) {
                bad.push(json!({ "n": n, "case": "same", "diff": d }));
            }
            if let Some(d) = diff(&q.eval_point(y1), &q_at_vertex(n, VertexCase::Tau)) {
                bad.push(json!({ "n": n, "case": "tau", "diff": d }));
            }
        }
        // the sums against the vertex-pair generating functions
        let t2 = ParamScalar::tau().pow(2);
        let five_t2 = t2.mul_ref(&int(5));
        for n in 0..=6u32 {
            let mut same = ParamScalar::zero();
            let mut tau = ParamScalar::zero();
            for j in 0..=n {
                let a = pochhammer(&kappa_lin(1, int(1)), j).mul_ref(&inv_fact(j)).mul_ref(&five_t2.pow(j));
                let b = pochhammer(&kappa_lin(5, int(0)), n - j).mul_ref(&inv_fact(n - j)).mul_ref(&t2.pow(n - j));
                same = same.add_ref(&a.mul_ref(&b));
                let a = pochhammer(&ParamScalar::kappa(), j).mul_ref(&inv_fact(j)).mul_ref(&five_t2.pow(j));
                let b = pochhammer(&kappa_lin(5, int(1)), n - j).mul_ref(&inv_fact(n - j)).mul_ref(&t2.pow(n - j));
                tau = tau.add_ref(&a.mul_ref(&b));
            }
            if same != t2.pow(n).mul_ref(&YSequence::y0(n)) || tau != t2.pow(n).mul_ref(&YSequence::y1(n)) {
                bad.push(json!({ "series": n }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.power_sums", "s_{2m} = Σ_{y∈I₊}⟨x,y⟩^{2m} matches the coordinate form, m ≤ 3; s₂ = 2(τ+2)|x|²", || {
        let ip = &ctx.group().vertices.i_plus;
        let mut bad = Vec::new();
        for m in 1..=3 {
            if let Some(d) = diff(&power_sum_direct(ip, m), &power_sum_closed(m)) {
                bad.push(json!({ "m": m, "diff": d }));
            }
        }
        if power_sum_direct(ip, 1) != MultiPoly::norm_sq(3).scale(&tau_plus_2().mul_ref(&int(2))) {
            bad.push(json!("s₂"));
        }
        Ok(failures(bad))
    });

    c.check("waves.harmonic", "Δ_κφ_n(·;y₀) = 0, n ≤ 12", || {
        let mut bad = Vec::new();
        for n in 0..=12 {
            if !ctx.laplacian(&f0.phi(n)?)?.is_zero() {
                bad.push(json!(n));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.w_heat", "w_n = exp(−Δ_κ/4ω)q_n = Σⱼ (−(τ+2)/4ω)ʲ/j! ν(n)/ν(n−2j) q_{n−2j}, n ≤ 8", || {
        let step = tau_plus_2().neg().div_ref(&ParamScalar::omega().mul_ref(&int(4)))?;
        let mut bad = Vec::new();
        for n in 0..=8u32 {
            let w = f0.w(n as usize)?;
            let heat = ctx.heat_exp(&f0.q(n as usize)?, -1)?;
            let mut sum = MultiPoly::zero(3);
            for j in 0..=n / 2 {
                let c = step.pow(j).mul_ref(&inv_fact(j)).mul_ref(&NuSequence::ratio(n, j));
                sum = sum.add(&f0.q((n - 2 * j) as usize)?.scale(&c));
            }
            if w != heat || w != sum {
                bad.push(json!({ "n": n, "heat": w == heat, "sum": w == sum }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.winpro", "⟨w_n(·;y₀),w_n(·;y₁)⟩₂ = (2ω)^{−n}ν(n)q_n(y₁;y₀), n ≤ 8", || {
        let mut bad = Vec::new();
        for n in 0..=8u32 {
            let lhs = ctx.pairing_l2(&f0.w(n as usize)?, &f1.w(n as usize)?)?;
            let rhs = w_inner_from_q(n, &f0.q(n as usize)?.eval_point(y1));
            if let Some(d) = diff(&lhs, &rhs) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.w2norm", "‖w_{2n}‖₂² = (2ω)^{−2n}ν(2n)τ^{2n}Y_n⁽⁰⁾, ‖w_{2n+1}‖₂² = (2ω)^{−2n−1}ν(2n+1)(τ+2)τ^{2n}Y_n⁽⁰⁾, degree ≤ 8", || {
        let mut bad = Vec::new();
        for n in 0..=4u32 {
            let w = f0.w(2 * n as usize)?;
            if let Some(d) = diff(&ctx.pairing_l2(&w, &w)?, &w_even_inner_closed(n, VertexCase::Same)) {
                bad.push(json!({ "degree": 2 * n, "diff": d }));
            }
            if 2 * n < 8 {
                let w = f0.w(2 * n as usize + 1)?;
                let want = NuSequence::nu(2 * n + 1)
                    .mul_ref(&tau_plus_2())
                    .mul_ref(&ParamScalar::tau().pow(2 * n))
                    .mul_ref(&YSequence::y0(n))
                    .div_ref(&two_omega_pow(2 * n + 1))?;
                if let Some(d) = diff(&ctx.pairing_l2(&w, &w)?, &want) {
                    bad.push(json!({ "degree": 2 * n + 1, "diff": d }));
                }
            }
        }
        Ok(failures(bad))
    });

    let mut odd_as_printed = true;
    let w2ip = c.check("waves.w2ip", "⟨w_{2n}(·;y₀),w_{2n}(·;y₁)⟩₂ = (2ω)^{−2n}ν(2n)τ^{2n}Y_n⁽¹⁾, odd degree (2ω)^{−2n−1}ν(2n+1)τ^{2n+1}Y_n⁽¹⁾, degree ≤ 8", || {
        let mut bad = Vec::new();
        for n in 0..=4u32 {
            let lhs = ctx.pairing_l2(&f0.w(2 * n as usize)?, &f1.w(2 * n as usize)?)?;
            if let Some(d) = diff(&lhs, &w_even_inner_closed(n, VertexCase::Tau)) {
                bad.push(json!({ "degree": 2 * n, "diff": d }));
            }
            if 2 * n < 8 {
                let lhs = ctx.pairing_l2(&f0.w(2 * n as usize + 1)?, &f1.w(2 * n as usize + 1)?)?;
                let core = NuSequence::nu(2 * n + 1).mul_ref(&ParamScalar::tau().pow(2 * n + 1)).mul_ref(&YSequence::y1(n));
                let printed = core.div_ref(&two_omega_pow(2 * n))?;
                odd_as_printed &= lhs == printed;
                if let Some(d) = diff(&lhs, &core.div_ref(&two_omega_pow(2 * n + 1))?) {
                    bad.push(json!({ "degree": 2 * n + 1, "diff": d }));
                }
            }
        }
        Ok(failures(bad))
    });
    if w2ip.passed() && !odd_as_printed {
        w2ip.note = Some("the printed odd-degree line has (2ω)^{−2n}; the computed value carries (2ω)^{−2n−1}, as the general n-form gives".into());
    }

    c.check("waves.wGnorm", "‖w^G_{2n}‖₂² = 6‖w_{2n}‖₂² + 30⟨w_{2n}(·;y₀),w_{2n}(·;y₁)⟩₂ = 6(2ω)^{−2n}ν(2n)τ^{2n}(Y_n⁽⁰⁾+5Y_n⁽¹⁾), 2n ≤ 8", || {
        let mut bad = Vec::new();
        for n in 0..=4u32 {
            let w = inv.w(2 * n as usize)?;
            let lhs = ctx.pairing_l2(&w, &w)?;
            let mid = w_even_inner_closed(n, VertexCase::Same)
                .mul_ref(&int(6))
                .add_ref(&w_even_inner_closed(n, VertexCase::Tau).mul_ref(&int(30)));
            if lhs != mid || mid != norm_invariant_w(n) {
                bad.push(json!({ "n": n, "computed": lhs.to_string(), "closed": norm_invariant_w(n).to_string() }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.phi_inner", "⟨φ_n(·;y₀),φ_n(·;y₁)⟩₂ = Σⱼ (2ω)^{−n}(τ+2)^{2j}/(4ʲj!(−15κ−n+1/2)ⱼ) ν(n)²/ν(n−2j) q_{n−2j}(y₀;y₁), n ≤ 8", || {
        let mut bad = Vec::new();
        for n in 0..=8u32 {
            let lhs = ctx.pairing_l2(&f0.phi(n as usize)?, &f1.phi(n as usize)?)?;
            let rhs = phi_inner_closed(n, |k| q_at_vertex(k, VertexCase::Tau));
            if let Some(d) = diff(&lhs, &rhs) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.invariant_vanishing", "φ^G_{2n} = 0 exactly when the Poincaré series Π(1−t⁶)⁻¹(1−t¹⁰)⁻¹ has no t^{2n} term, 2n ≤ 16", || {
        let mut bad = Vec::new();
        for n in 1..=8u32 {
            let zero = inv.phi(2 * n as usize)?.is_zero();
            let dim = invariant_harmonic_dimension(2 * n);
            if zero != (dim == 0) {
                bad.push(json!({ "degree": 2 * n, "zero": zero, "dim": dim }));
            }
            if [1, 2, 4, 7].contains(&n) && !norm_invariant_phi(n).is_zero() {
                bad.push(json!({ "closed_sum_nonzero": 2 * n }));
            }
        }
        Ok(failures(bad))
    });

    c.check("waves.invariance", "q^G_{2n} is G-invariant and agrees with its power-sum expansion; φ^G_{2n} = Σ_{y∈I₊}φ_{2n}(·;y)", || {
        let g = ctx.group();
        let gens = [g.reflections[0], g.reflections[7], g.class_members(crate::group::ClassTag::Rho51)[0]];
        let mut bad = Vec::new();
        for n in [2usize, 6, 10, 12] {
            let q = inv.q(n)?;
            if q != inv.q_via_power_sums(n)? {
                bad.push(json!({ "power_sums": n }));
            }
            for &w in &gens {
                if ctx.act(w, &q) != q {
                    bad.push(json!({ "q": n, "element": w }));
                }
            }
        }
        for n in [6usize, 10] {
            let p = inv.phi(n)?;
            if p != inv.phi_vertex_sum(n)? {
                bad.push(json!({ "vertex_sum": n }));
            }
            for &w in &gens {
                if ctx.act(w, &p) != p {
                    bad.push(json!({ "phi": n, "element": w }));
                }
            }
        }
        Ok(failures(bad))
    });

    for two_n in [6u32, 10, 12, 16] {
        let id = format!("waves.norm_phiG{}", two_n);
        let anchor = format!("‖φ^G_{}‖₂² equals the closed hypergeometric sum and the displayed product form", two_n);
        c.check(&id, &anchor, || {
            let n = two_n / 2;
            let p = inv.phi(two_n as usize)?;
            let computed = ctx.pairing_l2(&p, &p)?;
            let sum = norm_invariant_phi(n);
            let display = norm_invariant_phi_display(two_n).expect("displayed degree");
            let from_value = norm_invariant_phi_from_value(n, &p.eval_point(y0));
            let ok = computed == sum && computed == display && computed == from_value;
            Ok(if ok {
                None
            } else {
                Some(json!({
                    "computed": computed.to_string(),
                    "sum": sum.to_string(),
                    "display": display.to_string(),
                    "from_vertex_value": from_value.to_string(),
                }))
            })
        });
    }

    let mut w3_printed_ok = true;
    let wt = c.check("waves.wtophi", "w_n = Σⱼ (−(τ+2)/4ω)ʲ ν(n)/ν(n−2j)/(15κ+3/2+n−2j)ⱼ L_j^{(15κ+1/2+n−2j)}(ω|x|²)φ_{n−2j}, n ≤ 8", || {
        let mut bad = Vec::new();
        for n in 0..=8 {
            let mut acc = MultiPoly::zero(3);
            for (_, c, p) in wtophi_expand(ctx, f0, n)? {
                acc = acc.add(&p.scale(&c));
            }
            if let Some(d) = diff(&acc, &f0.w(n)?) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        if w3_with_laguerre(ctx, f0)? != f0.w(3)? {
            bad.push(json!("w₃ with L₁"));
        }
        w3_printed_ok = w3_as_displayed(f0)? == f0.w(3)?;
        Ok(failures(bad))
    });
    if wt.passed() && !w3_printed_ok {
        wt.note = Some("the printed w₃ expansion drops the factor L₁^{(15κ+3/2)}(ω|x|²) on φ₁; with it the identity holds".into());
    }

    c.check("waves.laguerre", "‖L_m^{(α)}(ω|x|²)φ‖₂² = (1/m!)(α+1)_m‖φ‖₂² and 𝓗̃ eigenvalue E_{deg+2m}, vertex φ_n (n ≤ 3, m ≤ 2) and φ^G₆ (m ≤ 1)", || {
        let mut bad = Vec::new();
        let mut cases: Vec<(usize, u32, WaveSource)> = Vec::new();
        for n in 0..=3 {
            for m in 0..=2 {
                cases.push((n, m, WaveSource::Vertex));
            }
        }
        cases.push((3, 0, WaveSource::Invariant));
        cases.push((3, 1, WaveSource::Invariant));
        for (n, m, src) in cases {
            let lw = laguerre_wave(ctx, f0, Some(inv), n, m, src)?;
            let lhs = ctx.pairing_l2(&lw.poly, &lw.poly)?;
            let rhs = ctx.pairing_l2(&lw.phi, &lw.phi)?.mul_ref(&lw.norm_factor);
            let en = eigenvalue_of(&ctx.hamiltonian_tilde(&lw.poly)?, &lw.poly)?;
            if lhs != rhs || en != Some(ctx.energy(lw.degree + 2 * m)) {
                bad.push(json!({ "n": n, "m": m, "source": format!("{:?}", src), "norm": lhs == rhs }));
            }
        }
        Ok(failures(bad))
    });

    let mut alt = Vec::new();
    let en = c.check("waves.energy", "𝓗̃w_n = ω(3+30κ+2n)w_n, n ≤ 6, checked against the printed ω(15κ+2n+3)", || {
        let mut bad = Vec::new();
        for n in 0..=6 {
            let a = adjudicate_w_energy(ctx, f0, n)?;
            alt.push(json!({
                "n": n,
                "computed": a.computed.as_ref().map(|x| x.to_string()),
                "matches_standard": a.matches_standard(),
                "matches_printed": a.matches_alternative(),
            }));
            if !a.matches_standard() {
                bad.push(alt.last().unwrap().clone());
            }
        }
        Ok(failures(bad))
    });
    if en.passed() {
        en.note = Some("computed eigenvalue is ω(3+30κ+2n) for every n; the printed constant ω(15κ+2n+3) does not match".into());
        en.witness = Some(json!(alt));
    }
}

pub(crate) fn jsquare(ctx: &DunklContext, c: &mut Checks) {
    let fm = families(ctx, 8);
    let (f0, inv) = (&fm.f0, &fm.inv);

    c.check("jsq.lemma", "𝒥φ = −⟨x,∇_κ⟩²φ − ⟨x,∇_κ⟩φ − 2κΣσ_v⟨x,∇_κ⟩φ and ⟨x,∇_κ⟩φ = (n+15κ)φ − κΣσ_vφ for harmonic φ ∈ 𝒫_n", || {
        let mut bad = Vec::new();
        for n in 0..=5 {
            let phi = f0.phi(n)?;
            let e = ctx.x_dot_nabla(&phi)?;
            let rhs = ctx.x_dot_nabla(&e)?.add(&e).add(&ctx.kappa_sigma_sum(&e).scale_int(2)).neg();
            if ctx.angular_j_square(&phi)? != rhs {
                bad.push(json!({ "jsq": n }));
            }
            let want = phi.scale(&kappa_lin(15, int(n as i64))).sub(&ctx.kappa_sigma_sum(&phi));
            if e != want {
                bad.push(json!({ "euler": n }));
            }
        }
        Ok(failures(bad))
    });

    c.check("jsq.sigma_sums", "Σσ_vφ_{2n+1}(·;y) = 5φ_{2n+1}, Σσ_vφ_{2n}(·;y) = 3φ_{2n} + 2φ^G_{2n}, Σσ_vφ^G_{2n} = 15φ^G_{2n}", || {
        let mut bad = Vec::new();
        for n in 0..=3 {
            let p = f0.phi(2 * n + 1)?;
            if ctx.sigma_sum(&p) != p.scale_int(5) {
                bad.push(json!({ "odd": 2 * n + 1 }));
            }
            let p = f0.phi(2 * n + 2)?;
            let g = inv.phi(2 * n + 2)?;
            if ctx.sigma_sum(&p) != p.scale_int(3).add(&g.scale_int(2)) {
                bad.push(json!({ "even": 2 * n + 2 }));
            }
        }
        let g = inv.phi(6)?;
        if ctx.sigma_sum(&g) != g.scale_int(15) {
            bad.push(json!("invariant"));
        }
        Ok(failures(bad))
    });

    c.check("jsq.phi_odd", "𝒥φ_{2n+1}(·;y) = −2(10κ+2n+1)(10κ+n+1)φ_{2n+1}(·;y), n ≤ 3", || {
        let mut bad = Vec::new();
        for n in 0..=3u32 {
            let p = f0.phi(2 * n as usize + 1)?;
            if let Some(d) = diff(&ctx.angular_j_square(&p)?, &p.scale(&jsq::phi_odd(n))) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("jsq.phi_invariant", "𝒥φ^G_{2n} = −2n(30κ+2n+1)φ^G_{2n}, 2n = 6", || {
        let p = inv.phi(6)?;
        Ok(diff(&ctx.angular_j_square(&p)?, &p.scale(&jsq::phi_invariant(3))))
    });

    c.check("jsq.phi_even", "𝒥φ_{2n}(·;y₀) = −2(6κ+n)(18κ+2n+1)φ_{2n}(·;y₀) + 2κ(18κ+1)φ^G_{2n}, n ≤ 4", || {
        let mut bad = Vec::new();
        for n in 1..=4u32 {
            let p = f0.phi(2 * n as usize)?;
            let (a, b) = jsq::phi_even(n);
            let rhs = p.scale(&a).add(&inv.phi(2 * n as usize)?.scale(&b));
            if let Some(d) = diff(&ctx.angular_j_square(&p)?, &rhs) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("jsq.combination", "𝒥(φ_{2n}(·;y₀) − φ^G_{2n}/6) = −2(6κ+n)(18κ+2n+1)(φ_{2n}(·;y₀) − φ^G_{2n}/6), n ≤ 4", || {
        let mut bad = Vec::new();
        for n in 1..=4u32 {
            let p = f0.phi(2 * n as usize)?.sub(&inv.phi(2 * n as usize)?.scale(&ParamScalar::from_frac(1, 6)));
            let (a, _) = jsq::phi_even(n);
            if let Some(d) = diff(&ctx.angular_j_square(&p)?, &p.scale(&a)) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("jsq.w", "𝒥w₂, 𝒥w₃, 𝒥w₄ in terms of φ_n and L₁^{(α)}(ω|x|²)φ_{n−2}", || {
        let mut bad = Vec::new();
        for (n, rhs) in jsq_w_examples(ctx, f0)? {
            if let Some(d) = diff(&ctx.angular_j_square(&f0.w(n as usize)?)?, &rhs) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("jsq.isotype", "𝒥p = −((15−λ)κ+n)((15+λ)κ+n+1)p on 𝒫₁ (λ = 5) and on φ^G₆ (λ = 15)", || {
        let mut bad = Vec::new();
        let iso = |lam: i64, n: i64| kappa_lin(15 - lam, int(n)).mul_ref(&kappa_lin(15 + lam, int(n + 1))).neg();
        for i in 0..3 {
            let p = MultiPoly::var(3, i);
            if ctx.angular_j_square(&p)? != p.scale(&iso(5, 1)) {
                bad.push(json!({ "x": i }));
            }
        }
        if iso(15, 6) != jsq::phi_invariant(3) {
            bad.push(json!("invariant"));
        }
        Ok(failures(bad))
    });
}

pub(crate) fn spectral(ctx: &DunklContext, c: &mut Checks) {
    let (y0, _) = vertex_pair();
    let f0 = QFamily::new(&ctx.group().vertices.i_plus, y0, 2);
    let c3 = ParamScalar::omega().pow(3).mul_ref(&ParamScalar::from_golden(GoldenNumber::ints(3, 4)));
    let cubic = |a: i64, b: i64, cc: i64, d: i64| {
        let k = ParamScalar::kappa();
        k.pow(3).mul_ref(&int(a)).add_ref(&k.pow(2).mul_ref(&int(b))).add_ref(&k.mul_ref(&int(cc))).add_ref(&int(d))
    };

    c.slow("spectral.phi2", "H̃⁽³⁾φ₂(·;y) = 2ω³(4τ+3)(25080κ³+19772κ²+5058κ+419)φ₂(·;y)", || {
        let p = f0.phi(2)?;
        let want = c3.mul_ref(&int(2)).mul_ref(&cubic(25080, 19772, 5058, 419));
        Ok(diff(&ctx.h_k_tilde(3, &p)?, &p.scale(&want)))
    });

    c.slow("spectral.w2", "H̃⁽³⁾w₂ = 10ω³(4τ+3)(3000κ³+4276κ²+1386κ+127)w₂ + 48ω³(4τ+3)(420κ³−67κ²−78κ−9)φ₂", || {
        let w = f0.w(2)?;
        let rhs = w
            .scale(&c3.mul_ref(&int(10)).mul_ref(&cubic(3000, 4276, 1386, 127)))
            .add(&f0.phi(2)?.scale(&c3.mul_ref(&int(48)).mul_ref(&cubic(420, -67, -78, -9))));
        Ok(diff(&ctx.h_k_tilde(3, &w)?, &rhs))
    });

    c.slow("spectral.laguerre2", "H̃⁽³⁾L₂^{(15κ+1/2)}(ω|x|²) = 2ω³(4τ+3)(30κ+11)(500κ²+1092κ+245)L₂^{(15κ+1/2)}(ω|x|²)", || {
        let l = ctx.radial_laguerre(2, &kappa_lin(15, ParamScalar::from_frac(1, 2)), 3);
        let k = ParamScalar::kappa();
        let quad = k.pow(2).mul_ref(&int(500)).add_ref(&k.mul_ref(&int(1092))).add_ref(&int(245));
        let want = c3.mul_ref(&int(2)).mul_ref(&kappa_lin(30, int(11))).mul_ref(&quad);
        Ok(diff(&ctx.h_k_tilde(3, &l)?, &l.scale(&want)))
    });
}
