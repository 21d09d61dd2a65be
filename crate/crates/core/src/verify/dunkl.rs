use serde_json::json;

use super::random;
use super::{diff, failures, Checks};
use crate::dunkl::{unit, DunklContext, Ladder};
use crate::error::Result;
use crate::group::Vec3;
use crate::polyalg::{dot, monomials_of_degree, vec_mat, MultiPoly};
use crate::scalars::{factorial, pochhammer, GoldenNumber, ParamScalar, Rational};
use crate::waves::{vertex_pair, QFamily};

fn int(n: i64) -> ParamScalar {
    ParamScalar::from_int(n)
}

fn kappa_lin(a: i64, b: ParamScalar) -> ParamScalar {
    ParamScalar::kappa().scale_golden(&GoldenNumber::from_int(a)).add_ref(&b)
}

pub(crate) fn basis(max_deg: u8) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        for m in monomials_of_degree(d) {
            out.push(MultiPoly::term(3, m, int(1)));
        }
    }
    out
}

/// Run `f` on every basis element; collect the mismatches.
fn on_basis<F>(max_deg: u8, f: F) -> Result<Option<serde_json::Value>>
where
    F: Fn(&MultiPoly) -> Result<(MultiPoly, MultiPoly)> + Sync,
{
    use rayon::prelude::*;
    let results: Vec<Result<Option<serde_json::Value>>> = basis(max_deg)
        .par_iter()
        .map(|p| {
            let (l, r) = f(p)?;
            Ok(if l == r { None } else { Some(json!({ "input": p.to_string(), "lhs": l.to_string(), "rhs": r.to_string() })) })
        })
        .collect();
    let mut bad = Vec::new();
    for r in results {
        if let Some(v) = r? {
            bad.push(v);
        }
    }
    Ok(failures(bad))
}

fn inv_fact(m: u32) -> ParamScalar {
    ParamScalar::from_rational(Rational::new(1.into(), factorial(m)))
}

/// `𝒟₁x₁³ = (3 + 23κ/2)x₁² − (κ/2)(τ−7)x₂² + (κ/2)(τ+6)x₃²`.
pub fn d1_x1_cubed_expected() -> MultiPoly {
    MultiPoly::parse("(3 + 23*k/2)*x1^2 - (k/2)*(tau - 7)*x2^2 + (k/2)*(tau + 6)*x3^2").expect("fixed expression")
}

pub(crate) fn run(ctx: &DunklContext, c: &mut Checks) {
    let seed = c.opts().seed;
    let (y0, y1) = vertex_pair();
    let e = |i| unit(i);
    let dirs: Vec<Vec3> = vec![e(0), e(1), e(2), y0.clone()];

    c.check("dunkl.d1x1cubed", "𝒟₁x₁³ = (3+23κ/2)x₁² − (κ/2)(τ−7)x₂² + (κ/2)(τ+6)x₃²", || {
        let p = MultiPoly::parse("x1^3")?;
        Ok(diff(&ctx.dunkl_i(0, &p)?, &d1_x1_cubed_expected()))
    });

    c.check("dunkl.commute", "𝒟ᵢ𝒟ⱼ = 𝒟ⱼ𝒟ᵢ on 𝒫≤6", || {
        let mut bad = Vec::new();
        for p in basis(6) {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let a = ctx.dunkl_i(i, &ctx.dunkl_i(j, &p)?)?;
                let b = ctx.dunkl_i(j, &ctx.dunkl_i(i, &p)?)?;
                if a != b {
                    bad.push(json!({ "input": p.to_string(), "i": i, "j": j }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("dunkl.xDx", "[⟨a,∇_κ⟩,⟨b,x⟩] = ⟨a,b⟩ + 2Σ κ⟨a,v⟩⟨b,v⟩/|v|² σ_v on 𝒫≤4", || {
        on_basis(4, |p| {
            let mut l = MultiPoly::zero(3);
            let mut r = MultiPoly::zero(3);
            for a in &dirs {
                for b in &dirs {
                    let lhs = ctx.dunkl(a, &ctx.mul_linear(b, p))?.sub(&ctx.mul_linear(b, &ctx.dunkl(a, p)?));
                    let mut rhs = p.scale_golden(&dot(a, b));
                    for (k, v) in ctx.roots().iter().enumerate() {
                        let f = &(&dot(a, v) * &dot(b, v)) * &GoldenNumber::from_frac(1, 2);
                        if !num_traits::Zero::is_zero(&f) {
                            rhs = rhs.add(&ctx.reflect(k, p).scale(&ctx.kappa().scale_golden(&f)));
                        }
                    }
                    // tag each pair so a mismatch cannot cancel across pairs
                    let tag = MultiPoly::parse(&format!("y1^{}*y2^{}", dirs.iter().position(|d| d == a).unwrap(), dirs.iter().position(|d| d == b).unwrap()))?;
                    l = l.add(&lhs.mul(&tag));
                    r = r.add(&rhs.mul(&tag));
                }
            }
            Ok((l, r))
        })
    });

    c.check("dunkl.Dbxsq", "[Δ_κ,⟨b,x⟩] = 2⟨b,∇_κ⟩ and [|x|²,⟨a,∇_κ⟩] = −2⟨a,x⟩ on 𝒫≤5", || {
        on_basis(5, |p| {
            let mut l = MultiPoly::zero(6);
            let mut r = MultiPoly::zero(6);
            for (k, b) in dirs.iter().enumerate() {
                let tag = MultiPoly::parse(&format!("y1^{}", k))?;
                let c1 = ctx.laplacian(&ctx.mul_linear(b, p))?.sub(&ctx.mul_linear(b, &ctx.laplacian(p)?));
                l = l.add(&c1.mul(&tag));
                r = r.add(&ctx.dunkl(b, p)?.scale_int(2).mul(&tag));
                let tag2 = MultiPoly::parse(&format!("y2^{}", k + 1))?;
                let c2 = ctx.mul_norm_sq(&ctx.dunkl(b, p)?).sub(&ctx.dunkl(b, &ctx.mul_norm_sq(p))?);
                l = l.add(&c2.mul(&tag2));
                r = r.add(&ctx.mul_linear(b, p).scale_int(-2).mul(&tag2));
            }
            Ok((l, r))
        })
    });

    c.check("dunkl.xsq_delta", "[Δ_κ,|x|²] = 2(N + 2γ_κ + 2δ) on 𝒫≤4", || {
        on_basis(4, |p| {
            let l = ctx.laplacian(&ctx.mul_norm_sq(p))?.sub(&ctx.mul_norm_sq(&ctx.laplacian(p)?));
            let r = p.scale(&int(3).add_ref(&ctx.gamma().scale_golden(&GoldenNumber::from_int(2)))).add(&ctx.euler(p).scale_int(2)).scale_int(2);
            Ok((l, r))
        })
    });

    c.check("dunkl.xdotnabla", "⟨x,∇_κ⟩ = δ + γ_κ − κΣσ_v on 𝒫≤4", || {
        on_basis(4, |p| Ok((ctx.x_dot_nabla(p)?, ctx.x_dot_nabla_closed(p))))
    });

    c.check("dunkl.angsq", "𝒥 = |x|²Δ_κ − ⟨x,∇_κ⟩² − (N−2)⟨x,∇_κ⟩ − 2Σκσ_v⟨x,∇_κ⟩ on 𝒫≤4", || {
        on_basis(4, |p| Ok((ctx.angular_j_square(p)?, ctx.angular_j_square_closed(p)?)))
    });

    let pairs: Vec<(Vec3, Vec3)> = vec![(e(0), e(1)), (e(1), e(2)), (y0.clone(), y1.clone())];
    c.check("dunkl.jprops", "J_{a,b} = ⟨b,∇_κ⟩⟨a,x⟩ − ⟨a,∇_κ⟩⟨b,x⟩; [Δ_κ,J_{a,b}] = 0 = [|x|²,J_{a,b}] on 𝒫≤4", || {
        on_basis(4, |p| {
            let mut l = MultiPoly::zero(6);
            let mut r = MultiPoly::zero(6);
            for (k, (a, b)) in pairs.iter().enumerate() {
                let tag = MultiPoly::parse(&format!("y1^{}", k))?;
                let j = ctx.angular_j(a, b, p)?;
                l = l.add(&j.mul(&tag));
                r = r.add(&ctx.angular_j_reversed(a, b, p)?.mul(&tag));
                let c1 = ctx.laplacian(&j)?.sub(&ctx.angular_j(a, b, &ctx.laplacian(p)?)?);
                let c2 = ctx.mul_norm_sq(&j).sub(&ctx.angular_j(a, b, &ctx.mul_norm_sq(p))?);
                l = l.add(&c1.mul(&tag).mul(&MultiPoly::parse("y2")?));
                l = l.add(&c2.mul(&tag).mul(&MultiPoly::parse("y3")?));
            }
            Ok((l, r))
        })
    });

    c.check("dunkl.ham_ha", "[𝓗̃, H̃_a] = 0 on 𝒫≤4, a = (0,τ,1)", || {
        on_basis(4, |p| {
            let l = ctx.hamiltonian_tilde(&ctx.h_a_tilde(&y0, p)?)?;
            let r = ctx.h_a_tilde(&y0, &ctx.hamiltonian_tilde(p)?)?;
            Ok((l, r))
        })
    });

    c.check("dunkl.h1", "H̃⁽¹⁾ = 2(τ+2)𝓗̃ on 𝒫≤4", || {
        on_basis(4, |p| {
            let r = ctx.hamiltonian_tilde(p)?.scale_golden(&GoldenNumber::ints(4, 2));
            Ok((ctx.h_k_tilde(1, p)?, r))
        })
    });

    c.check("dunkl.ham_j", "[𝓗̃, 𝒥] = 0 on 𝒫≤4", || {
        on_basis(4, |p| {
            Ok((ctx.hamiltonian_tilde(&ctx.angular_j_square(p)?)?, ctx.angular_j_square(&ctx.hamiltonian_tilde(p)?)?))
        })
    });

    c.check("dunkl.w_haw", "w⁻¹H̃_a w = H̃_{aw} on 𝒫≤3", || {
        let g = ctx.group();
        let ws = [g.reflections[0], g.class_members(crate::group::ClassTag::Rho51)[0], g.class_members(crate::group::ClassTag::Improper)[0]];
        on_basis(3, |p| {
            let mut l = MultiPoly::zero(6);
            let mut r = MultiPoly::zero(6);
            for (k, &w) in ws.iter().enumerate() {
                let tag = MultiPoly::parse(&format!("y1^{}", k))?;
                let aw = vec_mat(&y0, &g.elements[w].matrix);
                l = l.add(&ctx.act(g.inverse(w), &ctx.h_a_tilde(&y0, &ctx.act(w, p))?).mul(&tag));
                r = r.add(&ctx.h_a_tilde(&aw, p)?.mul(&tag));
            }
            Ok((l, r))
        })
    });

    let fam = QFamily::new(&ctx.group().vertices.i_plus, y0.clone(), 8);

    c.check("dunkl.lapm", "Δ_κᵐ|x|^{2m}φ = 2^{2m}m!(N/2+γ_κ+n)_m φ, φ = φ_n(·;y₀), n ≤ 4, m ≤ 3", || {
        let mut bad = Vec::new();
        for n in 0..=4u32 {
            let phi = fam.phi(n as usize)?;
            for m in 1..=3u32 {
                let lhs = ctx.laplacian_pow(&MultiPoly::norm_sq(3).pow(m).mul(&phi), m)?;
                let c = int(4i64.pow(m))
                    .mul_ref(&ParamScalar::from_rational(Rational::from_integer(factorial(m))))
                    .mul_ref(&pochhammer(&kappa_lin(15, ParamScalar::from_frac(3, 2).add_ref(&int(n as i64))), m));
                if let Some(d) = diff(&lhs, &phi.scale(&c)) {
                    bad.push(json!({ "n": n, "m": m, "diff": d }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("dunkl.delxsq1", "Δ_κ|x|^{2k}φ = 2k(N+2γ_κ+2n+2k−2)|x|^{2k−2}φ, φ = φ_n(·;y₀), n ≤ 4, k ≤ 3", || {
        let mut bad = Vec::new();
        for n in 0..=4u32 {
            let phi = fam.phi(n as usize)?;
            for k in 1..=3u32 {
                let lhs = ctx.laplacian(&MultiPoly::norm_sq(3).pow(k).mul(&phi))?;
                let c = kappa_lin(30, int(3 + 2 * n as i64 + 2 * k as i64 - 2)).mul_ref(&int(2 * k as i64));
                let rhs = MultiPoly::norm_sq(3).pow(k - 1).mul(&phi).scale(&c);
                if let Some(d) = diff(&lhs, &rhs) {
                    bad.push(json!({ "n": n, "k": k, "diff": d }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("dunkl.hmproj", "Δ_κΛ_n p = 0 (random p, n ≤ 8); Λ_n φ = φ on harmonics; Λ₂|x|² = 0", || {
        let mut r = random::rng(seed ^ 0x11);
        let mut bad = Vec::new();
        for n in 1..=8u8 {
            let p = random::homogeneous(&mut r, n, 4, true);
            let h = ctx.harmonic_project(&p)?;
            if !ctx.laplacian(&h)?.is_zero() {
                bad.push(json!({ "n": n, "input": p.to_string() }));
            }
        }
        for n in 0..=5usize {
            let phi = fam.phi(n)?;
            if let Some(d) = diff(&ctx.harmonic_project(&phi)?, &phi) {
                bad.push(json!({ "idempotent_n": n, "diff": d }));
            }
        }
        if !ctx.harmonic_project(&MultiPoly::norm_sq(3))?.is_zero() {
            bad.push(json!("Λ₂|x|² ≠ 0"));
        }
        Ok(failures(bad))
    });

    c.check("dunkl.hmex", "p = Σⱼ |x|^{2j}/(4ʲj!(N/2+γ_κ+n−2j)ⱼ) Λ_{n−2j}Δ_κʲp, random degree 7", || {
        let mut r = random::rng(seed ^ 0x12);
        let p = random::homogeneous(&mut r, 7, 6, true);
        let mut acc = MultiPoly::zero(3);
        for (j, part) in ctx.harmonic_decompose(&p)? {
            if !ctx.laplacian(&part)?.is_zero() {
                return Ok(Some(json!({ "non_harmonic_part": j })));
            }
            acc = acc.add(&MultiPoly::norm_sq(3).pow(j).mul(&part));
        }
        Ok(diff(&acc, &p))
    });

    c.check("dunkl.heat_inverse", "exp(−Δ_κ/4ω)exp(Δ_κ/4ω)p = p, random degree 6", || {
        let mut r = random::rng(seed ^ 0x13);
        let p = random::polynomial(&mut r, 6, 8, true);
        Ok(diff(&ctx.heat_exp(&ctx.heat_exp(&p, 1)?, -1)?, &p))
    });

    c.check("dunkl.pairing_basics", "⟨1,1⟩ = 1; ⟨|x|²,1⟩₂ = (3+30κ)/(2ω); symmetry, degree orthogonality, G-invariance", || {
        let mut bad = Vec::new();
        let one = MultiPoly::one(3);
        if ctx.pairing_kw(&one, &one)? != int(1) {
            bad.push(json!("⟨1,1⟩ ≠ 1"));
        }
        let want = kappa_lin(30, int(3)).div_ref(&ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2)))?;
        if let Some(d) = diff(&ctx.pairing_l2(&MultiPoly::norm_sq(3), &one)?, &want) {
            bad.push(json!({ "xsq": d }));
        }
        let mut r = random::rng(seed ^ 0x14);
        let g = ctx.group();
        for k in 0..3 {
            let p = random::homogeneous(&mut r, 3, 4, true);
            let q = random::homogeneous(&mut r, 3, 4, true);
            let pq = ctx.pairing_kw(&p, &q)?;
            if pq != ctx.pairing_kw(&q, &p)? {
                bad.push(json!({ "symmetry": k }));
            }
            let w = g.class_members(crate::group::ClassTag::Rho52)[k];
            if pq != ctx.pairing_kw(&ctx.act(w, &p), &ctx.act(w, &q))? {
                bad.push(json!({ "invariance": k }));
            }
            if !ctx.pairing_kw(&p, &random::homogeneous(&mut r, 2, 3, true))?.is_zero() {
                bad.push(json!({ "orthogonality": k }));
            }
        }
        Ok(failures(bad))
    });

    c.check("dunkl.eoperator", "⟨Ep,Eq⟩_{κ,ω} = c∫pq h_κ²e^{−ω|x|²}, κ ∈ {0,1}, 20 random pairs of degree ≤ 4", || {
        e_operator_oracle(ctx, seed ^ 0x15, 20)
    });

    let wf = QFamily::new(&ctx.group().vertices.i_plus, y0.clone(), 6);
    c.check("dunkl.ladder", "𝓗̃A⁺_a w_n = E_{n+1}A⁺_a w_n (n ≤ 4); ⟨A⁻_a p,q⟩₂ = ⟨p,A⁺_a q⟩₂", || {
        let mut bad = Vec::new();
        for n in 0..=4u32 {
            let up = ctx.raise_lower(&y1, Ladder::Raise, &wf.w(n as usize)?)?;
            let l = ctx.hamiltonian_tilde(&up)?;
            if let Some(d) = diff(&l, &up.scale(&ctx.energy(n + 1))) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        let mut r = random::rng(seed ^ 0x16);
        for k in 0..3 {
            let p = random::polynomial(&mut r, 3, 4, false);
            let q = random::polynomial(&mut r, 2, 4, false);
            let a = if k == 0 { y0.clone() } else { unit(k) };
            let l = ctx.pairing_l2(&ctx.lower(&a, &p)?, &q)?;
            let rr = ctx.pairing_l2(&p, &ctx.raise(&a, &q)?)?;
            if let Some(d) = diff(&l, &rr) {
                bad.push(json!({ "adjoint": k, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    c.check("dunkl.hmXLag", "𝓗̃ L_m^{(α)}(ω|x|²)φ_n = E_{n+2m} L_m^{(α)}(ω|x|²)φ_n, α = N/2+γ_κ+n−1", || {
        let mut bad = Vec::new();
        for n in 0..=3u32 {
            for m in 0..=2u32 {
                let alpha = kappa_lin(15, ParamScalar::from_frac(1, 2).add_ref(&int(n as i64)));
                let f = ctx.radial_laguerre(m, &alpha, 3).mul(&fam.phi(n as usize)?);
                if let Some(d) = diff(&ctx.hamiltonian_tilde(&f)?, &f.scale(&ctx.energy(n + 2 * m))) {
                    bad.push(json!({ "n": n, "m": m, "diff": d }));
                }
            }
        }
        Ok(failures(bad))
    });

    c.check("dunkl.delLagh", "Δ_κL_m^{(α)}(ω|x|²)φ = −4ω(α+m)L_{m−1}^{(α)}(ω|x|²)φ, φ = φ₂(·;y₀), α = 15κ+5/2, m ≤ 3", || {
        let alpha = kappa_lin(15, ParamScalar::from_frac(5, 2));
        let phi = fam.phi(2)?;
        let mut bad = Vec::new();
        for m in 1..=3u32 {
            let lhs = ctx.laplacian(&ctx.radial_laguerre(m, &alpha, 3).mul(&phi))?;
            let c = ParamScalar::omega().mul_ref(&alpha.add_ref(&int(m as i64))).mul_ref(&int(-4));
            let rhs = ctx.radial_laguerre(m - 1, &alpha, 3).mul(&phi).scale(&c);
            if let Some(d) = diff(&lhs, &rhs) {
                bad.push(json!({ "m": m, "diff": d }));
            }
        }
        Ok(failures(bad))
    });

    let laghm = c.check("dunkl.laghm", "⟨p_{n,m},q_{n,m}⟩₂ = (1/m!)(N/2+γ_κ+n)_m⟨p,q⟩₂, p = φ₂(·;y₀), q = φ₂(·;y₁), m ≤ 2", || {
        let f1 = QFamily::new(&ctx.group().vertices.i_plus, y1.clone(), 2);
        let (p, q) = (fam.phi(2)?, f1.phi(2)?);
        let base = ctx.pairing_l2(&p, &q)?;
        let alpha = kappa_lin(15, ParamScalar::from_frac(5, 2));
        let mut bad = Vec::new();
        for m in 0..=2u32 {
            let l = ctx.radial_laguerre(m, &alpha, 3);
            let lhs = ctx.pairing_l2(&l.mul(&p), &l.mul(&q))?;
            let rhs = base.mul_ref(&inv_fact(m)).mul_ref(&pochhammer(&alpha.add_ref(&int(1)), m));
            if let Some(d) = diff(&lhs, &rhs) {
                bad.push(json!({ "m": m, "diff": d }));
            }
        }
        Ok(failures(bad))
    });
    if laghm.passed() {
        laghm.note = Some("verified with 1/m!; the printed statement has 1/n!, which differs whenever m ≠ n (here n = 2, m = 1)".into());
    }

    c.check("dunkl.wav2laghm", "p = Σⱼ (−1)ʲ/((4ω)ʲ(N/2+γ_κ+n−2j)ⱼ) L_j^{(N/2+γ_κ+n−2j−1)}(ω|x|²) Λ_{n−2j}Δ_κʲπ_n p, random wavefunctions of degree ≤ 6", || {
        let mut r = random::rng(seed ^ 0x17);
        let mut bad = Vec::new();
        for n in 2..=6u32 {
            let h = random::homogeneous(&mut r, n as u8, 4, false);
            let p = ctx.heat_exp(&h, -1)?;
            let mut acc = MultiPoly::zero(3);
            let mut d = h.clone();
            for j in 0..=n / 2 {
                if j > 0 {
                    d = ctx.laplacian(&d)?;
                }
                let k = n as i64 - 2 * j as i64;
                let poch = pochhammer(&kappa_lin(15, ParamScalar::from_frac(3, 2).add_ref(&int(k))), j);
                let c = int(if j % 2 == 0 { 1 } else { -1 })
                    .div_ref(&ParamScalar::omega().mul_ref(&int(4)).pow(j).mul_ref(&poch))?;
                let l = ctx.radial_laguerre(j, &kappa_lin(15, ParamScalar::from_frac(1, 2).add_ref(&int(k))), 3);
                acc = acc.add(&l.mul(&ctx.harmonic_project(&d)?).scale(&c));
            }
            if let Some(dd) = diff(&acc, &p) {
                bad.push(json!({ "n": n, "diff": dd }));
            }
        }
        Ok(failures(bad))
    });

    let expwp = c.check("dunkl.expwp", "𝓗̃ exp(−Δ_κ/4ω)h = ω(N+2γ_κ+2n) exp(−Δ_κ/4ω)h for h ∈ 𝒫_n, n ≤ 5", || {
        let mut r = random::rng(seed ^ 0x18);
        let mut bad = Vec::new();
        for n in 0..=5u32 {
            let h = random::homogeneous(&mut r, n as u8, 3, true);
            let p = ctx.heat_exp(&h, -1)?;
            if let Some(d) = diff(&ctx.hamiltonian_tilde(&p)?, &p.scale(&ctx.energy(n))) {
                bad.push(json!({ "n": n, "diff": d }));
            }
        }
        Ok(failures(bad))
    });
    if expwp.passed() {
        expwp.note = Some("the printed statement reads ω(N+2γ_κ+n); the computed energy is ω(N+2γ_κ+2n)".into());
    }

    c.check("dunkl.operator_linearity", "OperatorOnPoly is linear over ParamScalar (𝒥, 𝓗̃, Δ_κ spot checks)", || {
        let mut r = random::rng(seed ^ 0x19);
        let p = random::polynomial(&mut r, 3, 5, true);
        let q = random::polynomial(&mut r, 3, 5, true);
        let a = random::coeff(&mut r, true);
        let mut bad = Vec::new();
        for op in [ctx.op_j_square(), ctx.op_hamiltonian(), ctx.op_laplacian()] {
            let l = op.apply(&p.scale(&a).add(&q))?;
            let rr = op.apply(&p)?.scale(&a).add(&op.apply(&q)?);
            if l != rr {
                bad.push(json!(op.name()));
            }
        }
        Ok(failures(bad))
    });
}

/// `pairing_l2` against the Gaussian-moment integral at κ ∈ {0, 1}.
pub fn e_operator_oracle(ctx: &DunklContext, seed: u64, pairs: usize) -> Result<Option<serde_json::Value>> {
    let mut r = random::rng(seed);
    let mut bad = Vec::new();
    for k in [0i64, 1] {
        let kr = Rational::from_integer(k.into());
        let c = ctx.at_kappa(kr.clone());
        for i in 0..pairs {
            let p = random::polynomial(&mut r, 4, 4, false);
            let q = random::polynomial(&mut r, 4, 4, false);
            let l = c.pairing_l2(&p, &q)?;
            let rr = ctx.pairing_l2_moments(&p, &q, &kr)?;
            if let Some(d) = diff(&l, &rr) {
                bad.push(json!({ "kappa": k, "pair": i, "p": p.to_string(), "q": q.to_string(), "diff": d }));
            }
        }
    }
    Ok(failures(bad))
}
