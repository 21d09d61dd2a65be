use super::{ks_dunkl, Gen, Kappa0Exp, KernelSum, OpExpr, OpWord, Operand};
use crate::dunkl::DunklContext;
use crate::error::Result;
use crate::group::{ClassTag, Vec3};
use crate::polyalg::{monomials_of_degree, Monomial, MultiPoly};
use crate::scalars::{GoldenNumber, ParamScalar, Rational};

fn gold(a: i64, b: i64) -> ParamScalar {
    ParamScalar::from_golden(GoldenNumber::ints(a, b))
}

fn w2() -> ParamScalar {
    ParamScalar::omega().pow(2)
}

/// `H⁽²⁾`.
pub fn h2action_lhs() -> OpExpr {
    OpExpr::gen(Gen::Hk(2))
}

/// The constant and group-element part of the relation:
/// `−24ω²(τ+1) − 32ω²(τ+1)κΣσ_v − 32ω²(τ+1)κ²Σρ₂ − 36ω²(τ+1)κ²Σρ₃ − 20ω²(τ+2)κ²Σρ₅,₁ − 20ω²(4τ+3)κ²Σρ₅,₂`.
pub fn h2action_group_terms() -> OpExpr {
    let k = ParamScalar::kappa();
    let k2 = k.pow(2);
    let c = |a: i64, b: i64, s: i64, kk: &ParamScalar| gold(a, b).mul_ref(&w2()).mul_ref(&ParamScalar::from_int(s)).mul_ref(kk);
    let one = ParamScalar::from_int(1);
    OpExpr::new()
        .push(c(1, 1, -24, &one), OpWord::default())
        .push(c(1, 1, -32, &k), OpWord::single(Gen::SigmaSum))
        .push(c(1, 1, -32, &k2), OpWord::single(Gen::ClassSum(ClassTag::Rho2)))
        .push(c(1, 1, -36, &k2), OpWord::single(Gen::ClassSum(ClassTag::Rho3)))
        .push(c(2, 1, -20, &k2), OpWord::single(Gen::ClassSum(ClassTag::Rho51)))
        .push(c(3, 4, -20, &k2), OpWord::single(Gen::ClassSum(ClassTag::Rho52)))
}

/// `6(τ+1)𝓗² + 8ω²(τ+1)𝒥` plus the group terms.
pub fn h2action_rhs() -> OpExpr {
    OpExpr::new()
        .push(gold(6, 6), OpWord::new(vec![Gen::Hamiltonian, Gen::Hamiltonian]))
        .push(gold(8, 8).mul_ref(&w2()), OpWord::single(Gen::JSquare))
        .plus(h2action_group_terms())
}

/// `−24ω²(τ+1)(10κ+1)²`.
pub fn h2action_invariant_constant() -> ParamScalar {
    let k = ParamScalar::kappa().scale_golden(&GoldenNumber::from_int(10)).add_ref(&ParamScalar::from_int(1));
    gold(1, 1).mul_ref(&w2()).mul_ref(&ParamScalar::from_int(-24)).mul_ref(&k.pow(2))
}

/// Each group element acts as 1 on invariants, so the group terms collapse to
/// `Σ coefficient × class size`.
pub fn h2action_group_terms_on_invariants(ctx: &DunklContext) -> ParamScalar {
    let g = ctx.group();
    let mut acc = ParamScalar::zero();
    for (c, w) in &h2action_group_terms().terms {
        let n = match w.steps.first() {
            None => 1,
            Some(Gen::SigmaSum) => g.reflections.len(),
            Some(Gen::ClassSum(t)) => g.class_members(*t).len(),
            Some(_) => unreachable!("group terms hold only class sums"),
        };
        acc = acc.add_ref(&c.mul_ref(&ParamScalar::from_int(n as i64)));
    }
    acc
}

/// Both sides of the relation applied to `1·K(x,y)`.
pub fn h2action_kernel(ctx: &DunklContext) -> Result<(KernelSum, KernelSum)> {
    let k = KernelSum::kernel(ctx);
    let (l, r) = rayon::join(|| h2action_lhs().apply(ctx, &k), || h2action_rhs().apply(ctx, &k));
    Ok((l?, r?))
}

/// Both sides applied to every monomial of degree ≤ `max_deg`; returns the
/// monomials where they differ.
pub fn h2action_polynomial(ctx: &DunklContext, max_deg: u8) -> Result<Vec<(Monomial, MultiPoly, MultiPoly)>> {
    let lhs = h2action_lhs();
    let rhs = h2action_rhs();
    let mut bad = Vec::new();
    for d in 0..=max_deg {
        for m in monomials_of_degree(d) {
            let p = MultiPoly::term(3, m, ParamScalar::from_int(1));
            let (l, r) = rayon::join(|| lhs.apply(ctx, &p), || rhs.apply(ctx, &p));
            let (l, r) = (l?, r?);
            if l != r {
                bad.push((m, l, r));
            }
        }
    }
    Ok(bad)
}

/// `(group terms) f` against `−24ω²(τ+1)(10κ+1)² f` for an invariant `f`.
pub fn h2action_invariant_reduction(ctx: &DunklContext, f: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let l = h2action_group_terms().apply(ctx, f)?;
    Ok((l, f.scale(&h2action_invariant_constant())))
}

/// Apply `expr` to `witness · exp⟨x,y⟩` with `𝒟ᵢ → ∂ᵢ + yᵢ`.
pub fn kappa0_check(ctx: &DunklContext, expr: &OpExpr, witness: &MultiPoly) -> Result<MultiPoly> {
    let ctx0 = ctx.at_kappa(Rational::from_integer(0.into()));
    Ok(expr.apply(&ctx0, &Kappa0Exp(witness.with_arity(6)))?.0)
}

/// `|x|²|y|² − ⟨x,y⟩(⟨x,y⟩+2)`.
pub fn jsquare_one_kappa0_expected() -> MultiPoly {
    MultiPoly::parse("(x1^2+x2^2+x3^2)*(y1^2+y2^2+y3^2) - (x1*y1+x2*y2+x3*y3)*(x1*y1+x2*y2+x3*y3+2)")
        .expect("fixed expression parses")
}

/// `[H̃⁽³⁾, 𝒥]1` at κ = 0.
pub fn h3_j_commutator_kappa0(ctx: &DunklContext) -> Result<MultiPoly> {
    let c = OpExpr::commutator(&OpExpr::gen(Gen::HkTilde(3)), &OpExpr::gen(Gen::JSquare));
    kappa0_check(ctx, &c, &MultiPoly::one(6))
}

/// `[H̃⁽³⁾, H̃⁽⁵⁾]1` at κ = 0.
pub fn h3_h5_commutator_kappa0(ctx: &DunklContext) -> Result<MultiPoly> {
    let c = OpExpr::commutator(&OpExpr::gen(Gen::HkTilde(3)), &OpExpr::gen(Gen::HkTilde(5)));
    kappa0_check(ctx, &c, &MultiPoly::one(6))
}

/// Route a word through the kernel model at κ = 0 and compare
/// with the κ = 0 exponential model: only the identity term may survive and it
/// must equal the exponential-model coefficient.
pub fn kernel_matches_kappa0(ctx: &DunklContext, expr: &OpExpr) -> Result<bool> {
    let ctx0 = ctx.at_kappa(Rational::from_integer(0.into()));
    let ks = expr.apply(&ctx0, &KernelSum::kernel(&ctx0))?;
    let e = expr.apply(&ctx0, &Kappa0Exp::one())?;
    let id = ctx.group().identity;
    Ok(ks.terms().all(|(w, _)| w == id) && ks.coeff(id) == e.0)
}

/// Soundness cross-check: apply `word` to `p·K` and set `y = 0`; since every
/// `K(xw,0) = 1` the sum of coefficients must equal `word` applied to `p`
/// directly.
pub fn soundness_check(ctx: &DunklContext, word: &OpWord, p: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let ks = word.apply(ctx, &KernelSum::from_poly(ctx, p))?;
    let direct = word.apply(ctx, &p.with_arity(3))?;
    Ok((ks.collapse_at_y_zero(), direct))
}

/// `𝒟_u(U·F)` against `U·(𝒟_{uU} F)` for the kernel sum `F`.
pub fn ks_equivariance(ctx: &DunklContext, s: &KernelSum, u: &Vec3, w: usize) -> Result<(KernelSum, KernelSum)> {
    let uw = crate::polyalg::vec_mat(u, &ctx.group().elements[w].matrix);
    let lhs = ks_dunkl(ctx, &s.act(ctx, w)?, u)?;
    let rhs = ks_dunkl(ctx, s, &uw)?.act(ctx, w)?;
    Ok((lhs, rhs))
}
