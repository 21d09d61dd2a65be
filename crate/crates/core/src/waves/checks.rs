use super::{inv_fact, int, kappa_lin, tau_plus_2, InvariantFamilies, NuSequence, QFamily};
use crate::dunkl::DunklContext;
use crate::error::Result;
use crate::group::Vec3;
use crate::polyalg::{dot, MultiPoly};
use crate::scalars::{pochhammer, ParamScalar, Rational};

/// Outcome of both parities of the `q` derivative formulas at one n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDerivativeWitness {
    /// `⟨u,∇_κ⟩q_{2n} = 2⟨u,y₀⟩(6κ+n)q_{2n−1}`
    pub even: bool,
    /// `⟨u,∇_κ⟩q_{2n+1} = ⟨u,y₀⟩(10κ+2n+1)q_{2n}`
    pub odd: bool,
}

pub fn verify_q_derivative(ctx: &DunklContext, fam: &QFamily, n: usize, u: &Vec3) -> Result<QDerivativeWitness> {
    let uy = ParamScalar::from_golden(dot(u, fam.vertex()));
    let lhs = ctx.dunkl(u, &fam.q(2 * n)?)?;
    let rhs = fam.q(2 * n - 1)?.scale(&uy.mul_ref(&kappa_lin(6, int(n as i64))).mul_ref(&int(2)));
    let even = lhs == rhs;
    let odd = if 2 * n < fam.cap() {
        let lhs = ctx.dunkl(u, &fam.q(2 * n + 1)?)?;
        let rhs = fam.q(2 * n)?.scale(&uy.mul_ref(&kappa_lin(10, int(2 * n as i64 + 1))));
        lhs == rhs
    } else {
        true
    };
    Ok(QDerivativeWitness { even, odd })
}

/// `(Δ_κ q_n, ν(n)/ν(n−2)(τ+2)q_{n−2})`.
pub fn laplacian_q_sides(ctx: &DunklContext, fam: &QFamily, n: usize) -> Result<(MultiPoly, MultiPoly)> {
    let lhs = ctx.laplacian(&fam.q(n)?)?;
    let rhs = fam.q(n - 2)?.scale(&NuSequence::ratio(n as u32, 1).mul_ref(&tau_plus_2()));
    Ok((lhs, rhs))
}

/// Terms `(j, c_j, L_j^{(15κ+1/2+n−2j)}(ω|x|²)φ_{n−2j})` with
/// `c_j = (−(τ+2)/4ω)ʲ ν(n)/ν(n−2j) / (15κ+3/2+n−2j)ⱼ`; they sum to `w_n`.
pub fn wtophi_expand(ctx: &DunklContext, fam: &QFamily, n: usize) -> Result<Vec<(u32, ParamScalar, MultiPoly)>> {
    let step = tau_plus_2().neg().div_ref(&ParamScalar::omega().mul_ref(&int(4)))?;
    let mut out = Vec::new();
    for j in 0..=(n / 2) as u32 {
        let k = n as i64 - 2 * j as i64;
        let poch = pochhammer(&kappa_lin(15, ParamScalar::from_frac(3, 2).add_ref(&int(k))), j);
        let c = step.pow(j).mul_ref(&NuSequence::ratio(n as u32, j)).div_ref(&poch)?;
        let alpha = kappa_lin(15, ParamScalar::from_frac(1, 2).add_ref(&int(k)));
        let poly = ctx.radial_laguerre(j, &alpha, 3).mul(&fam.phi(k as usize)?);
        out.push((j, c, poly));
    }
    Ok(out)
}

/// Where a Laguerre-weighted wave is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveSource {
    /// `f_{n,m} = L_m^{(15κ+n+1/2)}(ω|x|²) φ_n(·;y₀)`
    Vertex,
    /// `f^G_{n,m} = L_m^{(15κ+2n+1/2)}(ω|x|²) φ^G_{2n}`
    Invariant,
}

/// A Laguerre-weighted harmonic wave and its claimed norm.
pub struct LaguerreWave {
    pub poly: MultiPoly,
    pub phi: MultiPoly,
    /// Degree of `phi`.
    pub degree: u32,
    /// `(1/m!)(15κ+deg+3/2)_m`, the norm ratio `‖f‖²/‖φ‖²`.
    pub norm_factor: ParamScalar,
}

pub fn laguerre_wave(
    ctx: &DunklContext,
    fam: &QFamily,
    inv: Option<&InvariantFamilies>,
    n: usize,
    m: u32,
    source: WaveSource,
) -> Result<LaguerreWave> {
    let (phi, degree) = match source {
        WaveSource::Vertex => (fam.phi(n)?, n as u32),
        WaveSource::Invariant => {
            let inv = inv.ok_or_else(|| crate::error::Error::InvalidArgument("invariant families required".into()))?;
            (inv.phi(2 * n)?, 2 * n as u32)
        }
    };
    let alpha = kappa_lin(15, ParamScalar::from_frac(1, 2).add_ref(&int(degree as i64)));
    let poly = ctx.radial_laguerre(m, &alpha, 3).mul(&phi);
    let norm_factor = pochhammer(&alpha.add_ref(&int(1)), m).mul_ref(&inv_fact(m));
    Ok(LaguerreWave { poly, phi, degree, norm_factor })
}

/// Largest λ-candidate from `𝓗̃p = λp`: returns `Some(λ)` if `𝓗̃p` is an exact
/// multiple of `p`.
pub fn eigenvalue_of(image: &MultiPoly, p: &MultiPoly) -> Result<Option<ParamScalar>> {
    let (m, c) = match p.terms().next_back() {
        Some((m, c)) => (*m, c.clone()),
        None => return Ok(None),
    };
    let lambda = image.coeff(&m).div_ref(&c)?;
    Ok(if image == &p.scale(&lambda) { Some(lambda) } else { None })
}

/// Adjudicates the energy of `w_n(·;y₀)`.
#[derive(Clone, Debug)]
pub struct EnergyAdjudication {
    pub n: u32,
    pub computed: Option<ParamScalar>,
    /// `ω(3 + 30κ + 2n)`
    pub standard: ParamScalar,
    /// `ω(15κ + 2n + 3)`
    pub alternative: ParamScalar,
}

impl EnergyAdjudication {
    pub fn matches_standard(&self) -> bool {
        self.computed.as_ref() == Some(&self.standard)
    }

    pub fn matches_alternative(&self) -> bool {
        self.computed.as_ref() == Some(&self.alternative)
    }
}

pub fn adjudicate_w_energy(ctx: &DunklContext, fam: &QFamily, n: usize) -> Result<EnergyAdjudication> {
    let w = fam.w(n)?;
    let computed = eigenvalue_of(&ctx.hamiltonian_tilde(&w)?, &w)?;
    let omega = ParamScalar::omega();
    let standard = omega.mul_ref(&kappa_lin(30, int(3 + 2 * n as i64)));
    let alternative = omega.mul_ref(&kappa_lin(15, int(3 + 2 * n as i64)));
    Ok(EnergyAdjudication { n: n as u32, computed, standard, alternative })
}

/// `a_G = Π_{v∈R₊} ⟨x,v⟩`.
pub fn alternating_polynomial(ctx: &DunklContext) -> MultiPoly {
    ctx.roots().iter().fold(MultiPoly::one(3), |acc, v| acc.mul(&MultiPoly::linear_form(3, v)))
}

/// `(120/ω¹⁵)(2κ+1)(6κ+1)₅(10κ+1)₉`.
pub fn macdonald_ratio_formula() -> ParamScalar {
    int(120)
        .mul_ref(&kappa_lin(2, int(1)))
        .mul_ref(&pochhammer(&kappa_lin(6, int(1)), 5))
        .mul_ref(&pochhammer(&kappa_lin(10, int(1)), 9))
        .div_ref(&ParamScalar::omega().pow(15))
        .unwrap()
}

/// How to evaluate the ratio.
#[derive(Clone, Debug, PartialEq)]
pub enum MacdonaldMode {
    Symbolic,
    AtKappa(Rational),
}

/// `(pairing_kw(a_G, a_G), formula)` in the chosen mode.
pub fn macdonald_ratio_sides(ctx: &DunklContext, mode: &MacdonaldMode) -> Result<(ParamScalar, ParamScalar)> {
    let a = alternating_polynomial(ctx);
    let formula = macdonald_ratio_formula();
    match mode {
        MacdonaldMode::Symbolic => Ok((ctx.pairing_kw(&a, &a)?, formula)),
        MacdonaldMode::AtKappa(k) => {
            let c = ctx.at_kappa(k.clone());
            Ok((c.pairing_kw(&a, &a)?, formula.substitute_kappa(k)?))
        }
    }
}

/// `c_{κ₀}/c_{κ₀+1} = ∫a_G² h_{κ₀}² / ∫h_{κ₀}²` from Gaussian moments, at integer κ₀.
pub fn macdonald_ratio_moments(ctx: &DunklContext, kappa0: u32) -> Result<ParamScalar> {
    let a = alternating_polynomial(ctx);
    ctx.pairing_l2_moments(&a, &a, &Rational::from_integer(kappa0.into()))
}

/// Right-hand sides of the `𝒥` eigen-relations.
pub mod jsq {
    use super::*;

    /// `−2(10κ+2n+1)(10κ+n+1)` for `φ_{2n+1}`.
    pub fn phi_odd(n: u32) -> ParamScalar {
        kappa_lin(10, int(2 * n as i64 + 1)).mul_ref(&kappa_lin(10, int(n as i64 + 1))).mul_ref(&int(-2))
    }

    /// `−2n(30κ+2n+1)` for `φ^G_{2n}`.
    pub fn phi_invariant(n: u32) -> ParamScalar {
        kappa_lin(30, int(2 * n as i64 + 1)).mul_ref(&int(-2 * n as i64))
    }

    /// `(−2(6κ+n)(18κ+2n+1), 2κ(18κ+1))` for `φ_{2n}(·;y₀)` and the `φ^G` term.
    pub fn phi_even(n: u32) -> (ParamScalar, ParamScalar) {
        let a = kappa_lin(6, int(n as i64)).mul_ref(&kappa_lin(18, int(2 * n as i64 + 1))).mul_ref(&int(-2));
        let b = ParamScalar::kappa().mul_ref(&kappa_lin(18, int(1))).mul_ref(&int(2));
        (a, b)
    }
}

/// The three displayed `𝒥w` actions, as right-hand-side polynomials.
pub fn jsq_w_examples(ctx: &DunklContext, fam: &QFamily) -> Result<Vec<(u32, MultiPoly)>> {
    let omega = ParamScalar::omega();
    let t2 = tau_plus_2();
    let k = |a: i64, b: i64| kappa_lin(a, int(b));
    // 𝒥w₂ = −6(6κ+1)²φ₂
    let w2 = fam.phi(2)?.scale(&k(6, 1).pow(2).mul_ref(&int(-6)));
    // 𝒥w₃ = −4(10κ+3)(5κ+1)φ₃ + (2(τ+2)/5ω)(10κ+3)(10κ+1)² L₁^{(15κ+3/2)}(ω|x|²)φ₁
    let l1 = ctx.radial_laguerre(1, &kappa_lin(15, ParamScalar::from_frac(3, 2)), 3);
    let c3 = t2.mul_ref(&int(2)).div_ref(&omega.mul_ref(&int(5)))?.mul_ref(&k(10, 3)).mul_ref(&k(10, 1).pow(2));
    let w3 = fam
        .phi(3)?
        .scale(&k(10, 3).mul_ref(&k(5, 1)).mul_ref(&int(-4)))
        .add(&l1.mul(&fam.phi(1)?).scale(&c3));
    // 𝒥w₄ = −4(3κ+1)(18κ+5)φ₄ + (12(τ+2)/(ω(30κ+7)))(3κ+1)(6κ+1)²(10κ+3) L₁^{(15κ+5/2)}(ω|x|²)φ₂
    let l1b = ctx.radial_laguerre(1, &kappa_lin(15, ParamScalar::from_frac(5, 2)), 3);
    let c4 = t2
        .mul_ref(&int(12))
        .div_ref(&omega.mul_ref(&k(30, 7)))?
        .mul_ref(&k(3, 1))
        .mul_ref(&k(6, 1).pow(2))
        .mul_ref(&k(10, 3));
    let w4 = fam
        .phi(4)?
        .scale(&k(3, 1).mul_ref(&k(18, 5)).mul_ref(&int(-4)))
        .add(&l1b.mul(&fam.phi(2)?).scale(&c4));
    Ok(vec![(2, w2), (3, w3), (4, w4)])
}

/// The `w₃` expansion exactly as displayed, without the Laguerre factor:
/// `φ₃ − ((τ+2)/5ω)(10κ+3)φ₁`.
pub fn w3_as_displayed(fam: &QFamily) -> Result<MultiPoly> {
    let c = tau_plus_2().mul_ref(&kappa_lin(10, int(3))).div_ref(&ParamScalar::omega().mul_ref(&int(5)))?;
    Ok(fam.phi(3)?.sub(&fam.phi(1)?.scale(&c)))
}

/// The same with the Laguerre factor `L₁^{(15κ+3/2)}(ω|x|²)` on `φ₁`.
pub fn w3_with_laguerre(ctx: &DunklContext, fam: &QFamily) -> Result<MultiPoly> {
    let c = tau_plus_2().mul_ref(&kappa_lin(10, int(3))).div_ref(&ParamScalar::omega().mul_ref(&int(5)))?;
    let l1 = ctx.radial_laguerre(1, &kappa_lin(15, ParamScalar::from_frac(3, 2)), 3);
    Ok(fam.phi(3)?.sub(&l1.mul(&fam.phi(1)?).scale(&c)))
}

/// `q₂(x;y₀)` as displayed: `⟨x,y₀⟩² + 2(τ+2)|x|²` (no κ on the second term).
pub fn q2_as_displayed(y0: &Vec3) -> MultiPoly {
    let l = MultiPoly::linear_form(3, y0);
    l.mul(&l).add(&MultiPoly::norm_sq(3).scale(&tau_plus_2().mul_ref(&int(2))))
}

/// `⟨x,y₀⟩² + 2κ(τ+2)|x|²`, the order-r² coefficient of the generating function.
pub fn q2_generating(y0: &Vec3) -> MultiPoly {
    let l = MultiPoly::linear_form(3, y0);
    l.mul(&l)
        .add(&MultiPoly::norm_sq(3).scale(&tau_plus_2().mul_ref(&int(2)).mul_ref(&ParamScalar::kappa())))
}
