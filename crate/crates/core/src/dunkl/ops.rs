use std::fmt;
use std::sync::Arc;

use super::{unit, DunklContext};
use crate::error::Result;
use crate::group::Vec3;
use crate::polyalg::MultiPoly;
use crate::scalars::{factorial, pochhammer, GoldenNumber, ParamScalar, Rational};

fn int(n: i64) -> ParamScalar {
    ParamScalar::from_int(n)
}

/// Which ladder operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    /// `⟨a,∇_κ⟩`
    Lower,
    /// `2ω⟨a,x⟩ − ⟨a,∇_κ⟩`
    Raise,
}

type PolyFn = dyn Fn(&MultiPoly) -> Result<MultiPoly> + Send + Sync;

/// A named linear map on polynomials.
#[derive(Clone)]
pub struct OperatorOnPoly {
    name: String,
    f: Arc<PolyFn>,
}

impl fmt::Debug for OperatorOnPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorOnPoly({})", self.name)
    }
}

impl OperatorOnPoly {
    pub fn new(name: impl Into<String>, f: impl Fn(&MultiPoly) -> Result<MultiPoly> + Send + Sync + 'static) -> Self {
        OperatorOnPoly { name: name.into(), f: Arc::new(f) }
    }

    pub fn identity() -> Self {
        Self::new("I", |p| Ok(p.clone()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        (self.f)(p)
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &OperatorOnPoly) -> Self {
        let (a, b) = (self.f.clone(), other.f.clone());
        Self::new(format!("{}·{}", self.name, other.name), move |p| a(&b(p)?))
    }

    pub fn pow(&self, k: u32) -> Self {
        let f = self.f.clone();
        Self::new(format!("({})^{}", self.name, k), move |p| {
            let mut acc = p.clone();
            for _ in 0..k {
                acc = f(&acc)?;
            }
            Ok(acc)
        })
    }

    pub fn add(&self, other: &OperatorOnPoly) -> Self {
        let (a, b) = (self.f.clone(), other.f.clone());
        Self::new(format!("{} + {}", self.name, other.name), move |p| Ok(a(p)?.add(&b(p)?)))
    }

    pub fn sub(&self, other: &OperatorOnPoly) -> Self {
        let (a, b) = (self.f.clone(), other.f.clone());
        Self::new(format!("{} - {}", self.name, other.name), move |p| Ok(a(p)?.sub(&b(p)?)))
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let (a, c2) = (self.f.clone(), c.clone());
        Self::new(format!("({})*{}", c, self.name), move |p| Ok(a(p)?.scale(&c2)))
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &OperatorOnPoly) -> Self {
        self.compose(other).sub(&other.compose(self))
    }
}

/// Coefficients `c_j` with `L_m^{(α)}(s) = Σ_j c_j s^j`.
///
/// Uses `(α+1)_m/(α+1)_j = (α+1+j)_{m−j}` so no division by α-dependent
/// factors is needed.
pub fn laguerre_coefficients(m: u32, alpha: &ParamScalar) -> Vec<ParamScalar> {
    (0..=m)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let binom = ParamScalar::from_rational(Rational::new(
                num_bigint::BigInt::from(sign),
                factorial(j) * factorial(m - j),
            ));
            let tail = pochhammer(&alpha.add_ref(&int(j as i64 + 1)), m - j);
            binom.mul_ref(&tail)
        })
        .collect()
}

/// `L_m^{(α)}(s)` with `s` a polynomial (typically `ω|x|²`).
pub fn laguerre(m: u32, alpha: &ParamScalar, s: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(s.arity());
    let mut spow = MultiPoly::one(s.arity());
    for c in laguerre_coefficients(m, alpha) {
        out = out.add(&spow.scale(&c));
        spow = spow.mul(s);
    }
    out
}

impl DunklContext {
    /// Euler operator δ on the x-variables.
    pub fn euler(&self, p: &MultiPoly) -> MultiPoly {
        MultiPoly::from_terms(
            p.arity(),
            p.terms().map(|(m, c)| (*m, c.scale_golden(&GoldenNumber::from_int(m.x_degree() as i64)))),
        )
    }

    /// `⟨x,∇_κ⟩p = Σ xᵢ𝒟ᵢp`.
    pub fn x_dot_nabla(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(p.arity());
        for i in 0..3 {
            out = out.add(&MultiPoly::var(p.arity(), i).mul(&self.dunkl_i(i, p)?));
        }
        Ok(out)
    }

    /// `(δ + γ_κ − κΣσ_v)p`.
    pub fn x_dot_nabla_closed(&self, p: &MultiPoly) -> MultiPoly {
        self.euler(p).add(&p.scale(&self.gamma())).sub(&self.kappa_sigma_sum(p))
    }

    /// `Δ_κ p = Σ 𝒟ᵢ²p`.
    pub fn laplacian(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(p.arity());
        for i in 0..3 {
            out = out.add(&self.dunkl_i(i, &self.dunkl_i(i, p)?)?);
        }
        Ok(out)
    }

    pub fn laplacian_pow(&self, p: &MultiPoly, j: u32) -> Result<MultiPoly> {
        let mut acc = p.clone();
        for _ in 0..j {
            if acc.is_zero() {
                break;
            }
            acc = self.laplacian(&acc)?;
        }
        Ok(acc)
    }

    fn norm_sq_pow(&self, arity: usize, j: u32) -> MultiPoly {
        MultiPoly::norm_sq(arity).pow(j)
    }

    /// `Λ_n p` for `p` homogeneous of degree n.
    pub fn harmonic_project(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let n = p.homogeneous_degree()?;
        // (−N/2 − γ − n + 2) with N = 3
        let base = ParamScalar::from_frac(1, 2).sub_ref(&self.gamma()).sub_ref(&int(n as i64));
        let mut out = p.clone();
        let mut d = p.clone();
        for j in 1..=n / 2 {
            d = self.laplacian(&d)?;
            if d.is_zero() {
                break;
            }
            let c = pochhammer(&base, j)
                .mul_ref(&int(4i64.pow(j)))
                .mul_ref(&ParamScalar::from_rational(Rational::from_integer(factorial(j))))
                .inv()?;
            out = out.add(&self.norm_sq_pow(p.arity(), j).mul(&d).scale(&c));
        }
        Ok(out)
    }

    /// `p = Σⱼ |x|^{2j} part_j` with `part_j ∈ 𝒫_{n−2j,κ}`; returns `(j, part_j)`
    /// for the nonzero parts.
    pub fn harmonic_decompose(&self, p: &MultiPoly) -> Result<Vec<(u32, MultiPoly)>> {
        let n = p.homogeneous_degree()?;
        let mut out = Vec::new();
        let mut d = p.clone();
        for j in 0..=n / 2 {
            if j > 0 {
                d = self.laplacian(&d)?;
            }
            if d.is_zero() {
                break;
            }
            // 1/(4^j j! (N/2 + γ + n − 2j)_j)
            let base = ParamScalar::from_frac(3, 2).add_ref(&self.gamma()).add_ref(&int(n as i64 - 2 * j as i64));
            let c = pochhammer(&base, j)
                .mul_ref(&int(4i64.pow(j)))
                .mul_ref(&ParamScalar::from_rational(Rational::from_integer(factorial(j))))
                .inv()?;
            let part = self.harmonic_project(&d)?.scale(&c);
            if !part.is_zero() {
                out.push((j, part));
            }
        }
        Ok(out)
    }

    /// `exp(±Δ_κ/4ω) p`, a finite sum.
    pub fn heat_exp(&self, p: &MultiPoly, sign: i32) -> Result<MultiPoly> {
        let step = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(4 * sign.signum() as i64)).inv()?;
        let mut out = p.clone();
        let mut term = p.clone();
        let mut j = 1;
        loop {
            term = self.laplacian(&term)?;
            if term.is_zero() {
                break;
            }
            term = term.scale(&step.scale_golden(&GoldenNumber::from_frac(1, j)));
            out = out.add(&term);
            j += 1;
        }
        Ok(out)
    }

    /// `E_n = ω(N + 2γ_κ + 2n)`.
    pub fn energy(&self, n: u32) -> ParamScalar {
        ParamScalar::omega().mul_ref(&int(3 + 2 * n as i64).add_ref(&self.gamma().scale_golden(&GoldenNumber::from_int(2))))
    }

    /// `𝓗̃p = −Δ_κp + ω(N + 2γ_κ + 2δ)p`.
    pub fn hamiltonian_tilde(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let w = ParamScalar::omega();
        let lin = p.scale(&self.energy(0)).add(&self.euler(p).scale(&w.scale_golden(&GoldenNumber::from_int(2))));
        Ok(lin.sub(&self.laplacian(p)?))
    }

    /// `J_{a,b}p = ⟨a,x⟩⟨b,∇_κ⟩p − ⟨b,x⟩⟨a,∇_κ⟩p`.
    pub fn angular_j(&self, a: &Vec3, b: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        Ok(self.mul_linear(a, &self.dunkl(b, p)?).sub(&self.mul_linear(b, &self.dunkl(a, p)?)))
    }

    /// `⟨b,∇_κ⟩⟨a,x⟩p − ⟨a,∇_κ⟩⟨b,x⟩p`.
    pub fn angular_j_reversed(&self, a: &Vec3, b: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        Ok(self.dunkl(b, &self.mul_linear(a, p))?.sub(&self.dunkl(a, &self.mul_linear(b, p))?))
    }

    /// `𝒥p = Σ_{i<j} J²_{εᵢ,εⱼ}p` by definition.
    pub fn angular_j_square(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(p.arity());
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let (a, b) = (unit(i), unit(j));
            out = out.add(&self.angular_j(&a, &b, &self.angular_j(&a, &b, p)?)?);
        }
        Ok(out)
    }

    /// `𝒥p = |x|²Δ_κp − E²p − (N−2)Ep − 2κΣσ_v Ep` with `E = ⟨x,∇_κ⟩`.
    pub fn angular_j_square_closed(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let e = self.x_dot_nabla(p)?;
        let e2 = self.x_dot_nabla(&e)?;
        Ok(self
            .mul_norm_sq(&self.laplacian(p)?)
            .sub(&e2)
            .sub(&e)
            .sub(&self.kappa_sigma_sum(&e).scale_int(2)))
    }

    pub fn lower(&self, a: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        self.dunkl(a, p)
    }

    pub fn raise(&self, a: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
        Ok(self.mul_linear(a, p).scale(&two_w).sub(&self.dunkl(a, p)?))
    }

    pub fn raise_lower(&self, a: &Vec3, which: Ladder, p: &MultiPoly) -> Result<MultiPoly> {
        match which {
            Ladder::Lower => self.lower(a, p),
            Ladder::Raise => self.raise(a, p),
        }
    }

    /// `H̃_a p = ω(⟨a,x⟩⟨a,∇_κ⟩ + ⟨a,∇_κ⟩⟨a,x⟩)p − ⟨a,∇_κ⟩²p`.
    pub fn h_a_tilde(&self, a: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        let dp = self.dunkl(a, p)?;
        let sym = self.mul_linear(a, &dp).add(&self.dunkl(a, &self.mul_linear(a, p))?);
        Ok(sym.scale(&ParamScalar::omega()).sub(&self.dunkl(a, &dp)?))
    }

    /// `H̃⁽ᵏ⁾p = Σ_{y∈I₊} (H̃_y)ᵏ p`.
    pub fn h_k_tilde(&self, k: u32, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(p.arity());
        for y in &self.group().vertices.i_plus {
            let mut acc = p.clone();
            for _ in 0..k {
                acc = self.h_a_tilde(y, &acc)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// `L_m^{(α)}(ω|x|²)` as a polynomial of the given arity.
    pub fn radial_laguerre(&self, m: u32, alpha: &ParamScalar, arity: usize) -> MultiPoly {
        laguerre(m, alpha, &MultiPoly::norm_sq(arity).scale(&ParamScalar::omega()))
    }

    pub fn op_dunkl(&self, u: &Vec3) -> OperatorOnPoly {
        let (ctx, u) = (self.clone(), u.clone());
        OperatorOnPoly::new("D_u", move |p| ctx.dunkl(&u, p))
    }

    pub fn op_mul_linear(&self, u: &Vec3) -> OperatorOnPoly {
        let (ctx, u) = (self.clone(), u.clone());
        OperatorOnPoly::new("<u,x>", move |p| Ok(ctx.mul_linear(&u, p)))
    }

    pub fn op_laplacian(&self) -> OperatorOnPoly {
        let ctx = self.clone();
        OperatorOnPoly::new("Lap", move |p| ctx.laplacian(p))
    }

    pub fn op_norm_sq(&self) -> OperatorOnPoly {
        let ctx = self.clone();
        OperatorOnPoly::new("|x|^2", move |p| Ok(ctx.mul_norm_sq(p)))
    }

    pub fn op_group(&self, w: usize) -> OperatorOnPoly {
        let ctx = self.clone();
        OperatorOnPoly::new(format!("g{}", w), move |p| Ok(ctx.act(w, p)))
    }

    pub fn op_hamiltonian(&self) -> OperatorOnPoly {
        let ctx = self.clone();
        OperatorOnPoly::new("Ht", move |p| ctx.hamiltonian_tilde(p))
    }

    pub fn op_angular_j(&self, a: &Vec3, b: &Vec3) -> OperatorOnPoly {
        let (ctx, a, b) = (self.clone(), a.clone(), b.clone());
        OperatorOnPoly::new("J_ab", move |p| ctx.angular_j(&a, &b, p))
    }

    pub fn op_j_square(&self) -> OperatorOnPoly {
        let ctx = self.clone();
        OperatorOnPoly::new("Jsq", move |p| ctx.angular_j_square(p))
    }

    pub fn op_ladder(&self, a: &Vec3, which: Ladder) -> OperatorOnPoly {
        let (ctx, a) = (self.clone(), a.clone());
        OperatorOnPoly::new(format!("{:?}", which), move |p| ctx.raise_lower(&a, which, p))
    }

    pub fn op_h_a(&self, a: &Vec3) -> OperatorOnPoly {
        let (ctx, a) = (self.clone(), a.clone());
        OperatorOnPoly::new("Ht_a", move |p| ctx.h_a_tilde(&a, p))
    }

    pub fn op_h_k(&self, k: u32) -> OperatorOnPoly {
        let ctx = self.clone();
        OperatorOnPoly::new(format!("Ht^({})", k), move |p| ctx.h_k_tilde(k, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_low_degree() {
        let a = ParamScalar::parse("15*k + 1/2").unwrap();
        let s = MultiPoly::parse("x1").unwrap();
        assert_eq!(laguerre(0, &a, &s), MultiPoly::one(3));
        let l1 = MultiPoly::parse("15*k + 3/2 - x1").unwrap();
        assert_eq!(laguerre(1, &a, &s), l1);
        // L_2^{(α)}(s) = (α+1)(α+2)/2 − (α+2)s + s²/2
        let l2 = MultiPoly::parse("(15*k + 3/2)*(15*k + 5/2)/2 - (15*k + 5/2)*x1 + x1^2/2").unwrap();
        assert_eq!(laguerre(2, &a, &s), l2);
    }
}
