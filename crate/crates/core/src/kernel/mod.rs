//! Formal kernel sums `Σ_w p_w(x,y) K(xw,y)` and the κ = 0 exponential model,
//! used to check operator identities in the rational Cherednik algebra.
//!
//! `K` is the Dunkl kernel: `𝒟ᵢ K(·,y) = yᵢ K(·,y)` and `K(xw,y) = K(x,yw⁻¹)`.
//! Coefficients are polynomials in `(x₁,x₂,x₃,y₁,y₂,y₃)` (arity 6).

mod checks;
mod words;

use std::collections::BTreeMap;
use std::fmt;

use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::group::Vec3;
use crate::polyalg::{vec_mat, Monomial, MultiPoly};
use crate::scalars::{GoldenNumber, ParamScalar};

pub use checks::*;
pub use words::*;

/// Anything the operator-word evaluator can act on.
pub trait Operand: Sized + Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn scale(&self, c: &ParamScalar) -> Self;
    /// `⟨u, ∇_κ⟩`.
    fn dunkl(&self, ctx: &DunklContext, u: &Vec3) -> Result<Self>;
    /// Multiplication by a polynomial in x.
    fn mul_poly(&self, p: &MultiPoly) -> Self;
    /// The group element with index `w`, `f ↦ f(xW)`.
    fn act(&self, ctx: &DunklContext, w: usize) -> Result<Self>;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&ParamScalar::from_int(-1)))
    }
}

impl Operand for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.arity())
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    fn add(&self, o: &Self) -> Self {
        MultiPoly::add(self, o)
    }

    fn scale(&self, c: &ParamScalar) -> Self {
        MultiPoly::scale(self, c)
    }

    fn dunkl(&self, ctx: &DunklContext, u: &Vec3) -> Result<Self> {
        ctx.dunkl(u, self)
    }

    fn mul_poly(&self, p: &MultiPoly) -> Self {
        self.mul(p)
    }

    fn act(&self, ctx: &DunklContext, w: usize) -> Result<Self> {
        Ok(ctx.act(w, self))
    }
}

/// `Σ_w p_w(x,y) K(xw,y)`, keyed by group element index. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct KernelSum {
    terms: BTreeMap<usize, MultiPoly>,
}

impl KernelSum {
    pub fn zero() -> Self {
        KernelSum::default()
    }

    /// `p(x,y) K(x,y)`.
    pub fn from_poly(ctx: &DunklContext, p: &MultiPoly) -> Self {
        let mut s = KernelSum::zero();
        s.add_term(ctx.group().identity, p);
        s
    }

    /// `1 · K(x,y)`.
    pub fn kernel(ctx: &DunklContext) -> Self {
        KernelSum::from_poly(ctx, &MultiPoly::one(6))
    }

    pub fn add_term(&mut self, w: usize, p: &MultiPoly) {
        if p.is_zero() {
            return;
        }
        let p = p.with_arity(6);
        match self.terms.get_mut(&w) {
            Some(q) => {
                *q = q.add(&p);
                if q.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, p);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.terms.iter().map(|(w, p)| (*w, p))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: usize) -> MultiPoly {
        self.terms.get(&w).cloned().unwrap_or_else(|| MultiPoly::zero(6))
    }

    /// `Σ_w p_w(x,0)`: the value at `y = 0`, where every `K(xw,0) = 1`.
    pub fn collapse_at_y_zero(&self) -> MultiPoly {
        let z = GoldenNumber::from_int(0);
        let zero = [z.clone(), z.clone(), z];
        let mut out = MultiPoly::zero(3);
        for p in self.terms.values() {
            out = out.add(&p.eval_y(&zero).with_arity(3));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms.iter().map(|(w, p)| serde_json::json!({ "element": w, "coeff": p.to_string() })).collect(),
        )
    }
}

/// `⟨u, yW⁻¹⟩ = ⟨uW, y⟩` as a linear form in the y-variables.
fn y_form(u: &Vec3, w: &crate::polyalg::Mat3) -> MultiPoly {
    let uw = vec_mat(u, w);
    let mut out = MultiPoly::zero(6);
    for (j, c) in uw.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            out.add_term(Monomial::var(3 + j), ParamScalar::from_golden(c.clone()));
        }
    }
    out
}

fn directional_partial(p: &MultiPoly, u: &Vec3) -> MultiPoly {
    let mut out = MultiPoly::zero(p.arity());
    for (i, ui) in u.iter().enumerate() {
        if !num_traits::Zero::is_zero(ui) {
            out = out.add(&p.partial(i).scale_golden(ui));
        }
    }
    out
}

/// `⟨u,∇_κ⟩(p K(xw,y)) = (∂_u p + ⟨u,yw⁻¹⟩p) K(xw,y) + κ Σ_v ⟨u,v⟩ (p − σ_v p)/⟨x,v⟩ K(xσ_v w, y)`.
pub fn ks_dunkl(ctx: &DunklContext, s: &KernelSum, u: &Vec3) -> Result<KernelSum> {
    let g = ctx.group();
    let mut out = KernelSum::zero();
    for (w, p) in s.terms() {
        let lin = y_form(u, &g.elements[w].matrix);
        out.add_term(w, &directional_partial(p, u).add(&lin.mul(p)));
        for (r, v) in ctx.roots().iter().enumerate() {
            let uv = crate::polyalg::dot(u, v);
            if num_traits::Zero::is_zero(&uv) {
                continue;
            }
            let dq = ctx.difference_quotient(r, p)?;
            out.add_term(g.mul(g.reflections[r], w), &dq.scale(&ctx.kappa().scale_golden(&uv)));
        }
    }
    Ok(out)
}

impl Operand for KernelSum {
    fn zero_like(&self) -> Self {
        KernelSum::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, p) in o.terms() {
            out.add_term(w, p);
        }
        out
    }

    fn scale(&self, c: &ParamScalar) -> Self {
        let mut out = KernelSum::zero();
        for (w, p) in self.terms() {
            out.add_term(w, &p.scale(c));
        }
        out
    }

    fn dunkl(&self, ctx: &DunklContext, u: &Vec3) -> Result<Self> {
        ks_dunkl(ctx, self, u)
    }

    fn mul_poly(&self, p: &MultiPoly) -> Self {
        let mut out = KernelSum::zero();
        for (w, q) in self.terms() {
            out.add_term(w, &q.mul(p));
        }
        out
    }

    /// `u(p(x,y)K(xw,y)) = p(xU,y) K(xUw,y)`.
    fn act(&self, ctx: &DunklContext, u: usize) -> Result<Self> {
        let g = ctx.group();
        let mut out = KernelSum::zero();
        for (w, p) in self.terms() {
            out.add_term(g.mul(u, w), &ctx.act(u, p));
        }
        Ok(out)
    }
}

impl fmt::Debug for KernelSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KernelSum[")?;
        for (w, p) in self.terms() {
            write!(f, " w{}: {};", w, p)?;
        }
        write!(f, " ]")
    }
}

/// `p(x,y) exp⟨x,y⟩` with the exponential left implicit: the κ = 0 kernel, on
/// which `𝒟ᵢ` acts as `∂ᵢ + yᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kappa0Exp(pub MultiPoly);

impl Kappa0Exp {
    pub fn one() -> Self {
        Kappa0Exp(MultiPoly::one(6))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }
}

impl Operand for Kappa0Exp {
    fn zero_like(&self) -> Self {
        Kappa0Exp(MultiPoly::zero(6))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Kappa0Exp(self.0.add(&o.0))
    }

    fn scale(&self, c: &ParamScalar) -> Self {
        Kappa0Exp(self.0.scale(c))
    }

    /// Ignores the context's κ: this model exists only at κ = 0.
    fn dunkl(&self, _ctx: &DunklContext, u: &Vec3) -> Result<Self> {
        let lin = y_form(u, &crate::polyalg::identity());
        Ok(Kappa0Exp(directional_partial(&self.0, u).add(&lin.mul(&self.0)).with_arity(6)))
    }

    fn mul_poly(&self, p: &MultiPoly) -> Self {
        Kappa0Exp(self.0.mul(p).with_arity(6))
    }

    fn act(&self, _ctx: &DunklContext, _w: usize) -> Result<Self> {
        Err(Error::Unsupported("group elements do not act on the κ = 0 exponential model".into()))
    }
}
