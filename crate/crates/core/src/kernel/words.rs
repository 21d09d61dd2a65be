use std::fmt;

use rayon::prelude::*;

use super::Operand;
use crate::dunkl::{unit, DunklContext};
use crate::error::Result;
use crate::group::{ClassTag, Vec3};
use crate::polyalg::MultiPoly;
use crate::scalars::ParamScalar;

/// Generators of operator words. Composite generators expand into Dunkl
/// operators, multiplications and group elements only.
#[derive(Clone, Debug, PartialEq)]
pub enum Gen {
    /// `⟨u,∇_κ⟩`
    Dunkl(Vec3),
    /// multiplication by `⟨u,x⟩`
    MulLinear(Vec3),
    /// multiplication by `|x|²`
    NormSq,
    /// a single group element (by index)
    Group(usize),
    /// `Σ_{v∈R₊} σ_v`
    SigmaSum,
    /// sum over one conjugacy class
    ClassSum(ClassTag),
    /// `Δ_κ = Σ 𝒟ᵢ²`
    Laplacian,
    /// `𝓗 = ω²|x|² − Δ_κ`
    Hamiltonian,
    /// `𝓗̃ = −Δ_κ + ω Σ (𝒟ᵢxᵢ + xᵢ𝒟ᵢ)`
    HamiltonianTilde,
    /// `𝒥 = Σ_{i<j} J²_{εᵢ,εⱼ}`, by definition
    JSquare,
    /// `H_a = ω²⟨a,x⟩² − ⟨a,∇_κ⟩²`
    Ha(Vec3),
    /// `H̃_a = ω(⟨a,x⟩⟨a,∇_κ⟩ + ⟨a,∇_κ⟩⟨a,x⟩) − ⟨a,∇_κ⟩²`
    HaTilde(Vec3),
    /// `H⁽ᵏ⁾ = Σ_{y∈I₊} H_yᵏ`
    Hk(u32),
    /// `H̃⁽ᵏ⁾ = Σ_{y∈I₊} H̃_yᵏ`
    HkTilde(u32),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |u: &Vec3| u.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Gen::Dunkl(u) => write!(f, "D[{}]", v(u)),
            Gen::MulLinear(u) => write!(f, "X[{}]", v(u)),
            Gen::NormSq => write!(f, "|x|^2"),
            Gen::Group(w) => write!(f, "w{}", w),
            Gen::SigmaSum => write!(f, "Σσ"),
            Gen::ClassSum(t) => write!(f, "Σ{}", t),
            Gen::Laplacian => write!(f, "Δ"),
            Gen::Hamiltonian => write!(f, "H"),
            Gen::HamiltonianTilde => write!(f, "H~"),
            Gen::JSquare => write!(f, "J²"),
            Gen::Ha(u) => write!(f, "H_[{}]", v(u)),
            Gen::HaTilde(u) => write!(f, "H~_[{}]", v(u)),
            Gen::Hk(k) => write!(f, "H({})", k),
            Gen::HkTilde(k) => write!(f, "H~({})", k),
        }
    }
}

fn laplacian<T: Operand>(ctx: &DunklContext, t: &T) -> Result<T> {
    let mut acc = t.zero_like();
    for i in 0..3 {
        let u = unit(i);
        acc = acc.add(&t.dunkl(ctx, &u)?.dunkl(ctx, &u)?);
    }
    Ok(acc)
}

fn group_sum<T: Operand>(ctx: &DunklContext, ws: &[usize], t: &T) -> Result<T> {
    let mut acc = t.zero_like();
    for &w in ws {
        acc = acc.add(&t.act(ctx, w)?);
    }
    Ok(acc)
}

fn h_a<T: Operand>(ctx: &DunklContext, a: &Vec3, t: &T) -> Result<T> {
    let l = MultiPoly::linear_form(3, a);
    let w2 = ParamScalar::omega().pow(2);
    let d2 = t.dunkl(ctx, a)?.dunkl(ctx, a)?;
    Ok(t.mul_poly(&l.mul(&l)).scale(&w2).sub(&d2))
}

fn h_a_tilde<T: Operand>(ctx: &DunklContext, a: &Vec3, t: &T) -> Result<T> {
    let l = MultiPoly::linear_form(3, a);
    let d = t.dunkl(ctx, a)?;
    let xd = d.mul_poly(&l);
    let dx = t.mul_poly(&l).dunkl(ctx, a)?;
    let d2 = d.dunkl(ctx, a)?;
    Ok(xd.add(&dx).scale(&ParamScalar::omega()).sub(&d2))
}

fn h_power<T: Operand>(
    ctx: &DunklContext,
    k: u32,
    t: &T,
    f: fn(&DunklContext, &Vec3, &T) -> Result<T>,
) -> Result<T> {
    let parts: Vec<Result<T>> = ctx
        .group()
        .vertices
        .i_plus
        .par_iter()
        .map(|y| {
            let mut cur = t.clone();
            for _ in 0..k {
                cur = f(ctx, y, &cur)?;
            }
            Ok(cur)
        })
        .collect();
    let mut acc = t.zero_like();
    for p in parts {
        acc = acc.add(&p?);
    }
    Ok(acc)
}

/// Apply a single generator.
pub fn apply_gen<T: Operand>(ctx: &DunklContext, g: &Gen, t: &T) -> Result<T> {
    match g {
        Gen::Dunkl(u) => t.dunkl(ctx, u),
        Gen::MulLinear(u) => Ok(t.mul_poly(&MultiPoly::linear_form(3, u))),
        Gen::NormSq => Ok(t.mul_poly(&MultiPoly::norm_sq(3))),
        Gen::Group(w) => t.act(ctx, *w),
        Gen::SigmaSum => group_sum(ctx, &ctx.group().reflections, t),
        Gen::ClassSum(tag) => group_sum(ctx, &ctx.group().class_members(*tag), t),
        Gen::Laplacian => laplacian(ctx, t),
        Gen::Hamiltonian => {
            let w2 = ParamScalar::omega().pow(2);
            Ok(t.mul_poly(&MultiPoly::norm_sq(3)).scale(&w2).sub(&laplacian(ctx, t)?))
        }
        Gen::HamiltonianTilde => {
            let mut sym = t.zero_like();
            for i in 0..3 {
                let u = unit(i);
                let xi = MultiPoly::var(3, i);
                sym = sym.add(&t.mul_poly(&xi).dunkl(ctx, &u)?);
                sym = sym.add(&t.dunkl(ctx, &u)?.mul_poly(&xi));
            }
            Ok(sym.scale(&ParamScalar::omega()).sub(&laplacian(ctx, t)?))
        }
        Gen::JSquare => {
            let mut acc = t.zero_like();
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let jij = |s: &T| -> Result<T> {
                    let a = s.dunkl(ctx, &unit(j))?.mul_poly(&MultiPoly::var(3, i));
                    let b = s.dunkl(ctx, &unit(i))?.mul_poly(&MultiPoly::var(3, j));
                    Ok(a.sub(&b))
                };
                acc = acc.add(&jij(&jij(t)?)?);
            }
            Ok(acc)
        }
        Gen::Ha(a) => h_a(ctx, a, t),
        Gen::HaTilde(a) => h_a_tilde(ctx, a, t),
        Gen::Hk(k) => h_power(ctx, *k, t, h_a::<T>),
        Gen::HkTilde(k) => h_power(ctx, *k, t, h_a_tilde::<T>),
    }
}

/// A composition of generators, stored in application order: `steps[0]` acts
/// first.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct OpWord {
    pub steps: Vec<Gen>,
}

impl OpWord {
    pub fn new(steps: Vec<Gen>) -> Self {
        OpWord { steps }
    }

    pub fn single(g: Gen) -> Self {
        OpWord { steps: vec![g] }
    }

    /// Number of bare Dunkl factors in the word.
    pub fn dunkl_count(&self) -> usize {
        self.steps.iter().filter(|g| matches!(g, Gen::Dunkl(_))).count()
    }

    pub fn apply<T: Operand>(&self, ctx: &DunklContext, t: &T) -> Result<T> {
        let mut cur = t.clone();
        for g in &self.steps {
            if cur.is_zero() {
                break;
            }
            cur = apply_gen(ctx, g, &cur)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // written with the first-applied step on the right
        let s: Vec<String> = self.steps.iter().rev().map(|g| g.to_string()).collect();
        if s.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", s.join("·"))
        }
    }
}

/// A linear combination `Σ c_k · word_k`.
#[derive(Clone, Debug, Default)]
pub struct OpExpr {
    pub terms: Vec<(ParamScalar, OpWord)>,
}

impl OpExpr {
    pub fn new() -> Self {
        OpExpr::default()
    }

    pub fn word(w: OpWord) -> Self {
        OpExpr { terms: vec![(ParamScalar::from_int(1), w)] }
    }

    pub fn gen(g: Gen) -> Self {
        OpExpr::word(OpWord::single(g))
    }

    pub fn push(mut self, c: ParamScalar, w: OpWord) -> Self {
        self.terms.push((c, w));
        self
    }

    pub fn plus(mut self, o: OpExpr) -> Self {
        self.terms.extend(o.terms);
        self
    }

    pub fn scaled(self, c: &ParamScalar) -> Self {
        OpExpr { terms: self.terms.into_iter().map(|(k, w)| (k.mul_ref(c), w)).collect() }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn after(&self, other: &OpExpr) -> OpExpr {
        let mut out = OpExpr::new();
        for (a, wa) in &self.terms {
            for (b, wb) in &other.terms {
                let mut steps = wb.steps.clone();
                steps.extend(wa.steps.iter().cloned());
                out.terms.push((a.mul_ref(b), OpWord::new(steps)));
            }
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(a: &OpExpr, b: &OpExpr) -> OpExpr {
        a.after(b).plus(b.after(a).scaled(&ParamScalar::from_int(-1)))
    }

    /// Summands are applied in parallel and added in order.
    pub fn apply<T: Operand>(&self, ctx: &DunklContext, t: &T) -> Result<T> {
        let parts: Vec<Result<T>> = self
            .terms
            .par_iter()
            .map(|(c, w)| Ok(w.apply(ctx, t)?.scale(c)))
            .collect();
        let mut acc = t.zero_like();
        for p in parts {
            acc = acc.add(&p?);
        }
        Ok(acc)
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.terms.iter().map(|(c, w)| format!("({})·{}", c, w)).collect();
        write!(f, "{}", s.join(" + "))
    }
}
