//! Dunkl operators for H3 and the calculus built on them.
//!
//! Conventions: the group acts on the right, `wp(x) = p(xW)`, every root has
//! `|v|² = 4` so `σ_v = I − vvᵀ/2`, and
//! `𝒟_u p = ⟨u,∇⟩p + κ Σ_{v∈R₊} ⟨u,v⟩ (p − σ_v p)/⟨x,v⟩`.

mod ops;
mod pairing;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{H3Group, Vec3};
use crate::polyalg::{coordinate_images, monomial_image, GoldenPoly, Monomial, MultiPoly};
use crate::scalars::{GoldenNumber, ParamScalar, Rational};

pub use ops::{laguerre, laguerre_coefficients, Ladder, OperatorOnPoly};
pub use pairing::gaussian_moment;

/// Per-monomial Dunkl data: `𝒟ᵢ x^a = A_i + κ B_i`.
struct MonoDunkl {
    a: [Arc<GoldenPoly>; 3],
    b: [Arc<GoldenPoly>; 3],
}

struct Tables {
    group: Arc<H3Group>,
    /// `[x₁W, x₂W, x₃W]` for every group element.
    images: Vec<[GoldenPoly; 3]>,
    /// Memoized `x^a ↦ (xW)^a` for every group element.
    mono_images: Vec<Mutex<HashMap<[u8; 3], GoldenPoly>>>,
    dunkl: RwLock<HashMap<[u8; 3], Arc<MonoDunkl>>>,
}

/// Shared context for the Dunkl calculus. Cloning is cheap; specializations
/// made with [`DunklContext::at_kappa`] share the monomial caches.
#[derive(Clone)]
pub struct DunklContext {
    tables: Arc<Tables>,
    kappa: ParamScalar,
    kappa_value: Option<Rational>,
}

impl DunklContext {
    pub fn new() -> Result<Self> {
        Ok(Self::from_group(Arc::new(H3Group::new()?)))
    }

    pub fn from_group(group: Arc<H3Group>) -> Self {
        let images = group.elements.iter().map(|e| coordinate_images(&e.matrix)).collect();
        let mono_images = (0..group.len()).map(|_| Mutex::new(HashMap::new())).collect();
        let tables = Tables { group, images, mono_images, dunkl: RwLock::new(HashMap::new()) };
        DunklContext { tables: Arc::new(tables), kappa: ParamScalar::kappa(), kappa_value: None }
    }

    /// The same context with κ replaced by a rational constant.
    pub fn at_kappa(&self, k: Rational) -> Self {
        DunklContext {
            tables: self.tables.clone(),
            kappa: ParamScalar::from_rational(k.clone()),
            kappa_value: Some(k),
        }
    }

    pub fn kappa(&self) -> &ParamScalar {
        &self.kappa
    }

    pub fn kappa_value(&self) -> Option<&Rational> {
        self.kappa_value.as_ref()
    }

    /// `γ_κ = Σ_{v∈R₊} κ = 15κ`.
    pub fn gamma(&self) -> ParamScalar {
        self.kappa.scale_golden(&GoldenNumber::from_int(self.roots().len() as i64))
    }

    pub fn dim(&self) -> usize {
        3
    }

    pub fn group(&self) -> &H3Group {
        &self.tables.group
    }

    pub fn group_arc(&self) -> Arc<H3Group> {
        self.tables.group.clone()
    }

    pub fn roots(&self) -> &[Vec3] {
        &self.tables.group.roots.positive_roots
    }

    fn image_of(&self, w: usize, a: [u8; 3]) -> GoldenPoly {
        let mut cache = self.tables.mono_images[w].lock().unwrap();
        monomial_image(&self.tables.images[w], a, &mut cache)
    }

    /// `p ↦ p(xW)` for the group element with index `w`.
    pub fn act(&self, w: usize, p: &MultiPoly) -> MultiPoly {
        if w == self.group().identity {
            return p.clone();
        }
        p.apply_x_linear(|a| self.image_of(w, a))
    }

    /// `σ_v p` for the `r`-th positive root.
    pub fn reflect(&self, r: usize, p: &MultiPoly) -> MultiPoly {
        self.act(self.group().reflections[r], p)
    }

    /// `Σ_{v∈R₊} σ_v p`.
    pub fn sigma_sum(&self, p: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero(p.arity());
        for r in 0..self.roots().len() {
            acc = acc.add(&self.reflect(r, p));
        }
        acc
    }

    /// `κ Σ_{v∈R₊} σ_v p`.
    pub fn kappa_sigma_sum(&self, p: &MultiPoly) -> MultiPoly {
        self.sigma_sum(p).scale(&self.kappa)
    }

    /// Sum of `w p` over a list of group elements.
    pub fn act_sum(&self, ws: &[usize], p: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero(p.arity());
        for &w in ws {
            acc = acc.add(&self.act(w, p));
        }
        acc
    }

    /// `(p − σ_v p)/⟨x,v⟩` by direct exact division.
    pub fn difference_quotient(&self, r: usize, p: &MultiPoly) -> Result<MultiPoly> {
        p.sub(&self.reflect(r, p)).exact_divide_linear(&self.roots()[r])
    }

    fn mono(&self, a: [u8; 3]) -> Result<Arc<MonoDunkl>> {
        if let Some(m) = self.tables.dunkl.read().unwrap().get(&a) {
            return Ok(m.clone());
        }
        let xa = GoldenPoly::monomial(Monomial::x(a[0], a[1], a[2]), GoldenNumber::from_int(1));
        let mut b = [GoldenPoly::zero(), GoldenPoly::zero(), GoldenPoly::zero()];
        for (r, v) in self.roots().iter().enumerate() {
            let img = self.image_of(self.group().reflections[r], a);
            let dq = xa.sub(&img).exact_divide_linear(v)?;
            for i in 0..3 {
                if !v[i].is_zero() {
                    b[i].add_scaled(&dq, &v[i]);
                }
            }
        }
        let a_parts: [Arc<GoldenPoly>; 3] = std::array::from_fn(|i| {
            if a[i] == 0 {
                Arc::new(GoldenPoly::zero())
            } else {
                let mut e = a;
                e[i] -= 1;
                Arc::new(GoldenPoly::monomial(Monomial::x(e[0], e[1], e[2]), GoldenNumber::from_int(a[i] as i64)))
            }
        });
        let [b0, b1, b2] = b;
        let m = Arc::new(MonoDunkl { a: a_parts, b: [Arc::new(b0), Arc::new(b1), Arc::new(b2)] });
        self.tables.dunkl.write().unwrap().insert(a, m.clone());
        Ok(m)
    }

    fn apply_images<F>(&self, p: &MultiPoly, mut f: F) -> Result<MultiPoly>
    where
        F: FnMut(&MonoDunkl) -> (Arc<GoldenPoly>, Arc<GoldenPoly>),
    {
        // Fill the cache first so the closures below cannot fail.
        for (m, _) in p.terms() {
            self.mono(m.x_part())?;
        }
        let table = self.tables.dunkl.read().unwrap();
        Ok(match &self.kappa_value {
            None => p.apply_x_linear_kappa(|a| f(&table[&a])),
            Some(k) => {
                let kg = GoldenNumber::from_rational(k.clone());
                p.apply_x_linear(|a| {
                    let (x, y) = f(&table[&a]);
                    let mut out = (*x).clone();
                    out.add_scaled(&y, &kg);
                    out
                })
            }
        })
    }

    /// `𝒟ᵢ p` (0-based coordinate index). y-variables are treated as constants.
    pub fn dunkl_i(&self, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
        if i >= 3 {
            return Err(Error::InvalidArgument(format!("coordinate index {} out of range", i)));
        }
        self.apply_images(p, |m| (m.a[i].clone(), m.b[i].clone()))
    }

    /// `⟨u, ∇_κ⟩ p`.
    pub fn dunkl(&self, u: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        let nz: Vec<usize> = (0..3).filter(|&i| !u[i].is_zero()).collect();
        if nz.len() == 1 && u[nz[0]] == GoldenNumber::from_int(1) {
            return self.dunkl_i(nz[0], p);
        }
        self.apply_images(p, |m| {
            let mut a = GoldenPoly::zero();
            let mut b = GoldenPoly::zero();
            for &i in &nz {
                a.add_scaled(&m.a[i], &u[i]);
                b.add_scaled(&m.b[i], &u[i]);
            }
            (Arc::new(a), Arc::new(b))
        })
    }

    /// `⟨u,∇⟩p + κ Σ ⟨u,v⟩(p − σ_v p)/⟨x,v⟩` evaluated term by term on `p`
    /// itself, without the monomial tables.
    pub fn dunkl_direct(&self, u: &Vec3, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(p.arity());
        for i in 0..3 {
            if !u[i].is_zero() {
                out = out.add(&p.partial(i).scale_golden(&u[i]));
            }
        }
        for (r, v) in self.roots().iter().enumerate() {
            let uv = crate::polyalg::dot(u, v);
            if uv.is_zero() {
                continue;
            }
            let dq = self.difference_quotient(r, p)?;
            out = out.add(&dq.scale(&self.kappa.scale_golden(&uv)));
        }
        Ok(out)
    }

    /// Multiplication by `⟨u, x⟩`.
    pub fn mul_linear(&self, u: &Vec3, p: &MultiPoly) -> MultiPoly {
        MultiPoly::linear_form(p.arity(), u).mul(p)
    }

    /// Multiplication by `|x|²`.
    pub fn mul_norm_sq(&self, p: &MultiPoly) -> MultiPoly {
        MultiPoly::norm_sq(p.arity()).mul(p)
    }
}

/// Unit coordinate vector `εᵢ`.
pub fn unit(i: usize) -> Vec3 {
    std::array::from_fn(|j| GoldenNumber::from_int((i == j) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dunkl_of_constant_is_zero() {
        let ctx = DunklContext::new().unwrap();
        assert!(ctx.dunkl_i(0, &MultiPoly::one(3)).unwrap().is_zero());
    }

    #[test]
    fn tables_agree_with_direct() {
        let ctx = DunklContext::new().unwrap();
        let p = MultiPoly::parse("x1^3*x2 - 2*k*x2^2*x3^2 + tau*x3^4 + x1*x2*x3").unwrap();
        let u = [GoldenNumber::tau(), GoldenNumber::from_int(-1), GoldenNumber::from_frac(1, 2)];
        assert_eq!(ctx.dunkl(&u, &p).unwrap(), ctx.dunkl_direct(&u, &p).unwrap());
    }
}
