use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::DunklContext;
use crate::error::{Error, Result};
use crate::polyalg::{GoldenPoly, Monomial, MultiPoly};
use crate::scalars::{GoldenNumber, ParamScalar, Rational};

fn require_x_only(p: &MultiPoly) -> Result<()> {
    if p.terms().any(|(m, _)| m.used_arity() > 3) {
        return Err(Error::InvalidArgument("pairing needs polynomials in x only".into()));
    }
    Ok(())
}

fn double_factorial_odd(k: u32) -> BigInt {
    // (k−1)!! for even k
    let mut acc = BigInt::one();
    let mut i = k as i64 - 1;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// `∫ x^a e^{−ω|x|²} / ∫ e^{−ω|x|²} = Π (aᵢ−1)!! / (2ω)^{|a|/2}`, zero when any
/// exponent is odd.
pub fn gaussian_moment(a: [u32; 3]) -> ParamScalar {
    if a.iter().any(|e| e % 2 == 1) {
        return ParamScalar::zero();
    }
    let mut num = BigInt::one();
    for &e in &a {
        num *= double_factorial_odd(e);
    }
    let half = (a[0] + a[1] + a[2]) / 2;
    let den = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2)).pow(half);
    ParamScalar::from_rational(Rational::from_integer(num)).div_ref(&den).expect("power of ω is invertible")
}

impl DunklContext {
    /// `⟨p,q⟩_{κ,ω} = p(𝒟/2ω) q |_{x=0}`.
    ///
    /// Monomials `x^a` of `p` are applied as `𝒟₁^{a₁}𝒟₂^{a₂}𝒟₃^{a₃}` sharing
    /// the `𝒟₃` and `𝒟₂` prefixes; only the degree-|a| component of `q` is
    /// needed for each.
    pub fn pairing_kw(&self, p: &MultiPoly, q: &MultiPoly) -> Result<ParamScalar> {
        require_x_only(p)?;
        require_x_only(q)?;
        let mut by_degree: BTreeMap<u32, Vec<(Monomial, ParamScalar)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            by_degree.entry(m.degree()).or_default().push((*m, c.clone()));
        }
        let mut total = ParamScalar::zero();
        for (d, mons) in by_degree.into_iter().rev() {
            let qd = q.homogeneous_component(d);
            if qd.is_zero() {
                continue;
            }
            // a3 -> a2 -> [(a1, c)]
            let mut tree: BTreeMap<u8, BTreeMap<u8, Vec<(u8, ParamScalar)>>> = BTreeMap::new();
            for (m, c) in mons {
                let e = m.x_part();
                tree.entry(e[2]).or_default().entry(e[1]).or_default().push((e[0], c));
            }
            let max3 = *tree.keys().last().unwrap();
            let mut chain3 = vec![qd];
            for _ in 0..max3 {
                let next = self.dunkl_i(2, chain3.last().unwrap())?;
                chain3.push(next);
            }
            let branches: Vec<(u8, BTreeMap<u8, Vec<(u8, ParamScalar)>>)> = tree.into_iter().collect();
            let parts: Vec<Result<ParamScalar>> = branches
                .into_par_iter()
                .map(|(a3, sub)| {
                    let mut acc = ParamScalar::zero();
                    let mut cur = chain3[a3 as usize].clone();
                    let mut at = 0u8;
                    for (a2, leaves) in sub {
                        while at < a2 {
                            cur = self.dunkl_i(1, &cur)?;
                            at += 1;
                        }
                        for (a1, c) in leaves {
                            let mut r = cur.clone();
                            for _ in 0..a1 {
                                if r.is_zero() {
                                    break;
                                }
                                r = self.dunkl_i(0, &r)?;
                            }
                            let v = r.constant_term();
                            if !v.is_zero() {
                                acc = acc.add_ref(&c.mul_ref(&v));
                            }
                        }
                    }
                    Ok(acc)
                })
                .collect();
            let mut sum_d = ParamScalar::zero();
            for r in parts {
                sum_d = sum_d.add_ref(&r?);
            }
            if !sum_d.is_zero() {
                let scale = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2)).pow(d).inv()?;
                total = total.add_ref(&sum_d.mul_ref(&scale));
            }
        }
        Ok(total)
    }

    /// `⟨p,q⟩₂ := ⟨Ep, Eq⟩_{κ,ω}` with `E = exp(Δ_κ/4ω)`.
    pub fn pairing_l2(&self, p: &MultiPoly, q: &MultiPoly) -> Result<ParamScalar> {
        self.pairing_kw(&self.heat_exp(p, 1)?, &self.heat_exp(q, 1)?)
    }

    /// `h_{κ₀}² = Π_{v∈R₊} ⟨x,v⟩^{2κ₀}` for integer κ₀.
    pub fn weight_squared(&self, kappa0: u32) -> GoldenPoly {
        let mut h = GoldenPoly::one();
        for v in self.roots() {
            let l = GoldenPoly::linear(v);
            let l2 = l.mul(&l);
            for _ in 0..kappa0 {
                h = h.mul(&l2);
            }
        }
        h
    }

    /// `c ∫ p q h_{κ₀}² e^{−ω|x|²} dm` from exact Gaussian moments, at κ = κ₀.
    /// Independent of the Dunkl operators.
    pub fn pairing_l2_moments(&self, p: &MultiPoly, q: &MultiPoly, kappa0: &Rational) -> Result<ParamScalar> {
        require_x_only(p)?;
        require_x_only(q)?;
        if !kappa0.is_integer() || kappa0.is_negative() {
            return Err(Error::NotInteger(kappa0.to_string()));
        }
        let k0 = kappa0.to_integer().to_u32().ok_or_else(|| Error::NotInteger(kappa0.to_string()))?;
        let pq = p.substitute_kappa(kappa0)?.mul(&q.substitute_kappa(kappa0)?);
        let h2 = self.weight_squared(k0);
        // Every term of h² has the same degree, so for a fixed monomial of f all
        // moments share one power of ω.
        let integrate = |f: &MultiPoly| -> ParamScalar {
            let mut acc = ParamScalar::zero();
            for (m, c) in f.terms() {
                let e = m.x_part();
                let mut inner = GoldenNumber::zero();
                let mut half = 0;
                for (hm, hc) in &h2.terms {
                    let he = hm.x_part();
                    let a: [u32; 3] = std::array::from_fn(|i| e[i] as u32 + he[i] as u32);
                    if a.iter().any(|x| x % 2 == 1) {
                        continue;
                    }
                    half = (a[0] + a[1] + a[2]) / 2;
                    let num: BigInt = a.iter().map(|&x| double_factorial_odd(x)).product();
                    inner += &hc.scale(&Rational::new(num, BigInt::from(2).pow(half)));
                }
                if !inner.is_zero() {
                    let w = ParamScalar::omega().pow(half).inv().expect("power of ω is invertible");
                    acc = acc.add_ref(&c.mul_ref(&w).scale_golden(&inner));
                }
            }
            acc
        };
        let mass = integrate(&MultiPoly::one(3));
        if mass.is_zero() {
            return Err(Error::InvalidArgument("weight has zero mass".into()));
        }
        integrate(&pq).div_ref(&mass)
    }
}
