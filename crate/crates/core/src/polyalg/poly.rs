use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::gpoly::{coordinate_images, GoldenPoly, Mat3};
use super::monomial::{Monomial, MAX_ARITY};
use crate::error::{Error, Result};
use crate::scalars::{GoldenNumber, KPoly, ParamPoly, ParamScalar, Rational};

/// Exact multivariate polynomial over [`ParamScalar`].
///
/// Arity 3 means x₁..x₃; arity 6 adds y₁..y₃. Terms iterate in graded-lex
/// order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    arity: u8,
    terms: BTreeMap<Monomial, ParamScalar>,
}

impl Default for MultiPoly {
    fn default() -> Self {
        MultiPoly::zero(3)
    }
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_ARITY);
        MultiPoly { arity: arity as u8, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: ParamScalar) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, ParamScalar::one())
    }

    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        Self::term(arity, Monomial::var(i), ParamScalar::one())
    }

    pub fn term(arity: usize, m: Monomial, c: ParamScalar) -> Self {
        assert!(m.used_arity() <= arity, "monomial exceeds arity");
        let mut p = Self::zero(arity);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, ParamScalar)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            assert!(m.used_arity() <= arity, "monomial exceeds arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn from_golden(arity: usize, g: &GoldenPoly) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in &g.terms {
            p.terms.insert(*m, ParamScalar::from_golden(c.clone()));
        }
        p
    }

    /// `⟨x, v⟩`.
    pub fn linear_form(arity: usize, v: &[GoldenNumber; 3]) -> Self {
        Self::from_golden(arity, &GoldenPoly::linear(v))
    }

    /// `|x|² = x₁² + x₂² + x₃²`.
    pub fn norm_sq(arity: usize) -> Self {
        let mut p = Self::zero(arity);
        for i in 0..3 {
            let mut e = [0u8; MAX_ARITY];
            e[i] = 2;
            p.terms.insert(Monomial { exps: e }, ParamScalar::one());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    /// Same polynomial viewed in a larger variable set.
    pub fn with_arity(&self, arity: usize) -> Self {
        assert!(arity <= MAX_ARITY);
        for m in self.terms.keys() {
            assert!(m.used_arity() <= arity, "cannot shrink arity below used variables");
        }
        MultiPoly { arity: arity as u8, terms: self.terms.clone() }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, ParamScalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> ParamScalar {
        self.terms.get(m).cloned().unwrap_or_else(ParamScalar::zero)
    }

    pub fn constant_term(&self) -> ParamScalar {
        self.coeff(&Monomial::ONE)
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x_degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Degree if homogeneous (zero counts as homogeneous of any degree; 0 is reported).
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_homogeneous() {
            Ok(self.degree())
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.used_arity() <= self.arity as usize);
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign_scaled(&mut self, o: &MultiPoly, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (m, v) in &o.terms {
            self.add_term(*m, if one { v.clone() } else { v.mul_ref(c) });
        }
    }

    fn check_arity(&self, o: &MultiPoly) -> usize {
        self.arity.max(o.arity) as usize
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.arity = self.check_arity(o) as u8;
        for (m, v) in &o.terms {
            out.add_term(*m, v.clone());
        }
        out
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.arity = self.check_arity(o) as u8;
        for (m, v) in &o.terms {
            out.add_term(*m, v.neg());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, c: &ParamScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity());
        }
        if c.is_one() {
            return self.clone();
        }
        if c.is_polynomial() && self.has_polynomial_coeffs() {
            let cp = c.numerator();
            return MultiPoly {
                arity: self.arity,
                terms: self
                    .terms
                    .iter()
                    .map(|(m, v)| (*m, ParamScalar::from_poly(v.numerator().mul(cp))))
                    .collect(),
            };
        }
        let (s, p) = self.split_denominator();
        let f = s.mul_ref(c);
        p.scale_back(&f)
    }

    pub fn scale_golden(&self, c: &GoldenNumber) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity());
        }
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(m, v)| (*m, v.scale_golden(c))).collect() }
    }

    pub fn scale_int(&self, n: i64) -> MultiPoly {
        self.scale_golden(&GoldenNumber::from_int(n))
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &ParamScalar) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity().max(mono.used_arity()));
        for (m, v) in &self.terms {
            out.terms.insert(m.mul(mono), v.mul_ref(c));
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        let arity = self.check_arity(o);
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero(arity);
        }
        let (sa, pa) = self.split_denominator();
        let (sb, pb) = o.split_denominator();
        let mut acc: BTreeMap<Monomial, ParamPoly> = BTreeMap::new();
        for (ma, ca) in &pa.terms {
            for (mb, cb) in &pb.terms {
                let t = ca.numerator().mul(cb.numerator());
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&t),
                    None => {
                        acc.insert(m, t);
                    }
                }
            }
        }
        let prod = MultiPoly {
            arity: arity as u8,
            terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|(m, v)| (m, ParamScalar::from_poly(v))).collect(),
        };
        prod.scale_back(&sa.mul_ref(&sb))
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.arity());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_polynomial())
    }

    /// Factor out a common denominator: `self = s · p` where every coefficient of
    /// `p` is a polynomial in κ, ω and `s = 1/(L(κ)·ω^k)`.
    pub fn split_denominator(&self) -> (ParamScalar, MultiPoly) {
        if self.has_polynomial_coeffs() {
            return (ParamScalar::one(), self.clone());
        }
        let mut l = KPoly::one();
        let mut k = 0u16;
        for c in self.terms.values() {
            if !c.denominator().is_one() && c.denominator() != &l {
                l = l.lcm(c.denominator());
            }
            k = k.max(c.omega_denominator());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let f = l.div_exact(c.denominator()).expect("lcm is a multiple");
            let num = c.numerator().mul_kpoly(&f).shift(0, k - c.omega_denominator());
            terms.insert(*m, ParamScalar::from_poly(num));
        }
        let s = ParamScalar::from_parts(ParamPoly::one(), l, k).expect("nonzero denominator");
        (s, MultiPoly { arity: self.arity, terms })
    }

    /// Multiply every coefficient by `s`, normalizing each.
    pub(crate) fn scale_back(&self, s: &ParamScalar) -> MultiPoly {
        if s.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c.mul_ref(s))).filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { arity: self.arity, terms }
    }

    pub fn homogeneous_component(&self, k: u32) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Component of x-degree `k` (y-exponents ignored).
    pub fn x_homogeneous_component(&self, k: u32) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().filter(|(m, _)| m.x_degree() == k).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&ParamScalar) -> Result<ParamScalar>) -> Result<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(*m, v);
            }
        }
        Ok(MultiPoly { arity: self.arity, terms })
    }

    pub fn substitute_kappa(&self, kappa: &Rational) -> Result<MultiPoly> {
        self.try_map_coeffs(|c| c.substitute_kappa(kappa))
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity());
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.exps[i] -= 1;
            out.add_term(n, c.scale_golden(&GoldenNumber::from_int(e as i64)));
        }
        out
    }

    /// `x ↦ xW` on the x-variables; y-variables are untouched.
    pub fn substitute_matrix(&self, w: &Mat3) -> MultiPoly {
        let imgs = coordinate_images(w);
        let mut cache: HashMap<[u8; 3], GoldenPoly> = HashMap::new();
        self.apply_x_linear(|xa| monomial_image(&imgs, xa, &mut cache))
    }

    /// Apply a map that is linear over the parameters and acts on the x-part of
    /// each monomial: `x^a y^b ↦ f(a)·y^b`.
    pub fn apply_x_linear<F>(&self, mut f: F) -> MultiPoly
    where
        F: FnMut([u8; 3]) -> GoldenPoly,
    {
        let (s, p) = self.split_denominator();
        let mut acc: BTreeMap<Monomial, ParamPoly> = BTreeMap::new();
        for (m, c) in &p.terms {
            let img = f(m.x_part());
            let yp = m.y_part();
            for (im, g) in &img.terms {
                let t = c.numerator().scale(g);
                let key = im.mul(&yp);
                match acc.get_mut(&key) {
                    Some(v) => *v = v.add(&t),
                    None => {
                        acc.insert(key, t);
                    }
                }
            }
        }
        let out = MultiPoly {
            arity: self.arity,
            terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|(m, v)| (m, ParamScalar::from_poly(v))).collect(),
        };
        out.scale_back(&s)
    }

    /// Like [`apply_x_linear`](Self::apply_x_linear) with images of the form `A + κB`.
    pub fn apply_x_linear_kappa<F>(&self, mut f: F) -> MultiPoly
    where
        F: FnMut([u8; 3]) -> (std::sync::Arc<GoldenPoly>, std::sync::Arc<GoldenPoly>),
    {
        let (s, p) = self.split_denominator();
        let mut acc: BTreeMap<Monomial, ParamPoly> = BTreeMap::new();
        for (m, c) in &p.terms {
            let (a, b) = f(m.x_part());
            let yp = m.y_part();
            let ck = c.numerator().shift(1, 0);
            for (img, cc) in [(&a, c.numerator()), (&b, &ck)] {
                for (im, g) in &img.terms {
                    let t = cc.scale(g);
                    let key = im.mul(&yp);
                    match acc.get_mut(&key) {
                        Some(v) => *v = v.add(&t),
                        None => {
                            acc.insert(key, t);
                        }
                    }
                }
            }
        }
        let out = MultiPoly {
            arity: self.arity,
            terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|(m, v)| (m, ParamScalar::from_poly(v))).collect(),
        };
        out.scale_back(&s)
    }

    /// Exact quotient by `⟨x, v⟩`.
    pub fn exact_divide_linear(&self, v: &[GoldenNumber; 3]) -> Result<MultiPoly> {
        let j = v.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::InvalidArgument("zero linear form".into()))?;
        let lead_inv = ParamScalar::from_golden(v[j].inv().unwrap());
        let mut rem: BTreeMap<(u8, Monomial), ParamScalar> =
            self.terms.iter().map(|(m, c)| ((m.exps[j], *m), c.clone())).collect();
        let mut quot = MultiPoly::zero(self.arity());
        while let Some(((pj, m), c)) = rem.pop_last() {
            if pj == 0 {
                return Err(Error::NotDivisible(format!("{:?}", v)));
            }
            let qm = m.div(&Monomial::var(j)).unwrap();
            let qc = c.mul_ref(&lead_inv);
            for (i, vi) in v.iter().enumerate() {
                if i == j || vi.is_zero() {
                    continue;
                }
                let nm = qm.mul(&Monomial::var(i));
                let key = (nm.exps[j], nm);
                let delta = qc.scale_golden(&-vi);
                let entry = rem.entry(key).or_default();
                *entry = entry.add_ref(&delta);
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Evaluate the x-variables at a point, leaving y and the parameters formal.
    pub fn eval_x(&self, x: &[GoldenNumber; 3]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity());
        for (m, c) in &self.terms {
            let mut g = GoldenNumber::one();
            for (i, xi) in x.iter().enumerate() {
                if m.exps[i] > 0 {
                    g = &g * &xi.pow(m.exps[i] as u32);
                }
            }
            out.add_term(m.y_part(), c.scale_golden(&g));
        }
        out
    }

    /// Evaluate all variables at golden-field values, leaving κ, ω formal.
    pub fn eval_point(&self, x: &[GoldenNumber]) -> ParamScalar {
        let (s, p) = self.split_denominator();
        let mut acc = ParamPoly::zero();
        for (m, c) in &p.terms {
            let mut g = GoldenNumber::one();
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    g = &g * &x[i].pow(e as u32);
                }
            }
            acc = acc.add(&c.numerator().scale(&g));
        }
        ParamScalar::from_poly(acc).mul_ref(&s)
    }

    /// Substitute y = v in a joint polynomial, returning an x-polynomial of the same arity.
    pub fn eval_y(&self, y: &[GoldenNumber; 3]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity());
        for (m, c) in &self.terms {
            let mut g = GoldenNumber::one();
            for (i, yi) in y.iter().enumerate() {
                if m.exps[3 + i] > 0 {
                    g = &g * &yi.pow(m.exps[3 + i] as u32);
                }
            }
            out.add_term(Monomial::ONE.with_x(m.x_part()), c.scale_golden(&g));
        }
        out
    }

    /// Golden-coefficient view, if every coefficient is parameter-free.
    pub fn to_golden(&self) -> Option<GoldenPoly> {
        let mut g = GoldenPoly::zero();
        for (m, c) in &self.terms {
            g.terms.insert(*m, c.as_golden()?);
        }
        Some(g)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm { exponents: m.exps[..self.arity as usize].to_vec(), coefficient: c.to_string() })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MultiPoly> {
        let terms: Vec<JsonTerm> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let arity = terms.iter().map(|t| t.exponents.len()).max().unwrap_or(3).max(3);
        if arity > MAX_ARITY {
            return Err(Error::Parse(format!("arity {} too large", arity)));
        }
        let mut p = MultiPoly::zero(arity);
        for t in terms {
            let c = ParamScalar::parse(&t.coefficient)?;
            p.add_term(Monomial::new(&t.exponents), c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: Vec<u8>,
    coefficient: String,
}

/// Image of `x^a` under `x ↦ xW`, built recursively and memoized.
pub(crate) fn monomial_image(imgs: &[GoldenPoly; 3], a: [u8; 3], cache: &mut HashMap<[u8; 3], GoldenPoly>) -> GoldenPoly {
    if let Some(p) = cache.get(&a) {
        return p.clone();
    }
    let out = match a.iter().position(|&e| e > 0) {
        None => GoldenPoly::one(),
        Some(i) => {
            let mut b = a;
            b[i] -= 1;
            monomial_image(imgs, b, cache).mul(&imgs[i])
        }
    };
    cache.insert(a, out.clone());
    out
}

pub fn poly_substitute(p: &MultiPoly, w: &Mat3) -> MultiPoly {
    p.substitute_matrix(w)
}

pub fn exact_divide_linear(p: &MultiPoly, v: &[GoldenNumber; 3]) -> Result<MultiPoly> {
    p.exact_divide_linear(v)
}

pub fn homogeneous_component(p: &MultiPoly, k: u32) -> MultiPoly {
    p.homogeneous_component(k)
}

fn needs_parens(c: &ParamScalar) -> bool {
    !(c.is_polynomial() && c.numerator().len() == 1)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut cs = c.to_string();
            let mut neg = false;
            if !needs_parens(c) {
                if let Some(rest) = cs.strip_prefix('-') {
                    neg = true;
                    cs = rest.to_string();
                }
            }
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = cs == "1";
            if *m == Monomial::ONE {
                if needs_parens(c) {
                    write!(f, "({})", cs)?;
                } else {
                    write!(f, "{}", cs)?;
                }
            } else if unit {
                write!(f, "{}", m)?;
            } else if needs_parens(c) || cs.contains(' ') {
                write!(f, "({})*{}", cs, m)?;
            } else {
                write!(f, "{}*{}", cs, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, o)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, o)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, o)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
