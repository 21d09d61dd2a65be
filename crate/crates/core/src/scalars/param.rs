use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{GoldenNumber, KPoly, Rational};
use crate::error::{Error, Result};

/// Exponent pair `(ω-degree, κ-degree)`; ordering groups terms by ω first.
pub type PExp = (u16, u16);

/// Sparse polynomial in the formal parameters κ and ω with Q(τ) coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(PExp, GoldenNumber)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn constant(c: GoldenNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: vec![((0, 0), c)] }
    }

    pub fn one() -> Self {
        Self::constant(GoldenNumber::one())
    }

    pub fn monomial(c: GoldenNumber, kappa: u16, omega: u16) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: vec![((omega, kappa), c)] }
    }

    pub fn kappa() -> Self {
        Self::monomial(GoldenNumber::one(), 1, 0)
    }

    pub fn omega() -> Self {
        Self::monomial(GoldenNumber::one(), 0, 1)
    }

    fn from_map(map: BTreeMap<PExp, GoldenNumber>) -> Self {
        ParamPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u16, u16, &GoldenNumber)> {
        self.terms.iter().map(|((w, k), c)| (*k, *w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<GoldenNumber> {
        match self.terms.len() {
            0 => Some(GoldenNumber::zero()),
            1 if self.terms[0].0 == (0, 0) => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn kappa_degree(&self) -> u16 {
        self.terms.iter().map(|((_, k), _)| *k).max().unwrap_or(0)
    }

    pub fn omega_degree(&self) -> u16 {
        self.terms.iter().map(|((w, _), _)| *w).max().unwrap_or(0)
    }

    pub fn min_omega_degree(&self) -> u16 {
        self.terms.iter().map(|((w, _), _)| *w).min().unwrap_or(0)
    }

    pub fn add(&self, o: &ParamPoly) -> ParamPoly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &o.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().cloned());
        ParamPoly { terms: out }
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &ParamPoly) -> ParamPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &GoldenNumber) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        ParamPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn mul(&self, o: &ParamPoly) -> ParamPoly {
        if self.is_zero() || o.is_zero() {
            return ParamPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        if o.terms.len() == 1 {
            let ((w, k), c) = &o.terms[0];
            return self.shift(*k, *w).scale(c);
        }
        if self.terms.len() == 1 {
            let ((w, k), c) = &self.terms[0];
            return o.shift(*k, *w).scale(c);
        }
        let mut map: BTreeMap<PExp, GoldenNumber> = BTreeMap::new();
        for ((wa, ka), ca) in &self.terms {
            for ((wb, kb), cb) in &o.terms {
                let e = (wa + wb, ka + kb);
                let p = ca * cb;
                match map.get_mut(&e) {
                    Some(v) => *v += &p,
                    None => {
                        map.insert(e, p);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    /// Multiply by κ^dk·ω^dw.
    pub fn shift(&self, dk: u16, dw: u16) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|((w, k), c)| ((w + dw, k + dk), c.clone())).collect() }
    }

    /// Divide by ω^m; caller guarantees every term has ω-degree ≥ m.
    fn unshift_omega(&self, m: u16) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|((w, k), c)| ((w - m, *k), c.clone())).collect() }
    }

    /// Coefficients of ω⁰, ω¹, … as univariate polynomials in κ.
    pub fn omega_slices(&self) -> Vec<KPoly> {
        let deg = self.omega_degree() as usize;
        let mut dense: Vec<Vec<GoldenNumber>> = vec![Vec::new(); deg + 1];
        for ((w, k), c) in &self.terms {
            let row = &mut dense[*w as usize];
            if row.len() <= *k as usize {
                row.resize(*k as usize + 1, GoldenNumber::zero());
            }
            row[*k as usize] = c.clone();
        }
        dense.into_iter().map(KPoly::from_coeffs).collect()
    }

    pub fn from_kpoly(p: &KPoly) -> ParamPoly {
        ParamPoly {
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| ((0, k as u16), c.clone()))
                .collect(),
        }
    }

    /// `Some` when the polynomial does not involve ω.
    pub fn as_kpoly(&self) -> Option<KPoly> {
        if self.omega_degree() > 0 {
            return None;
        }
        Some(self.omega_slices().into_iter().next().unwrap_or_else(KPoly::zero))
    }

    pub fn mul_kpoly(&self, p: &KPoly) -> ParamPoly {
        if p.is_one() {
            return self.clone();
        }
        self.mul(&ParamPoly::from_kpoly(p))
    }

    /// Exact division by a κ-only polynomial, slice by slice.
    pub fn div_exact_kpoly(&self, d: &KPoly) -> Option<ParamPoly> {
        if d.is_one() {
            return Some(self.clone());
        }
        let mut terms = Vec::new();
        for (w, slice) in self.omega_slices().into_iter().enumerate() {
            if slice.is_zero() {
                continue;
            }
            let q = slice.div_exact(d)?;
            for (k, c) in q.into_coeffs().into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push(((w as u16, k as u16), c));
                }
            }
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Some(ParamPoly { terms })
    }

    pub fn eval(&self, kappa: &GoldenNumber, omega: &GoldenNumber) -> GoldenNumber {
        let mut acc = GoldenNumber::zero();
        for ((w, k), c) in &self.terms {
            acc += &(&(c * &kappa.pow(*k as u32)) * &omega.pow(*w as u32));
        }
        acc
    }

    pub fn substitute_kappa(&self, kappa: &GoldenNumber) -> ParamPoly {
        let mut map: BTreeMap<PExp, GoldenNumber> = BTreeMap::new();
        for ((w, k), c) in &self.terms {
            let v = c * &kappa.pow(*k as u32);
            *map.entry((*w, 0)).or_insert_with(GoldenNumber::zero) += &v;
        }
        Self::from_map(map)
    }

    pub fn substitute_omega(&self, omega: &GoldenNumber) -> ParamPoly {
        let mut map: BTreeMap<PExp, GoldenNumber> = BTreeMap::new();
        for ((w, k), c) in &self.terms {
            let v = c * &omega.pow(*w as u32);
            *map.entry((0, *k)).or_insert_with(GoldenNumber::zero) += &v;
        }
        Self::from_map(map)
    }

    /// Leading coefficient in the (ω, κ) term order.
    fn lead(&self) -> Option<&GoldenNumber> {
        self.terms.last().map(|(_, c)| c)
    }

    fn render(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((w, k), c) in self.terms.iter().rev() {
            let (neg, mag) = split_sign(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            let unit = mag.is_one();
            if !unit || (*k == 0 && *w == 0) {
                if mag.a.is_zero() || mag.b.is_zero() {
                    factors.push(mag.to_string());
                } else {
                    factors.push(format!("({})", mag));
                }
            }
            if *k == 1 {
                factors.push("k".into());
            } else if *k > 1 {
                factors.push(format!("k^{}", k));
            }
            if *w == 1 {
                factors.push("w".into());
            } else if *w > 1 {
                factors.push(format!("w^{}", w));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Split a golden coefficient into an optional leading minus and a magnitude
/// for display; only pure rational or pure τ-multiples are sign-flipped.
fn split_sign(c: &GoldenNumber) -> (bool, GoldenNumber) {
    let neg = if c.b.is_zero() {
        c.a.is_negative()
    } else if c.a.is_zero() {
        c.b.is_negative()
    } else {
        c.a.is_negative() && c.b.is_negative()
    };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f)
    }
}

/// Rational function in κ and ω over Q(τ): `num(κ,ω) / (den(κ)·ω^omega_den)`.
///
/// Canonical form: `den` monic, `gcd(num, den) = 1` (taken slice-wise in ω),
/// and no power of ω common to numerator and denominator. Denominators are
/// restricted to a κ-polynomial times a power of ω, which covers every
/// quotient the oscillator calculus produces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: ParamPoly,
    den: KPoly,
    omega_den: u16,
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { num: ParamPoly::zero(), den: KPoly::one(), omega_den: 0 }
    }

    pub fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        ParamScalar { num, den: KPoly::one(), omega_den: 0 }
    }

    pub fn from_golden(c: GoldenNumber) -> Self {
        Self::from_poly(ParamPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_golden(GoldenNumber::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_golden(GoldenNumber::from_frac(n, d))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_golden(GoldenNumber::from_rational(r))
    }

    pub fn kappa() -> Self {
        Self::from_poly(ParamPoly::kappa())
    }

    pub fn omega() -> Self {
        Self::from_poly(ParamPoly::omega())
    }

    pub fn tau() -> Self {
        Self::from_golden(GoldenNumber::tau())
    }

    /// `a·κ + b` with rational `b = bn/bd`.
    pub fn kappa_linear(a: i64, bn: i64, bd: i64) -> Self {
        &(&Self::kappa() * &Self::from_int(a)) + &Self::from_frac(bn, bd)
    }

    /// Build from parts and bring to canonical form.
    pub fn from_parts(num: ParamPoly, den: KPoly, omega_den: u16) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        Ok(Self::normalize(num, den, omega_den))
    }

    fn normalize(num: ParamPoly, den: KPoly, omega_den: u16) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut num = num;
        let mut den = den;
        let mut omega_den = omega_den;
        if omega_den > 0 {
            let m = num.min_omega_degree().min(omega_den);
            if m > 0 {
                num = num.unshift_omega(m);
                omega_den -= m;
            }
        }
        if !den.is_one() {
            if den.is_constant() {
                let inv = den.lead().inv().unwrap();
                num = num.scale(&inv);
                den = KPoly::one();
            } else {
                let mut g = den.clone();
                for s in num.omega_slices() {
                    if s.is_zero() {
                        continue;
                    }
                    g = g.gcd(&s);
                    if g.is_one() {
                        break;
                    }
                }
                if !g.is_one() {
                    num = num.div_exact_kpoly(&g).expect("gcd divides numerator");
                    den = den.div_exact(&g).expect("gcd divides denominator");
                }
                let lead = den.lead();
                if !lead.is_one() {
                    let inv = lead.inv().unwrap();
                    den = den.scale(&inv);
                    num = num.scale(&inv);
                }
            }
        }
        ParamScalar { num, den, omega_den }
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &KPoly {
        &self.den
    }

    pub fn omega_denominator(&self) -> u16 {
        self.omega_den
    }

    /// Full denominator `den(κ)·ω^k` as a polynomial.
    pub fn denominator_poly(&self) -> ParamPoly {
        ParamPoly::from_kpoly(&self.den).shift(0, self.omega_den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.omega_den == 0 && self.den.is_one()
    }

    pub fn as_golden(&self) -> Option<GoldenNumber> {
        if !self.is_polynomial() {
            return None;
        }
        self.num.as_constant()
    }

    /// Idempotent re-normalization; values are always canonical already.
    pub fn normalized(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone(), self.omega_den)
    }

    pub fn neg(&self) -> Self {
        ParamScalar { num: self.num.neg(), den: self.den.clone(), omega_den: self.omega_den }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den && self.omega_den == o.omega_den {
            return Self::normalize(self.num.add(&o.num), self.den.clone(), self.omega_den);
        }
        let l = self.den.lcm(&o.den);
        let k = self.omega_den.max(o.omega_den);
        let fa = l.div_exact(&self.den).unwrap();
        let fb = l.div_exact(&o.den).unwrap();
        let na = self.num.mul_kpoly(&fa).shift(0, k - self.omega_den);
        let nb = o.num.mul_kpoly(&fb).shift(0, k - o.omega_den);
        Self::normalize(na.add(&nb), l, k)
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den), self.omega_den + o.omega_den)
    }

    pub fn scale_golden(&self, c: &GoldenNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamScalar { num: self.num.scale(c), den: self.den.clone(), omega_den: self.omega_den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        let m = self.num.min_omega_degree();
        let reduced = self.num.unshift_omega(m);
        let kp = reduced.as_kpoly().ok_or_else(|| Error::NotInvertible(self.to_string()))?;
        let num = ParamPoly::from_kpoly(&self.den).shift(0, self.omega_den);
        Ok(Self::normalize(num, kp, m))
    }

    pub fn div_ref(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn eval_golden(&self, kappa: &GoldenNumber, omega: &GoldenNumber) -> Result<GoldenNumber> {
        let d = &self.den.eval(kappa) * &omega.pow(self.omega_den as u32);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes { kappa: kappa.to_string(), omega: omega.to_string() });
        }
        Ok(&self.num.eval(kappa, omega) * &d.inv().unwrap())
    }

    /// Substitute κ = κ₀ and ω = ω₀ exactly.
    pub fn eval(&self, kappa: &Rational, omega: &Rational) -> Result<GoldenNumber> {
        self.eval_golden(&GoldenNumber::from_rational(kappa.clone()), &GoldenNumber::from_rational(omega.clone()))
    }

    /// Specialize κ, keeping ω formal.
    pub fn substitute_kappa(&self, kappa: &Rational) -> Result<Self> {
        let k = GoldenNumber::from_rational(kappa.clone());
        let d = self.den.eval(&k);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes { kappa: kappa.to_string(), omega: "w".into() });
        }
        let num = self.num.substitute_kappa(&k).scale(&d.inv().unwrap());
        Ok(Self::normalize(num, KPoly::one(), self.omega_den))
    }

    /// Specialize ω (nonzero), keeping κ formal.
    pub fn substitute_omega(&self, omega: &Rational) -> Result<Self> {
        let w = GoldenNumber::from_rational(omega.clone());
        if w.is_zero() && self.omega_den > 0 {
            return Err(Error::DenominatorVanishes { kappa: "k".into(), omega: omega.to_string() });
        }
        let f = w.pow(self.omega_den as u32).inv().unwrap_or_else(GoldenNumber::one);
        let num = self.num.substitute_omega(&w).scale(&f);
        Ok(Self::normalize(num, self.den.clone(), 0))
    }

    pub fn to_f64(&self, kappa: f64, omega: f64) -> f64 {
        let mut n = 0.0;
        for (k, w, c) in self.num.terms() {
            n += c.to_f64() * kappa.powi(k as i32) * omega.powi(w as i32);
        }
        let mut d = 0.0;
        for (k, c) in self.den.coeffs().iter().enumerate() {
            d += c.to_f64() * kappa.powi(k as i32);
        }
        n / (d * omega.powi(self.omega_den as i32))
    }

    /// Leading numerator coefficient, used to fix sign conventions in tests.
    pub fn leading_coefficient(&self) -> Option<GoldenNumber> {
        self.num.lead().cloned()
    }
}

/// Rising factorial `base·(base+1)···(base+m−1)`; the empty product is 1.
pub fn pochhammer(base: &ParamScalar, m: u32) -> ParamScalar {
    let mut acc = ParamScalar::one();
    for i in 0..m {
        acc = acc.mul_ref(&base.add_ref(&ParamScalar::from_int(i as i64)));
    }
    acc
}

/// Exact substitution κ = κ₀, ω = ω₀.
pub fn param_eval(s: &ParamScalar, kappa: &Rational, omega: &Rational) -> Result<GoldenNumber> {
    s.eval(kappa, omega)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let d = self.denominator_poly();
        let ds = d.to_string();
        let ns = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        if d.len() > 1 || ds.contains('*') {
            write!(f, "{}/({})", ns, ds)
        } else {
            write!(f, "{}/{}", ns, ds)
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, o: &ParamScalar) -> ParamScalar {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, o: &ParamScalar) -> ParamScalar {
        self.sub_ref(o)
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, o: &ParamScalar) -> ParamScalar {
        self.mul_ref(o)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar::neg(self)
    }
}

impl From<GoldenNumber> for ParamScalar {
    fn from(c: GoldenNumber) -> Self {
        ParamScalar::from_golden(c)
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> ParamScalar {
        ParamScalar::kappa()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eval_simple_quotient() {
        let s = k().div_ref(&(&k() + &ParamScalar::one())).unwrap();
        assert_eq!(param_eval(&s, &q(1, 1), &q(1, 1)).unwrap(), GoldenNumber::from_frac(1, 2));
    }

    #[test]
    fn eval_constant_terms() {
        let s = &ParamScalar::kappa_linear(6, 1, 1) * &ParamScalar::kappa_linear(5, 1, 2);
        assert_eq!(param_eval(&s, &q(0, 1), &q(1, 1)).unwrap(), GoldenNumber::from_frac(1, 2));
    }

    #[test]
    fn eval_reciprocal_of_shifted_linear() {
        // -15k - 2 + 1/2 vanishes at k = -1/10
        let d = ParamScalar::kappa_linear(-15, -3, 2);
        let s = d.inv().unwrap();
        assert!(matches!(param_eval(&s, &q(-1, 10), &q(1, 1)), Err(Error::DenominatorVanishes { .. })));
        let v = param_eval(&s, &q(1, 10), &q(1, 1)).unwrap();
        assert_eq!(v, GoldenNumber::from_frac(-1, 3));
    }

    #[test]
    fn pochhammer_cases() {
        assert!(pochhammer(&k(), 0).is_one());
        let base = ParamScalar::kappa_linear(6, 1, 1);
        assert_eq!(pochhammer(&base, 2), &base * &ParamScalar::kappa_linear(6, 2, 1));
        let b2 = ParamScalar::kappa_linear(-15, -11, 2);
        let v = param_eval(&pochhammer(&b2, 3), &q(1, 1), &q(1, 1)).unwrap();
        let expect = GoldenNumber::from_frac(-41, 2) * GoldenNumber::from_frac(-39, 2) * GoldenNumber::from_frac(-37, 2);
        assert_eq!(v, expect);
    }

    #[test]
    fn cancellation_is_canonical() {
        let a = ParamScalar::kappa_linear(30, 7, 1);
        let b = ParamScalar::kappa_linear(2, 1, 1);
        let s = (&a * &b).div_ref(&a).unwrap();
        assert_eq!(s, b);
        let w = ParamScalar::omega();
        let t = (&w * &b).div_ref(&(&w * &w)).unwrap();
        assert_eq!(t.omega_denominator(), 1);
        assert_eq!(t.numerator(), b.numerator());
    }

    #[test]
    fn non_monomial_omega_denominator_rejected() {
        let s = &ParamScalar::omega() + &ParamScalar::kappa();
        assert!(matches!(s.inv(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn display_forms() {
        let s = ParamScalar::kappa_linear(6, 1, 1);
        assert_eq!(s.to_string(), "6*k + 1");
        let t = ParamScalar::one().div_ref(&(&ParamScalar::omega() * &ParamScalar::from_int(2))).unwrap();
        assert_eq!(t.to_string(), "1/2/w");
    }
}
