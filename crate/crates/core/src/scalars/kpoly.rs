use std::fmt;

use num_traits::{One, Zero};

use super::{GoldenNumber, Rational};

/// Dense univariate polynomial in κ over Q(τ); index = degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KPoly {
    coeffs: Vec<GoldenNumber>,
}

impl KPoly {
    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KPoly { coeffs: vec![GoldenNumber::one()] }
    }

    pub fn constant(c: GoldenNumber) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `a·κ + b`.
    pub fn linear(a: GoldenNumber, b: GoldenNumber) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<GoldenNumber>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[GoldenNumber] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GoldenNumber> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> GoldenNumber {
        self.coeffs.last().cloned().unwrap_or_else(GoldenNumber::zero)
    }

    pub fn add(&self, o: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        KPoly::from_coeffs(out)
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> KPoly {
        KPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        if self.is_zero() || o.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![GoldenNumber::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        KPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &GoldenNumber) -> KPoly {
        if c.is_zero() {
            return KPoly::zero();
        }
        KPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Euclidean division over the field Q(τ). Panics on a zero divisor.
    pub fn div_rem(&self, d: &KPoly) -> (KPoly, KPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (KPoly::zero(), self.clone());
        }
        let lead_inv = d.lead().inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        let mut quot = vec![GoldenNumber::zero(); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dl - 1);
        (KPoly::from_coeffs(quot), KPoly::from_coeffs(rem))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn div_exact(&self, d: &KPoly) -> Option<KPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> KPoly {
        if self.is_zero() {
            return KPoly::zero();
        }
        let inv = self.lead().inv().unwrap();
        self.scale(&inv)
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &KPoly) -> KPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            if b.is_constant() {
                return KPoly::one();
            }
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn lcm(&self, o: &KPoly) -> KPoly {
        if self.is_one() {
            return o.monic();
        }
        if o.is_one() || self == o {
            return self.monic();
        }
        let g = self.gcd(o);
        self.div_exact(&g).unwrap().mul(o).monic()
    }

    pub fn eval(&self, k: &GoldenNumber) -> GoldenNumber {
        let mut acc = GoldenNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * k) + c;
        }
        acc
    }

    pub fn eval_rational(&self, k: &Rational) -> GoldenNumber {
        self.eval(&GoldenNumber::from_rational(k.clone()))
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> KPoly {
        KPoly::linear(GoldenNumber::from_int(a), GoldenNumber::from_int(b))
    }

    #[test]
    fn gcd_of_products() {
        let p = lin(1, 1).mul(&lin(2, 3)).mul(&lin(30, 7));
        let q = lin(2, 3).mul(&lin(5, 1)).mul(&lin(30, 7));
        let g = p.gcd(&q);
        assert_eq!(g, lin(2, 3).mul(&lin(30, 7)).monic());
    }

    #[test]
    fn division_roundtrip() {
        let p = lin(1, 1).mul(&lin(2, 3));
        let (q, r) = p.div_rem(&lin(1, 1));
        assert!(r.is_zero());
        assert_eq!(q, lin(2, 3));
        assert!(lin(1, 2).div_exact(&lin(1, 1)).is_none());
    }
}
