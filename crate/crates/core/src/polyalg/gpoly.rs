use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Monomial;
use crate::error::{Error, Result};
use crate::scalars::GoldenNumber;

/// 3×3 matrix over Q(τ), row-major.
pub type Mat3 = [[GoldenNumber; 3]; 3];

/// Polynomial in x with Q(τ) coefficients. Used for parameter-free building
/// blocks (linear forms, monomial images, difference quotients) that are
/// cached and then combined with parametric coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GoldenPoly {
    pub terms: BTreeMap<Monomial, GoldenNumber>,
}

impl GoldenPoly {
    pub fn zero() -> Self {
        GoldenPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, GoldenNumber::one())
    }

    pub fn monomial(m: Monomial, c: GoldenNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GoldenPoly { terms }
    }

    /// `⟨x, v⟩ = Σ vᵢxᵢ`.
    pub fn linear(v: &[GoldenNumber; 3]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(Monomial::var(i), c.clone());
            }
        }
        GoldenPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &GoldenNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &GoldenPoly, c: &GoldenNumber) {
        for (m, v) in &o.terms {
            self.add_term(*m, &(v * c));
        }
    }

    pub fn sub(&self, o: &GoldenPoly) -> GoldenPoly {
        let mut out = self.clone();
        out.add_scaled(o, &-GoldenNumber::one());
        out
    }

    pub fn mul(&self, o: &GoldenPoly) -> GoldenPoly {
        let mut out = GoldenPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn eval(&self, x: &[GoldenNumber]) -> GoldenNumber {
        let mut acc = GoldenNumber::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = &t * &x[i].pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Exact quotient by `⟨x, v⟩`, by long division in the first variable with
    /// a nonzero coefficient of `v`.
    pub fn exact_divide_linear(&self, v: &[GoldenNumber; 3]) -> Result<GoldenPoly> {
        let j = v.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::InvalidArgument("zero linear form".into()))?;
        let lead_inv = v[j].inv().unwrap();
        let divisor = GoldenPoly::linear(v);
        // key (power of x_j, monomial) so the largest x_j-power is popped first
        let mut rem: BTreeMap<(u8, Monomial), GoldenNumber> =
            self.terms.iter().map(|(m, c)| ((m.exps[j], *m), c.clone())).collect();
        let mut quot = GoldenPoly::zero();
        while let Some(((pj, m), c)) = rem.pop_last() {
            if pj == 0 {
                return Err(Error::NotDivisible(format!("{:?}", v)));
            }
            let qm = m.div(&Monomial::var(j)).unwrap();
            let qc = &c * &lead_inv;
            for (dm, dc) in &divisor.terms {
                if dm.exps[j] == 1 {
                    continue; // cancels the popped term
                }
                let nm = qm.mul(dm);
                let key = (nm.exps[j], nm);
                let delta = -(&qc * dc);
                match rem.get_mut(&key) {
                    Some(x) => {
                        *x += &delta;
                        if x.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, delta);
                    }
                }
            }
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }
}

/// Images `ℓ₀, ℓ₁, ℓ₂` of the coordinate functions under `x ↦ xW`:
/// `(xW)ⱼ = Σₖ xₖ W[k][j]`.
pub fn coordinate_images(w: &Mat3) -> [GoldenPoly; 3] {
    let col = |j: usize| GoldenPoly::linear(&[w[0][j].clone(), w[1][j].clone(), w[2][j].clone()]);
    [col(0), col(1), col(2)]
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out: Mat3 = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut s = GoldenNumber::zero();
            for k in 0..3 {
                s += &(&a[i][k] * &b[k][j]);
            }
            *cell = s;
        }
    }
    out
}

pub fn transpose(a: &Mat3) -> Mat3 {
    let mut out: Mat3 = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[j][i].clone();
        }
    }
    out
}

pub fn identity() -> Mat3 {
    let mut out: Mat3 = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = GoldenNumber::one();
    }
    out
}

/// Row vector times matrix, `xW`.
pub fn vec_mat(x: &[GoldenNumber; 3], w: &Mat3) -> [GoldenNumber; 3] {
    let mut out: [GoldenNumber; 3] = Default::default();
    for (j, o) in out.iter_mut().enumerate() {
        for (k, xk) in x.iter().enumerate() {
            *o += &(xk * &w[k][j]);
        }
    }
    out
}

pub fn dot(a: &[GoldenNumber; 3], b: &[GoldenNumber; 3]) -> GoldenNumber {
    let mut s = GoldenNumber::zero();
    for i in 0..3 {
        s += &(&a[i] * &b[i]);
    }
    s
}
