use super::MultiPoly;
use crate::scalars::{GoldenNumber, ParamScalar};

/// Power series in an auxiliary variable r with polynomial coefficients,
/// truncated after `r^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        let arity = coeffs.first().map_or(3, |c| c.arity());
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, MultiPoly::zero(arity));
        TruncatedSeries { coeffs }
    }

    pub fn one(arity: usize, order: usize) -> Self {
        Self::new(vec![MultiPoly::one(arity)], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly> {
        self.coeffs
    }

    /// Cauchy product, truncated at the common order.
    pub fn product(&self, o: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), o.order(), "truncation orders differ");
        let n = self.order();
        let arity = self.coeffs[0].arity().max(o.coeffs[0].arity());
        let mut out = vec![MultiPoly::zero(arity); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `(1 − r^step·u)^{−κ}` style binomial series: coefficient of `r^{step·m}`
    /// is `(exponent)_m/m! · u^m`.
    pub fn binomial(u: &MultiPoly, exponent: &ParamScalar, step: usize, order: usize) -> TruncatedSeries {
        let arity = u.arity();
        let mut coeffs = vec![MultiPoly::zero(arity); order + 1];
        let mut c = ParamScalar::one();
        let mut upow = MultiPoly::one(arity);
        let mut m = 0usize;
        while m * step <= order {
            coeffs[m * step] = upow.scale(&c);
            m += 1;
            if m * step > order {
                break;
            }
            // (e)_m/m! = (e)_{m-1}/(m-1)! · (e + m - 1)/m
            let f = exponent
                .add_ref(&ParamScalar::from_int(m as i64 - 1))
                .scale_golden(&GoldenNumber::from_frac(1, m as i64));
            c = c.mul_ref(&f);
            upow = upow.mul(u);
        }
        TruncatedSeries { coeffs }
    }
}

pub fn series_product(s: &TruncatedSeries, t: &TruncatedSeries) -> TruncatedSeries {
    s.product(t)
}

/// Coefficients `(κ)_m/m! · u^m` for `m ≤ order` of `(1 − r·u)^{−κ}`.
pub fn binomial_series(u: &MultiPoly, exponent: &ParamScalar, order: usize) -> TruncatedSeries {
    TruncatedSeries::binomial(u, exponent, 1, order)
}
