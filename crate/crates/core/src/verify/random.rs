//! Seeded random polynomials for spot checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyalg::{monomials_of_degree, Monomial, MultiPoly};
use crate::scalars::{GoldenNumber, ParamScalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a + bτ` with small integer `a, b`, never zero.
pub fn golden<R: Rng>(r: &mut R) -> GoldenNumber {
    loop {
        let a = r.random_range(-4..=4);
        let b = r.random_range(-2..=2);
        if a != 0 || b != 0 {
            return GoldenNumber::ints(a, b);
        }
    }
}

/// A coefficient, optionally with a κ-linear factor.
pub fn coeff<R: Rng>(r: &mut R, with_kappa: bool) -> ParamScalar {
    let c = ParamScalar::from_golden(golden(r));
    if with_kappa && r.random_bool(0.5) {
        let k = ParamScalar::kappa().scale_golden(&GoldenNumber::from_int(r.random_range(1..=3)));
        c.mul_ref(&k.add_ref(&ParamScalar::from_int(r.random_range(0..=2))))
    } else {
        c
    }
}

/// Homogeneous of degree `d` with up to `terms` monomials.
pub fn homogeneous<R: Rng>(r: &mut R, d: u8, terms: usize, with_kappa: bool) -> MultiPoly {
    let basis = monomials_of_degree(d);
    let mut p = MultiPoly::zero(3);
    for _ in 0..terms {
        let m = basis[r.random_range(0..basis.len())];
        p.add_term(m, coeff(r, with_kappa));
    }
    if p.is_zero() {
        p.add_term(basis[0], ParamScalar::from_int(1));
    }
    p
}

/// Degree at most `d`, `terms` monomials drawn uniformly over degrees.
pub fn polynomial<R: Rng>(r: &mut R, d: u8, terms: usize, with_kappa: bool) -> MultiPoly {
    let mut p = MultiPoly::zero(3);
    for _ in 0..terms {
        let deg = r.random_range(0..=d);
        let basis = monomials_of_degree(deg);
        let m: Monomial = basis[r.random_range(0..basis.len())];
        p.add_term(m, coeff(r, with_kappa));
    }
    p
}
