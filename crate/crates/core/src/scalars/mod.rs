//! Exact scalars: the golden field Q(τ) and rational functions in κ, ω over it.

mod golden;
mod kpoly;
mod param;

pub use golden::{golden_mul, GoldenNumber, TAU_F64};
pub use kpoly::KPoly;
pub use param::{factorial, param_eval, pochhammer, PExp, ParamPoly, ParamScalar};

pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
