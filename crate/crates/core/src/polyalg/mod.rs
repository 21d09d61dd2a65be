//! Multivariate polynomials over the parameter field, with the operations the
//! Dunkl calculus needs.

mod gpoly;
mod monomial;
mod parse;
mod poly;
mod series;

pub use gpoly::{coordinate_images, dot, identity, mat_mul, transpose, vec_mat, GoldenPoly, Mat3};
pub use monomial::{monomials_of_degree, Monomial, MAX_ARITY};
pub use poly::{exact_divide_linear, homogeneous_component, poly_substitute, MultiPoly};
pub(crate) use poly::monomial_image;
pub use series::{binomial_series, series_product, TruncatedSeries};
