//! Exact rationals, polynomials in `j` and `(j, k)`, and interpolation.

mod bivariate;
mod fit;
mod rational;
mod univariate;

pub use bivariate::BivariatePolynomial;
pub use fit::{grid, poly_fit, poly_fit_univariate, Sample};
pub use rational::{binom_q, binomial, factorial, fmt_q, int, is_integral, rat, sign, to_i64, Rational};
pub use univariate::{Laurent, RationalFunction, UniPoly};

/// Coefficient of `j^dj k^dk`, zero when absent.
pub fn coefficient(p: &BivariatePolynomial, dj: u32, dk: u32) -> Rational {
    p.coefficient(dj, dk)
}
