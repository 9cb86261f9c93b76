//! Ground truth by counting: sections of `k(H + jL)` on `ℙ(E)` are indexed by
//! monomials in the summands, and each contributes `h⁰` of a line bundle on a
//! product of projective spaces.

mod enumerate;
mod fit;

pub use enumerate::{
    h0_product, hilbert_count, point_is_valid, tc_hilbert_count, tc_weight, tc_weight_spectrum,
    twist_is_valid, weight_polynomial, weight_spectrum, WeightSpectrum,
};
pub use fit::{
    euler_polynomial, euler_polynomial_tc, euler_route_available, euler_weight, fit_h_and_w,
    fit_hilbert, fit_tc, reconcile_tc_weights, reconcile_weights, FittedPolynomials, GridSpec,
};
