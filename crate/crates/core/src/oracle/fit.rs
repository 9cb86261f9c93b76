use num_traits::Zero;

use crate::arith::{binom_q, factorial, poly_fit, poly_fit_univariate, BivariatePolynomial, Rational, Sample, UniPoly};
use crate::chow::{ChowModel, ClassPoly, DivisorClass, ModelKind};
use crate::error::{Error, Result};
use crate::models::{DegenerationKind, FibrationDegeneration, PolarisedFibration, TestConfiguration};

use super::enumerate::{
    hilbert_count, point_is_valid, tc_hilbert_count, tc_weight, weight_polynomial,
};

/// Sample grid for the bivariate fits. Unset fields are chosen from the
/// degree bounds with one extra row and column so that the fit is
/// overdetermined and a wrong bound is detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub j0: Option<i64>,
    pub nj: Option<usize>,
    pub k0: i64,
    pub nk: Option<usize>,
    pub max_k: i64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { j0: None, nj: None, k0: 1, nk: None, max_k: 24 }
    }
}

impl GridSpec {
    pub fn with_max_k(max_k: i64) -> Self {
        GridSpec { max_k, ..Default::default() }
    }

    /// Grid points for a fit of degree `(dj, dk)` on `x`.
    pub fn points(&self, x: &PolarisedFibration, (dj, dk): (u32, u32)) -> Result<Vec<(i64, i64)>> {
        let nj = self.nj.unwrap_or(dj as usize + 2);
        let nk = self.nk.unwrap_or(dk as usize + 2);
        if nj < dj as usize + 1 || nk < dk as usize + 1 {
            return Err(Error::InvalidGrid(format!(
                "{nj}x{nk} grid cannot determine degrees ({dj}, {dk})"
            )));
        }
        if self.k0 < 0 {
            return Err(Error::InvalidGrid("k range must be nonnegative".into()));
        }
        let k_last = self.k0 + nk as i64 - 1;
        if k_last > self.max_k {
            return Err(Error::InvalidGrid(format!(
                "fit needs k up to {k_last}, above the cap {}",
                self.max_k
            )));
        }
        let ks: Vec<i64> = (self.k0..=k_last).collect();
        let valid_from = |j0: i64| -> Result<bool> {
            for j in j0..j0 + nj as i64 {
                for &k in &ks {
                    if !point_is_valid(x, j, k)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        };
        let j0 = match self.j0 {
            Some(j0) => {
                if !valid_from(j0)? {
                    return Err(Error::NegativeTwist(format!(
                        "grid starting at j = {j0} meets twists outside the polynomial range"
                    )));
                }
                j0
            }
            None => {
                let mut j0 = 1;
                while !valid_from(j0)? {
                    j0 += 1;
                    if j0 > 10_000 {
                        return Err(Error::InvalidGrid("no valid j range found".into()));
                    }
                }
                j0
            }
        };
        Ok(crate::arith::grid(j0, nj, self.k0, nk))
    }
}

/// Exactly fitted Hilbert and weight polynomials with the grid they came
/// from.
#[derive(Clone, Debug)]
pub struct FittedPolynomials {
    pub h: BivariatePolynomial,
    pub w: BivariatePolynomial,
    pub points: Vec<(i64, i64)>,
}

impl FittedPolynomials {
    /// `a_i(j)`: coefficient of `k^{N-i}` in `h`.
    pub fn a(&self, i: u32, big_n: u32) -> UniPoly {
        self.h.k_slice(big_n - i)
    }

    /// `b_i(j)`: coefficient of `k^{N+1-i}` in `w`.
    pub fn b(&self, i: u32, big_n: u32) -> UniPoly {
        self.w.k_slice(big_n + 1 - i)
    }
}

fn degree_check(what: &str, got: Option<u32>, expected: u32, exact: bool) -> Result<()> {
    let ok = match got {
        None => !exact,
        Some(g) => if exact { g == expected } else { g <= expected },
    };
    if ok {
        Ok(())
    } else {
        Err(Error::DegreeMismatch(format!(
            "{what}: got {got:?}, expected {}{expected}",
            if exact { "" } else { "<= " }
        )))
    }
}

/// `h(j, k)` fitted with bounds `(n, n+m)`; both degrees are asserted exactly.
pub fn fit_hilbert(x: &PolarisedFibration, grid: &GridSpec) -> Result<(BivariatePolynomial, Vec<(i64, i64)>)> {
    let (n, big_n) = (x.n as u32, (x.n + x.m) as u32);
    let points = grid.points(x, (n, big_n + 1))?;
    let samples = points
        .iter()
        .map(|&(j, k)| Ok(((j, k), hilbert_count(x, j, k)?)))
        .collect::<Result<Vec<Sample>>>()?;
    let h = poly_fit(&samples, (n, big_n))?;
    degree_check("deg_k h", h.degree_k(), big_n, true)?;
    degree_check("deg_j h", h.degree_j(), n, true)?;
    Ok((h, points))
}

/// `h(j, k)` and `w(j, k)` on a common grid, with the degree bounds on `w`
/// enforced.
pub fn fit_h_and_w(d: &FibrationDegeneration, grid: &GridSpec) -> Result<FittedPolynomials> {
    let x = &d.parent;
    let (h, points) = fit_hilbert(x, grid)?;
    let (n, big_n) = (x.n as u32, (x.n + x.m) as u32);
    let samples = points
        .iter()
        .map(|&(j, k)| Ok(((j, k), weight_polynomial(d, j, k)?)))
        .collect::<Result<Vec<Sample>>>()?;
    let w = poly_fit(&samples, (n, big_n + 1))?;
    degree_check("deg_k w", w.degree_k(), big_n + 1, false)?;
    degree_check("deg_j w", w.degree_j(), n, false)?;
    Ok(FittedPolynomials { h, w, points })
}

fn integrate_against(model: &ChowModel, factors: &[(&DivisorClass, u32)], td: &ClassPoly) -> Rational {
    let d = model.dimension() as u32;
    let mut p = ClassPoly::one(model.ngens());
    for (c, e) in factors {
        p = p.mul_truncated(&c.to_poly().pow_truncated(*e, d), d);
    }
    model.integrate(&p.mul_truncated(td, d))
}

/// `χ(𝒳̄, k(ℋ + jL))` as a polynomial in `(j, k)` by Hirzebruch–Riemann–Roch.
pub fn euler_polynomial(model: &ChowModel, h: &DivisorClass, l: &DivisorClass) -> Result<BivariatePolynomial> {
    let td = model.todd()?;
    let dim = model.dimension() as u32;
    let mut out = BivariatePolynomial::zero();
    for p in 0..=dim {
        let inv_fact = Rational::from_integer(factorial(p as u64)).recip();
        for s in 0..=p {
            let v = integrate_against(model, &[(h, p - s), (l, s)], &td);
            if !v.is_zero() {
                out.add_term((s, p), v * binom_q(p as u64, s as u64) * &inv_fact);
            }
        }
    }
    Ok(out)
}

/// `χ(𝒴̄, kℒ)` as a polynomial in `k`.
pub fn euler_polynomial_tc(tc: &TestConfiguration) -> Result<UniPoly> {
    let zero = tc.model.zero_class();
    Ok(euler_polynomial(&tc.model, &tc.polarisation, &zero)?.j_constant_part())
}

/// Riemann–Roch route `w(j, k) = χ(𝒳̄, k(ℋ + jL)) - h(j, k)` at one point.
pub fn euler_weight(d: &FibrationDegeneration, chi: &BivariatePolynomial, j: i64, k: i64) -> Result<Rational> {
    Ok(chi.eval_int(j, k) - hilbert_count(&d.parent, j, k)?)
}

/// Total-space model on which Riemann–Roch is available.
pub fn euler_route_available(d: &FibrationDegeneration) -> bool {
    d.kind == DegenerationKind::Twisted && matches!(d.total_model.kind(), ModelKind::ProjectiveBundle { .. })
}

/// Compare enumeration and Riemann–Roch weights at every point.
pub fn reconcile_weights(d: &FibrationDegeneration, points: &[(i64, i64)]) -> Result<()> {
    if !euler_route_available(d) {
        return Err(Error::Unsupported("Riemann-Roch on the normal cone model".into()));
    }
    let chi = euler_polynomial(&d.total_model, &d.hcal, &d.lcal)?;
    for &(j, k) in points {
        let e = euler_weight(d, &chi, j, k)?;
        let w = weight_polynomial(d, j, k)?;
        if e != w {
            return Err(Error::IdentityMismatch {
                identity: "euler-vs-enumeration weight".into(),
                detail: format!("at (j, k) = ({j}, {k}): {e} vs {w}"),
            });
        }
    }
    Ok(())
}

/// Fitted `h(k)` and `w(k)` of a test configuration on `k = 0..=q+2`.
pub fn fit_tc(tc: &TestConfiguration, max_k: i64) -> Result<(UniPoly, UniPoly)> {
    let q = tc.q() as u32;
    let last = q as i64 + 2;
    if last > max_k {
        return Err(Error::InvalidGrid(format!("fit needs k up to {last}, above the cap {max_k}")));
    }
    let hs = (0..=last)
        .map(|k| Ok((k, tc_hilbert_count(tc, k)?)))
        .collect::<Result<Vec<_>>>()?;
    let ws = (0..=last)
        .map(|k| Ok((k, tc_weight(tc, k)?)))
        .collect::<Result<Vec<_>>>()?;
    let h = poly_fit_univariate(&hs, q)?;
    let w = poly_fit_univariate(&ws, q + 1)?;
    degree_check("deg h", h.degree().map(|d| d as u32), q, true)?;
    Ok((h, w))
}

/// Compare enumeration and Riemann–Roch weights of a test configuration for
/// `k = 0..=max_k`.
pub fn reconcile_tc_weights(tc: &TestConfiguration, max_k: i64) -> Result<()> {
    let chi = euler_polynomial_tc(tc)?;
    for k in 0..=max_k {
        let e = chi.eval(&Rational::from_integer(k.into())) - tc_hilbert_count(tc, k)?;
        let w = tc_weight(tc, k)?;
        if e != w {
            return Err(Error::IdentityMismatch {
                identity: "euler-vs-enumeration weight".into(),
                detail: format!("at k = {k}: {e} vs {w}"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::models::{
        make_projectivised_fibration, make_subsheaf_degeneration, make_trivial_degeneration,
        point_normal_cone_tc, product_tc, SplitBundle,
    };

    fn fib(degrees: &[i64]) -> PolarisedFibration {
        let d: Vec<Vec<i64>> = degrees.iter().map(|&x| vec![x]).collect();
        let e = SplitBundle::over_product(&[1], &d).unwrap();
        let h = e.base().generator("h").unwrap();
        make_projectivised_fibration(&e, &h).unwrap()
    }

    #[test]
    fn trivial_fit() {
        let x = fib(&[0, 0]);
        let d = make_trivial_degeneration(&x).unwrap();
        let f = fit_h_and_w(&d, &GridSpec::default()).unwrap();
        let expected = BivariatePolynomial::from_terms([
            ((1, 2), int(1)),
            ((0, 1), int(1)),
            ((1, 1), int(1)),
            ((0, 0), int(1)),
        ]);
        assert_eq!(f.h, expected);
        assert!(f.w.is_zero());
    }

    #[test]
    fn weighted_fit_leading_coefficient() {
        let x = fib(&[0, 0]);
        let d = make_subsheaf_degeneration(&x, &[0]).unwrap();
        let f = fit_h_and_w(&d, &GridSpec::default()).unwrap();
        assert_eq!(f.w.coefficient(1, 3), rat(1, 2));
        assert_eq!(f.w.degree_j(), Some(1));
        reconcile_weights(&d, &f.points).unwrap();
    }

    #[test]
    fn grid_is_pushed_into_valid_range() {
        let x = fib(&[0, -3]);
        let pts = GridSpec::default().points(&x, (1, 3)).unwrap();
        assert!(pts.iter().all(|&(j, _)| j >= 3));
        let bad = GridSpec { j0: Some(1), ..Default::default() };
        assert!(matches!(bad.points(&x, (1, 3)), Err(Error::NegativeTwist(_))));
        let capped = GridSpec::with_max_k(3);
        assert!(matches!(capped.points(&x, (1, 3)), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn tc_fits_and_riemann_roch() {
        let tc = product_tc(&[1, 0], 1).unwrap();
        let (h, w) = fit_tc(&tc, 24).unwrap();
        assert_eq!(h, UniPoly::new(vec![int(1), int(1)]));
        assert_eq!(w, UniPoly::new(vec![int(0), rat(1, 2), rat(1, 2)]));
        reconcile_tc_weights(&tc, 10).unwrap();
        let nc = point_normal_cone_tc(2, 1).unwrap();
        reconcile_tc_weights(&nc, 10).unwrap();
        let tc = product_tc(&[2, 0, 1], 2).unwrap();
        reconcile_tc_weights(&tc, 6).unwrap();
    }

    #[test]
    fn leading_term_matches_volume() {
        // a_0(j) (n+m)! = (H + jL)^{n+m}
        let x = fib(&[0, 1]);
        let (h, _) = fit_hilbert(&x, &GridSpec::default()).unwrap();
        let a0 = h.k_slice(2);
        assert_eq!(a0.coeff(0), rat(1, 2));
        assert_eq!(a0.coeff(1), int(1));
    }
}
