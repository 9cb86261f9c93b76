use num_traits::{Signed, Zero};

use crate::arith::{binom_q, int, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::models::{make_fibre_test_configuration, FibrationDegeneration, TestConfiguration, WeightSource};
use crate::oracle::FittedPolynomials;

use super::df::general_fibre_volume;
use super::power_in_j;

/// `𝓛^{q+1}/(q+1) - 𝓛^q.(𝓛 - L)` on a model carrying the pullback of `L`.
pub fn min_norm_tc(tc: &TestConfiguration) -> Result<Rational> {
    let pull = tc.pullback.as_ref().ok_or(Error::HpullNotRepresentable)?;
    let q = tc.q() as u32;
    let l = &tc.polarisation;
    let top = tc.model.intersect_powers(&[(l, q + 1)])?;
    let diff = l - pull;
    let mixed = tc.model.intersect_powers(&[(l, q), (&diff, 1)])?;
    Ok(top / int(q as i64 + 1) - mixed)
}

/// Minimum norm of a product test configuration from its weights:
/// `𝓛^{q+1}/(q+1) - V λ_min`, i.e. `V(λ̄ - λ_min)`.
pub fn min_norm_dh(tc: &TestConfiguration) -> Result<Rational> {
    let lambda_min = match &tc.weights {
        WeightSource::Projective { weights, a } => int(a * weights.iter().min().unwrap()),
        WeightSource::PointNormalCone { .. } => {
            return Err(Error::Unsupported("central fibre is not irreducible".into()))
        }
        WeightSource::None => return Err(Error::NotBundleType),
    };
    let q = tc.q() as u32;
    let top = tc.model.intersect_powers(&[(&tc.polarisation, q + 1)])?;
    Ok(top / int(q as i64 + 1) - general_fibre_volume(tc)? * lambda_min)
}

/// Minimum norm of the fibre test configuration.
pub fn min_norm_fibration(d: &FibrationDegeneration) -> Result<Rational> {
    let tc = make_fibre_test_configuration(d)?;
    match min_norm_tc(&tc) {
        Err(Error::HpullNotRepresentable) => min_norm_dh(&tc),
        r => r,
    }
}

/// Coefficient of `jⁿ` in `min_norm_tc(𝒳, jL + ℋ)`, divided by
/// `binom(N, n)`; only on models carrying the pullback of `H`.
pub fn min_norm_fibration_leading(d: &FibrationDegeneration) -> Result<Rational> {
    let pull = d.hpull.as_ref().ok_or(Error::HpullNotRepresentable)?;
    let (n, m) = (d.n() as u32, d.m() as u32);
    let big_n = n + m;
    let tot = &d.total_model;
    let top = power_in_j(tot, &d.lcal, &d.hcal, big_n + 1, &[], n)?;
    let diff = &d.hcal - pull;
    let mixed = power_in_j(tot, &d.lcal, &d.hcal, big_n, &[(&diff, 1)], n)?;
    let norm = &top.scale(&(int(1) / int(big_n as i64 + 1))) - &mixed;
    Ok(norm.coeff(n as usize) / binom_q(big_n as u64, n as u64))
}

/// `‖·‖∞ = c₀ + c₁/j + O(j^{-2})`, with `r̄ + r₁/j` the expansion of
/// `b₀(j)/a₀(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinfNorm {
    pub c0: Rational,
    pub c1: Rational,
    pub r_bar: Rational,
    pub r1: Rational,
}

pub fn linf_norm(d: &FibrationDegeneration, fitted: &FittedPolynomials) -> Result<LinfNorm> {
    let w = d.bundle_weights()?;
    let a = int(d.parent.xi_multiple);
    let big_n = (d.n() + d.m()) as u32;
    let a0 = fitted.a(0, big_n);
    if a0.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let r = RationalFunction::new(fitted.b(0, big_n), a0).laurent_at_infinity(-1);
    if r.top() > 0 && !r.coeff(r.top()).is_zero() {
        return Err(Error::DegreeMismatch("b0/a0 does not converge as j grows".into()));
    }
    let r_bar = r.coeff(0);
    let r1 = r.coeff(-1);
    let hi = &a * int(*w.iter().max().unwrap()) - &r_bar;
    let lo = &r_bar - &a * int(*w.iter().min().unwrap());
    let (c0, c1) = if hi > lo {
        (hi, -r1.clone())
    } else if lo > hi {
        (lo, r1.clone())
    } else {
        (hi, r1.abs())
    };
    Ok(LinfNorm { c0, c1, r_bar, r1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::models::{
        make_normal_cone_degeneration, make_projectivised_fibration, make_subsheaf_degeneration,
        make_trivial_degeneration, make_weighted_degeneration, point_normal_cone_tc, product_tc,
        trivial_tc, PolarisedFibration, SplitBundle,
    };
    use crate::oracle::{fit_h_and_w, GridSpec};

    fn fib(degrees: &[i64]) -> PolarisedFibration {
        let d: Vec<Vec<i64>> = degrees.iter().map(|&x| vec![x]).collect();
        let e = SplitBundle::over_product(&[1], &d).unwrap();
        let h = e.base().generator("h").unwrap();
        make_projectivised_fibration(&e, &h).unwrap()
    }

    #[test]
    fn tc_norms() {
        assert_eq!(min_norm_tc(&trivial_tc(2, 1).unwrap()).unwrap(), int(0));
        let nc = point_normal_cone_tc(2, 1).unwrap();
        assert_eq!(min_norm_tc(&nc).unwrap(), rat(1, 2));
        assert_eq!(min_norm_tc(&point_normal_cone_tc(3, 2).unwrap()).unwrap(), int(2));
        assert!(matches!(min_norm_dh(&nc), Err(Error::Unsupported(_))));
        let p = product_tc(&[1, 0], 1).unwrap();
        assert_eq!(min_norm_tc(&p), Err(Error::HpullNotRepresentable));
        assert_eq!(min_norm_dh(&p).unwrap(), rat(1, 2));
        assert_eq!(min_norm_dh(&product_tc(&[3, 2], 1).unwrap()).unwrap(), rat(1, 2));
        assert_eq!(min_norm_dh(&product_tc(&[2, 2], 3).unwrap()).unwrap(), int(0));
        assert_eq!(min_norm_dh(&product_tc(&[1, 0, 0], 1).unwrap()).unwrap(), rat(1, 3));
    }

    #[test]
    fn fibration_norms() {
        let x = fib(&[0, 0]);
        assert_eq!(min_norm_fibration(&make_trivial_degeneration(&x).unwrap()).unwrap(), int(0));
        let d = make_subsheaf_degeneration(&x, &[0]).unwrap();
        assert_eq!(min_norm_fibration(&d).unwrap(), rat(1, 2));
        let nc = make_normal_cone_degeneration(&x, &[0]).unwrap();
        assert_eq!(min_norm_fibration_leading(&nc).unwrap(), rat(1, 2));
        let x = fib(&[0, 0, 0]);
        for (f, v) in [(vec![0], rat(1, 3)), (vec![0, 1], rat(2, 3))] {
            let nc = make_normal_cone_degeneration(&x, &f).unwrap();
            assert_eq!(min_norm_fibration(&nc).unwrap(), v);
            assert_eq!(min_norm_fibration_leading(&nc).unwrap(), v);
            let tw = make_subsheaf_degeneration(&x, &f).unwrap();
            assert_eq!(min_norm_fibration(&tw).unwrap(), v);
        }
    }

    #[test]
    fn linf() {
        let x = fib(&[0, 0]);
        let g = GridSpec::default();
        let d = make_subsheaf_degeneration(&x, &[0]).unwrap();
        let n = linf_norm(&d, &fit_h_and_w(&d, &g).unwrap()).unwrap();
        assert_eq!((n.r_bar.clone(), n.c0.clone()), (rat(1, 2), rat(1, 2)));
        let s = make_weighted_degeneration(&x, &[3, 2]).unwrap();
        assert_eq!(linf_norm(&s, &fit_h_and_w(&s, &g).unwrap()).unwrap().c0, rat(1, 2));
        let t = make_trivial_degeneration(&x).unwrap();
        assert_eq!(linf_norm(&t, &fit_h_and_w(&t, &g).unwrap()).unwrap().c0, int(0));
    }
}
