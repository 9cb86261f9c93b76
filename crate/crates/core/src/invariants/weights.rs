use num_traits::Zero;

use crate::arith::{factorial, Rational};
use crate::error::Result;
use crate::models::FibrationDegeneration;
use crate::oracle::FittedPolynomials;

/// Chow weight `ℋ^{m+1}.Lⁿ` against the leading fitted weight coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowWeight {
    pub intersection: Rational,
    /// Coefficient of `jⁿ k^{N+1}` in `w(j, k)`.
    pub fitted_b00: Option<Rational>,
    /// `b₀₀ / ℋ^{m+1}.Lⁿ` when both are known and nonzero.
    pub constant: Option<Rational>,
    /// `1/(n!(m+1)!)`.
    pub expected_constant: Rational,
}

pub fn chow_weight(d: &FibrationDegeneration, fitted: Option<&FittedPolynomials>) -> Result<ChowWeight> {
    let (n, m) = (d.n() as u32, d.m() as u32);
    let intersection = d.total_model.intersect_powers(&[(&d.hcal, m + 1), (&d.lcal, n)])?;
    let fitted_b00 = fitted.map(|fp| fp.w.coefficient(n, n + m + 1));
    let constant = fitted_b00
        .as_ref()
        .filter(|_| !intersection.is_zero())
        .map(|b| b / &intersection);
    let expected_constant =
        Rational::new(1.into(), factorial(n as u64) * factorial(m as u64 + 1));
    Ok(ChowWeight { intersection, fitted_b00, constant, expected_constant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::models::{
        make_projectivised_fibration, make_subsheaf_degeneration, make_trivial_degeneration,
        make_weighted_degeneration, SplitBundle,
    };
    use crate::oracle::{fit_h_and_w, GridSpec};

    #[test]
    fn reference_example() {
        let e = SplitBundle::over_product(&[1], &[vec![0], vec![0]]).unwrap();
        let h = e.base().generator("h").unwrap();
        let x = make_projectivised_fibration(&e, &h).unwrap();
        let d = make_subsheaf_degeneration(&x, &[0]).unwrap();
        let fp = fit_h_and_w(&d, &GridSpec::default()).unwrap();
        let c = chow_weight(&d, Some(&fp)).unwrap();
        assert_eq!(c.intersection, int(1));
        assert_eq!(c.fitted_b00, Some(rat(1, 2)));
        assert_eq!(c.constant, Some(rat(1, 2)));
        assert_eq!(c.expected_constant, rat(1, 2));
        let t = make_trivial_degeneration(&x).unwrap();
        assert_eq!(chow_weight(&t, None).unwrap().intersection, int(0));
        let neg = make_weighted_degeneration(&x, &[-1, 0]).unwrap();
        assert_eq!(chow_weight(&neg, None).unwrap().intersection, int(-1));
    }
}
