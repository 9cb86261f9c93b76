use num_traits::Zero;

use crate::arith::{int, Laurent, Rational, RationalFunction};
use crate::chow::DivisorClass;
use crate::error::{Error, Result};
use crate::models::{FibrationDegeneration, TestConfiguration};

use super::df::general_fibre_volume;
use super::power_in_j;

/// `J_T = 𝓛^q.T - q/(q+1) (T.L^{q-1}/L^q) 𝓛^{q+1}` for `T` on the total space.
pub fn j_weight(tc: &TestConfiguration, t: &DivisorClass) -> Result<Rational> {
    let q = tc.q() as u32;
    let l = &tc.polarisation;
    let first = tc.model.intersect_powers(&[(l, q), (t, 1)])?;
    if q == 0 {
        return Ok(first);
    }
    let vol = general_fibre_volume(tc)?;
    if vol.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let tl = tc.model.intersect_powers(&[(&tc.fibre_class, 1), (t, 1), (l, q - 1)])?;
    let top = tc.model.intersect_powers(&[(l, q + 1)])?;
    Ok(first - int(q as i64) / int(q as i64 + 1) * tl / vol * top)
}

/// `J_T(𝒳, jL + ℋ)` with `T` pulled back from the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JWeightExpansion {
    pub function: RationalFunction,
    pub laurent: Laurent,
}

impl JWeightExpansion {
    pub fn coeff(&self, p: i64) -> Rational {
        self.laurent.coeff(p)
    }
}

pub fn j_weight_expansion(d: &FibrationDegeneration, t_base: &DivisorClass) -> Result<JWeightExpansion> {
    let x = &d.parent;
    let (n, m) = (x.n as u32, x.m as u32);
    let big_n = n + m;
    let base_ng = x.base().ngens();
    if t_base.ngens() != base_ng {
        return Err(Error::ForeignClass { expected: base_ng, got: t_base.ngens() });
    }
    let t_x = t_base.lift(x.model.ngens());
    let t_tot = t_base.lift(d.total_model.ngens());
    let tot = &d.total_model;
    let a = power_in_j(&x.model, &x.l, &x.h, big_n, &[], n)?;
    if a.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let tx = power_in_j(&x.model, &x.l, &x.h, big_n - 1, &[(&t_x, 1)], n)?;
    let p = power_in_j(tot, &d.lcal, &d.hcal, big_n + 1, &[], n)?;
    let first = power_in_j(tot, &d.lcal, &d.hcal, big_n, &[(&t_tot, 1)], n)?;
    let ratio = int(big_n as i64) / int(big_n as i64 + 1);
    let num = &(&first * &a) - &(&tx * &p).scale(&ratio);
    let function = RationalFunction::new(num, a);
    let laurent = function.laurent_at_infinity(n as i64 - 3);
    Ok(JWeightExpansion { function, laurent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{make_projectivised_fibration, make_subsheaf_degeneration, trivial_tc, SplitBundle};

    #[test]
    fn trivial_and_zero() {
        let tc = trivial_tc(1, 1).unwrap();
        let xi = tc.model.generator("xi").unwrap();
        assert_eq!(j_weight(&tc, &xi).unwrap(), int(0));
        assert_eq!(j_weight(&tc, &tc.model.zero_class()).unwrap(), int(0));
    }

    #[test]
    fn leading_terms_vanish() {
        let e = SplitBundle::over_product(&[1], &[vec![0], vec![-1], vec![2]]).unwrap();
        let h = e.base().generator("h").unwrap();
        let x = make_projectivised_fibration(&e, &h).unwrap();
        for f in [vec![0], vec![1, 2]] {
            let d = make_subsheaf_degeneration(&x, &f).unwrap();
            for t in [h.clone(), h.scale(&int(2))] {
                let j = j_weight_expansion(&d, &t).unwrap();
                assert_eq!(j.coeff(1), int(0));
                assert_eq!(j.coeff(0), int(0));
            }
        }
    }
}
