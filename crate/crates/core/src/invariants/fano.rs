use num_traits::Zero;

use crate::arith::{binom_q, int, Rational};
use crate::error::{Error, Result};
use crate::models::FibrationDegeneration;

/// The Fano specialisation `H = -K_{X/B}` of the leading coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoInvariants {
    /// `L^{n-1}.(-K_{X/B})^{m+1} / Lⁿ.(-K_{X/B})^m`.
    pub gamma: Rational,
    pub w0_fano: Rational,
    pub w1_fano: Rational,
}

pub fn fano_invariants(d: &FibrationDegeneration) -> Result<FanoInvariants> {
    let x = &d.parent;
    if !x.is_relatively_anticanonical() {
        return Err(Error::NotFano);
    }
    let (n, m) = (x.n as u32, x.m as u32);
    let big_n = (n + m) as u64;
    let vol = x.model.intersect_powers(&[(&x.l, n), (&x.h, m)])?;
    if vol.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let gamma = x.model.intersect_powers(&[(&x.l, n - 1), (&x.h, m + 1)])? / vol;
    let tot = &d.total_model;
    let (lc, hc, k) = (&d.lcal, &d.hcal, &d.k_rel_bxp1);
    let t0 = tot.intersect_powers(&[(lc, n), (hc, m + 1)])?;
    let t1 = tot.intersect_powers(&[(lc, n), (hc, m), (k, 1)])?;
    let t2 = tot.intersect_powers(&[(lc, n - 1), (hc, m + 2)])?;
    let t3 = tot.intersect_powers(&[(lc, n - 1), (hc, m + 1), (k, 1)])?;
    let mq = int(m as i64);
    let w0_fano = binom_q(big_n, n as u64) * (&mq / int(m as i64 + 1) * &t0 + t1);
    let w1_fano = binom_q(big_n, n as u64 - 1)
        * (&mq / int(m as i64 + 2) * t2 + &gamma / int(m as i64 + 1) * t0 + t3);
    Ok(FanoInvariants { gamma, w0_fano, w1_fano })
}
