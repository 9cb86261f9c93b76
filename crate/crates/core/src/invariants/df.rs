use num_traits::Zero;

use crate::arith::{binom_q, factorial, int, Laurent, Rational, RationalFunction, UniPoly};
use crate::chow::{ChowModel, DivisorClass};
use crate::error::{Error, Result};
use crate::models::{make_fibre_test_configuration, FibrationDegeneration, TestConfiguration};
use crate::oracle::FittedPolynomials;

use super::power_in_j;

/// Number of coefficients kept below `j^{n-1}`.
const LOWER_TERMS: i64 = 3;

/// `μ(Y, L) = -K_Y.L^{q-1} / L^q`.
pub fn slope_variety(model: &ChowModel, l: &DivisorClass, k: &DivisorClass) -> Result<Rational> {
    let q = model.dimension() as u32;
    if q == 0 {
        return Err(Error::DimensionMismatch("slope of a point".into()));
    }
    let vol = model.intersect_powers(&[(l, q)])?;
    if vol.is_zero() {
        return Err(Error::ZeroVolume);
    }
    Ok(-model.intersect_powers(&[(k, 1), (l, q - 1)])? / vol)
}

/// `L^q` on the general fibre of a test configuration.
pub fn general_fibre_volume(tc: &TestConfiguration) -> Result<Rational> {
    let q = tc.q() as u32;
    tc.model.intersect_powers(&[(&tc.fibre_class, 1), (&tc.polarisation, q)])
}

/// Slope of the general fibre of a test configuration.
pub fn slope_tc(tc: &TestConfiguration) -> Result<Rational> {
    let q = tc.q() as u32;
    if q == 0 {
        return Ok(Rational::zero());
    }
    let vol = general_fibre_volume(tc)?;
    if vol.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let kl = tc
        .model
        .intersect_powers(&[(&tc.fibre_class, 1), (&tc.k_rel, 1), (&tc.polarisation, q - 1)])?;
    Ok(-kl / vol)
}

/// `DF = q/(q+1) μ 𝓛^{q+1} + K_{𝒴/ℙ¹}.𝓛^q`.
pub fn df_intersection(tc: &TestConfiguration) -> Result<Rational> {
    let q = tc.q() as u32;
    if tc.model.dimension() != q as usize + 1 {
        return Err(Error::DimensionMismatch("total space must have dimension q+1".into()));
    }
    let l = &tc.polarisation;
    let top = tc.model.intersect_powers(&[(l, q + 1)])?;
    let kl = tc.model.intersect_powers(&[(&tc.k_rel, 1), (l, q)])?;
    Ok(int(q as i64) / int(q as i64 + 1) * slope_tc(tc)? * top + kl)
}

/// `(b₀a₁ - b₁a₀)/a₀` read off `h = a₀k^q + a₁k^{q-1} + …` and
/// `w = b₀k^{q+1} + b₁k^q + …`.
pub fn df_weights(h: &UniPoly, w: &UniPoly) -> Result<Rational> {
    let q = h
        .degree()
        .ok_or_else(|| Error::DegreeMismatch("Hilbert polynomial is zero".into()))?;
    if let Some(dw) = w.degree() {
        if dw > q + 1 {
            return Err(Error::DegreeMismatch(format!("weight polynomial has degree {dw} > {}", q + 1)));
        }
    }
    let a0 = h.coeff(q);
    let a1 = if q > 0 { h.coeff(q - 1) } else { Rational::zero() };
    let b0 = w.coeff(q + 1);
    let b1 = w.coeff(q);
    Ok((&b0 * &a1 - &b1 * &a0) / a0)
}

/// Ratio between the intersection and weight forms of DF on a `q`-dimensional
/// fibre: `2 q!`.
pub fn df_normalisation(q: usize) -> Rational {
    Rational::from_integer(factorial(q as u64) * 2)
}

/// The fitted form `(b₀a₁ - b₁a₀)/a₀` as a rational function of `j`.
pub fn df_fibration_weights(fp: &FittedPolynomials, big_n: u32) -> Result<RationalFunction> {
    let (a0, a1) = (fp.a(0, big_n), fp.a(1, big_n));
    let (b0, b1) = (fp.b(0, big_n), fp.b(1, big_n));
    if a0.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let num = &(&b0 * &a1) - &(&b1 * &a0);
    Ok(RationalFunction::new(num, a0))
}

/// The closed forms for `W₀` and `W₁ = binom(N, n-1)(C₁ + C₂ + C₃ + C₄)`
/// evaluated from intersection numbers, next to the expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormAudit {
    pub w0_closed: Rational,
    pub c: [Rational; 4],
    pub w1_closed: Rational,
    pub w0_agrees: bool,
    pub w1_agrees: bool,
}

/// `DF(𝒳, jL + ℋ)` as a rational function of `j` with its expansion at
/// infinity: `jⁿW₀ + j^{n-1}W₁ + …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfExpansion {
    pub n: usize,
    pub function: RationalFunction,
    pub laurent: Laurent,
    pub df_poly_in_j: UniPoly,
    pub w0: Rational,
    pub w1: Rational,
    /// `(p, coefficient of j^p)` for the next few `p < n-1`.
    pub lower_terms: Vec<(i64, Rational)>,
    pub audit: Option<ClosedFormAudit>,
}

pub fn df_fibration_expansion(d: &FibrationDegeneration) -> Result<DfExpansion> {
    let x = &d.parent;
    let (n, m) = (x.n as u32, x.m as u32);
    let big_n = n + m;
    let tot = &d.total_model;
    let a = power_in_j(&x.model, &x.l, &x.h, big_n, &[], n)?;
    if a.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let anti = -&x.k_x;
    let kx = if big_n > 0 {
        power_in_j(&x.model, &x.l, &x.h, big_n - 1, &[(&anti, 1)], n)?
    } else {
        UniPoly::zero()
    };
    let p = power_in_j(tot, &d.lcal, &d.hcal, big_n + 1, &[], n)?;
    let q = power_in_j(tot, &d.lcal, &d.hcal, big_n, &[(&d.k_rel_p1, 1)], n)?;
    let ratio = int(big_n as i64) / int(big_n as i64 + 1);
    let num = &(&kx * &p).scale(&ratio) + &(&q * &a);
    let function = RationalFunction::new(num, a);
    let top = n as i64;
    let laurent = function.laurent_at_infinity(top - 1 - LOWER_TERMS);
    let w0 = laurent.coeff(top);
    let w1 = laurent.coeff(top - 1);
    let lower_terms = (1..=LOWER_TERMS).map(|i| (top - 1 - i, laurent.coeff(top - 1 - i))).collect();
    let audit = if m >= 1 { Some(closed_forms(d, &w0, &w1)?) } else { None };
    Ok(DfExpansion {
        n: x.n,
        df_poly_in_j: laurent.polynomial_part(),
        function,
        laurent,
        w0,
        w1,
        lower_terms,
        audit,
    })
}

fn closed_forms(d: &FibrationDegeneration, w0: &Rational, w1: &Rational) -> Result<ClosedFormAudit> {
    let x = &d.parent;
    let (n, m) = (x.n as u32, x.m as u32);
    let big_n = (n + m) as u64;
    let on_x = |f: &[(&DivisorClass, u32)]| x.model.intersect_powers(f);
    let tot = &d.total_model;
    let on_t = |f: &[(&DivisorClass, u32)]| tot.intersect_powers(f);
    let anti_rel = -&x.k_rel;
    let anti = -&x.k_x;
    let (l, h) = (&x.l, &x.h);
    let (lc, hc) = (&d.lcal, &d.hcal);

    let vol = on_x(&[(l, n), (h, m)])?;
    if vol.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let mu = on_x(&[(&anti_rel, 1), (l, n), (h, m - 1)])? / &vol;
    let lh_next = on_x(&[(l, n - 1), (h, m + 1)])?;
    let kx_next = on_x(&[(&anti, 1), (l, n - 1), (h, m)])?;
    let t0 = on_t(&[(lc, n), (hc, m + 1)])?;
    let t1 = on_t(&[(lc, n), (hc, m), (&d.k_rel_bxp1, 1)])?;
    let t2 = on_t(&[(lc, n - 1), (hc, m + 2)])?;
    let t3 = on_t(&[(lc, n - 1), (hc, m + 1), (&d.k_rel_p1, 1)])?;

    let mq = int(m as i64);
    let w0_closed = binom_q(big_n, n as u64) * (&mq / int(m as i64 + 1) * &mu * &t0 + &t1);
    let c = [
        &mq / int(m as i64 + 2) * &mu * &t2,
        -(&mq / int(m as i64 + 1)) * &mu * &lh_next / &vol * &t0,
        &kx_next / &vol * &t0,
        t3,
    ];
    let sum: Rational = c.iter().sum();
    let w1_closed = binom_q(big_n, n as u64 - 1) * sum;
    Ok(ClosedFormAudit {
        w0_agrees: &w0_closed == w0,
        w1_agrees: &w1_closed == w1,
        w0_closed,
        c,
        w1_closed,
    })
}

/// `binom(N, n) Lⁿ DF(𝒳_b, ℋ_b)` from the fibre test configuration.
pub fn w0_via_fibre(d: &FibrationDegeneration) -> Result<Rational> {
    let x = &d.parent;
    let tc = make_fibre_test_configuration(d)?;
    Ok(binom_q((x.n + x.m) as u64, x.n as u64) * x.base_volume()? * df_intersection(&tc)?)
}
