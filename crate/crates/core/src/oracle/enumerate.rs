use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, to_i64, Rational};
use crate::error::{Error, Result};
use crate::models::{FibrationDegeneration, PolarisedFibration, TestConfiguration, WeightSource};

/// Weights of a `ℂ*`-action on a space of sections, with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightSpectrum {
    pub entries: BTreeMap<i64, BigInt>,
}

impl WeightSpectrum {
    fn add(&mut self, weight: i64, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(weight).or_insert_with(BigInt::zero) += mult;
    }

    pub fn total_multiplicity(&self) -> BigInt {
        self.entries.values().sum()
    }

    pub fn total_weight(&self) -> BigInt {
        self.entries.iter().map(|(w, m)| BigInt::from(*w) * m).sum()
    }

    pub fn min_weight(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }
}

/// `h⁰(ℙ^{d_1} × … , 𝒪(e_1, …))`.
pub fn h0_product(dims: &[usize], twist: &[i64]) -> BigInt {
    dims.iter()
        .zip(twist)
        .map(|(&d, &e)| {
            if e < 0 {
                BigInt::zero()
            } else {
                binomial(e + d as i64, d as u64)
            }
        })
        .product()
}

/// Twists with `e ≥ -d` on every factor, where `h⁰ = χ`.
pub fn twist_is_valid(dims: &[usize], twist: &[i64]) -> bool {
    dims.iter().zip(twist).all(|(&d, &e)| e >= -(d as i64))
}

/// Visit every exponent vector `α` with `|α| = total` in `r` parts.
fn for_each_composition(r: usize, total: u32, f: &mut impl FnMut(&[u32])) {
    fn go(alpha: &mut Vec<u32>, r: usize, left: u32, f: &mut impl FnMut(&[u32])) {
        if alpha.len() + 1 == r {
            alpha.push(left);
            f(alpha);
            alpha.pop();
            return;
        }
        for a in 0..=left {
            alpha.push(a);
            go(alpha, r, left - a, f);
            alpha.pop();
        }
    }
    let mut alpha = Vec::with_capacity(r);
    go(&mut alpha, r, total, f);
}

struct Setup<'a> {
    dims: &'a [usize],
    degrees: &'a [Vec<i64>],
    shift: Vec<i64>,
    total: u32,
}

fn setup(x: &PolarisedFibration, j: i64, k: i64) -> Result<Setup<'_>> {
    if j < 0 || k < 0 {
        return Err(Error::InvalidGrid(format!("negative sample point ({j}, {k})")));
    }
    let l: Vec<i64> = x
        .base_l
        .coeffs()
        .iter()
        .map(|c| to_i64(c).ok_or_else(|| Error::Unsupported("non-integral base polarisation".into())))
        .collect::<Result<_>>()?;
    let shift = l
        .iter()
        .zip(&x.h_base)
        .map(|(lf, bf)| k * bf + j * k * lf)
        .collect();
    Ok(Setup {
        dims: x.bundle.base_dims(),
        degrees: x.bundle.degree_vectors(),
        shift,
        total: (x.xi_multiple * k) as u32,
    })
}

impl Setup<'_> {
    fn visit(&self, mut f: impl FnMut(&[u32], &[i64])) {
        let nf = self.dims.len();
        let mut twist = vec![0i64; nf];
        for_each_composition(self.degrees.len(), self.total, &mut |alpha| {
            for (fct, t) in twist.iter_mut().enumerate() {
                *t = self.shift[fct]
                    + alpha
                        .iter()
                        .zip(self.degrees)
                        .map(|(&ai, d)| ai as i64 * d[fct])
                        .sum::<i64>();
            }
            f(alpha, &twist);
        });
    }
}

/// Whether every base twist at `(j, k)` lies where `h⁰ = χ`.
pub fn point_is_valid(x: &PolarisedFibration, j: i64, k: i64) -> Result<bool> {
    let s = setup(x, j, k)?;
    let mut ok = true;
    s.visit(|_, twist| ok &= twist_is_valid(s.dims, twist));
    Ok(ok)
}

/// `h(j, k) = dim H⁰(X, k(H + jL))` by summing over monomials in the summands.
pub fn hilbert_count(x: &PolarisedFibration, j: i64, k: i64) -> Result<Rational> {
    let s = setup(x, j, k)?;
    let mut total = BigInt::zero();
    s.visit(|_, twist| total += h0_product(s.dims, twist));
    Ok(Rational::from_integer(total))
}

/// Weights on `H⁰(𝒳₀, k(ℋ₀ + jL))`; the monomial `x^α` has weight `⟨w, α⟩`.
pub fn weight_spectrum(d: &FibrationDegeneration, j: i64, k: i64) -> Result<WeightSpectrum> {
    let w = d.bundle_weights()?;
    let s = setup(&d.parent, j, k)?;
    let mut spec = WeightSpectrum::default();
    s.visit(|alpha, twist| {
        let weight: i64 = alpha.iter().zip(w).map(|(&a, &wi)| a as i64 * wi).sum();
        spec.add(weight, h0_product(s.dims, twist));
    });
    Ok(spec)
}

/// Total weight `w(j, k)`.
pub fn weight_polynomial(d: &FibrationDegeneration, j: i64, k: i64) -> Result<Rational> {
    Ok(Rational::from_integer(weight_spectrum(d, j, k)?.total_weight()))
}

/// Weights on sections of `kℒ` over the central fibre of a test configuration.
pub fn tc_weight_spectrum(tc: &TestConfiguration, k: i64) -> Result<WeightSpectrum> {
    if k < 0 {
        return Err(Error::InvalidGrid(format!("negative k = {k}")));
    }
    let mut spec = WeightSpectrum::default();
    match &tc.weights {
        WeightSource::Projective { weights, a } => {
            for_each_composition(weights.len(), (a * k) as u32, &mut |alpha| {
                let weight = alpha.iter().zip(weights).map(|(&x, &w)| x as i64 * w).sum();
                spec.add(weight, BigInt::from(1));
            });
        }
        WeightSource::PointNormalCone { a, c } => {
            for i in 0..=a * k {
                spec.add(-(c * k - i).max(0), BigInt::from(1));
            }
        }
        WeightSource::None => return Err(Error::NotBundleType),
    }
    Ok(spec)
}

pub fn tc_hilbert_count(tc: &TestConfiguration, k: i64) -> Result<Rational> {
    Ok(Rational::from_integer(tc_weight_spectrum(tc, k)?.total_multiplicity()))
}

pub fn tc_weight(tc: &TestConfiguration, k: i64) -> Result<Rational> {
    Ok(Rational::from_integer(tc_weight_spectrum(tc, k)?.total_weight()))
}
