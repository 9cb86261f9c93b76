//! Exact interpolation under known degree bounds.
//!
//! The linear system for the unknown coefficients is cleared of
//! denominators row by row and triangularised with Bareiss' fraction-free
//! elimination, so every intermediate entry is an integer minor. Surplus
//! sample rows are reduced as well and must vanish, which is how samples
//! that violate the bounds are detected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::bivariate::BivariatePolynomial;
use super::rational::Rational;
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// Sample point `(j, k)` with its exact value.
pub type Sample = ((i64, i64), Rational);

/// Unique polynomial of degree `<= dj` in `j` and `<= dk` in `k` through all
/// samples.
pub fn poly_fit(samples: &[Sample], (dj, dk): (u32, u32)) -> Result<BivariatePolynomial> {
    let monomials: Vec<(u32, u32)> = (0..=dj)
        .flat_map(|a| (0..=dk).map(move |b| (a, b)))
        .collect();
    let unknowns = monomials.len();

    let mut rows: Vec<Vec<BigInt>> = samples
        .iter()
        .map(|((j, k), value)| {
            let den = value.denom().clone();
            let mut row: Vec<BigInt> = monomials
                .iter()
                .map(|(a, b)| {
                    num_traits::pow(BigInt::from(*j), *a as usize)
                        * num_traits::pow(BigInt::from(*k), *b as usize)
                        * &den
                })
                .collect();
            row.push(value.numer().clone());
            row
        })
        .collect();

    let mut prev = BigInt::one();
    for col in 0..unknowns {
        let Some(p) = (col..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return Err(Error::RankDeficient { dj, dk });
        };
        rows.swap(col, p);
        let (upper, lower) = rows.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..=unknowns {
                let num = &pivot_row[col] * &row[c] - &factor * &pivot_row[c];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[c] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
    }

    if rows[unknowns..].iter().any(|r| !r[unknowns].is_zero()) {
        return Err(Error::InconsistentSamples { dj, dk });
    }

    let mut solution = vec![Rational::zero(); unknowns];
    for r in (0..unknowns).rev() {
        let mut acc = Rational::from_integer(rows[r][unknowns].clone());
        for c in r + 1..unknowns {
            acc -= Rational::from_integer(rows[r][c].clone()) * &solution[c];
        }
        solution[r] = acc / Rational::from_integer(rows[r][r].clone());
    }

    Ok(BivariatePolynomial::from_terms(
        monomials.into_iter().zip(solution),
    ))
}

/// Univariate specialisation: samples `(k, value)` with `deg <= d`.
pub fn poly_fit_univariate(samples: &[(i64, Rational)], d: u32) -> Result<UniPoly> {
    let lifted: Vec<Sample> = samples
        .iter()
        .map(|(k, v)| ((0, *k), v.clone()))
        .collect();
    let p = poly_fit(&lifted, (0, d))?;
    Ok(p.j_constant_part())
}

/// Default rectangular grid `j ∈ j0..=j0+nj-1`, `k ∈ k0..=k0+nk-1`.
pub fn grid(j0: i64, nj: usize, k0: i64, nk: usize) -> Vec<(i64, i64)> {
    (0..nj as i64)
        .flat_map(|a| (0..nk as i64).map(move |b| (j0 + a, k0 + b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn linear_identity_case() {
        let samples = vec![
            ((0, 0), int(0)),
            ((0, 1), int(1)),
            ((1, 0), int(0)),
            ((1, 1), int(1)),
        ];
        let p = poly_fit(&samples, (1, 1)).unwrap();
        assert_eq!(p, BivariatePolynomial::monomial(0, 1));
    }

    #[test]
    fn section_count_of_trivial_ruled_surface() {
        // h(j,k) = (k+1)(kj+1) sampled on a 3x4 grid
        let samples: Vec<Sample> = grid(1, 3, 1, 4)
            .into_iter()
            .map(|(j, k)| ((j, k), int((k + 1) * (k * j + 1))))
            .collect();
        let p = poly_fit(&samples, (1, 2)).unwrap();
        let expected = BivariatePolynomial::from_terms([
            ((1, 2), int(1)),
            ((0, 1), int(1)),
            ((1, 1), int(1)),
            ((0, 0), int(1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn constant_bound_violated() {
        let samples = vec![((0, 0), int(0)), ((1, 0), int(1))];
        assert_eq!(
            poly_fit(&samples, (0, 0)),
            Err(Error::InconsistentSamples { dj: 0, dk: 0 })
        );
    }

    #[test]
    fn degenerate_grid() {
        // all samples share k, so the k-direction is undetermined
        let samples = vec![((0, 1), int(1)), ((1, 1), int(2)), ((2, 1), int(3))];
        assert_eq!(
            poly_fit(&samples, (1, 1)),
            Err(Error::RankDeficient { dj: 1, dk: 1 })
        );
    }

    #[test]
    fn rational_values() {
        let samples: Vec<(i64, Rational)> = (0..4)
            .map(|k| (k, crate::arith::rational::rat(k * (k + 1), 2)))
            .collect();
        let p = poly_fit_univariate(&samples, 3).unwrap();
        assert_eq!(p.coeff(2), crate::arith::rational::rat(1, 2));
        assert_eq!(p.degree(), Some(2));
    }
}
