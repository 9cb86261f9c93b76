use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{fmt_q, Rational};
use super::univariate::UniPoly;

/// Exact polynomial in `(j, k)`. Keys are exponent pairs `(d_j, d_k)`;
/// zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `j^dj k^dk` with unit coefficient.
    pub fn monomial(dj: u32, dk: u32) -> Self {
        Self::from_terms([((dj, dk), Rational::one())])
    }

    pub fn add_term(&mut self, e: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, dj: u32, dk: u32) -> Rational {
        self.terms
            .get(&(dj, dk))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree_j(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_k(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn eval(&self, j: &Rational, k: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, ((a, b), c)| {
            acc + c * num_traits::pow(j.clone(), *a as usize) * num_traits::pow(k.clone(), *b as usize)
        })
    }

    pub fn eval_int(&self, j: i64, k: i64) -> Rational {
        self.eval(
            &Rational::from_integer(BigInt::from(j)),
            &Rational::from_integer(BigInt::from(k)),
        )
    }

    /// Coefficient of `k^dk` as a polynomial in `j`.
    pub fn k_slice(&self, dk: u32) -> UniPoly {
        let top = self.degree_j().unwrap_or(0) as usize;
        UniPoly::new((0..=top).map(|a| self.coefficient(a as u32, dk)).collect())
    }

    /// The `j^0` part as a polynomial in `k`.
    pub fn j_constant_part(&self) -> UniPoly {
        let top = self.degree_k().unwrap_or(0);
        UniPoly::new((0..=top).map(|b| self.coefficient(0, b)).collect())
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, -c)))
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((a, b), c)| {
                let mut s = fmt_q(c);
                match a {
                    0 => {}
                    1 => s.push_str("*j"),
                    _ => s.push_str(&format!("*j^{a}")),
                }
                match b {
                    0 => {}
                    1 => s.push_str("*k"),
                    _ => s.push_str(&format!("*k^{b}")),
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
