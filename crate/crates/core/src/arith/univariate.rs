use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{fmt_q, Rational};

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * x^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => fmt_q(c),
                1 => format!("{}*j", fmt_q(c)),
                _ => format!("{}*j^{}", fmt_q(c), d),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Quotient of two univariate polynomials, used for the `j`-dependence of
/// invariants whose intersection formula divides by a volume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: UniPoly,
    pub den: UniPoly,
}

/// Expansion at `j = ∞`: `Σ coeff(p) j^p` for `p` from `top` down to `bottom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
    top: i64,
    bottom: i64,
}

impl Laurent {
    pub fn coeff(&self, p: i64) -> Rational {
        assert!(
            p >= self.bottom,
            "coefficient j^{p} below computed order j^{}",
            self.bottom
        );
        self.terms.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn bottom(&self) -> i64 {
        self.bottom
    }

    /// Nonnegative powers as a polynomial.
    pub fn polynomial_part(&self) -> UniPoly {
        let top = self.top.max(0) as usize;
        UniPoly::new((0..=top).map(|p| self.coeff(p as i64)).collect())
    }
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalFunction { num, den }
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Equality as functions, by cross-multiplying.
    pub fn same_function(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }

    /// Long division continued into negative powers down to `j^bottom`.
    pub fn laurent_at_infinity(&self, bottom: i64) -> Laurent {
        let dd = self.den.degree().unwrap() as i64;
        let lead = self.den.leading();
        let mut rem: BTreeMap<i64, Rational> = self
            .num
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c.clone()))
            .collect();
        let top = self.num.degree().map_or(bottom, |dn| dn as i64 - dd);
        let mut terms = BTreeMap::new();
        let mut p = top;
        while p >= bottom {
            let c = rem.get(&(p + dd)).cloned().unwrap_or_else(Rational::zero);
            if !c.is_zero() {
                let q = &c / &lead;
                for (i, d) in self.den.coeffs().iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    let e = rem.entry(p + i as i64).or_insert_with(Rational::zero);
                    *e -= &q * d;
                }
                rem.retain(|_, v| !v.is_zero());
                terms.insert(p, q);
            }
            p -= 1;
        }
        Laurent { terms, top, bottom }
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        RationalFunction::new(p, UniPoly::constant(Rational::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn laurent_of_simple_quotient() {
        // (j^2 + 1) / j = j + j^-1
        let f = RationalFunction::new(
            UniPoly::new(vec![int(1), int(0), int(1)]),
            UniPoly::new(vec![int(0), int(1)]),
        );
        let l = f.laurent_at_infinity(-3);
        assert_eq!(l.coeff(1), int(1));
        assert_eq!(l.coeff(0), int(0));
        assert_eq!(l.coeff(-1), int(1));
        assert_eq!(l.coeff(-2), int(0));
    }

    #[test]
    fn laurent_geometric_tail() {
        // 1 / (j + 1) = j^-1 - j^-2 + j^-3 - ...
        let f = RationalFunction::new(
            UniPoly::constant(int(1)),
            UniPoly::new(vec![int(1), int(1)]),
        );
        let l = f.laurent_at_infinity(-4);
        assert_eq!(l.coeff(-1), int(1));
        assert_eq!(l.coeff(-2), int(-1));
        assert_eq!(l.coeff(-4), int(-1));
        assert!(l.polynomial_part().is_zero());
    }

    #[test]
    fn eval_and_mul() {
        let p = UniPoly::new(vec![rat(1, 2), int(1)]);
        let q = &p * &p;
        assert_eq!(q.eval(&int(2)), rat(25, 4));
        assert_eq!(q.degree(), Some(2));
    }
}
