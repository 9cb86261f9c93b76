use std::collections::BTreeMap;

use num_traits::Zero;

use super::classes::DivisorClass;
use super::model::ChowModel;
use crate::arith::{factorial, Rational};
use crate::error::{Error, Result};

/// Table of all top-degree monomials in a list of named classes.
///
/// Keys are multidegrees (exponent of each named class, in order) summing to
/// the dimension, which stores every symmetric product exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionProfile {
    dimension: usize,
    names: Vec<String>,
    numbers: BTreeMap<Vec<u32>, Rational>,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl IntersectionProfile {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.numbers.iter()
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Number for a multidegree given by position.
    pub fn number(&self, multidegree: &[u32]) -> Result<Rational> {
        let total: u32 = multidegree.iter().sum();
        if multidegree.len() != self.names.len() || total as usize != self.dimension {
            return Err(Error::WrongArity { expected: self.dimension, got: total as usize });
        }
        Ok(self.numbers[multidegree].clone())
    }

    /// Number for a product written by name: `[("L", 1), ("Hcal", 2)]`.
    pub fn get(&self, powers: &[(&str, u32)]) -> Result<Rational> {
        let mut md = vec![0u32; self.names.len()];
        for (name, e) in powers {
            md[self.index(name)?] += e;
        }
        self.number(&md)
    }

    /// Multilinear evaluation of `∏ (Σ_i a_i X_i)` over the named classes;
    /// each factor is a coefficient vector over `names`.
    pub fn evaluate(&self, factors: &[Vec<Rational>]) -> Result<Rational> {
        if factors.len() != self.dimension {
            return Err(Error::WrongArity { expected: self.dimension, got: factors.len() });
        }
        // expand the product into multidegrees
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        acc.insert(vec![0; self.names.len()], Rational::from_integer(1.into()));
        for f in factors {
            let mut next = BTreeMap::new();
            for (md, c) in &acc {
                for (i, a) in f.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut m = md.clone();
                    m[i] += 1;
                    *next.entry(m).or_insert_with(Rational::zero) += c * a;
                }
            }
            acc = next;
        }
        Ok(acc
            .iter()
            .map(|(md, c)| c * &self.numbers[md])
            .sum())
    }

    /// `(Σ_i a_i X_i)^d` via the multinomial expansion.
    pub fn power(&self, combo: &[Rational]) -> Rational {
        let d = self.dimension as u64;
        self.numbers
            .iter()
            .map(|(md, n)| {
                let mut coeff = Rational::from_integer(factorial(d));
                for (e, a) in md.iter().zip(combo) {
                    coeff *= num_traits::pow(a.clone(), *e as usize);
                    coeff /= Rational::from_integer(factorial(*e as u64));
                }
                coeff * n
            })
            .sum()
    }
}

/// Tabulate all top products of the named classes on `model`.
pub fn to_profile(model: &ChowModel, named: &[(&str, &DivisorClass)]) -> Result<IntersectionProfile> {
    let d = model.dimension() as u32;
    let mut numbers = BTreeMap::new();
    for md in compositions(d, named.len()) {
        let factors: Vec<(&DivisorClass, u32)> = named
            .iter()
            .zip(&md)
            .filter(|(_, &e)| e > 0)
            .map(|((_, c), &e)| (*c, e))
            .collect();
        numbers.insert(md, model.intersect_powers(&factors)?);
    }
    Ok(IntersectionProfile {
        dimension: model.dimension(),
        names: named.iter().map(|(n, _)| n.to_string()).collect(),
        numbers,
    })
}
