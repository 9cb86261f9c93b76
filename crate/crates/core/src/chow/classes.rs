use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Rational;

/// Linear combination of the degree-one generators of a Chow ring.
///
/// Coefficients are indexed by generator position in the owning model.
/// Classes pulled back along the towers built by [`super::ChowModel`] keep
/// their coefficients and gain zeros for the new generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    coeffs: Vec<Rational>,
}

impl DivisorClass {
    pub fn zero(ngens: usize) -> Self {
        DivisorClass {
            coeffs: vec![Rational::zero(); ngens],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn generator(ngens: usize, index: usize) -> Self {
        let mut c = Self::zero(ngens);
        c.coeffs[index] = Rational::one();
        c
    }

    pub fn ngens(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Pullback to a ring whose generator list extends this one.
    pub fn lift(&self, ngens: usize) -> Self {
        assert!(ngens >= self.coeffs.len(), "lift must not drop generators");
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(ngens, Rational::zero());
        DivisorClass { coeffs }
    }

    /// Drop trailing generators; only valid when their coefficients vanish.
    pub fn truncate(&self, ngens: usize) -> Option<Self> {
        if self.coeffs[ngens..].iter().all(Zero::is_zero) {
            Some(DivisorClass {
                coeffs: self.coeffs[..ngens].to_vec(),
            })
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn to_poly(&self) -> ClassPoly {
        let n = self.coeffs.len();
        let mut p = ClassPoly::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0u32; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.ngens(), rhs.ngens(), "classes on different rings");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul<&DivisorClass> for &Rational {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale(self)
    }
}

/// Polynomial in the generators of a Chow ring (not yet reduced).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ClassPoly {
    pub fn zero(nvars: usize) -> Self {
        ClassPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &ClassPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            p.add_term(e.clone(), a * c);
        }
        p
    }

    /// Product keeping only terms of total degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &ClassPoly, max_degree: u32) -> ClassPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = ClassPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &other.terms {
                if d1 + e2.iter().sum::<u32>() > max_degree {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn mul(&self, other: &ClassPoly) -> ClassPoly {
        self.mul_truncated(other, u32::MAX)
    }

    pub fn pow_truncated(&self, n: u32, max_degree: u32) -> ClassPoly {
        let mut acc = ClassPoly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul_truncated(self, max_degree);
        }
        acc
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous(&self, degree: u32) -> ClassPoly {
        ClassPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Extend the variable list with zero exponents (pullback up a tower).
    pub fn lift(&self, nvars: usize) -> ClassPoly {
        let mut out = ClassPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.resize(nvars, 0);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitute every variable by a polynomial in a (possibly different) ring.
    pub fn substitute(&self, images: &[ClassPoly], target_nvars: usize) -> ClassPoly {
        assert_eq!(images.len(), self.nvars);
        let mut out = ClassPoly::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut term = ClassPoly::constant(target_nvars, c.clone());
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term = term.mul(&images[i]);
                }
            }
            out.add_assign(&term);
        }
        out
    }

    /// Split off the last variable: `Σ_a coeff_a(x_0..x_{n-2}) x_{n-1}^a`.
    pub fn split_last(&self) -> BTreeMap<u32, ClassPoly> {
        let base = self.nvars - 1;
        let mut out: BTreeMap<u32, ClassPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e[base])
                .or_insert_with(|| ClassPoly::zero(base))
                .add_term(e[..base].to_vec(), c.clone());
        }
        out
    }
}

/// Complete homogeneous symmetric polynomials `h_0..=h_max` of the classes.
pub fn complete_homogeneous(roots: &[DivisorClass], nvars: usize, max: u32) -> Vec<ClassPoly> {
    // h_i(D_1..D_r) = Σ_a D_r^a h_{i-a}(D_1..D_{r-1})
    let mut h: Vec<ClassPoly> = (0..=max)
        .map(|i| {
            if i == 0 {
                ClassPoly::one(nvars)
            } else {
                ClassPoly::zero(nvars)
            }
        })
        .collect();
    for root in roots {
        let d = root.to_poly();
        let mut next = Vec::with_capacity(h.len());
        for i in 0..=max as usize {
            let mut acc = ClassPoly::zero(nvars);
            let mut power = ClassPoly::one(nvars);
            for a in 0..=i {
                acc.add_assign(&power.mul(&h[i - a]));
                power = power.mul(&d);
            }
            next.push(acc);
        }
        h = next;
    }
    h
}

/// Elementary symmetric polynomials `e_0..=e_r` of the classes.
pub fn elementary(roots: &[DivisorClass], nvars: usize) -> Vec<ClassPoly> {
    let mut e = vec![ClassPoly::one(nvars)];
    for root in roots {
        let d = root.to_poly();
        let mut next = vec![ClassPoly::zero(nvars); e.len() + 1];
        for (i, ei) in e.iter().enumerate() {
            next[i].add_assign(ei);
            next[i + 1].add_assign(&ei.mul(&d));
        }
        e = next;
    }
    e
}
