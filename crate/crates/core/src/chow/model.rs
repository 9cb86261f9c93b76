use std::sync::Arc;

use num_traits::{One, Zero};

use super::classes::{complete_homogeneous, elementary, ClassPoly, DivisorClass};
use crate::arith::{int, Rational};
use crate::error::{Error, Result};

/// Chow ring of one of the supported smooth projective varieties, together
/// with a degree map on its top graded piece.
///
/// Models form towers: a projective bundle or a blowup keeps the generators
/// of the space it is built on and appends one new generator, so classes
/// pull back by zero-padding.
#[derive(Clone, Debug)]
pub struct ChowModel {
    names: Vec<String>,
    dimension: usize,
    kind: ModelKind,
    canonical: DivisorClass,
}

#[derive(Clone, Debug)]
pub enum ModelKind {
    Point,
    /// `ℚ[h_1..h_r]/(h_i^{d_i+1})`
    ProjectiveProduct { dims: Vec<usize> },
    /// `ℙ(⊕ 𝒪(D_i))` with `ξ = 𝒪(1)` and sections `H⁰(𝒪(k)) = H⁰(Sym^k E)`.
    ProjectiveBundle {
        base: Arc<ChowModel>,
        summands: Vec<DivisorClass>,
    },
    Blowup {
        ambient: Arc<ChowModel>,
        center: BlowupCenter,
    },
}

/// Shape of a supported blowup center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterShape {
    Point,
    /// `{x_i = 0 : i ∈ vanishing} × {0}` inside `ℙ(E) × ℙ¹`.
    SubbundleAtZero { vanishing: Vec<usize> },
}

/// Smooth center `Z` with restriction of every ambient generator to `Z` and
/// split normal bundle data.
#[derive(Clone, Debug)]
pub struct BlowupCenter {
    pub shape: CenterShape,
    pub model: Arc<ChowModel>,
    pub restriction: Vec<DivisorClass>,
    pub normal_roots: Vec<DivisorClass>,
}

impl BlowupCenter {
    /// A point. Every divisor restricts to zero and the normal bundle is trivial.
    pub fn point(ambient: &ChowModel) -> Result<Self> {
        if ambient.dimension < 2 {
            return Err(Error::UnsupportedCenter(
                "point blowup needs dimension >= 2".into(),
            ));
        }
        let z = Arc::new(ChowModel::point());
        Ok(BlowupCenter {
            shape: CenterShape::Point,
            restriction: vec![DivisorClass::zero(0); ambient.ngens()],
            normal_roots: vec![DivisorClass::zero(0); ambient.dimension],
            model: z,
        })
    }

    /// The split subbundle `{x_i = 0, i ∈ vanishing}` of `ℙ(E)` placed in the
    /// zero fibre of `ℙ(E) × ℙ¹`. The ambient must be a projective bundle over
    /// `B × ℙ¹` whose last base factor is the `ℙ¹` and whose summands are
    /// pulled back from `B`.
    pub fn subbundle_at_zero(ambient: &ChowModel, vanishing: &[usize]) -> Result<Self> {
        let ModelKind::ProjectiveBundle { base, summands } = &ambient.kind else {
            return Err(Error::UnsupportedCenter("ambient is not a projective bundle".into()));
        };
        let ModelKind::ProjectiveProduct { dims } = &base.kind else {
            return Err(Error::UnsupportedCenter("bundle base is not a product of projective spaces".into()));
        };
        if dims.last() != Some(&1) {
            return Err(Error::UnsupportedCenter("last base factor must be P^1".into()));
        }
        let r = summands.len();
        let mut vanishing = vanishing.to_vec();
        vanishing.sort_unstable();
        vanishing.dedup();
        if vanishing.is_empty() || vanishing.len() >= r || vanishing.iter().any(|&i| i >= r) {
            return Err(Error::UnsupportedCenter(
                "vanishing summands must form a proper nonempty subset".into(),
            ));
        }
        let t = base.ngens() - 1;
        if summands.iter().any(|d| !d.coeff(t).is_zero()) {
            return Err(Error::UnsupportedCenter("summands must not involve the P^1 direction".into()));
        }
        let b_dims = &dims[..dims.len() - 1];
        let b = if b_dims.is_empty() {
            ChowModel::point()
        } else {
            ChowModel::projective_product_named(b_dims, base.names[..t].to_vec())
        };
        let nb = b.ngens();
        let kept: Vec<DivisorClass> = (0..r)
            .filter(|i| !vanishing.contains(i))
            .map(|i| summands[i].truncate(nb).expect("checked above"))
            .collect();
        let z = ChowModel::projective_bundle(Arc::new(b), kept)?;
        let nz = z.ngens();
        let xi_z = DivisorClass::generator(nz, nz - 1);
        let mut restriction: Vec<DivisorClass> =
            (0..nb).map(|i| DivisorClass::generator(nz, i)).collect();
        restriction.push(DivisorClass::zero(nz));
        restriction.push(xi_z.clone());
        let mut normal_roots: Vec<DivisorClass> = vanishing
            .iter()
            .map(|&i| &xi_z - &summands[i].truncate(nb).unwrap().lift(nz))
            .collect();
        normal_roots.push(DivisorClass::zero(nz));
        Ok(BlowupCenter {
            shape: CenterShape::SubbundleAtZero { vanishing },
            model: Arc::new(z),
            restriction,
            normal_roots,
        })
    }

    pub fn codimension(&self) -> usize {
        self.normal_roots.len()
    }
}

fn default_names(dims: &[usize]) -> Vec<String> {
    if dims.len() == 1 {
        vec!["h".to_string()]
    } else {
        (1..=dims.len()).map(|i| format!("h{i}")).collect()
    }
}

/// Coefficients of `x / (1 - e^{-x})` up to `x^n`.
fn todd_series(n: usize) -> Vec<Rational> {
    // (1 - e^{-x})/x = Σ (-1)^i x^i / (i+1)!
    let mut f = Vec::with_capacity(n + 1);
    let mut fact = Rational::one();
    for i in 0..=n {
        fact *= int(i as i64 + 1);
        let s = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
        f.push(s / &fact);
    }
    let mut g = vec![Rational::zero(); n + 1];
    g[0] = Rational::one();
    for i in 1..=n {
        let mut acc = Rational::zero();
        for j in 1..=i {
            acc += &f[j] * &g[i - j];
        }
        g[i] = -acc;
    }
    g
}

fn series_of_class(class: &DivisorClass, coeffs: &[Rational], max_degree: u32) -> ClassPoly {
    let x = class.to_poly();
    let n = class.ngens();
    let mut out = ClassPoly::zero(n);
    let mut power = ClassPoly::one(n);
    for (i, c) in coeffs.iter().enumerate() {
        if i as u32 > max_degree {
            break;
        }
        out.add_assign(&power.scale(c));
        power = power.mul_truncated(&x, max_degree);
    }
    out
}

impl ChowModel {
    pub fn point() -> Self {
        ChowModel {
            names: Vec::new(),
            dimension: 0,
            kind: ModelKind::Point,
            canonical: DivisorClass::zero(0),
        }
    }

    /// `ℙ^{d_1} × … × ℙ^{d_r}` with hyperplane generators `h` (one factor)
    /// or `h1..hr`.
    pub fn projective_product(dims: &[usize]) -> Self {
        Self::projective_product_named(dims, default_names(dims))
    }

    pub fn projective_product_named(dims: &[usize], names: Vec<String>) -> Self {
        assert!(!dims.is_empty() && dims.iter().all(|&d| d > 0), "dims must be positive");
        assert_eq!(dims.len(), names.len());
        let canonical = DivisorClass::from_coeffs(dims.iter().map(|&d| int(-(d as i64) - 1)).collect());
        ChowModel {
            names,
            dimension: dims.iter().sum(),
            kind: ModelKind::ProjectiveProduct { dims: dims.to_vec() },
            canonical,
        }
    }

    /// `ℙ(⊕ 𝒪(D_i))` over `base`, with new generator `xi`.
    ///
    /// Relative canonical class is `-rξ + π*c₁(E)`.
    pub fn projective_bundle(base: Arc<ChowModel>, summands: Vec<DivisorClass>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyBundle);
        }
        let nb = base.ngens();
        if let Some(bad) = summands.iter().find(|d| d.ngens() != nb) {
            return Err(Error::ForeignClass { expected: nb, got: bad.ngens() });
        }
        let r = summands.len();
        let n = nb + 1;
        let mut names = base.names.clone();
        names.push("xi".to_string());
        let c1 = summands.iter().fold(DivisorClass::zero(nb), |acc, d| &acc + d);
        let xi = DivisorClass::generator(n, nb);
        let k_rel = &xi.scale(&int(-(r as i64))) + &c1.lift(n);
        let canonical = &k_rel + &base.canonical.lift(n);
        Ok(ChowModel {
            names,
            dimension: base.dimension + r - 1,
            kind: ModelKind::ProjectiveBundle { base, summands },
            canonical,
        })
    }

    /// Blowup of `ambient` along `center`, with new generator `E` (the
    /// exceptional divisor). `K = ρ*K + (c-1)E`.
    pub fn blowup(ambient: Arc<ChowModel>, center: BlowupCenter) -> Result<Self> {
        if center.restriction.len() != ambient.ngens() {
            return Err(Error::UnsupportedCenter("restriction map has wrong length".into()));
        }
        let c = center.codimension();
        if c < 2 || center.model.dimension + c != ambient.dimension {
            return Err(Error::UnsupportedCenter(format!(
                "center of dimension {} with normal rank {} in a {}-fold",
                center.model.dimension, c, ambient.dimension
            )));
        }
        let n = ambient.ngens() + 1;
        let mut names = ambient.names.clone();
        names.push("E".to_string());
        let e = DivisorClass::generator(n, n - 1);
        let canonical = &ambient.canonical.lift(n) + &e.scale(&int(c as i64 - 1));
        Ok(ChowModel {
            names,
            dimension: ambient.dimension,
            kind: ModelKind::Blowup { ambient, center },
            canonical,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn generator(&self, name: &str) -> Result<DivisorClass> {
        let i = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(DivisorClass::generator(self.ngens(), i))
    }

    /// Integer combination of named generators.
    pub fn class(&self, terms: &[(&str, i64)]) -> Result<DivisorClass> {
        terms.iter().try_fold(DivisorClass::zero(self.ngens()), |acc, (name, c)| {
            Ok(&acc + &self.generator(name)?.scale(&int(*c)))
        })
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass::zero(self.ngens())
    }

    fn check_class(&self, c: &DivisorClass) -> Result<()> {
        if c.ngens() != self.ngens() {
            return Err(Error::ForeignClass { expected: self.ngens(), got: c.ngens() });
        }
        Ok(())
    }

    /// Degree of the top-degree part of `poly`.
    pub fn integrate(&self, poly: &ClassPoly) -> Rational {
        assert_eq!(poly.nvars(), self.ngens(), "polynomial on a different ring");
        let top = poly.homogeneous(self.dimension as u32);
        if top.is_zero() {
            return Rational::zero();
        }
        match &self.kind {
            ModelKind::Point => top.terms().map(|(_, c)| c.clone()).sum(),
            ModelKind::ProjectiveProduct { dims } => top
                .terms()
                .filter(|(e, _)| e.iter().zip(dims).all(|(&a, &d)| a as usize == d))
                .map(|(_, c)| c.clone())
                .sum(),
            ModelKind::ProjectiveBundle { base, summands } => {
                // π_* ξ^{r-1+i} = h_i(D_1..D_r)
                let r = summands.len() as u32;
                let split = top.split_last();
                let max_a = *split.keys().max().unwrap();
                if max_a + 1 < r {
                    return Rational::zero();
                }
                let hs = complete_homogeneous(summands, base.ngens(), max_a + 1 - r);
                let mut pushed = ClassPoly::zero(base.ngens());
                for (a, coeff) in split {
                    if a + 1 >= r {
                        pushed.add_assign(&coeff.mul(&hs[(a + 1 - r) as usize]));
                    }
                }
                base.integrate(&pushed)
            }
            ModelKind::Blowup { ambient, center } => {
                // ∫ β·E^k = (-1)^{k-1} ∫_Z β|_Z s_{k-c}(N), s(N) = c(N)^{-1}
                let c = center.codimension() as u32;
                let nz = center.model.ngens();
                let images: Vec<ClassPoly> = center.restriction.iter().map(|d| d.to_poly()).collect();
                let split = top.split_last();
                let max_k = *split.keys().max().unwrap();
                let hs = if max_k >= c {
                    complete_homogeneous(&center.normal_roots, nz, max_k - c)
                } else {
                    Vec::new()
                };
                let mut total = Rational::zero();
                for (k, coeff) in split {
                    if k == 0 {
                        total += ambient.integrate(&coeff);
                    } else if k >= c {
                        let i = k - c;
                        let restricted = coeff.substitute(&images, nz);
                        let sign_s = if i.is_multiple_of(2) { 1 } else { -1 };
                        let sign_e = if (k - 1).is_multiple_of(2) { 1 } else { -1 };
                        let v = center.model.integrate(&restricted.mul(&hs[i as usize]));
                        total += v * int(sign_s * sign_e);
                    }
                }
                total
            }
        }
    }

    /// Top intersection number of `dimension` divisor classes.
    pub fn intersect(&self, classes: &[&DivisorClass]) -> Result<Rational> {
        if classes.len() != self.dimension {
            return Err(Error::WrongArity { expected: self.dimension, got: classes.len() });
        }
        let mut p = ClassPoly::one(self.ngens());
        for c in classes {
            self.check_class(c)?;
            p = p.mul(&c.to_poly());
        }
        Ok(self.integrate(&p))
    }

    /// `∏ D_i^{e_i}` with `Σ e_i = dimension`.
    pub fn intersect_powers(&self, factors: &[(&DivisorClass, u32)]) -> Result<Rational> {
        let total: u32 = factors.iter().map(|(_, e)| e).sum();
        if total as usize != self.dimension {
            return Err(Error::WrongArity { expected: self.dimension, got: total as usize });
        }
        let d = self.dimension as u32;
        let mut p = ClassPoly::one(self.ngens());
        for (c, e) in factors {
            self.check_class(c)?;
            p = p.mul_truncated(&c.to_poly().pow_truncated(*e, d), d);
        }
        Ok(self.integrate(&p))
    }

    /// Normal form modulo the defining relations (products and projective
    /// bundles only): `h_i^{d_i+1} = 0` and the Grothendieck relation
    /// `ξ^r = Σ_{i≥1} (-1)^{i+1} c_i(E) ξ^{r-i}`.
    pub fn reduce(&self, poly: &ClassPoly) -> Result<ClassPoly> {
        assert_eq!(poly.nvars(), self.ngens());
        let d = self.dimension as u32;
        match &self.kind {
            ModelKind::Point => Ok(poly.homogeneous(0)),
            ModelKind::ProjectiveProduct { dims } => {
                let mut out = ClassPoly::zero(self.ngens());
                for (e, c) in poly.terms() {
                    if e.iter().zip(dims).all(|(&a, &dd)| a as usize <= dd) {
                        out.add_term(e.clone(), c.clone());
                    }
                }
                Ok(out)
            }
            ModelKind::ProjectiveBundle { base, summands } => {
                let r = summands.len() as u32;
                let nb = base.ngens();
                let e = elementary(summands, nb);
                let mut split = poly.split_last();
                while let Some((&a, _)) = split.iter().next_back() {
                    if a < r {
                        break;
                    }
                    let c = split.remove(&a).unwrap();
                    for i in 1..=r {
                        let term = c.mul(&e[i as usize]);
                        let term = if i % 2 == 1 { term } else { term.scale(&-Rational::one()) };
                        split
                            .entry(a - i)
                            .or_insert_with(|| ClassPoly::zero(nb))
                            .add_assign(&term);
                    }
                }
                let mut out = ClassPoly::zero(self.ngens());
                for (a, coeff) in split {
                    let reduced = base.reduce(&coeff)?;
                    for (be, c) in reduced.terms() {
                        let mut full = be.clone();
                        full.push(a);
                        if full.iter().sum::<u32>() <= d {
                            out.add_term(full, c.clone());
                        }
                    }
                }
                Ok(out)
            }
            ModelKind::Blowup { .. } => Err(Error::Unsupported(
                "normal-form reduction on blowup models".into(),
            )),
        }
    }

    /// Exponent vector of the point class in reduced form.
    pub fn point_monomial(&self) -> Result<Vec<u32>> {
        match &self.kind {
            ModelKind::Point => Ok(Vec::new()),
            ModelKind::ProjectiveProduct { dims } => Ok(dims.iter().map(|&d| d as u32).collect()),
            ModelKind::ProjectiveBundle { base, summands } => {
                let mut e = base.point_monomial()?;
                e.push(summands.len() as u32 - 1);
                Ok(e)
            }
            ModelKind::Blowup { .. } => Err(Error::Unsupported("point monomial on blowup models".into())),
        }
    }

    /// Intersection number read off from the normal form.
    pub fn intersect_by_reduction(&self, classes: &[&DivisorClass]) -> Result<Rational> {
        if classes.len() != self.dimension {
            return Err(Error::WrongArity { expected: self.dimension, got: classes.len() });
        }
        let mut p = ClassPoly::one(self.ngens());
        for c in classes {
            self.check_class(c)?;
            p = self.reduce(&p.mul(&c.to_poly()))?;
        }
        let pt = self.point_monomial()?;
        Ok(p.terms()
            .filter(|(e, _)| **e == pt)
            .map(|(_, c)| c.clone())
            .sum())
    }

    /// Todd class truncated at the dimension.
    pub fn todd(&self) -> Result<ClassPoly> {
        let d = self.dimension as u32;
        let series = todd_series(self.dimension);
        match &self.kind {
            ModelKind::Point => Ok(ClassPoly::one(0)),
            ModelKind::ProjectiveProduct { dims } => {
                let n = self.ngens();
                let mut td = ClassPoly::one(n);
                for (i, &di) in dims.iter().enumerate() {
                    let f = series_of_class(&DivisorClass::generator(n, i), &series, d);
                    td = td.mul_truncated(&f.pow_truncated(di as u32 + 1, d), d);
                }
                Ok(td)
            }
            ModelKind::ProjectiveBundle { base, summands } => {
                // T_{X/B} ⊕ 𝒪 = ⊕ π*𝒪(-D_i) ⊗ 𝒪(1)
                let n = self.ngens();
                let xi = DivisorClass::generator(n, n - 1);
                let mut td = base.todd()?.lift(n);
                for dcls in summands {
                    let root = &xi - &dcls.lift(n);
                    td = td.mul_truncated(&series_of_class(&root, &series, d), d);
                }
                Ok(td)
            }
            ModelKind::Blowup { ambient, center } => {
                if center.shape != CenterShape::Point || self.dimension != 2 {
                    return Err(Error::Unsupported(
                        "Todd class of blowups beyond point blowups of surfaces".into(),
                    ));
                }
                // c₁ drops by E, ∫td₂ = χ(𝒪) is a birational invariant
                let n = self.ngens();
                let e = DivisorClass::generator(n, n - 1).to_poly();
                let mut td = ambient.todd()?.lift(n);
                td.add_assign(&e.scale(&crate::arith::rat(-1, 2)));
                Ok(td)
            }
        }
    }

    /// Euler characteristic `χ(D) = ∫ ch(D) td` by Hirzebruch–Riemann–Roch.
    pub fn euler_characteristic(&self, class: &DivisorClass) -> Result<Rational> {
        self.check_class(class)?;
        let d = self.dimension as u32;
        let mut exp = Vec::with_capacity(self.dimension + 1);
        let mut fact = Rational::one();
        for i in 0..=self.dimension {
            if i > 0 {
                fact *= int(i as i64);
            }
            exp.push(Rational::one() / &fact);
        }
        let ch = series_of_class(class, &exp, d);
        Ok(self.integrate(&ch.mul_truncated(&self.todd()?, d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn todd_series_coefficients() {
        let t = todd_series(4);
        assert_eq!(t[1], rat(1, 2));
        assert_eq!(t[2], rat(1, 12));
        assert_eq!(t[3], rat(0, 1));
        assert_eq!(t[4], rat(-1, 720));
    }

    #[test]
    fn euler_characteristic_on_projective_plane() {
        let p2 = ChowModel::projective_product(&[2]);
        let h = p2.generator("h").unwrap();
        for k in -4i64..5 {
            let chi = p2.euler_characteristic(&h.scale(&int(k))).unwrap();
            assert_eq!(chi, rat((k + 1) * (k + 2), 2));
        }
    }
}
