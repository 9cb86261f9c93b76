use std::sync::Arc;

use crate::arith::int;
use crate::chow::{BlowupCenter, ChowModel, DivisorClass};
use crate::error::{Error, Result};

use super::fibration::PolarisedFibration;
use super::test_configuration::{product_tc, TestConfiguration};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenerationKind {
    /// `ℙ(⊕ D_i ⊠ 𝒪_{ℙ¹}(w_i))` over `B × ℙ¹`.
    Twisted,
    /// `Bl_{Z×0}(ℙ(E) × ℙ¹)` with `Z = {x_F = 0}` and `ℋ = H - aE`.
    NormalCone,
}

/// Compactified fibration degeneration `𝒳̄ → B × ℙ¹`.
#[derive(Clone, Debug)]
pub struct FibrationDegeneration {
    pub parent: PolarisedFibration,
    pub kind: DegenerationKind,
    pub total_model: Arc<ChowModel>,
    pub hcal: DivisorClass,
    pub lcal: DivisorClass,
    pub hpull: Option<DivisorClass>,
    pub k_rel_p1: DivisorClass,
    pub k_rel_bxp1: DivisorClass,
    /// Class of a fibre over `ℙ¹`.
    pub fibre_class: DivisorClass,
    /// Weight of the monomial `x^α` is `⟨weights, α⟩`.
    pub weights: Option<Vec<i64>>,
    pub subsheaf: Option<Vec<usize>>,
    pub is_trivial: bool,
}

impl FibrationDegeneration {
    pub fn n(&self) -> usize {
        self.parent.n
    }

    pub fn m(&self) -> usize {
        self.parent.m
    }

    pub fn bundle_weights(&self) -> Result<&[i64]> {
        self.weights.as_deref().ok_or(Error::NotBundleType)
    }
}

fn base_times_line(x: &PolarisedFibration) -> Arc<ChowModel> {
    let mut dims = x.bundle.base_dims().to_vec();
    dims.push(1);
    let mut names = x.base().generator_names().to_vec();
    names.push("t".into());
    Arc::new(ChowModel::projective_product_named(&dims, names))
}

/// Pull a class on `X` (generators of `B`, then `ξ`) up to a model over
/// `B × ℙ¹` whose generators are those of `B`, then `t`, then `ξ`, then more.
fn transport(class: &DivisorClass, ngens: usize) -> DivisorClass {
    let nb = class.ngens() - 1;
    let mut coeffs = class.coeffs()[..nb].to_vec();
    coeffs.push(int(0));
    coeffs.push(class.coeff(nb).clone());
    DivisorClass::from_coeffs(coeffs).lift(ngens)
}

/// Bundle degeneration with the given per-summand weights.
pub fn make_weighted_degeneration(x: &PolarisedFibration, weights: &[i64]) -> Result<FibrationDegeneration> {
    let r = x.bundle.rank();
    if weights.len() != r {
        return Err(Error::WrongArity { expected: r, got: weights.len() });
    }
    let bxp = base_times_line(x);
    let nb = bxp.ngens();
    let t = bxp.generator("t")?;
    let summands: Vec<DivisorClass> = x
        .bundle
        .summands()
        .iter()
        .zip(weights)
        .map(|(d, &w)| {
            let mut c = d.coeffs().to_vec();
            c.push(int(0));
            &DivisorClass::from_coeffs(c) + &t.scale(&int(w))
        })
        .collect();
    let model = Arc::new(ChowModel::projective_bundle(bxp.clone(), summands)?);
    let ng = model.ngens();
    debug_assert_eq!(ng, nb + 1);
    let hcal = transport(&x.h, ng);
    let lcal = transport(&x.l, ng);
    let t = model.generator("t")?;
    let k_rel_bxp1 = model.canonical() - &bxp.canonical().lift(ng);
    let k_rel_p1 = model.canonical() + &t.scale(&int(2));
    let constant = weights.windows(2).all(|w| w[0] == w[1]);
    let hpull = constant.then(|| &hcal - &t.scale(&int(x.xi_multiple * weights[0])));
    Ok(FibrationDegeneration {
        parent: x.clone(),
        kind: DegenerationKind::Twisted,
        total_model: model,
        hcal,
        lcal,
        hpull,
        k_rel_p1,
        k_rel_bxp1,
        fibre_class: t,
        weights: Some(weights.to_vec()),
        subsheaf: None,
        is_trivial: constant,
    })
}

/// `X × ℙ¹` with the trivial action.
pub fn make_trivial_degeneration(x: &PolarisedFibration) -> Result<FibrationDegeneration> {
    make_weighted_degeneration(x, &vec![0; x.bundle.rank()])
}

fn check_subsheaf(x: &PolarisedFibration, f: &[usize]) -> Result<Vec<usize>> {
    let r = x.bundle.rank();
    let mut f = f.to_vec();
    f.sort_unstable();
    f.dedup();
    if f.iter().any(|&i| i >= r) {
        return Err(Error::DimensionMismatch(format!("summand index out of range for rank {r}")));
    }
    if f.is_empty() || f.len() == r {
        return Err(Error::TrivialSubsheaf);
    }
    Ok(f)
}

/// Weight `1` on the summands of `F ⊂ E` and `0` on the rest: the
/// degeneration of `E` to `F ⊕ E/F`.
pub fn make_subsheaf_degeneration(x: &PolarisedFibration, f: &[usize]) -> Result<FibrationDegeneration> {
    let f = check_subsheaf(x, f)?;
    let weights: Vec<i64> = (0..x.bundle.rank()).map(|i| f.contains(&i) as i64).collect();
    let mut d = make_weighted_degeneration(x, &weights)?;
    d.subsheaf = Some(f);
    Ok(d)
}

/// The same degeneration as [`make_subsheaf_degeneration`] realised as the
/// deformation to the normal cone of `{x_F = 0} × 0` in `ℙ(E) × ℙ¹`.
pub fn make_normal_cone_degeneration(x: &PolarisedFibration, f: &[usize]) -> Result<FibrationDegeneration> {
    let f = check_subsheaf(x, f)?;
    let bxp = base_times_line(x);
    let summands: Vec<DivisorClass> = x
        .bundle
        .summands()
        .iter()
        .map(|d| {
            let mut c = d.coeffs().to_vec();
            c.push(int(0));
            DivisorClass::from_coeffs(c)
        })
        .collect();
    let ambient = Arc::new(ChowModel::projective_bundle(bxp.clone(), summands)?);
    let center = BlowupCenter::subbundle_at_zero(&ambient, &f)?;
    let model = Arc::new(ChowModel::blowup(ambient, center)?);
    let ng = model.ngens();
    let e = model.generator("E")?;
    let t = model.generator("t")?;
    let hpull = transport(&x.h, ng);
    let hcal = &hpull - &e.scale(&int(x.xi_multiple));
    let lcal = transport(&x.l, ng);
    let k_rel_bxp1 = model.canonical() - &bxp.canonical().lift(ng);
    let k_rel_p1 = model.canonical() + &t.scale(&int(2));
    // a section of order o along Z gets weight o - ak
    let weights: Vec<i64> = (0..x.bundle.rank()).map(|i| f.contains(&i) as i64 - 1).collect();
    Ok(FibrationDegeneration {
        parent: x.clone(),
        kind: DegenerationKind::NormalCone,
        total_model: model,
        hcal,
        lcal,
        hpull: Some(hpull),
        k_rel_p1,
        k_rel_bxp1,
        fibre_class: t,
        weights: Some(weights),
        subsheaf: Some(f),
        is_trivial: false,
    })
}

/// Every proper nonempty sub-direct-sum of `E`, in binary order of the
/// index set.
pub fn all_subsum_degenerations(x: &PolarisedFibration) -> Result<Vec<FibrationDegeneration>> {
    let r = x.bundle.rank();
    (1..(1u64 << r) - 1)
        .map(|mask| {
            let f: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            make_subsheaf_degeneration(x, &f)
        })
        .collect()
}

/// The test configuration `(𝒳_b, ℋ_b)` over a point `b ∈ B`.
pub fn make_fibre_test_configuration(d: &FibrationDegeneration) -> Result<TestConfiguration> {
    product_tc(d.bundle_weights()?, d.parent.xi_multiple)
}

/// Check that `ℋ`, `L` and `K_{𝒳/ℙ¹}` restrict to `H`, `L` and `K_X` on the
/// fibre over `1 ∈ ℙ¹`, and that `L^{n+1} = 0`.
pub fn check_general_fibre(d: &FibrationDegeneration) -> Result<()> {
    let x = &d.parent;
    let big_n = (x.n + x.m) as u32;
    let tot = &d.total_model;
    for a in 0..=big_n {
        let lhs = tot.intersect_powers(&[(&d.fibre_class, 1), (&d.hcal, a), (&d.lcal, big_n - a)])?;
        let rhs = x.model.intersect_powers(&[(&x.h, a), (&x.l, big_n - a)])?;
        if lhs != rhs {
            return Err(Error::DegreeMismatch(format!(
                "H^{a}.L^{} on the general fibre: {lhs} vs {rhs}",
                big_n - a
            )));
        }
        if a < big_n {
            let lhs = tot.intersect_powers(&[
                (&d.fibre_class, 1),
                (&d.k_rel_p1, 1),
                (&d.hcal, a),
                (&d.lcal, big_n - 1 - a),
            ])?;
            let rhs = x.model.intersect_powers(&[(&x.k_x, 1), (&x.h, a), (&x.l, big_n - 1 - a)])?;
            if lhs != rhs {
                return Err(Error::DegreeMismatch(format!(
                    "K.H^{a}.L^{} on the general fibre: {lhs} vs {rhs}",
                    big_n - 1 - a
                )));
            }
        }
    }
    let top = tot.intersect_powers(&[(&d.lcal, x.n as u32 + 1), (&d.hcal, big_n - x.n as u32)])?;
    if top != int(0) {
        return Err(Error::DegreeMismatch(format!("L^(n+1) = {top} on the total space")));
    }
    Ok(())
}
