use std::sync::Arc;

use crate::arith::int;
use crate::chow::{BlowupCenter, ChowModel, DivisorClass};
use crate::error::{Error, Result};

/// How the `ℂ*`-weights on sections of `kℒ` over the central fibre are
/// enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSource {
    /// Monomials `x^α` of degree `ak` on `ℙ^{r-1}`, weight `⟨w, α⟩`.
    Projective { weights: Vec<i64>, a: i64 },
    /// Sections of `𝒪(ak)` on `ℙ¹` indexed by vanishing order `i` at a point,
    /// weight `-(ck - i)_+`.
    PointNormalCone { a: i64, c: i64 },
    None,
}

/// Compactified test configuration `(𝒴̄, 𝓛) → ℙ¹` with its general fibre
/// data read off by intersecting with the fibre class.
#[derive(Clone, Debug)]
pub struct TestConfiguration {
    pub model: Arc<ChowModel>,
    pub polarisation: DivisorClass,
    pub k_rel: DivisorClass,
    pub fibre_class: DivisorClass,
    pub pullback: Option<DivisorClass>,
    pub weights: WeightSource,
}

impl TestConfiguration {
    /// Dimension of the general fibre.
    pub fn q(&self) -> usize {
        self.model.dimension() - 1
    }

    /// Whether the action is by a scalar.
    pub fn has_constant_weights(&self) -> bool {
        match &self.weights {
            WeightSource::Projective { weights, .. } => weights.windows(2).all(|w| w[0] == w[1]),
            WeightSource::PointNormalCone { .. } => false,
            WeightSource::None => true,
        }
    }
}

/// `ℙ(⊕ 𝒪_{ℙ¹}(w_i))` over `ℙ¹` with `𝓛 = aξ`: the product test configuration
/// of `(ℙ^{r-1}, 𝒪(a))` induced by the diagonal action with weights `w`.
pub fn product_tc(weights: &[i64], a: i64) -> Result<TestConfiguration> {
    if weights.is_empty() {
        return Err(Error::EmptyBundle);
    }
    if a <= 0 {
        return Err(Error::Unsupported("fibre polarisation must be positive".into()));
    }
    let base = Arc::new(ChowModel::projective_product_named(&[1], vec!["t".into()]));
    let t = base.generator("t")?;
    let summands = weights.iter().map(|&w| t.scale(&int(w))).collect();
    let model = Arc::new(ChowModel::projective_bundle(base.clone(), summands)?);
    let xi = model.generator("xi")?;
    let t = model.generator("t")?;
    let polarisation = xi.scale(&int(a));
    let k_rel = &model.canonical().clone() + &t.scale(&int(2));
    let pullback = if weights.windows(2).all(|w| w[0] == w[1]) {
        Some(&polarisation - &t.scale(&int(a * weights[0])))
    } else {
        None
    };
    Ok(TestConfiguration {
        model,
        polarisation,
        k_rel,
        fibre_class: t,
        pullback,
        weights: WeightSource::Projective { weights: weights.to_vec(), a },
    })
}

/// The trivial test configuration of `(ℙ^m, 𝒪(a))`.
pub fn trivial_tc(m: usize, a: i64) -> Result<TestConfiguration> {
    product_tc(&vec![0; m + 1], a)
}

/// Deformation to the normal cone of a point in `(ℙ¹, 𝒪(a))`:
/// `Bl_{p×0}(ℙ¹ × ℙ¹)` with `𝓛 = aL - cE`.
pub fn point_normal_cone_tc(a: i64, c: i64) -> Result<TestConfiguration> {
    if c <= 0 || c > a {
        return Err(Error::Unsupported(format!(
            "normal cone parameter c = {c} outside 1..={a}"
        )));
    }
    let amb = Arc::new(ChowModel::projective_product_named(&[1, 1], vec!["L".into(), "t".into()]));
    let center = BlowupCenter::point(&amb)?;
    let model = Arc::new(ChowModel::blowup(amb, center)?);
    let l = model.generator("L")?;
    let e = model.generator("E")?;
    let t = model.generator("t")?;
    let polarisation = &l.scale(&int(a)) - &e.scale(&int(c));
    let k_rel = &model.canonical().clone() + &t.scale(&int(2));
    Ok(TestConfiguration {
        pullback: Some(l.scale(&int(a))),
        model,
        polarisation,
        k_rel,
        fibre_class: t,
        weights: WeightSource::PointNormalCone { a, c },
    })
}
