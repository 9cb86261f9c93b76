use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{int, Rational};
use crate::chow::{ChowModel, DivisorClass};
use crate::error::{Error, Result};

/// `E = ⊕ 𝒪(D_i)` over a product of projective spaces.
///
/// The integer degree vectors are kept alongside the classes so the section
/// oracle can count without going back through the Chow ring.
#[derive(Clone, Debug)]
pub struct SplitBundle {
    base: Arc<ChowModel>,
    dims: Vec<usize>,
    degrees: Vec<Vec<i64>>,
    summands: Vec<DivisorClass>,
}

impl SplitBundle {
    /// `degrees[i][f]` is the degree of the `i`-th summand on factor `f`.
    pub fn over_product(dims: &[usize], degrees: &[Vec<i64>]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyBundle);
        }
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::DimensionMismatch("base factors must be positive-dimensional".into()));
        }
        for d in degrees {
            if d.len() != dims.len() {
                return Err(Error::WrongArity { expected: dims.len(), got: d.len() });
            }
        }
        let base = Arc::new(ChowModel::projective_product(dims));
        Ok(Self::on_base(base, dims.to_vec(), degrees.to_vec()))
    }

    fn on_base(base: Arc<ChowModel>, dims: Vec<usize>, degrees: Vec<Vec<i64>>) -> Self {
        let summands = degrees
            .iter()
            .map(|d| DivisorClass::from_coeffs(d.iter().map(|&x| int(x)).collect()))
            .collect();
        SplitBundle { base, dims, degrees, summands }
    }

    pub fn base(&self) -> &Arc<ChowModel> {
        &self.base
    }

    pub fn base_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[DivisorClass] {
        &self.summands
    }

    pub fn degree_vectors(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn c1(&self) -> DivisorClass {
        self.summands
            .iter()
            .fold(self.base.zero_class(), |acc, d| &acc + d)
    }

    /// `D_i . L^{n-1}` on the base.
    pub fn degree(&self, i: usize, l: &DivisorClass) -> Result<Rational> {
        let n = self.base.dimension() as u32;
        self.base.intersect_powers(&[(&self.summands[i], 1), (l, n - 1)])
    }

    /// The sub-direct-sum on the given summand indices.
    pub fn sub_sum(&self, indices: &[usize]) -> Result<SplitBundle> {
        if indices.is_empty() {
            return Err(Error::EmptyBundle);
        }
        let degrees = indices
            .iter()
            .map(|&i| {
                self.degrees
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::DimensionMismatch(format!("no summand {i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::on_base(self.base.clone(), self.dims.clone(), degrees))
    }
}

/// Slope `deg/rank` of the summands in `indices` (all of them when `None`).
pub fn slope_sheaf(bundle: &SplitBundle, indices: Option<&[usize]>, l: &DivisorClass) -> Result<Rational> {
    let all: Vec<usize> = (0..bundle.rank()).collect();
    let idx = indices.unwrap_or(&all);
    if idx.is_empty() {
        return Err(Error::EmptyBundle);
    }
    let mut total = Rational::zero();
    for &i in idx {
        total += bundle.degree(i, l)?;
    }
    Ok(total / int(idx.len() as i64))
}

/// `π: (X, H) → (B, L)` with `X = ℙ(E)` and `H = aξ + π*β`.
#[derive(Clone, Debug)]
pub struct PolarisedFibration {
    pub n: usize,
    pub m: usize,
    pub model: Arc<ChowModel>,
    pub l: DivisorClass,
    pub h: DivisorClass,
    pub k_x: DivisorClass,
    pub k_rel: DivisorClass,
    pub bundle: SplitBundle,
    pub base_l: DivisorClass,
    pub xi_multiple: i64,
    pub h_base: Vec<i64>,
}

impl PolarisedFibration {
    pub fn base(&self) -> &Arc<ChowModel> {
        self.bundle.base()
    }

    /// `L^n` on the base.
    pub fn base_volume(&self) -> Result<Rational> {
        let n = self.n as u32;
        self.base().intersect_powers(&[(&self.base_l, n)])
    }

    /// Whether `H = -K_{X/B}` as classes.
    pub fn is_relatively_anticanonical(&self) -> bool {
        self.h == -&self.k_rel
    }
}

/// `X = ℙ(E)` polarised by `H = ξ`.
pub fn make_projectivised_fibration(bundle: &SplitBundle, l: &DivisorClass) -> Result<PolarisedFibration> {
    let zero = vec![0; bundle.base_dims().len()];
    make_polarised_fibration(bundle, l, 1, &zero)
}

/// `X = ℙ(E)` polarised by `H = aξ + π*β`, with `β` given by its degree on each
/// base factor.
pub fn make_polarised_fibration(
    bundle: &SplitBundle,
    l: &DivisorClass,
    a: i64,
    beta: &[i64],
) -> Result<PolarisedFibration> {
    let base = bundle.base().clone();
    if l.ngens() != base.ngens() {
        return Err(Error::ForeignClass { expected: base.ngens(), got: l.ngens() });
    }
    if beta.len() != base.ngens() {
        return Err(Error::WrongArity { expected: base.ngens(), got: beta.len() });
    }
    if a <= 0 {
        return Err(Error::Unsupported("H must be a positive multiple of xi plus a base class".into()));
    }
    let model = Arc::new(ChowModel::projective_bundle(base.clone(), bundle.summands().to_vec())?);
    let ng = model.ngens();
    let xi = model.generator("xi")?;
    let l_x = l.lift(ng);
    let beta_c = DivisorClass::from_coeffs(beta.iter().map(|&b| int(b)).collect()).lift(ng);
    let h = &xi.scale(&int(a)) + &beta_c;
    let k_x = model.canonical().clone();
    let k_rel = &k_x - &base.canonical().lift(ng);
    Ok(PolarisedFibration {
        n: base.dimension(),
        m: bundle.rank() - 1,
        model,
        l: l_x,
        h,
        k_x,
        k_rel,
        bundle: bundle.clone(),
        base_l: l.clone(),
        xi_multiple: a,
        h_base: beta.to_vec(),
    })
}

/// The Fano fibration `(ℙ(E), -K_{X/B})`, i.e. `H = rξ - π*c₁(E)`.
pub fn make_anticanonical_fibration(bundle: &SplitBundle, l: &DivisorClass) -> Result<PolarisedFibration> {
    let nf = bundle.base_dims().len();
    let beta: Vec<i64> = (0..nf)
        .map(|f| -bundle.degree_vectors().iter().map(|d| d[f]).sum::<i64>())
        .collect();
    make_polarised_fibration(bundle, l, bundle.rank() as i64, &beta)
}
