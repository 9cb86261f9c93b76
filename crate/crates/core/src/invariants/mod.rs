//! Stability invariants of test configurations and fibration degenerations.

mod classify;
mod df;
mod fano;
mod jweight;
mod norms;
mod weights;

pub use classify::{classify, DegenerationRecord, StabilityReport, Summary, Verdict};
pub use df::{
    df_fibration_expansion, df_fibration_weights, df_intersection, df_normalisation, df_weights,
    general_fibre_volume, slope_tc, slope_variety, w0_via_fibre, ClosedFormAudit, DfExpansion,
};
pub use fano::{fano_invariants, FanoInvariants};
pub use jweight::{j_weight, j_weight_expansion, JWeightExpansion};
pub use norms::{
    linf_norm, min_norm_dh, min_norm_fibration, min_norm_fibration_leading, min_norm_tc, LinfNorm,
};
pub use weights::{chow_weight, ChowWeight};

use crate::arith::{binom_q, UniPoly};
use crate::chow::{ChowModel, DivisorClass};
use crate::error::Result;

/// `∫ (jL + H)^p · extra` as a polynomial in `j`, using `L^{s} = 0` for
/// `s > s_max`.
pub(crate) fn power_in_j(
    model: &ChowModel,
    l: &DivisorClass,
    h: &DivisorClass,
    p: u32,
    extra: &[(&DivisorClass, u32)],
    s_max: u32,
) -> Result<UniPoly> {
    let mut coeffs = Vec::new();
    for s in 0..=p.min(s_max) {
        let mut factors: Vec<(&DivisorClass, u32)> = vec![(l, s), (h, p - s)];
        factors.extend_from_slice(extra);
        factors.retain(|(_, e)| *e > 0);
        let v = model.intersect_powers(&factors)?;
        coeffs.push(binom_q(p as u64, s as u64) * v);
    }
    Ok(UniPoly::new(coeffs))
}
