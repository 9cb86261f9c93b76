use num_traits::{Signed, Zero};

use crate::arith::{fmt_q, Rational};
use crate::error::{Error, Result};
use crate::models::{slope_sheaf, FibrationDegeneration, PolarisedFibration};
use crate::oracle::{fit_h_and_w, GridSpec};

use super::df::{df_fibration_expansion, w0_via_fibre, DfExpansion};
use super::norms::{linf_norm, min_norm_fibration, LinfNorm};
use super::weights::{chow_weight, ChowWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    W0Positive,
    W0ZeroW1Positive,
    W0ZeroW1ZeroNormZero,
    W0ZeroW1ZeroNormPositiveProductDetected,
    W0ZeroW1ZeroInconclusive,
    UnstableCertificate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::W0Positive => "W0Positive",
            Verdict::W0ZeroW1Positive => "W0ZeroW1Positive",
            Verdict::W0ZeroW1ZeroNormZero => "W0ZeroW1Zero_NormZero",
            Verdict::W0ZeroW1ZeroNormPositiveProductDetected => "W0ZeroW1Zero_NormPositive_ProductDetected",
            Verdict::W0ZeroW1ZeroInconclusive => "W0ZeroW1Zero_Inconclusive",
            Verdict::UnstableCertificate => "UnstableCertificate",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        [
            Verdict::W0Positive,
            Verdict::W0ZeroW1Positive,
            Verdict::W0ZeroW1ZeroNormZero,
            Verdict::W0ZeroW1ZeroNormPositiveProductDetected,
            Verdict::W0ZeroW1ZeroInconclusive,
            Verdict::UnstableCertificate,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationRecord {
    pub index: usize,
    pub label: String,
    pub weights: Option<Vec<i64>>,
    pub subsheaf: Option<Vec<usize>>,
    pub subsheaf_slope: Option<Rational>,
    pub expansion: DfExpansion,
    pub w0_via_fibre: Rational,
    pub minimum_norm: Rational,
    pub linf: Option<LinfNorm>,
    pub chow_weight: ChowWeight,
    pub verdict: Verdict,
    pub certificate: Option<String>,
    /// `W₀ < 0`, impossible when the fibres are K-polystable.
    pub consistency_violation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summary {
    Unstable { certificate: String },
    NotDestabilized,
}

impl Summary {
    pub fn as_str(&self) -> &'static str {
        match self {
            Summary::Unstable { .. } => "unstable",
            Summary::NotDestabilized => "not destabilized by the supplied family",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub bundle_slope: Rational,
    pub records: Vec<DegenerationRecord>,
    pub summary: Summary,
}

fn summand_label(degrees: &[i64]) -> String {
    if degrees.iter().all(|&d| d == 0) {
        "O".into()
    } else {
        let parts: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
        format!("O({})", parts.join(","))
    }
}

fn label(d: &FibrationDegeneration) -> String {
    let degs = d.parent.bundle.degree_vectors();
    match (&d.subsheaf, &d.weights) {
        (Some(f), _) => {
            let parts: Vec<String> = f.iter().map(|&i| summand_label(&degs[i])).collect();
            format!("F = {{{}}}", parts.join(", "))
        }
        (None, Some(w)) => {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!("weights ({})", parts.join(","))
        }
        (None, None) => "degeneration".into(),
    }
}

fn record(
    x: &PolarisedFibration,
    mu_e: &Rational,
    index: usize,
    d: &FibrationDegeneration,
    grid: Option<&GridSpec>,
) -> Result<DegenerationRecord> {
    let expansion = df_fibration_expansion(d)?;
    let w0_fibre = w0_via_fibre(d)?;
    let minimum_norm = min_norm_fibration(d)?;
    let fitted = grid.map(|g| fit_h_and_w(d, g)).transpose()?;
    let linf = fitted.as_ref().map(|fp| linf_norm(d, fp)).transpose()?;
    let chow = chow_weight(d, fitted.as_ref())?;
    let subsheaf_slope = d
        .subsheaf
        .as_ref()
        .map(|f| slope_sheaf(&x.bundle, Some(f), &x.base_l))
        .transpose()?;
    let label = label(d);
    let (w0, w1) = (&expansion.w0, &expansion.w1);
    let consistency_violation = w0.is_negative();
    let (verdict, certificate) = if w0.is_negative() {
        let c = format!("W0 = {} < 0 for {label}", fmt_q(w0));
        (Verdict::UnstableCertificate, Some(c))
    } else if w0.is_positive() {
        (Verdict::W0Positive, None)
    } else if w1.is_negative() {
        let mut c = format!("W0 = 0 and W1 = {} < 0 for {label}", fmt_q(w1));
        if let Some(mu_f) = &subsheaf_slope {
            c.push_str(&format!(", mu(F) = {} > mu(E) = {}", fmt_q(mu_f), fmt_q(mu_e)));
        }
        (Verdict::UnstableCertificate, Some(c))
    } else if w1.is_positive() {
        (Verdict::W0ZeroW1Positive, None)
    } else if minimum_norm.is_zero() {
        (Verdict::W0ZeroW1ZeroNormZero, None)
    } else if d.weights.is_some() {
        (Verdict::W0ZeroW1ZeroNormPositiveProductDetected, None)
    } else {
        (Verdict::W0ZeroW1ZeroInconclusive, None)
    };
    Ok(DegenerationRecord {
        index,
        label,
        weights: d.weights.clone(),
        subsheaf: d.subsheaf.clone(),
        subsheaf_slope,
        w0_via_fibre: w0_fibre,
        expansion,
        minimum_norm,
        linf,
        chow_weight: chow,
        verdict,
        certificate,
        consistency_violation,
    })
}

/// Verdicts over the supplied degenerations, in input order. When `grid` is
/// given the section oracle is fitted for the L∞ norm and `b₀₀`.
pub fn classify(
    x: &PolarisedFibration,
    degenerations: &[FibrationDegeneration],
    grid: Option<&GridSpec>,
) -> Result<StabilityReport> {
    let mu_e = slope_sheaf(&x.bundle, None, &x.base_l)?;
    let records = degenerations
        .iter()
        .enumerate()
        .map(|(i, d)| {
            record(x, &mu_e, i, d, grid).map_err(|e| Error::InDegeneration { index: i, source: Box::new(e) })
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = records
        .iter()
        .find_map(|r| r.certificate.clone())
        .map_or(Summary::NotDestabilized, |certificate| Summary::Unstable { certificate });
    Ok(StabilityReport { bundle_slope: mu_e, records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{all_subsum_degenerations, make_projectivised_fibration, make_trivial_degeneration, SplitBundle};

    fn fib(degrees: &[i64]) -> PolarisedFibration {
        let d: Vec<Vec<i64>> = degrees.iter().map(|&x| vec![x]).collect();
        let e = SplitBundle::over_product(&[1], &d).unwrap();
        let h = e.base().generator("h").unwrap();
        make_projectivised_fibration(&e, &h).unwrap()
    }

    #[test]
    fn hirzebruch_is_unstable() {
        let x = fib(&[0, -1]);
        let ds = all_subsum_degenerations(&x).unwrap();
        let r = classify(&x, &ds, Some(&GridSpec::default())).unwrap();
        assert_eq!(r.records[0].label, "F = {O}");
        assert_eq!(r.records[0].verdict, Verdict::UnstableCertificate);
        assert_eq!(r.records[1].verdict, Verdict::W0ZeroW1Positive);
        assert!(matches!(r.summary, Summary::Unstable { .. }));
    }

    #[test]
    fn trivial_bundle_not_destabilized() {
        let x = fib(&[2, 2]);
        let ds = all_subsum_degenerations(&x).unwrap();
        let r = classify(&x, &ds, None).unwrap();
        assert!(r
            .records
            .iter()
            .all(|r| r.verdict == Verdict::W0ZeroW1ZeroNormPositiveProductDetected));
        assert_eq!(r.summary, Summary::NotDestabilized);
        let t = classify(&x, &[make_trivial_degeneration(&x).unwrap()], None).unwrap();
        assert_eq!(t.records[0].verdict, Verdict::W0ZeroW1ZeroNormZero);
    }

    #[test]
    fn vacuous_report() {
        let x = fib(&[3]);
        let r = classify(&x, &[], None).unwrap();
        assert!(r.records.is_empty());
        assert_eq!(r.summary.as_str(), "not destabilized by the supplied family");
    }

    #[test]
    fn verdict_names_round_trip() {
        for v in [Verdict::W0Positive, Verdict::W0ZeroW1ZeroInconclusive, Verdict::UnstableCertificate] {
            assert_eq!(Verdict::parse(v.as_str()), Some(v));
        }
    }
}
