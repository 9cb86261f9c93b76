use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_q, BivariatePolynomial, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::invariants::{DegenerationRecord, Summary};

use super::run::Analysis;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntRepr {
    fn from(b: &BigInt) -> Self {
        i64::try_from(b).map_or_else(|_| IntRepr::Big(b.to_string()), IntRepr::Small)
    }
}

impl IntRepr {
    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            IntRepr::Small(i) => Some(BigInt::from(*i)),
            IntRepr::Big(s) => s.parse().ok(),
        }
    }
}

/// An exact rational as `{"num", "den"}`; integers beyond 64 bits are
/// written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q {
    num: IntRepr,
    den: IntRepr,
}

impl From<&Rational> for Q {
    fn from(q: &Rational) -> Self {
        Q { num: q.numer().into(), den: q.denom().into() }
    }
}

impl Q {
    pub fn to_rational(&self) -> Option<Rational> {
        let den = self.den.to_bigint()?;
        if den == BigInt::from(0) {
            return None;
        }
        Some(Rational::new(self.num.to_bigint()?, den))
    }
}

fn q(r: &Rational) -> Q {
    r.into()
}

fn poly(p: &UniPoly) -> Vec<Q> {
    p.coeffs().iter().map(q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub power: i64,
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    #[serde(rename = "W0")]
    pub w0: Q,
    #[serde(rename = "W1")]
    pub w1: Q,
    #[serde(rename = "C")]
    pub c: Vec<Q>,
    #[serde(rename = "W0_agrees")]
    pub w0_agrees: bool,
    #[serde(rename = "W1_agrees")]
    pub w1_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoJson {
    pub gamma: Q,
    #[serde(rename = "W0")]
    pub w0: Q,
    #[serde(rename = "W1")]
    pub w1: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub index: usize,
    pub label: String,
    pub weights: Option<Vec<i64>>,
    pub subsheaf: Option<Vec<usize>>,
    pub subsheaf_slope: Option<Q>,
    #[serde(rename = "W0")]
    pub w0: Q,
    #[serde(rename = "W1")]
    pub w1: Q,
    /// Ascending coefficients.
    pub df_poly_in_j: Vec<Q>,
    pub lower_terms: Vec<TermJson>,
    pub closed_form: Option<ClosedFormJson>,
    pub w0_via_fibre: Q,
    pub minimum_norm: Q,
    pub linf_norm_c0: Option<Q>,
    pub c1: Option<Q>,
    pub chow_weight: Q,
    pub chow_weight_b00: Option<Q>,
    pub verdict: String,
    pub certificate: Option<String>,
    pub consistency_violation: bool,
    pub fano: Option<FanoJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub fibration: String,
    pub bundle_slope: Q,
    pub degenerations: Vec<RecordJson>,
    pub summary: String,
    pub certificate: Option<String>,
    pub identities_checked: Vec<String>,
}

fn record_json(r: &DegenerationRecord, fano: Option<&crate::invariants::FanoInvariants>) -> RecordJson {
    let e = &r.expansion;
    RecordJson {
        index: r.index,
        label: r.label.clone(),
        weights: r.weights.clone(),
        subsheaf: r.subsheaf.clone(),
        subsheaf_slope: r.subsheaf_slope.as_ref().map(q),
        w0: q(&e.w0),
        w1: q(&e.w1),
        df_poly_in_j: poly(&e.df_poly_in_j),
        lower_terms: e.lower_terms.iter().map(|(p, v)| TermJson { power: *p, value: q(v) }).collect(),
        closed_form: e.audit.as_ref().map(|a| ClosedFormJson {
            w0: q(&a.w0_closed),
            w1: q(&a.w1_closed),
            c: a.c.iter().map(q).collect(),
            w0_agrees: a.w0_agrees,
            w1_agrees: a.w1_agrees,
        }),
        w0_via_fibre: q(&r.w0_via_fibre),
        minimum_norm: q(&r.minimum_norm),
        linf_norm_c0: r.linf.as_ref().map(|l| q(&l.c0)),
        c1: r.linf.as_ref().map(|l| q(&l.c1)),
        chow_weight: q(&r.chow_weight.intersection),
        chow_weight_b00: r.chow_weight.fitted_b00.as_ref().map(q),
        verdict: r.verdict.as_str().to_string(),
        certificate: r.certificate.clone(),
        consistency_violation: r.consistency_violation,
        fano: fano.map(|f| FanoJson { gamma: q(&f.gamma), w0: q(&f.w0_fano), w1: q(&f.w1_fano) }),
    }
}

pub fn report_json(a: &Analysis) -> ReportJson {
    let certificate = match &a.report.summary {
        Summary::Unstable { certificate } => Some(certificate.clone()),
        Summary::NotDestabilized => None,
    };
    ReportJson {
        fibration: a.description.clone(),
        bundle_slope: q(&a.report.bundle_slope),
        degenerations: a
            .report
            .records
            .iter()
            .enumerate()
            .map(|(i, r)| record_json(r, a.fano.get(i).and_then(Option::as_ref)))
            .collect(),
        summary: a.report.summary.as_str().to_string(),
        certificate,
        identities_checked: a.checks.clone(),
    }
}

/// Read back a report written by [`render`] in JSON form.
pub fn parse_report(s: &str) -> Result<ReportJson> {
    let de = &mut serde_json::Deserializer::from_str(s);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

fn opt(r: Option<&Rational>) -> String {
    r.map_or_else(|| "-".into(), fmt_q)
}

fn render_text(a: &Analysis) -> String {
    let r = &a.report;
    let mut out = String::new();
    let _ = writeln!(out, "fibration: {}", a.description);
    let _ = writeln!(out, "mu(E) = {}", fmt_q(&r.bundle_slope));
    let _ = writeln!(out, "degenerations: {}", r.records.len());
    for (i, rec) in r.records.iter().enumerate() {
        let e = &rec.expansion;
        let _ = writeln!(out, "[{}] {}", rec.index, rec.label);
        let _ = writeln!(out, "    DF(j) = {} + O(1/j)", e.df_poly_in_j);
        let _ = writeln!(out, "    W0 = {}  W1 = {}", fmt_q(&e.w0), fmt_q(&e.w1));
        let _ = writeln!(
            out,
            "    min norm = {}  c0 = {}  c1 = {}  chow = {}  b00 = {}",
            fmt_q(&rec.minimum_norm),
            opt(rec.linf.as_ref().map(|l| &l.c0)),
            opt(rec.linf.as_ref().map(|l| &l.c1)),
            fmt_q(&rec.chow_weight.intersection),
            opt(rec.chow_weight.fitted_b00.as_ref()),
        );
        if let Some(au) = &e.audit {
            if !(au.w0_agrees && au.w1_agrees) {
                let _ = writeln!(
                    out,
                    "    closed forms disagree: W0 {}  W1 {}",
                    fmt_q(&au.w0_closed),
                    fmt_q(&au.w1_closed)
                );
            }
        }
        if let Some(Some(f)) = a.fano.get(i) {
            let _ = writeln!(out, "    gamma = {}", fmt_q(&f.gamma));
        }
        let _ = writeln!(out, "    verdict: {}", rec.verdict.as_str());
        if let Some(c) = &rec.certificate {
            let _ = writeln!(out, "    certificate: {c}");
        }
        if rec.consistency_violation {
            let _ = writeln!(out, "    warning: W0 < 0 contradicts polystable fibres");
        }
    }
    if !a.checks.is_empty() {
        let _ = writeln!(out, "identities checked: {}", a.checks.join(", "));
    }
    match &r.summary {
        Summary::Unstable { certificate } => {
            let _ = writeln!(out, "summary: unstable");
            let _ = writeln!(out, "certificate: {certificate}");
        }
        Summary::NotDestabilized => {
            let _ = writeln!(out, "summary: {}", r.summary.as_str());
        }
    }
    out
}

pub fn render(a: &Analysis, format: Format) -> String {
    match format {
        Format::Text => render_text(a),
        Format::Json => serde_json::to_string_pretty(&report_json(a)).expect("report serialises") + "\n",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub j: u32,
    pub k: u32,
    pub value: Q,
}

fn bivariate_json(p: &BivariatePolynomial) -> Vec<CoefficientJson> {
    p.terms()
        .map(|(&(j, k), v)| CoefficientJson { j, k, value: q(v) })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitJson {
    pub index: usize,
    pub label: String,
    pub points: Vec<(i64, i64)>,
    pub h: Vec<CoefficientJson>,
    pub w: Vec<CoefficientJson>,
}

/// Fitted `h(j, k)` and `w(j, k)` for each degeneration.
#[derive(Clone, Debug)]
pub struct OracleDump {
    pub description: String,
    pub fits: Vec<(String, crate::oracle::FittedPolynomials)>,
}

pub fn render_oracle(d: &OracleDump, format: Format) -> String {
    match format {
        Format::Json => {
            let fits: Vec<FitJson> = d
                .fits
                .iter()
                .enumerate()
                .map(|(i, (label, fp))| FitJson {
                    index: i,
                    label: label.clone(),
                    points: fp.points.clone(),
                    h: bivariate_json(&fp.h),
                    w: bivariate_json(&fp.w),
                })
                .collect();
            let v = serde_json::json!({ "fibration": d.description, "fits": fits });
            serde_json::to_string_pretty(&v).expect("fits serialise") + "\n"
        }
        Format::Text => {
            let mut out = format!("fibration: {}\n", d.description);
            for (i, (label, fp)) in d.fits.iter().enumerate() {
                let _ = writeln!(out, "[{i}] {label}");
                let _ = writeln!(out, "    h(j,k) = {}", fp.h);
                let _ = writeln!(out, "    w(j,k) = {}", fp.w);
                let _ = writeln!(out, "    grid: {} points", fp.points.len());
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::cli::{parse, run, RunOptions};

    fn analysis(summands: &str) -> Analysis {
        let s = parse(&format!(
            r#"{{"base": {{"factors": [1], "polarization": [1]}}, "bundle": {{"summands": {summands}}}}}"#
        ))
        .unwrap();
        run(&s, &RunOptions::default()).unwrap()
    }

    #[test]
    fn rationals_are_pairs() {
        let v = serde_json::to_value(q(&rat(-1, 3))).unwrap();
        assert_eq!(v, serde_json::json!({"num": -1, "den": 3}));
        let big = Rational::from_integer(BigInt::from(10).pow(30));
        let v = serde_json::to_value(q(&big)).unwrap();
        assert_eq!(v["num"], serde_json::json!("1000000000000000000000000000000"));
        assert_eq!(q(&big).to_rational(), Some(big));
        assert_eq!(q(&int(4)).to_rational(), Some(int(4)));
    }

    #[test]
    fn json_round_trip() {
        let a = analysis("[[0], [-1]]");
        let s = render(&a, Format::Json);
        let back = parse_report(&s).unwrap();
        assert_eq!(back, report_json(&a));
        assert_eq!(serde_json::to_string_pretty(&back).unwrap() + "\n", s);
        assert_eq!(back.degenerations[0].w1.to_rational(), Some(a.report.records[0].expansion.w1.clone()));
        assert!(!s.contains('.'), "no floats in {s}");
    }

    #[test]
    fn empty_report() {
        let a = analysis("[[1]]");
        let j = report_json(&a);
        assert!(j.degenerations.is_empty());
        assert!(render(&a, Format::Json).contains("\"degenerations\": []"));
    }

    #[test]
    fn text_has_certificate() {
        let t = render(&analysis("[[0], [-1]]"), Format::Text);
        assert!(t.contains("certificate: W0 = 0 and W1 = -2/3 < 0 for F = {O}"));
        assert!(t.contains("summary: unstable"));
        let t = render(&analysis("[[0], [0]]"), Format::Text);
        assert!(t.contains("summary: not destabilized by the supplied family"));
    }
}
