//! Batch front end: JSON problem descriptions in, reports out.

mod render;
mod run;
mod spec;

use serde::Serialize;

pub use render::{
    parse_report, render, render_oracle, report_json, ClosedFormJson, CoefficientJson, FanoJson, FitJson, Format,
    OracleDump, RecordJson, ReportJson, TermJson, Q,
};
pub use run::{build_degenerations, build_fibration, grid_spec, run, Analysis, RunOptions};
pub use spec::{
    parse, BaseSpec, BundleSpec, DegenerationMode, DegenerationsSpec, FibrationH, GridRanges, NamedPolarisation,
    ProblemSpec,
};

use crate::arith::{fmt_q, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::invariants::{df_intersection, df_normalisation, df_weights, min_norm_dh, min_norm_tc};
use crate::models::{point_normal_cone_tc, product_tc, TestConfiguration};
use crate::oracle::{fit_h_and_w, fit_tc};

/// A single test configuration for the `df` subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TcSpec {
    /// `(ℙ^{r-1}, 𝒪(a))` with the diagonal action of the given weights.
    Product { weights: Vec<i64>, a: i64 },
    /// Deformation to the normal cone of a point in `(ℙ¹, 𝒪(a))`, `𝓛 = aL - cE`.
    PointNormalCone { a: i64, c: i64 },
}

impl TcSpec {
    pub fn build(&self) -> Result<TestConfiguration> {
        match self {
            TcSpec::Product { weights, a } => product_tc(weights, *a),
            TcSpec::PointNormalCone { a, c } => point_normal_cone_tc(*a, *c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcReport {
    pub q: usize,
    pub h: UniPoly,
    pub w: UniPoly,
    pub df_intersection: Rational,
    pub df_weights: Rational,
    pub normalisation: Rational,
    pub minimum_norm: Rational,
}

pub fn analyze_tc(spec: &TcSpec, max_k: i64) -> Result<TcReport> {
    let tc = spec.build()?;
    let (h, w) = fit_tc(&tc, max_k)?;
    let dw = df_weights(&h, &w)?;
    let di = df_intersection(&tc)?;
    let normalisation = df_normalisation(tc.q());
    if &dw * &normalisation != di {
        return Err(Error::IdentityMismatch {
            identity: "dual-route DF".into(),
            detail: format!("{} vs {}", fmt_q(&(&dw * &normalisation)), fmt_q(&di)),
        });
    }
    let minimum_norm = match min_norm_tc(&tc) {
        Err(Error::HpullNotRepresentable) => min_norm_dh(&tc)?,
        r => r?,
    };
    Ok(TcReport { q: tc.q(), h, w, df_intersection: di, df_weights: dw, normalisation, minimum_norm })
}

#[derive(Serialize)]
struct TcJson {
    q: usize,
    h: Vec<Q>,
    w: Vec<Q>,
    df_intersection: Q,
    df_weights: Q,
    normalisation: Q,
    minimum_norm: Q,
}

pub fn render_tc(r: &TcReport, format: Format) -> String {
    match format {
        Format::Json => {
            let v = TcJson {
                q: r.q,
                h: r.h.coeffs().iter().map(Q::from).collect(),
                w: r.w.coeffs().iter().map(Q::from).collect(),
                df_intersection: (&r.df_intersection).into(),
                df_weights: (&r.df_weights).into(),
                normalisation: (&r.normalisation).into(),
                minimum_norm: (&r.minimum_norm).into(),
            };
            serde_json::to_string_pretty(&v).expect("report serialises") + "\n"
        }
        Format::Text => format!(
            "q = {}\nh(k) = {}\nw(k) = {}\nDF (intersection) = {}\nDF (weights) = {}  x {} = {}\nminimum norm = {}\n",
            r.q,
            r.h.to_string().replace('j', "k"),
            r.w.to_string().replace('j', "k"),
            fmt_q(&r.df_intersection),
            fmt_q(&r.df_weights),
            fmt_q(&r.normalisation),
            fmt_q(&(&r.df_weights * &r.normalisation)),
            fmt_q(&r.minimum_norm),
        ),
    }
}

/// Fitted `h` and `w` for every degeneration of a problem.
pub fn oracle_dump(spec: &ProblemSpec, max_k: i64) -> Result<OracleDump> {
    spec.validate()?;
    let x = build_fibration(spec)?;
    let grid = grid_spec(spec, max_k);
    let ds = build_degenerations(spec, &x)?;
    let fits = ds
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let label = match (&d.subsheaf, &d.weights) {
                (Some(f), _) => format!("subsheaf {f:?}"),
                (None, Some(w)) => format!("weights {w:?}"),
                _ => "degeneration".into(),
            };
            fit_h_and_w(d, &grid)
                .map(|fp| (label, fp))
                .map_err(|e| Error::InDegeneration { index: i, source: Box::new(e) })
        })
        .collect::<Result<Vec<_>>>()?;
    let description = run::describe_fibration(&x);
    Ok(OracleDump { description, fits })
}
