use num_traits::Zero;

use crate::arith::fmt_q;
use crate::error::{Error, Result};
use crate::invariants::{
    classify, df_fibration_expansion, df_fibration_weights, df_intersection, df_normalisation, df_weights,
    fano_invariants, j_weight_expansion, min_norm_fibration, min_norm_fibration_leading, w0_via_fibre,
    FanoInvariants, StabilityReport,
};
use crate::models::{
    all_subsum_degenerations, check_general_fibre, make_anticanonical_fibration, make_fibre_test_configuration,
    make_normal_cone_degeneration, make_polarised_fibration, make_projectivised_fibration,
    make_weighted_degeneration, FibrationDegeneration, PolarisedFibration, SplitBundle,
};
use crate::oracle::{euler_route_available, fit_h_and_w, fit_tc, reconcile_weights, FittedPolynomials, GridSpec};

use super::spec::{DegenerationsSpec, FibrationH, NamedPolarisation, ProblemSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub max_k: i64,
    /// Forces the identity checks on even when the spec leaves them off.
    pub oracle_check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_k: 24, oracle_check: false }
    }
}

/// Everything `analyze` reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub description: String,
    pub report: StabilityReport,
    /// Per degeneration, when `fano_check` is set.
    pub fano: Vec<Option<FanoInvariants>>,
    /// Names of the identities verified, in order.
    pub checks: Vec<String>,
}

pub fn build_fibration(spec: &ProblemSpec) -> Result<PolarisedFibration> {
    let bundle = SplitBundle::over_product(&spec.base.factors, &spec.bundle.summands)?;
    let names: Vec<(&str, i64)> = bundle
        .base()
        .generator_names()
        .iter()
        .map(String::as_str)
        .zip(spec.base.polarization.iter().copied())
        .collect();
    let l = bundle.base().class(&names)?;
    match &spec.fibration_h {
        FibrationH::Named(NamedPolarisation::Xi) => make_projectivised_fibration(&bundle, &l),
        FibrationH::Named(NamedPolarisation::Anticanonical) => make_anticanonical_fibration(&bundle, &l),
        FibrationH::Explicit { xi, base } => make_polarised_fibration(&bundle, &l, *xi, base),
    }
}

pub fn build_degenerations(spec: &ProblemSpec, x: &PolarisedFibration) -> Result<Vec<FibrationDegeneration>> {
    match &spec.degenerations {
        DegenerationsSpec::Mode { .. } => all_subsum_degenerations(x),
        DegenerationsSpec::Weights(ws) => ws.iter().map(|w| make_weighted_degeneration(x, w)).collect(),
    }
}

pub fn grid_spec(spec: &ProblemSpec, max_k: i64) -> GridSpec {
    match &spec.grid {
        None => GridSpec::with_max_k(max_k),
        Some(g) => GridSpec {
            j0: Some(g.j_range[0]),
            nj: Some((g.j_range[1] - g.j_range[0] + 1) as usize),
            k0: g.k_range[0],
            nk: Some((g.k_range[1] - g.k_range[0] + 1) as usize),
            max_k,
        },
    }
}

pub(crate) fn describe_fibration(x: &PolarisedFibration) -> String {
    let dims: Vec<String> = x.bundle.base_dims().iter().map(|d| format!("P^{d}")).collect();
    let summands: Vec<String> = x
        .bundle
        .degree_vectors()
        .iter()
        .map(|d| {
            if d.iter().all(|&e| e == 0) {
                "O".to_string()
            } else {
                let p: Vec<String> = d.iter().map(|e| e.to_string()).collect();
                format!("O({})", p.join(","))
            }
        })
        .collect();
    let h = if x.is_relatively_anticanonical() {
        " with H = -K_{X/B}".to_string()
    } else if x.xi_multiple == 1 && x.h_base.iter().all(|&b| b == 0) {
        String::new()
    } else {
        let mut terms = vec![format!("{}xi", x.xi_multiple)];
        for (c, name) in x.h_base.iter().zip(x.base().generator_names()) {
            if *c != 0 {
                terms.push(format!("{c}{name}"));
            }
        }
        format!(" with H = {}", terms.join(" + "))
    };
    format!("P({}) over {}{h}", summands.join(" + "), dims.join(" x "))
}

fn mismatch(identity: &str, detail: String) -> Error {
    Error::IdentityMismatch { identity: identity.into(), detail }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(identity: &str, got: T, want: T) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(mismatch(identity, format!("{got:?} vs {want:?}")))
    }
}

/// Every dual-route identity available for one degeneration.
fn verify(d: &FibrationDegeneration, fp: &FittedPolynomials, max_k: i64, checks: &mut Vec<String>) -> Result<()> {
    let x = &d.parent;
    let big_n = (x.n + x.m) as u32;
    let mut pass = |name: &str| {
        if !checks.iter().any(|c| c == name) {
            checks.push(name.to_string());
        }
    };

    check_general_fibre(d).map_err(|e| mismatch("general fibre", e.to_string()))?;
    pass("general fibre");

    let ex = df_fibration_expansion(d)?;
    let fitted = df_fibration_weights(fp, big_n)?.scale(&df_normalisation(big_n as usize));
    if !fitted.same_function(&ex.function) {
        return Err(mismatch("dual-route DF", "fitted weights disagree with intersections".into()));
    }
    pass("dual-route DF");

    expect_eq("W0 via fibre", w0_via_fibre(d)?, ex.w0.clone())?;
    pass("W0 via fibre");

    let tc = make_fibre_test_configuration(d)?;
    let (h, w) = fit_tc(&tc, max_k)?;
    expect_eq(
        "fibre dual-route DF",
        df_weights(&h, &w)? * df_normalisation(tc.q()),
        df_intersection(&tc)?,
    )?;
    pass("fibre dual-route DF");

    if euler_route_available(d) {
        reconcile_weights(d, &fp.points)?;
        pass("euler-vs-enumeration weight");
    }

    for t in [x.base_l.clone(), x.base_l.scale(&crate::arith::int(2))] {
        let jw = j_weight_expansion(d, &t)?;
        let n = x.n as i64;
        if !jw.coeff(n).is_zero() || !jw.coeff(n - 1).is_zero() {
            return Err(mismatch("J-weight vanishing", format!("{} j^n + {} j^(n-1)", jw.coeff(n), jw.coeff(n - 1))));
        }
    }
    pass("J-weight vanishing");

    if let Some(f) = &d.subsheaf {
        let nc = make_normal_cone_degeneration(x, f)?;
        if !df_fibration_expansion(&nc)?.function.same_function(&ex.function) {
            return Err(mismatch("normal cone twin", "DF differs on the blowup model".into()));
        }
        pass("normal cone twin");
        let lead = min_norm_fibration_leading(&nc)?;
        expect_eq("blowup minimum norm", lead, x.base_volume()? * min_norm_fibration(d)?)?;
        pass("blowup minimum norm");
    }
    Ok(())
}

/// Build the family described by `spec`, classify it and, when asked, check
/// every identity that has two independent routes.
pub fn run(spec: &ProblemSpec, opts: &RunOptions) -> Result<Analysis> {
    spec.validate()?;
    let x = build_fibration(spec)?;
    let ds = build_degenerations(spec, &x)?;
    let grid = grid_spec(spec, opts.max_k);
    let report = classify(&x, &ds, Some(&grid))?;
    let mut fano = Vec::new();
    let mut checks = Vec::new();
    for (i, d) in ds.iter().enumerate() {
        let wrap = |e: Error| Error::InDegeneration { index: i, source: Box::new(e) };
        if spec.fano_check {
            let f = fano_invariants(d).map_err(wrap)?;
            let rec = &report.records[i];
            if f.w0_fano != rec.expansion.w0 || f.w1_fano != rec.expansion.w1 {
                return Err(wrap(mismatch(
                    "Fano specialisation",
                    format!("W0 {} vs {}, W1 {} vs {}", fmt_q(&f.w0_fano), fmt_q(&rec.expansion.w0), fmt_q(&f.w1_fano), fmt_q(&rec.expansion.w1)),
                )));
            }
            fano.push(Some(f));
        } else {
            fano.push(None);
        }
        if spec.oracle_check || opts.oracle_check {
            let fp = fit_h_and_w(d, &grid).map_err(wrap)?;
            verify(d, &fp, opts.max_k, &mut checks).map_err(wrap)?;
        }
    }
    Ok(Analysis { description: describe_fibration(&x), report, fano, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse;
    use crate::invariants::{Summary, Verdict};

    fn doc(summands: &str, extra: &str) -> ProblemSpec {
        parse(&format!(
            r#"{{"base": {{"factors": [1], "polarization": [1]}},
                "bundle": {{"summands": {summands}}}{extra}}}"#
        ))
        .unwrap()
    }

    #[test]
    fn hirzebruch_with_checks() {
        let a = run(&doc("[[0], [-1]]", r#", "oracle_check": true"#), &RunOptions::default()).unwrap();
        assert_eq!(a.report.records[0].verdict, Verdict::UnstableCertificate);
        assert!(matches!(a.report.summary, Summary::Unstable { .. }));
        assert!(a.checks.iter().any(|c| c == "euler-vs-enumeration weight"));
        assert_eq!(a.description, "P(O + O(-1)) over P^1");
    }

    #[test]
    fn trivial_and_rank_one() {
        let a = run(&doc("[[1], [1]]", ""), &RunOptions::default()).unwrap();
        assert_eq!(a.report.summary, Summary::NotDestabilized);
        let a = run(&doc("[[2]]", ""), &RunOptions::default()).unwrap();
        assert!(a.report.records.is_empty());
    }

    #[test]
    fn fano_check_runs() {
        let s = doc("[[0], [-1], [1]]", r#", "fibration_H": "anticanonical", "fano_check": true"#);
        let a = run(&s, &RunOptions::default()).unwrap();
        assert!(a.fano.iter().all(|f| f.as_ref().unwrap().gamma.is_zero()));
        let s = doc("[[0], [-1]]", r#", "fano_check": true"#);
        assert!(matches!(
            run(&s, &RunOptions::default()),
            Err(Error::InDegeneration { index: 0, .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let s = doc("[[0], [-1]]", "");
        let opts = RunOptions { max_k: 3, oracle_check: false };
        assert!(matches!(run(&s, &opts), Err(Error::InDegeneration { index: 0, .. })));
    }
}
