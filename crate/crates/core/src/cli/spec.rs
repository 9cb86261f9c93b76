use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    /// Dimensions of the projective-space factors.
    pub factors: Vec<usize>,
    /// `L = Σ c_f h_f`.
    pub polarization: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    /// One degree vector per summand, one entry per base factor.
    pub summands: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedPolarisation {
    Xi,
    Anticanonical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FibrationH {
    Named(NamedPolarisation),
    /// `H = xi·ξ + Σ base_f h_f`.
    Explicit { xi: i64, base: Vec<i64> },
}

impl Default for FibrationH {
    fn default() -> Self {
        FibrationH::Named(NamedPolarisation::Xi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerationMode {
    AllSubsums,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DegenerationsSpec {
    Mode { mode: DegenerationMode },
    Weights(Vec<Vec<i64>>),
}

impl Default for DegenerationsSpec {
    fn default() -> Self {
        DegenerationsSpec::Mode { mode: DegenerationMode::AllSubsums }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridRanges {
    /// Inclusive `[first, last]`.
    pub j_range: [i64; 2],
    pub k_range: [i64; 2],
}

/// Declarative description of one analysis run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub base: BaseSpec,
    pub bundle: BundleSpec,
    #[serde(rename = "fibration_H", default)]
    pub fibration_h: FibrationH,
    #[serde(default)]
    pub degenerations: DegenerationsSpec,
    #[serde(default)]
    pub fano_check: bool,
    #[serde(default)]
    pub oracle_check: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridRanges>,
}

fn invalid(path: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Validation { path: path.into(), reason: reason.into() }
}

impl ProblemSpec {
    pub fn rank(&self) -> usize {
        self.bundle.summands.len()
    }

    pub fn validate(&self) -> Result<()> {
        let nf = self.base.factors.len();
        if nf == 0 {
            return Err(invalid("base.factors", "at least one factor is required"));
        }
        for (i, &d) in self.base.factors.iter().enumerate() {
            if d == 0 {
                return Err(invalid(format!("base.factors[{i}]"), "factor dimension must be positive"));
            }
        }
        if self.base.polarization.len() != nf {
            return Err(invalid(
                "base.polarization",
                format!("expected {nf} coefficients, got {}", self.base.polarization.len()),
            ));
        }
        for (i, &c) in self.base.polarization.iter().enumerate() {
            if c <= 0 {
                return Err(invalid(format!("base.polarization[{i}]"), "coefficient must be positive"));
            }
        }
        if self.bundle.summands.is_empty() {
            return Err(invalid("bundle.summands", "at least one summand is required"));
        }
        for (i, s) in self.bundle.summands.iter().enumerate() {
            if s.len() != nf {
                return Err(invalid(
                    format!("bundle.summands[{i}]"),
                    format!("expected {nf} degrees, got {}", s.len()),
                ));
            }
        }
        if let FibrationH::Explicit { xi, base } = &self.fibration_h {
            if *xi <= 0 {
                return Err(invalid("fibration_H.xi", "coefficient of xi must be positive"));
            }
            if base.len() != nf {
                return Err(invalid("fibration_H.base", format!("expected {nf} coefficients, got {}", base.len())));
            }
        }
        if let DegenerationsSpec::Weights(ws) = &self.degenerations {
            for (i, w) in ws.iter().enumerate() {
                if w.len() != self.rank() {
                    return Err(invalid(
                        format!("degenerations[{i}]"),
                        format!("expected {} weights, got {}", self.rank(), w.len()),
                    ));
                }
            }
        }
        if let Some(g) = &self.grid {
            let n: usize = self.base.factors.iter().sum();
            let big_n = n + self.rank() - 1;
            check_range("grid.j_range", g.j_range, 0, n + 1)?;
            check_range("grid.k_range", g.k_range, 0, big_n + 2)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialises")
    }
}

fn check_range(path: &str, [lo, hi]: [i64; 2], min: i64, points: usize) -> Result<()> {
    if lo < min || hi < lo {
        return Err(invalid(path, format!("need {min} <= first <= last, got [{lo}, {hi}]")));
    }
    if ((hi - lo + 1) as usize) < points {
        return Err(invalid(path, format!("need at least {points} points")));
    }
    Ok(())
}

/// Parse and validate a JSON problem description.
pub fn parse(input: &str) -> Result<ProblemSpec> {
    let de = &mut serde_json::Deserializer::from_str(input);
    let spec: ProblemSpec = serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HIRZEBRUCH: &str = r#"{
        "base": {"factors": [1], "polarization": [1]},
        "bundle": {"summands": [[0], [-1]]},
        "degenerations": {"mode": "all_subsums"}
    }"#;

    #[test]
    fn minimal_document() {
        let s = parse(HIRZEBRUCH).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.fibration_h, FibrationH::Named(NamedPolarisation::Xi));
        assert!(!s.oracle_check);
    }

    #[test]
    fn summand_length_mismatch() {
        let doc = r#"{"base": {"factors": [1], "polarization": [1]},
                      "bundle": {"summands": [[0], [1, 2]]}}"#;
        match parse(doc) {
            Err(Error::Validation { path, .. }) => assert_eq!(path, "bundle.summands[1]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_mode() {
        let doc = r#"{"base": {"factors": [1], "polarization": [1]},
                      "bundle": {"summands": [[0], [1]]},
                      "degenerations": {"mode": "everything"}}"#;
        match parse(doc) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "degenerations"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn type_errors_carry_a_path() {
        let doc = r#"{"base": {"factors": [1], "polarization": ["one"]},
                      "bundle": {"summands": [[0]]}}"#;
        match parse(doc) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "base.polarization[0]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn explicit_forms_round_trip() {
        let doc = r#"{"base": {"factors": [1, 1], "polarization": [1, 2]},
                      "bundle": {"summands": [[0, 0], [1, -1], [0, 2]]},
                      "fibration_H": {"xi": 2, "base": [1, 0]},
                      "degenerations": [[1, 0, 0], [0, 2, 1]],
                      "oracle_check": true,
                      "grid": {"j_range": [1, 4], "k_range": [1, 7]}}"#;
        let s = parse(doc).unwrap();
        assert_eq!(parse(&s.to_json()).unwrap(), s);
        assert_eq!(parse(&parse(HIRZEBRUCH).unwrap().to_json()).unwrap(), parse(HIRZEBRUCH).unwrap());
    }

    #[test]
    fn grid_too_small() {
        let doc = r#"{"base": {"factors": [1], "polarization": [1]},
                      "bundle": {"summands": [[0], [1]]},
                      "grid": {"j_range": [1, 1], "k_range": [1, 6]}}"#;
        assert!(matches!(parse(doc), Err(Error::Validation { path, .. }) if path == "grid.j_range"));
    }
}
