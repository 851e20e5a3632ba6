//! Batch screening of candidate arrays against the necessary conditions.
//!
//! Conditions are tried in a fixed order and the first binding failure is the
//! reason: structural conditions, layer integrality, monotonicity of the
//! potentials, the tail bound for `m = 0, …, D − 1`, the main bound, the
//! Biggs bound.

use std::fmt;

use serde::Serialize;

use super::{check_biggs, check_main, check_tail, full_report, BoundReport, Check};
use crate::arrays::{validate, IntersectionArray, Violation};
use crate::error::{Error, Result};
use crate::exact::{fraction_string, render_decimal};
use crate::potentials::phi_recursive;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum RuledOut {
    Structural { violations: Vec<Violation> },
    NonIntegralLayer { index: usize },
    InfeasiblePotential { index: usize, detail: String },
    TailBound { m: usize, check: Check },
    MainBound { check: Check },
    BiggsBound { check: Check },
}

impl RuledOut {
    pub fn failed_check(&self) -> Option<&Check> {
        match self {
            RuledOut::TailBound { check, .. }
            | RuledOut::MainBound { check }
            | RuledOut::BiggsBound { check } => Some(check),
            _ => None,
        }
    }
}

fn describe_check(f: &mut fmt::Formatter<'_>, check: &Check) -> fmt::Result {
    write!(f, "{} violated", check.name)?;
    if let Some(ratio) = check.ratio() {
        write!(
            f,
            ", ratio {} ≈ {}",
            fraction_string(&ratio),
            render_decimal(&ratio, 6)
        )?;
    }
    Ok(())
}

impl fmt::Display for RuledOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuledOut::Structural { violations } => {
                f.write_str("structural: ")?;
                for (idx, v) in violations.iter().enumerate() {
                    if idx > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            RuledOut::NonIntegralLayer { index } => {
                write!(f, "layer size k{index} is not an integer")
            }
            RuledOut::InfeasiblePotential { detail, .. } => write!(f, "potential: {detail}"),
            RuledOut::TailBound { check, .. }
            | RuledOut::MainBound { check }
            | RuledOut::BiggsBound { check } => describe_check(f, check),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ScreenVerdict {
    FeasibleSoFar,
    RuledOut(RuledOut),
    /// The input line did not parse as an array.
    Malformed { message: String },
}

impl ScreenVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ScreenVerdict::FeasibleSoFar)
    }
}

impl fmt::Display for ScreenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScreenVerdict::FeasibleSoFar => f.write_str("feasible-so-far"),
            ScreenVerdict::RuledOut(r) => write!(f, "ruled-out: {r}"),
            ScreenVerdict::Malformed { message } => write!(f, "malformed: {message}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScreenResult {
    #[serde(serialize_with = "ser_opt_array")]
    pub array: Option<IntersectionArray>,
    /// Present whenever the potentials could be computed.
    pub report: Option<BoundReport>,
    pub verdict: ScreenVerdict,
    /// Names of checks carrying an anomaly note.
    pub anomalies: Vec<String>,
}

fn ser_opt_array<S: serde::Serializer>(
    arr: &Option<IntersectionArray>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match arr {
        Some(a) => s.collect_str(a),
        None => s.serialize_none(),
    }
}

/// Screens one array.
pub fn screen_one(arr: &IntersectionArray) -> ScreenResult {
    let ruled_out = |reason: RuledOut, report: Option<BoundReport>| ScreenResult {
        array: Some(arr.clone()),
        anomalies: anomalies(report.as_ref()),
        report,
        verdict: ScreenVerdict::RuledOut(reason),
    };

    let structural: Vec<Violation> = validate(arr)
        .violations
        .into_iter()
        .filter(Violation::is_structural)
        .collect();
    if !structural.is_empty() {
        // The bounds are still informative when the recursion goes through.
        let report = phi_recursive(arr).ok().map(|phi| full_report(&phi));
        return ruled_out(
            RuledOut::Structural {
                violations: structural,
            },
            report,
        );
    }

    let phi = match phi_recursive(arr) {
        Ok(phi) => phi,
        Err(Error::NonIntegralLayer { index }) => {
            return ruled_out(RuledOut::NonIntegralLayer { index }, None)
        }
        Err(Error::InfeasiblePotential { index, reason }) => {
            return ruled_out(
                RuledOut::InfeasiblePotential {
                    index,
                    detail: reason,
                },
                None,
            )
        }
        Err(other) => {
            return ScreenResult {
                array: Some(arr.clone()),
                report: None,
                verdict: ScreenVerdict::Malformed {
                    message: other.to_string(),
                },
                anomalies: Vec::new(),
            }
        }
    };

    let report = full_report(&phi);
    for m in 0..phi.diameter() {
        let check = check_tail(&phi, m).expect("m < D");
        if check.is_binding_failure() {
            return ruled_out(RuledOut::TailBound { m, check }, Some(report));
        }
    }
    let main = check_main(&phi);
    if main.is_binding_failure() {
        return ruled_out(RuledOut::MainBound { check: main }, Some(report));
    }
    let biggs = check_biggs(&phi);
    if biggs.is_binding_failure() {
        return ruled_out(RuledOut::BiggsBound { check: biggs }, Some(report));
    }

    ScreenResult {
        array: Some(arr.clone()),
        anomalies: anomalies(Some(&report)),
        report: Some(report),
        verdict: ScreenVerdict::FeasibleSoFar,
    }
}

fn anomalies(report: Option<&BoundReport>) -> Vec<String> {
    report
        .map(|r| r.anomalies().map(|c| c.name.clone()).collect())
        .unwrap_or_default()
}

/// Lazily screens a stream. Parse errors become [`ScreenVerdict::Malformed`]
/// items; the stream never aborts and output order follows input order.
pub fn screen<I>(items: I) -> impl Iterator<Item = ScreenResult>
where
    I: IntoIterator<Item = Result<IntersectionArray>>,
{
    items.into_iter().map(|item| match item {
        Ok(arr) => screen_one(&arr),
        Err(e) => ScreenResult {
            array: None,
            report: None,
            verdict: ScreenVerdict::Malformed {
                message: e.to_string(),
            },
            anomalies: Vec::new(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::parse_array;
    use crate::bounds::{BIGGS_SMITH, DODECAHEDRON};

    fn verdict(s: &str) -> ScreenVerdict {
        screen_one(&parse_array(s).unwrap()).verdict
    }

    #[test]
    fn ruled_out_by_main_bound() {
        let v = verdict("3,2,2,1,1,1,1;1,1,1,1,1,1,3");
        assert_eq!(
            v.to_string(),
            "ruled-out: main_bound violated, ratio 35/29 ≈ 1.206897"
        );
    }

    #[test]
    fn order_of_reasons() {
        assert!(matches!(
            verdict("3,3;1,1"),
            ScreenVerdict::RuledOut(RuledOut::Structural { .. })
        ));
        assert!(matches!(
            verdict("5,4;1,3"),
            ScreenVerdict::RuledOut(RuledOut::NonIntegralLayer { index: 2 })
        ));
        // Also non-monotone in φ, but the cross condition b₁ ≥ c₂ is hit first.
        assert!(matches!(
            verdict("4,2,1;1,4,2"),
            ScreenVerdict::RuledOut(RuledOut::Structural { .. })
        ));
    }

    #[test]
    fn known_graphs_pass() {
        let arrays = [BIGGS_SMITH, DODECAHEDRON, "3,2;1,1", "4,3,2,1;1,2,3,4"];
        for s in arrays {
            let r = screen_one(&parse_array(s).unwrap());
            assert!(r.verdict.is_feasible(), "{s}: {}", r.verdict);
            assert!(r.anomalies.is_empty());
        }
    }

    #[test]
    fn malformed_items_do_not_abort() {
        let items = vec![
            parse_array("3,2;1,1"),
            parse_array("nonsense"),
            parse_array("5;1"),
        ];
        let out: Vec<_> = screen(items).collect();
        assert_eq!(out.len(), 3);
        assert!(out[0].verdict.is_feasible());
        assert!(matches!(out[1].verdict, ScreenVerdict::Malformed { .. }));
        assert!(out[2].verdict.is_feasible());
        assert_eq!(screen(Vec::new()).count(), 0);
    }

    #[test]
    fn json_shape() {
        let r = screen_one(&parse_array("3,2,2,1,1,1,1;1,1,1,1,1,1,3").unwrap());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"]["verdict"], "ruled_out");
        assert_eq!(v["verdict"]["reason"], "main_bound");
        assert_eq!(v["array"], "3,2,2,1,1,1,1;1,1,1,1,1,1,3");
    }
}
