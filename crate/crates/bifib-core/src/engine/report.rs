//! JSON wire format for verification reports.
//!
//! Every integer is serialized as a decimal string so values survive JSON
//! parsers that truncate to 64-bit floats. Maps are ordered and struct
//! fields are emitted in declaration order, so serialization is
//! byte-for-byte deterministic.

use super::{ClaimReport, Counterexample, VerificationReport};
use crate::bicomplex::Bicomplex;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize)]
struct BicomplexWire {
    re: String,
    i: String,
    j: String,
    k: String,
}

impl From<&Bicomplex<BigInt>> for BicomplexWire {
    fn from(v: &Bicomplex<BigInt>) -> Self {
        BicomplexWire {
            re: v.w.to_string(),
            i: v.x.to_string(),
            j: v.y.to_string(),
            k: v.z.to_string(),
        }
    }
}

#[derive(Serialize)]
struct RangeWire {
    from: String,
    to: String,
}

#[derive(Serialize)]
struct CounterexampleWire {
    bindings: BTreeMap<String, String>,
    lhs: BicomplexWire,
    rhs: BicomplexWire,
    residual: BicomplexWire,
}

impl From<&Counterexample> for CounterexampleWire {
    fn from(cx: &Counterexample) -> Self {
        CounterexampleWire {
            bindings: cx.bindings.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            lhs: (&cx.lhs).into(),
            rhs: (&cx.rhs).into(),
            residual: (&cx.residual).into(),
        }
    }
}

#[derive(Serialize)]
struct ClaimReportWire {
    claim_id: String,
    citation: String,
    grid: BTreeMap<String, RangeWire>,
    points_checked: String,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs_form_matches: Option<BTreeMap<String, String>>,
    first_counterexample: Option<CounterexampleWire>,
}

impl From<&ClaimReport> for ClaimReportWire {
    fn from(report: &ClaimReport) -> Self {
        ClaimReportWire {
            claim_id: report.claim_id.clone(),
            citation: report.citation.clone(),
            grid: report
                .grid
                .iter()
                .map(|(name, (from, to))| {
                    (name.to_string(), RangeWire { from: from.to_string(), to: to.to_string() })
                })
                .collect(),
            points_checked: report.points_checked.to_string(),
            verdict: report.verdict.as_str(),
            rhs_form_matches: report.form_matches.as_ref().map(|counts| {
                counts.iter().map(|(name, n)| (name.clone(), n.to_string())).collect()
            }),
            first_counterexample: report.first_counterexample.as_ref().map(Into::into),
        }
    }
}

#[derive(Serialize)]
struct VerificationReportWire {
    claims: Vec<ClaimReportWire>,
}

impl ClaimReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ClaimReportWire::from(self)).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&ClaimReportWire::from(self)).expect("report serializes")
    }
}

impl VerificationReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        let wire = VerificationReportWire {
            claims: self.claims.iter().map(Into::into).collect(),
        };
        serde_json::to_value(wire).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        let wire = VerificationReportWire {
            claims: self.claims.iter().map(Into::into).collect(),
        };
        serde_json::to_string_pretty(&wire).expect("report serializes")
    }
}
