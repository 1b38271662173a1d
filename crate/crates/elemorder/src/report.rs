//! JSON encodings. Every number is a decimal string.

use elemorder_core::abelian::OrderType;
use elemorder_core::lab::{SuiteReport, VerdictReport};
use elemorder_core::numcore::Natural;
use serde_json::{json, Value};

pub fn nat(n: &Natural) -> Value {
    Value::String(n.to_decimal())
}

pub fn order_type(t: &OrderType) -> Value {
    Value::Array(
        t.entries()
            .iter()
            .map(|(d, s)| json!({ "order": nat(d), "count": nat(s) }))
            .collect(),
    )
}

pub fn group_record(
    group: &str,
    order: &Natural,
    psi: &Natural,
    t: &OrderType,
    lcm: bool,
) -> Value {
    json!({
        "group": group,
        "order": nat(order),
        "psi": nat(psi),
        "order_type": order_type(t),
        "lcm": lcm,
    })
}

pub fn verdict(r: &VerdictReport) -> Value {
    json!({
        "lemma_id": r.lemma_id,
        "configuration": r.configuration,
        "verdict": r.verdict.as_str(),
        "computed": r
            .computed
            .iter()
            .map(|(name, v)| json!({ "name": name, "value": nat(v) }))
            .collect::<Vec<_>>(),
        "witness": r.witness.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "note": r.note,
    })
}

/// One JSON object per line, in report order.
pub fn verdict_lines(report: &SuiteReport) -> String {
    let mut out = String::new();
    for r in report.records() {
        out.push_str(&verdict(r).to_string());
        out.push('\n');
    }
    out
}
