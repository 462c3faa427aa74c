//! Text and JSON renderings of verification reports.

use std::fmt::Write as _;

use mhs_core::certificate::Certificate;
use mhs_core::proof::{ProofConfig, Report, Summary};
use mhs_core::scalar::working_precision;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub fn exit_code(summary: Summary) -> i32 {
    match summary {
        Summary::Pass => 0,
        Summary::Fail | Summary::Inconclusive => 1,
    }
}

pub fn certificate_json(c: &Certificate) -> Value {
    let details: Map<String, Value> =
        c.details.iter().map(|(name, value)| (name.clone(), Value::String(value.to_string()))).collect();
    json!({
        "kind": c.kind.name(),
        "summary": c.summary,
        "details": details,
        "children": c.children.iter().map(certificate_json).collect::<Vec<_>>(),
    })
}

pub fn config_json(config: &ProofConfig) -> Value {
    let overrides: Map<String, Value> = config
        .forms
        .overrides()
        .map(|(c, v)| (c.name().to_string(), Value::String(v.to_string())))
        .collect();
    json!({
        "seed": config.seed,
        "trials": config.trials,
        "bound": config.bound,
        "cheng_yang": config.cheng_yang,
        "munzner": config.munzner,
        "include_middle_equation": config.jet.include_middle,
        "coefficient_overrides": overrides,
        "precision_bits": working_precision(),
    })
}

pub fn report_json(report: &Report, config: Value) -> Value {
    let steps: Vec<Value> = report
        .steps
        .iter()
        .map(|s| {
            json!({
                "id": s.id,
                "description": s.description,
                "status": s.status.name(),
                "residuals": s.residuals.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>(),
                "residual_labels": s.residuals.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>(),
                "certificate": s.certificate.as_ref().map_or(Value::Null, certificate_json),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "summary": report.summary.name(),
        "steps": steps,
        "config": config,
    })
}

pub fn to_json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn certificate_text(out: &mut String, c: &Certificate, depth: usize) {
    let pad = "  ".repeat(depth);
    let _ = writeln!(out, "{pad}certificate {}: {}", c.kind, c.summary);
    for (name, value) in &c.details {
        let _ = writeln!(out, "{pad}  {name} = {value}");
    }
    for child in &c.children {
        certificate_text(out, child, depth + 1);
    }
}

pub fn report_text(report: &Report) -> String {
    let mut out = String::new();
    for (n, step) in report.steps.iter().enumerate() {
        let _ = writeln!(out, "[{}] {}. {}: {}", step.status.name(), n + 1, step.id, step.description);
        for (name, value) in &step.residuals {
            let _ = writeln!(out, "    {name} = {value}");
        }
        if let Some(c) = &step.certificate {
            certificate_text(&mut out, c, 2);
        }
    }
    let _ = writeln!(out, "summary: {}", report.summary.name());
    out
}
