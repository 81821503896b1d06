use ndcert_core::certify::{Certificate, Status, Verdict};
use ndcert_core::numeric::{NumericError, ResidualReport, ScanConfig};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Rebuilds every object with keys in sorted order.
fn canonical(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, canonical(v));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonical).collect()),
        other => other,
    }
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&canonical(v)).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn certificate_document(kind: &str, cert: &Certificate, annotations: Option<Value>) -> String {
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "kind": kind,
        "inputs_digest": cert.inputs_digest,
        "certificate": serde_json::to_value(cert).expect("certificates serialize"),
    });
    if let Some(a) = annotations {
        doc["annotations"] = a;
    }
    render(doc)
}

pub fn scan_annotation(cfg: &ScanConfig, result: Result<ResidualReport, NumericError>) -> Value {
    let report = match result {
        Ok(r) => serde_json::to_value(r).expect("reports serialize"),
        Err(e) => json!({ "error": e.to_string() }),
    };
    json!({
        "scan": {
            "config": serde_json::to_value(cfg).expect("configs serialize"),
            "report": report,
        }
    })
}

pub fn scan_document(digest: &str, annotations: Value) -> String {
    render(json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "kind": "scan",
        "inputs_digest": digest,
        "annotations": annotations,
    }))
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::ResourceExhausted => "resource-exhausted",
    }
}

fn verdict_line(v: &Verdict) -> String {
    format!("  [{}] {}: {}\n", status_word(v.status), v.label, v.detail)
}

pub fn certificate_summary(kind: &str, cert: &Certificate) -> String {
    let conclusion = cert.conclusion.map_or("none", |c| c.as_str());
    let mut s = format!(
        "{kind}: {} (conclusion: {conclusion}, {} checks)\n",
        status_word(cert.status),
        cert.checks.len()
    );
    for v in cert.checks.iter().filter(|v| !v.is_pass()) {
        s.push_str(&verdict_line(v));
    }
    for v in &cert.audits {
        s.push_str(&verdict_line(v));
    }
    s
}

pub fn scan_summary(result: &Result<ResidualReport, NumericError>) -> String {
    match result {
        Ok(r) => format!(
            "scan: min residual {:e} over {} points ({} discarded), below tolerance: {}\n",
            r.min_residual, r.points_tested, r.discarded, r.below_tolerance
        ),
        Err(e) => format!("scan: {e}\n"),
    }
}
