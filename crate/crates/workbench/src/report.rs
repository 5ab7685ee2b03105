//! Report files. The canonical body holds verdicts only, with sorted keys
//! and sorted checks; timing lives in a separate section.

use std::path::Path;
use std::time::Duration;

use serde_json::{json, Map, Value};
use workbench_core::CheckReport;

use crate::error::RunError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Sort order of reports inside a body.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
}

fn params_json(r: &CheckReport) -> Value {
    Value::Object(r.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>())
}

pub fn report_json(r: &CheckReport) -> Value {
    let witness = match &r.witness {
        Some(w) => json!({"row": w.row, "col": w.col, "lhs": w.lhs, "rhs": w.rhs}),
        None => Value::Null,
    };
    json!({"name": r.name, "params": params_json(r), "passed": r.passed, "witness": witness})
}

/// The comparable part of a report. Reports must already be sorted.
pub fn body(reports: &[CheckReport]) -> Value {
    let passed = reports.iter().filter(|r| r.passed).count();
    json!({
        "checks": reports.iter().map(report_json).collect::<Vec<_>>(),
        "summary": {"total": reports.len(), "passed": passed, "failed": reports.len() - passed},
        "version": VERSION,
    })
}

pub fn canonical_body(reports: &[CheckReport]) -> String {
    serde_json::to_string(&body(reports)).expect("body serializes")
}

fn ms(d: Option<Duration>) -> Value {
    d.map_or(Value::Null, |d| json!(d.as_secs_f64() * 1000.0))
}

pub fn timing(reports: &[CheckReport], total: Duration) -> Value {
    let checks: Vec<Value> = reports
        .iter()
        .map(|r| json!({"name": r.name, "params": params_json(r), "elapsed_ms": ms(r.elapsed)}))
        .collect();
    json!({"checks": checks, "total_ms": ms(Some(total))})
}

/// `{"body": ..., "timing": ...}`, pretty-printed.
pub fn document(reports: &[CheckReport], total: Duration) -> String {
    let doc = json!({"body": body(reports), "timing": timing(reports, total)});
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn write_report(path: &Path, reports: &[CheckReport], total: Duration) -> Result<(), RunError> {
    std::fs::write(path, document(reports, total))
        .map_err(|source| RunError::Write { path: path.to_path_buf(), source })
}

/// One line per report for the terminal.
pub fn summary_lines(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&r.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use workbench_core::verify::Params;
    use workbench_core::Witness;

    fn sample() -> Vec<CheckReport> {
        let w = Witness { row: vec![1, 2], col: vec![2, 1], lhs: "u - v".into(), rhs: "0".into() };
        let mut a = CheckReport::new("ybe", Params::new().with("n", 3), None);
        a.elapsed = Some(Duration::from_millis(7));
        vec![a, CheckReport::new("re", Params::new().with("n", 2).with("g", "identity"), Some(w))]
    }

    #[test]
    fn body_is_sorted_and_timing_free() {
        let mut reps = sample();
        sort_reports(&mut reps);
        let s = canonical_body(&reps);
        assert!(s.find("\"re\"").unwrap() < s.find("\"ybe\"").unwrap());
        assert!(!s.contains("elapsed"));
        assert!(
            s.starts_with("{\"checks\":[{\"name\":\"re\",\"params\":{\"g\":\"identity\",\"n\":\"2\"},\"passed\":false")
        );
        assert!(s.contains("\"summary\":{\"failed\":1,\"passed\":1,\"total\":2}"));
    }

    #[test]
    fn empty_suite_is_valid() {
        let v: Value = serde_json::from_str(&document(&[], Duration::ZERO)).unwrap();
        assert_eq!(v["body"]["checks"], json!([]));
        assert_eq!(v["body"]["summary"]["total"], json!(0));
    }
}
