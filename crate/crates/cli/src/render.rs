//! Output formatting. JSON is the interface; tables are for people.

use std::fmt::Write;

use serde_json::Value;

use split244::family::{FamilyPoint, PointOutcome};
use split244::verify::SuiteReport;

pub fn json(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("value serializes")
    } else {
        v.to_string()
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// `path: value` lines, one per leaf. Short arrays of scalars stay on one line.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.into(), format!("[{}]", items.join(", "))));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push((prefix.into(), scalar(other))),
    }
}

pub fn report(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<w$}  {x}")).collect::<Vec<_>>().join("\n")
}

pub fn verify(r: &SuiteReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "suite {} (seed {}, {} bits)", r.suite, r.seed, r.precision_bits);
    for c in &r.checks {
        let crit = c.criterion.map(|n| format!("#{n}")).unwrap_or_default();
        let tag = match (c.pass, c.hard) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "info",
        };
        let _ = writeln!(s, "{tag:<5}{crit:>4}  {}  {}", c.name, c.summary);
    }
    let _ = write!(s, "{}", if r.ok { "ok" } else { "hard failures present" });
    s
}

pub fn family(points: &[FamilyPoint]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>4}  {:>8}  {:>14}  {:>14}  {:>9}  {:>9}  {:>9}  {:>5}  status",
        "idx", "s2", "s4", "s3", "residual", "line", "d8", "j=j'"
    );
    for p in points {
        let s4 = match &p.s4 {
            split244::family::S4Value::Exact(r) => r.to_string(),
            split244::family::S4Value::Numeric(z) => format!("{:.6e}", z.re),
        };
        let s3 = format!("{:.6e}", p.s3.re);
        let _ = match &p.outcome {
            PointOutcome::Verified { residual, line_residual, d8_residual, j_equal, .. } => writeln!(
                s,
                "{:>4}  {:>8}  {s4:>14}  {s3:>14}  {residual:>9.1e}  {line_residual:>9.1e}  {d8_residual:>9.1e}  {:>5}  verified",
                p.index,
                p.s2.to_string(),
                if *j_equal { "yes" } else { "no" }
            ),
            PointOutcome::Dropout { reason } => writeln!(
                s,
                "{:>4}  {:>8}  {s4:>14}  {s3:>14}  {:>9}  {:>9}  {:>9}  {:>5}  dropout: {reason}",
                p.index,
                p.s2.to_string(),
                "-",
                "-",
                "-",
                "-"
            ),
        };
    }
    s
}
