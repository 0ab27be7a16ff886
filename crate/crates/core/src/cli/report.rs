use serde_json::Value;
use sha2::{Digest, Sha256};

use super::input::GroupSpecFile;

/// sha256 of the canonical form `degree;g1;g2;...` with images comma-separated.
pub fn group_hash(spec: &GroupSpecFile) -> String {
    let mut canon = spec.degree.to_string();
    for g in &spec.generators {
        canon.push(';');
        canon.push_str(&g.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    }
    hex::encode(Sha256::digest(canon.as_bytes()))
}

/// One `path: value` line per leaf of the report.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    walk(report, String::new(), &mut out);
    out
}

fn walk(v: &Value, path: String, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(x, p, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                walk(x, format!("{path}[{i}]"), out);
            }
        }
        Value::Array(xs) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", items.join(", ")));
        }
        _ => out.push_str(&format!("{path}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}
