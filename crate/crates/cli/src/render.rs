use std::fmt::Write as _;

use serde_json::Value;

use crate::RunReport;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    match v {
        Value::Array(items) if !items.is_empty() && items.iter().all(|x| scalar(x).is_some()) => {
            let row: Vec<String> = items.iter().filter_map(scalar).collect();
            let _ = writeln!(out, "{path}\t{}", row.join("\t"));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), x, out);
            }
        }
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(&p, x, out);
            }
        }
        other => {
            let _ = writeln!(out, "{path}\t{}", scalar(other).unwrap_or_default());
        }
    }
}

/// One `path<TAB>value...` line per leaf; arrays of scalars share a line.
pub fn tsv(payload: &Value) -> String {
    let mut out = String::new();
    flatten("", payload, &mut out);
    out
}

fn indent(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None if is_flat_array(x) => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(x));
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        indent(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None if is_flat_array(x) => {
                        let _ = writeln!(out, "{pad}- {}", inline(x));
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        indent(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

fn is_flat_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| scalar(x).is_some()))
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        ),
        other => scalar(other).unwrap_or_default(),
    }
}

pub fn pretty(report: &RunReport) -> String {
    let mut out = format!("{}: {:?}", report.command, report.status).to_lowercase();
    if let Some(k) = report.k_max {
        let _ = write!(out, " (k_max = {k})");
    }
    out.push('\n');
    indent(&report.payload, 1, &mut out);
    out
}
