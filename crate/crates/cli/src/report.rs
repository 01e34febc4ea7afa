use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Provenance {
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub primes: Option<Vec<u64>>,
    pub elapsed_ms: f64,
}

impl Provenance {
    pub fn new() -> Self {
        Provenance {
            version: env!("CARGO_PKG_VERSION").to_string(),
            bound: None,
            seed: None,
            primes: None,
            elapsed_ms: 0.0,
        }
    }
}

impl Default for Provenance {
    fn default() -> Self {
        Self::new()
    }
}

/// Top-level output object. Text output is rendered from this same value.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub provenance: Provenance,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, scalar(&self.input).unwrap_or_default());
        render(&self.result, 1, &mut out);
        let p = &self.provenance;
        let mut prov = vec![format!("version {}", p.version)];
        if let Some(b) = p.bound {
            prov.push(format!("bound {b}"));
        }
        if let Some(s) = p.seed {
            prov.push(format!("seed {s}"));
        }
        if let Some(ps) = &p.primes {
            prov.push(format!("primes {ps:?}"));
        }
        prov.push(format!("{:.1} ms", p.elapsed_ms));
        out.push_str(&format!("  [{}]\n", prov.join(", ")));
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for line in s.lines() {
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                    }
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trips() {
        let r = Report {
            command: "classify".into(),
            input: json!("1,0,0,0,0,1"),
            result: json!({"acm": false, "degree": 2, "entries": [[0, 2, 4]]}),
            provenance: Provenance::new(),
        };
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let text = r.to_text();
        assert!(text.contains("acm: false") && text.contains("degree: 2") && text.contains("[0, 2, 4]"));
    }
}
