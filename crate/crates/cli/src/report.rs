use std::fmt::Write as _;
use std::time::Duration;

use lie_cohomology::LieAlgebra;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraDescriptor {
    pub spec: String,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

impl AlgebraDescriptor {
    pub fn new(spec: &str, g: &LieAlgebra) -> Self {
        Self { spec: spec.to_string(), name: g.name().to_string(), dim: g.dim(), basis: g.labels().to_vec() }
    }
}

/// Output of one command. Rationals inside `payload` are strings; counts are
/// integers. `elapsed_seconds` is the only field that varies between runs.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub algebra: Option<AlgebraDescriptor>,
    pub payload: Value,
    pub elapsed_seconds: String,
}

impl Report {
    pub fn new(command: String, algebra: Option<AlgebraDescriptor>, payload: Value, elapsed: Duration) -> Self {
        Self { command, algebra, payload, elapsed_seconds: format!("{:.3}", elapsed.as_secs_f64()) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering of the same payload.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if let Some(a) = &self.algebra {
            writeln!(out, "algebra: {} = {} (dim {}; basis {})", a.spec, a.name, a.dim, a.basis.join(" ")).unwrap();
        }
        render(&mut out, &self.payload, 0);
        writeln!(out, "elapsed: {}s", self.elapsed_seconds).unwrap();
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, val) in map {
                let inline = match val {
                    Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
                        Some(items.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
                    }
                    _ => scalar(val),
                };
                match inline {
                    Some(s) => writeln!(out, "{pad}{k:<width$}  {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render(out, val, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) if items.iter().all(|i| i.is_object()) && !items.is_empty() => {
            render_rows(out, items, indent);
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        render(out, item, indent + 2);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

fn render_rows(out: &mut String, rows: &[Value], indent: usize) {
    let pad = " ".repeat(indent);
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().unwrap().keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let obj = r.as_object().unwrap();
            columns
                .iter()
                .map(|c| obj.get(c).map_or("-".to_string(), |v| scalar(v).unwrap_or_else(|| v.to_string())))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|row| row[i].chars().count()).chain([c.len()]).max().unwrap())
        .collect();
    let line = |items: &[String]| {
        let parts: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        format!("{pad}{}", parts.join("  ").trim_end())
    };
    writeln!(out, "{}", line(&columns)).unwrap();
    for row in &cells {
        writeln!(out, "{}", line(row)).unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_contains_payload_numbers() {
        let r = Report::new(
            "liecohom x".into(),
            None,
            json!({"dim": 7, "rows": [{"a": 1, "b": "1/2"}, {"a": 22, "b": "x"}]}),
            Duration::from_millis(5),
        );
        let t = r.to_table();
        assert!(t.contains("dim   7"));
        assert!(t.contains("a   b"));
        assert!(t.contains("22  x"));
        assert!(r.to_json().contains("\"elapsed_seconds\": \"0.005\""));
    }
}
