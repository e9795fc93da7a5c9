//! Command reports: structured results plus the identities checked.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Identity {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: Option<String>,
    pub results: Value,
    pub identities: Vec<Identity>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, scenario: Option<String>) -> Self {
        Report {
            command: command.into(),
            scenario,
            results: Value::Object(Default::default()),
            identities: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Sets `results[key]`.
    pub fn put(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.results
            .as_object_mut()
            .expect("results is an object")
            .insert(key.to_string(), v);
    }

    pub fn check(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.identities.push(Identity {
            name: name.into(),
            holds,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|i| i.holds)
    }

    /// Pretty JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value prints")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "$ {}", self.command).unwrap();
        if let Some(s) = &self.scenario {
            writeln!(out, "scenario: {s}").unwrap();
        }
        writeln!(out).unwrap();
        render(&mut out, &self.results, 0);
        if !self.notes.is_empty() {
            writeln!(out).unwrap();
            for n in &self.notes {
                writeln!(out, "note: {n}").unwrap();
            }
        }
        if !self.identities.is_empty() {
            writeln!(out, "\nidentities:").unwrap();
            for i in &self.identities {
                let tag = if i.holds { "PASS" } else { "FAIL" };
                if i.detail.is_empty() {
                    writeln!(out, "  [{tag}] {}", i.name).unwrap();
                } else {
                    writeln!(out, "  [{tag}] {}: {}", i.name, i.detail).unwrap();
                }
            }
        }
        out
    }
}

/// Width below which an array of scalars is printed on one line.
const INLINE_WIDTH: usize = 60;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let line = format!(
                "[{}]",
                items.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")
            );
            (line.len() <= INLINE_WIDTH).then_some(line)
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        render(out, x, indent + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}
