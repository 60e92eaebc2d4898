//! Result values and their two renderings.
//!
//! Every command builds one JSON value. `structured` output prints it as
//! pretty JSON; `text` output flattens it to `path: value` lines, so both
//! formats always carry the same numbers.

use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Value};

use towercalc_core::{GradedRankTable, HomologyGroup, HomologySummary};

use crate::format::int_value;

pub fn uint_value(x: &BigUint) -> Value {
    int_value(&BigInt::from(x.clone()))
}

/// Builds a JSON object keeping insertion order.
#[derive(Default)]
pub struct Obj(Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Obj(Map::new())
    }

    pub fn with(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }

    pub fn build(self) -> Value {
        Value::Object(self.0)
    }
}

pub fn group_value(g: &HomologyGroup) -> Value {
    Obj::new()
        .with("group", g.to_string())
        .with("betti", g.betti as u64)
        .with("torsion", Value::Array(g.torsion.iter().map(int_value).collect()))
        .build()
}

pub fn summary_value(h: &HomologySummary) -> Value {
    let mut degrees = Map::new();
    for (d, g) in h.iter() {
        degrees.insert(d.to_string(), group_value(g));
    }
    Obj::new()
        .with("degrees", Value::Object(degrees))
        .with("euler_characteristic", h.euler_characteristic())
        .build()
}

/// Nonzero ranks of a table, with the range they were computed over.
pub fn table_value(t: &GradedRankTable) -> Value {
    let mut ranks = Map::new();
    for (q, r) in t.nonzero() {
        ranks.insert(q.to_string(), uint_value(r));
    }
    Obj::new()
        .with("q_min", t.q_min())
        .with("q_max", t.q_max())
        .with("ranks", Value::Object(ranks))
        .build()
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            if map.is_empty() && !prefix.is_empty() {
                out.push((prefix.to_string(), "{}".to_string()));
            }
            for (k, x) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&path, x, out);
            }
        }
        Value::Array(items) if !is_scalar(v) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar_text(v))),
    }
}

/// `path: value` pairs in output order.
pub fn flat_pairs(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten("", v, &mut out);
    out
}

pub fn render_text(v: &Value) -> String {
    if is_scalar(v) {
        return format!("{}\n", scalar_text(v));
    }
    let mut s = String::new();
    for (path, value) in flat_pairs(v) {
        s.push_str(&path);
        s.push_str(": ");
        s.push_str(&value);
        s.push('\n');
    }
    s
}
