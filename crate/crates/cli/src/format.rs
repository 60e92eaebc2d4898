//! JSON file format for chain complexes and chain maps.
//!
//! A complex is an object with two keys:
//!
//! ```text
//! {
//!   "ranks": { "<degree>": <count>, ... },
//!   "boundaries": { "<degree>": [[<int>, ...], ...], ... }
//! }
//! ```
//!
//! `boundaries["d"]` is the row-major matrix of `d: C_d -> C_{d-1}`, with
//! `rank(d-1)` rows and `rank(d)` columns. Degrees missing from `ranks`
//! have rank 0 and missing boundaries are zero. A chain map is
//!
//! ```text
//! { "source": <complex>, "target": <complex>, "components": { "<degree>": <matrix> } }
//! ```
//!
//! with `components["d"]` of shape `target.rank(d) x source.rank(d)`.
//! Integers have arbitrary size. Serialization is canonical: degrees in
//! increasing order, every degree of the range listed in `ranks`, only
//! nonzero matrices listed.

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use towercalc_core::{ChainComplex, ChainError, ChainMap, IntMatrix};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{field}: {source}")]
    Chain { field: String, source: ChainError },
}

impl InputError {
    pub fn code(&self) -> &'static str {
        match self {
            InputError::Json(_) => "MALFORMED_INPUT",
            InputError::Field { .. } => "MALFORMED_INPUT",
            InputError::Chain { source, .. } => source.code(),
        }
    }

    fn field(field: &str, message: impl Into<String>) -> Self {
        InputError::Field {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

pub fn int_value(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

fn parse_int(v: &Value, field: &str) -> Result<BigInt, InputError> {
    let Value::Number(n) = v else {
        return Err(InputError::field(field, "expected an integer"));
    };
    n.to_string()
        .parse::<BigInt>()
        .map_err(|_| InputError::field(field, format!("{n} is not an integer")))
}

fn parse_degree(key: &str, field: &str) -> Result<i64, InputError> {
    key.parse::<i64>()
        .map_err(|_| InputError::field(field, format!("degree key {key:?} is not an integer")))
}

fn as_object<'a>(v: &'a Value, field: &str) -> Result<&'a Map<String, Value>, InputError> {
    v.as_object()
        .ok_or_else(|| InputError::field(field, "expected an object"))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], field: &str) -> Result<(), InputError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(InputError::field(field, format!("unknown key {k:?}"))),
        None => Ok(()),
    }
}

fn degree_map(v: Option<&Value>, field: &str) -> Result<Vec<(i64, Value)>, InputError> {
    let Some(v) = v else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for (k, x) in as_object(v, field)? {
        out.push((parse_degree(k, field)?, x.clone()));
    }
    Ok(out)
}

fn parse_matrix(v: &Value, rows: usize, cols: usize, field: &str) -> Result<IntMatrix, InputError> {
    let list = v
        .as_array()
        .ok_or_else(|| InputError::field(field, "expected an array of rows"))?;
    if list.len() != rows {
        return Err(InputError::field(
            field,
            format!("has {} rows, expected {rows}", list.len()),
        ));
    }
    let mut m = IntMatrix::zeros(rows, cols);
    for (i, row) in list.iter().enumerate() {
        let row_field = format!("{field}[{i}]");
        let row = row
            .as_array()
            .ok_or_else(|| InputError::field(&row_field, "expected an array of integers"))?;
        if row.len() != cols {
            return Err(InputError::field(
                &row_field,
                format!("has {} entries, expected {cols}", row.len()),
            ));
        }
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = parse_int(x, &format!("{row_field}[{j}]"))?;
        }
    }
    Ok(m)
}

fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| int_value(&m[(i, j)])).collect()))
            .collect(),
    )
}

pub fn complex_from_value(v: &Value, field: &str) -> Result<ChainComplex, InputError> {
    let obj = as_object(v, field)?;
    check_keys(obj, &["ranks", "boundaries"], field)?;
    let ranks_field = format!("{field}.ranks");
    let rank_entries = degree_map(
        Some(obj.get("ranks").ok_or_else(|| InputError::field(field, "missing \"ranks\""))?),
        &ranks_field,
    )?;
    let mut ranks_by_degree = std::collections::BTreeMap::new();
    for (d, x) in rank_entries {
        let r = x
            .as_u64()
            .and_then(|r| usize::try_from(r).ok())
            .ok_or_else(|| InputError::field(&format!("{ranks_field}.{d}"), "expected a nonnegative integer"))?;
        ranks_by_degree.insert(d, r);
    }
    let (lo, hi) = match (ranks_by_degree.keys().next(), ranks_by_degree.keys().next_back()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (0, -1),
    };
    let rank = |d: i64| ranks_by_degree.get(&d).copied().unwrap_or(0);
    let ranks: Vec<usize> = (lo..=hi).map(rank).collect();
    let bfield = format!("{field}.boundaries");
    let mut boundaries = Vec::new();
    for (d, x) in degree_map(obj.get("boundaries"), &bfield)? {
        let f = format!("{bfield}.{d}");
        if d <= lo || d > hi {
            return Err(InputError::field(&f, format!("degree {d} is outside {}..={hi}", lo + 1)));
        }
        boundaries.push((d, parse_matrix(&x, rank(d - 1), rank(d), &f)?));
    }
    if hi < lo {
        return Ok(ChainComplex::zero());
    }
    ChainComplex::new(lo, ranks, boundaries).map_err(|source| InputError::Chain {
        field: field.to_string(),
        source,
    })
}

pub fn complex_to_value(c: &ChainComplex) -> Value {
    let mut ranks = Map::new();
    let mut boundaries = Map::new();
    for d in c.degrees() {
        ranks.insert(d.to_string(), Value::from(c.rank(d) as u64));
        let b = c.boundary(d);
        if !b.is_zero() {
            boundaries.insert(d.to_string(), matrix_value(&b));
        }
    }
    let mut obj = Map::new();
    obj.insert("ranks".into(), Value::Object(ranks));
    obj.insert("boundaries".into(), Value::Object(boundaries));
    Value::Object(obj)
}

pub fn map_from_value(v: &Value, field: &str) -> Result<ChainMap, InputError> {
    let obj = as_object(v, field)?;
    check_keys(obj, &["source", "target", "components"], field)?;
    let get = |key: &str| {
        obj.get(key)
            .ok_or_else(|| InputError::field(field, format!("missing {key:?}")))
    };
    let source = complex_from_value(get("source")?, &format!("{field}.source"))?;
    let target = complex_from_value(get("target")?, &format!("{field}.target"))?;
    let cfield = format!("{field}.components");
    let mut components = Vec::new();
    for (d, x) in degree_map(obj.get("components"), &cfield)? {
        let f = format!("{cfield}.{d}");
        components.push((d, parse_matrix(&x, target.rank(d), source.rank(d), &f)?));
    }
    ChainMap::new(source, target, components).map_err(|source| InputError::Chain {
        field: field.to_string(),
        source,
    })
}

pub fn map_to_value(f: &ChainMap) -> Value {
    let mut components = Map::new();
    for d in f.source().degrees() {
        let m = f.component(d);
        if !m.is_zero() {
            components.insert(d.to_string(), matrix_value(&m));
        }
    }
    let mut obj = Map::new();
    obj.insert("source".into(), complex_to_value(f.source()));
    obj.insert("target".into(), complex_to_value(f.target()));
    obj.insert("components".into(), Value::Object(components));
    Value::Object(obj)
}

pub fn parse_complex(text: &str) -> Result<ChainComplex, InputError> {
    complex_from_value(&serde_json::from_str(text)?, "complex")
}

pub fn parse_map(text: &str) -> Result<ChainMap, InputError> {
    map_from_value(&serde_json::from_str(text)?, "map")
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use towercalc_core::models::{cylinder_pair, projective_plane};

    #[test]
    fn complex_round_trip() {
        let c = projective_plane();
        let text = to_text(&complex_to_value(&c));
        let back = parse_complex(&text).unwrap();
        assert!(back.same_as(&c));
        assert_eq!(to_text(&complex_to_value(&back)), text);
    }

    #[test]
    fn map_round_trip() {
        let f = cylinder_pair().inclusion;
        let text = to_text(&map_to_value(&f));
        let back = parse_map(&text).unwrap();
        assert_eq!(to_text(&map_to_value(&back)), text);
    }

    #[test]
    fn big_entries_survive() {
        let text = r#"{"ranks": {"1": 1, "2": 1}, "boundaries": {"2": [[123456789012345678901234567890]]}}"#;
        let c = parse_complex(text).unwrap();
        assert_eq!(
            c.boundary(2)[(0, 0)],
            "123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
        assert!(to_text(&complex_to_value(&c)).contains("123456789012345678901234567890"));
    }

    #[test]
    fn errors_name_the_field() {
        let e = parse_complex(r#"{"ranks": {"0": 1, "1": 2}, "boundaries": {"1": [[1]]}}"#).unwrap_err();
        assert_eq!(e.to_string(), "complex.boundaries.1[0]: has 1 entries, expected 2");
        let e = parse_complex(r#"{"ranks": {"0": -1}}"#).unwrap_err();
        assert!(e.to_string().starts_with("complex.ranks.0"));
        let e = parse_complex(r#"{"ranks": {}, "extra": 1}"#).unwrap_err();
        assert!(e.to_string().contains("extra"));
        let e = parse_complex(r#"{"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [[1.5]]}}"#)
            .unwrap_err();
        assert!(e.to_string().starts_with("complex.boundaries.1[0][0]"));
        let e = parse_complex(
            r#"{"ranks": {"0": 1, "1": 1, "2": 1}, "boundaries": {"1": [[1]], "2": [[1]]}}"#,
        )
        .unwrap_err();
        assert_eq!(e.code(), "BOUNDARY_SQUARE_NONZERO");
    }

    #[test]
    fn empty_complex() {
        let c = parse_complex(r#"{"ranks": {}}"#).unwrap();
        assert_eq!(c.total_rank(), 0);
    }
}
