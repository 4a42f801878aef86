//! JSON envelope shared by every subcommand.
//!
//! Top-level keys, in order: `schema_version`, `command`, `inputs`,
//! `parameters`, `result`, `diagnostics`. Floats carry 17 significant digits.

use std::str::FromStr;

use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// `x` as a JSON number with 17 significant digits.
pub fn num(x: f64) -> Value {
    let text = format!("{x:.16e}");
    Value::Number(Number::from_str(&text).expect("formatted float is a valid JSON number"))
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn envelope(command: &str, inputs: Value, parameters: Value, result: Value, warnings: &[String]) -> Value {
    let mut top = Map::new();
    top.insert("schema_version".into(), SCHEMA_VERSION.into());
    top.insert("command".into(), command.into());
    top.insert("inputs".into(), inputs);
    top.insert("parameters".into(), parameters);
    top.insert("result".into(), result);
    let mut diag = Map::new();
    diag.insert("warnings".into(), warnings.iter().cloned().map(Value::from).collect());
    top.insert("diagnostics".into(), Value::Object(diag));
    Value::Object(top)
}
