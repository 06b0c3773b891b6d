//! JSON map definitions.
//!
//! ```json
//! {"family": "gaussian", "alpha": "2.8", "beta": "-0.5"}
//! {"family": "pl", "breakpoints": ["0", "1/2", "1"], "values": ["0", "1", "0"]}
//! ```
//!
//! Reals may be given as JSON numbers or as decimal strings; strings are parsed exactly, which
//! matters for piecewise-linear tables.

use num_rational::BigRational;
use serde_json::Value;

use super::{
    make_bimodal_cubic, make_gaussian, make_pl4, make_pl5, make_tent, make_trimodal_quartic,
    MapModel,
};
use crate::decimal::{parse_rational, rational_from_f64, to_f64};
use crate::error::{Error, Result};

fn rational_field(v: &Value, what: &str) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            // Re-parse the literal text so that 0.325 stays 13/40.
            parse_rational(&n.to_string()).or_else(|_| rational_from_f64(n.as_f64().unwrap_or(f64::NAN)))
        }
        _ => Err(Error::MapFile(format!("{what}: expected a number or decimal string"))),
    }
}

fn real(obj: &serde_json::Map<String, Value>, key: &str) -> Result<f64> {
    let v = obj.get(key).ok_or_else(|| Error::MapFile(format!("missing field {key:?}")))?;
    Ok(to_f64(&rational_field(v, key)?))
}

fn rational_list(obj: &serde_json::Map<String, Value>, key: &str) -> Result<Vec<BigRational>> {
    match obj.get(key) {
        Some(Value::Array(items)) => items.iter().map(|v| rational_field(v, key)).collect(),
        _ => Err(Error::MapFile(format!("field {key:?} must be an array"))),
    }
}

/// Builds a map from a parsed JSON definition.
pub fn map_from_json(value: &Value) -> Result<MapModel> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::MapFile("top level must be an object".into()))?;
    let family = obj
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::MapFile("missing string field \"family\"".into()))?;
    match family {
        "gaussian" => make_gaussian(real(obj, "alpha")?, real(obj, "beta")?),
        "cubic2" => make_bimodal_cubic(real(obj, "v1")?, real(obj, "v2")?),
        "quartic3" => make_trimodal_quartic(real(obj, "v2")?, real(obj, "v3")?),
        "pl" => MapModel::piecewise_linear(
            rational_list(obj, "breakpoints")?,
            rational_list(obj, "values")?,
        ),
        "pl4" => Ok(make_pl4()),
        "pl5" => Ok(make_pl5()),
        "tent" => Ok(make_tent()),
        other => Err(Error::MapFile(format!("unknown family {other:?}"))),
    }
}

pub fn map_from_str(text: &str) -> Result<MapModel> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::MapFile(e.to_string()))?;
    map_from_json(&value)
}

pub fn map_from_file(path: &std::path::Path) -> Result<MapModel> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MapFile(format!("{}: {e}", path.display())))?;
    map_from_str(&text)
}
