//! JSON documents for action specs and projected descriptors.
//!
//! ```json
//! {
//!   "symbol": "(0,o1|(3,1),(3,1))",
//!   "group": "cyclic:4",
//!   "theta1": ["0", "1/4", "1/2", "3/4"],
//!   "alpha": [1, 1, 1, 1],
//!   "beta": [[1, 2], [2, 1], [1, 2], [2, 1]],
//!   "theta2": [["0", "0", "0", "0"], ["0", "0", "0", "0"]]
//! }
//! ```
//!
//! `group` is a constructor string (`cyclic:n`, `product:A,B`), a path to a
//! table file relative to the document, or `{"order": m, "table": [[...]]}`.
//! Fractions are strings `"a/b"` or integers; decimals are rejected.
//! Descriptors use `base`, `epsilon`, `beta_bar` (signed 1-based images, a
//! negative entry marking a sheet flip) and `theta2_bar`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::action::{
    ExtendedProductActionSpec, Permutation, ProjectedActionDescriptor, RotationNumber, Sign,
    SignedPermutation,
};
use crate::group::{FiniteGroup, GroupError};
use crate::symbol::SeifertSymbol;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field(name: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Field {
        field: name.into(),
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    symbol: String,
    group: Value,
    theta1: Vec<Value>,
    alpha: Vec<i64>,
    beta: Vec<Vec<usize>>,
    theta2: Vec<Vec<Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    base: String,
    group: Value,
    epsilon: Vec<i64>,
    beta_bar: Vec<Vec<i64>>,
    theta2_bar: Vec<Vec<Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    order: usize,
    table: Vec<Vec<usize>>,
}

/// Reads a group from a constructor string or a table file path.
pub fn load_group(arg: &str) -> Result<FiniteGroup, FormatError> {
    if arg.starts_with("cyclic:") || arg.starts_with("product:") {
        return FiniteGroup::from_constructor(arg).map_err(|e| field("group", e));
    }
    FiniteGroup::parse_table(&read(Path::new(arg))?).map_err(|e| field("group", e))
}

fn group_from(value: &Value, dir: &Path) -> Result<FiniteGroup, FormatError> {
    let group_err = |e: GroupError| field("group", e);
    match value {
        Value::String(s) if s.starts_with("cyclic:") || s.starts_with("product:") => {
            FiniteGroup::from_constructor(s).map_err(group_err)
        }
        Value::String(s) => FiniteGroup::parse_table(&read(&dir.join(s))?).map_err(group_err),
        Value::Object(_) => {
            let raw: RawTable =
                serde_json::from_value(value.clone()).map_err(|e| field("group", e))?;
            if raw.table.len() != raw.order {
                return Err(field(
                    "group",
                    format!("order {} but table has {} rows", raw.order, raw.table.len()),
                ));
            }
            FiniteGroup::from_table(raw.table).map_err(group_err)
        }
        _ => Err(field("group", "expected a constructor string, file path, or {order, table}")),
    }
}

fn group_to(group: &FiniteGroup) -> Value {
    match group.label() {
        Some(label) => json!(label),
        None => json!({ "order": group.order(), "table": group.table() }),
    }
}

fn fraction(value: &Value, name: &str) -> Result<RotationNumber, FormatError> {
    match value {
        Value::String(s) => s.parse().map_err(|e| field(name, e)),
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(RotationNumber::new(k, 1)),
            None => Err(field(
                name,
                format!("decimal '{n}' not allowed; write an exact fraction such as 1/2"),
            )),
        },
        other => Err(field(name, format!("expected a fraction string, found {other}"))),
    }
}

fn fractions(values: &[Value], name: &str) -> Result<Vec<RotationNumber>, FormatError> {
    values
        .iter()
        .enumerate()
        .map(|(k, v)| fraction(v, &format!("{name}[{k}]")))
        .collect()
}

fn fraction_rows(rows: &[Vec<Value>], name: &str) -> Result<Vec<Vec<RotationNumber>>, FormatError> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| fractions(row, &format!("{name}[{i}]")))
        .collect()
}

fn signs(values: &[i64], name: &str) -> Result<Vec<Sign>, FormatError> {
    values
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            Sign::from_i64(v).ok_or_else(|| field(format!("{name}[{k}]"), format!("{v} is not +1 or -1")))
        })
        .collect()
}

fn symbol(text: &str, name: &str) -> Result<SeifertSymbol, FormatError> {
    text.parse().map_err(|e| field(name, e))
}

fn strings(values: &[RotationNumber]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

/// Parses an action spec; `dir` resolves relative group-table paths.
/// Table sizes are checked, the action laws are not.
pub fn parse_action_spec(text: &str, dir: &Path) -> Result<ExtendedProductActionSpec, FormatError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| FormatError::Malformed(e.to_string()))?;
    let beta = raw
        .beta
        .iter()
        .enumerate()
        .map(|(g, images)| {
            let zero_based = images
                .iter()
                .map(|&k| k.checked_sub(1))
                .collect::<Option<Vec<_>>>();
            zero_based
                .and_then(Permutation::from_images)
                .ok_or_else(|| field(format!("beta[{g}]"), "not a permutation of 1..n"))
        })
        .collect::<Result<_, _>>()?;
    let spec = ExtendedProductActionSpec {
        symbol: symbol(&raw.symbol, "symbol")?,
        group: group_from(&raw.group, dir)?,
        theta1: fractions(&raw.theta1, "theta1")?,
        alpha: signs(&raw.alpha, "alpha")?,
        beta,
        theta2: fraction_rows(&raw.theta2, "theta2")?,
    };
    spec.check_shape().map_err(|e| match e {
        crate::action::ActionError::Shape { field: f, message } => field(f, message),
        other => FormatError::Malformed(other.to_string()),
    })?;
    Ok(spec)
}

pub fn load_action_spec(path: &Path) -> Result<ExtendedProductActionSpec, FormatError> {
    parse_action_spec(&read(path)?, path.parent().unwrap_or(Path::new(".")))
}

/// One field per line, in document order, each value written compactly.
fn document(fields: &[(&str, Value)]) -> String {
    let body: Vec<String> = fields
        .iter()
        .map(|(key, value)| format!("  {}: {}", json!(key), value))
        .collect();
    format!("{{\n{}\n}}", body.join(",\n"))
}

pub fn action_spec_to_json(spec: &ExtendedProductActionSpec) -> String {
    let beta: Vec<Vec<usize>> = spec
        .beta
        .iter()
        .map(|p| p.images().iter().map(|&i| i + 1).collect())
        .collect();
    document(&[
        ("symbol", json!(spec.symbol.to_string())),
        ("group", group_to(&spec.group)),
        ("theta1", json!(strings(&spec.theta1))),
        ("alpha", json!(spec.alpha.iter().map(|a| a.as_i64()).collect::<Vec<_>>())),
        ("beta", json!(beta)),
        ("theta2", json!(spec.theta2.iter().map(|row| strings(row)).collect::<Vec<_>>())),
    ])
}

pub fn parse_descriptor(text: &str, dir: &Path) -> Result<ProjectedActionDescriptor, FormatError> {
    let raw: RawDescriptor =
        serde_json::from_str(text).map_err(|e| FormatError::Malformed(e.to_string()))?;
    let beta_bar = raw
        .beta_bar
        .iter()
        .enumerate()
        .map(|(g, images)| {
            SignedPermutation::from_signed(images)
                .ok_or_else(|| field(format!("beta_bar[{g}]"), "not a signed permutation of 1..n"))
        })
        .collect::<Result<_, _>>()?;
    let d = ProjectedActionDescriptor {
        base: symbol(&raw.base, "base")?,
        group: group_from(&raw.group, dir)?,
        epsilon: signs(&raw.epsilon, "epsilon")?,
        beta_bar,
        theta2_bar: fraction_rows(&raw.theta2_bar, "theta2_bar")?,
    };
    d.check_shape().map_err(|e| match e {
        crate::action::ActionError::Shape { field: f, message } => field(f, message),
        other => field("base", other),
    })?;
    Ok(d)
}

pub fn load_descriptor(path: &Path) -> Result<ProjectedActionDescriptor, FormatError> {
    parse_descriptor(&read(path)?, path.parent().unwrap_or(Path::new(".")))
}

pub fn descriptor_to_json(d: &ProjectedActionDescriptor) -> String {
    document(&[
        ("base", json!(d.base.to_string())),
        ("group", group_to(&d.group)),
        ("epsilon", json!(d.epsilon.iter().map(|a| a.as_i64()).collect::<Vec<_>>())),
        ("beta_bar", json!(d.beta_bar.iter().map(SignedPermutation::to_signed).collect::<Vec<_>>())),
        ("theta2_bar", json!(d.theta2_bar.iter().map(|row| strings(row)).collect::<Vec<_>>())),
    ])
}
