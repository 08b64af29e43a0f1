//! The JSON document format for IFPS sets.
//!
//! ```json
//! {
//!   "universe": ["u1", "u2"],
//!   "parameters": ["x1", "x2"],
//!   "entries": {
//!     "x1": { "alpha": 0.7, "beta": 0.3, "support": ["u1"] }
//!   }
//! }
//! ```
//!
//! Parameters missing from `entries` read as `(0, 1)` with an empty support.
//! Unknown keys are rejected, and degrees may carry at most
//! [`MAX_DECIMALS`] decimal places.
//!
//! [`serialize_ifps`] produces the canonical form: identifiers sorted,
//! default entries omitted, degrees in their shortest round-trip decimal
//! form (computed degrees that would need more than [`MAX_DECIMALS`] places
//! are rounded to that many).

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::ifps::IfpsSet;

pub const MAX_DECIMALS: u32 = 9;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(deserialize_with = "entry_list")]
    entries: Vec<(String, RawEntry)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    alpha: Box<RawValue>,
    beta: Box<RawValue>,
    support: Vec<String>,
}

// Keeps duplicate keys visible instead of letting the last one win.
fn entry_list<'de, D>(deserializer: D) -> std::result::Result<Vec<(String, RawEntry)>, D::Error>
where
    D: Deserializer<'de>,
{
    struct EntryVisitor;

    impl<'de> Visitor<'de> for EntryVisitor {
        type Value = Vec<(String, RawEntry)>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an object mapping parameters to entries")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
            let mut out = Vec::new();
            while let Some((k, v)) = map.next_entry::<String, RawEntry>()? {
                out.push((k, v));
            }
            Ok(out)
        }
    }

    deserializer.deserialize_map(EntryVisitor)
}

fn from_json_error(err: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match err.classify() {
        Category::Data => Error::Schema(err.to_string()),
        _ => Error::Syntax { line: err.line(), column: err.column(), message: strip_position(&err) },
    }
}

fn strip_position(err: &serde_json::Error) -> String {
    let text = err.to_string();
    match text.rfind(" at line ") {
        Some(i) => text[..i].to_owned(),
        None => text,
    }
}

/// Number of decimal places of a JSON number literal, ignoring trailing
/// zeros of the fraction.
fn decimal_places(literal: &str) -> Option<u32> {
    let literal = literal.trim();
    let (mantissa, exponent) = match literal.find(['e', 'E']) {
        Some(i) => (&literal[..i], literal[i + 1..].parse::<i64>().ok()?),
        None => (literal, 0),
    };
    let fraction = mantissa.split_once('.').map_or("", |(_, f)| f).trim_end_matches('0');
    let places = fraction.len() as i64 - exponent;
    Some(places.clamp(0, i64::from(u32::MAX)) as u32)
}

fn degree_value(param: &str, field: &str, raw: &RawValue) -> Result<f64> {
    let text = raw.get();
    let value: f64 = match serde_json::from_str::<serde_json::Value>(text) {
        Ok(serde_json::Value::Number(n)) => {
            n.as_f64().ok_or_else(|| Error::Schema(format!("{param}.{field}: {text}")))?
        }
        _ => return Err(Error::Schema(format!("entries.{param}.{field} must be a number, found {text}"))),
    };
    let places = decimal_places(text).unwrap_or(u32::MAX);
    if places > MAX_DECIMALS {
        return Err(Error::Schema(format!(
            "entries.{param}.{field} = {text} has {places} decimal places (at most {MAX_DECIMALS} allowed)"
        )));
    }
    Ok(value)
}

/// Parses and validates a document.
pub fn parse_ifps(document: &str) -> Result<IfpsSet> {
    let raw: RawDocument = serde_json::from_str(document).map_err(from_json_error)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::with_capacity(raw.entries.len());
    for (param, entry) in raw.entries {
        if !seen.insert(param.clone()) {
            return Err(Error::Schema(format!("parameter `{param}` appears twice in entries")));
        }
        let alpha = degree_value(&param, "alpha", &entry.alpha)?;
        let beta = degree_value(&param, "beta", &entry.beta)?;
        entries.push((param, alpha, beta, entry.support));
    }
    IfpsSet::new(raw.universe, raw.parameters, entries)
}

#[derive(Serialize)]
struct OutDocument<'a> {
    universe: Vec<&'a str>,
    parameters: Vec<&'a str>,
    entries: BTreeMap<&'a str, OutEntry<'a>>,
}

#[derive(Serialize)]
struct OutEntry<'a> {
    alpha: f64,
    beta: f64,
    support: Vec<&'a str>,
}

/// Shortest round-trip form if it fits in [`MAX_DECIMALS`] places, else
/// the value rounded to that many places.
pub fn canonical_degree(value: f64) -> f64 {
    let shortest = serde_json::to_string(&value).unwrap_or_default();
    if decimal_places(&shortest).is_some_and(|p| p <= MAX_DECIMALS) {
        value
    } else {
        format!("{value:.prec$}", prec = MAX_DECIMALS as usize).parse().unwrap_or(value)
    }
}

fn document(set: &IfpsSet) -> OutDocument<'_> {
    OutDocument {
        universe: set.universe().iter().map(String::as_str).collect(),
        parameters: set.params().iter().map(String::as_str).collect(),
        entries: set
            .entries()
            .map(|(p, e)| {
                let out = OutEntry {
                    alpha: canonical_degree(e.degree.alpha()),
                    beta: canonical_degree(e.degree.beta()),
                    support: e.support.iter().map(String::as_str).collect(),
                };
                (p, out)
            })
            .collect(),
    }
}

/// Canonical pretty-printed document, newline-terminated.
pub fn serialize_ifps(set: &IfpsSet) -> String {
    let mut text = serde_json::to_string_pretty(&document(set)).expect("document serializes");
    text.push('\n');
    text
}

/// Canonical single-line document.
pub fn to_compact_json(set: &IfpsSet) -> String {
    serde_json::to_string(&document(set)).expect("document serializes")
}
