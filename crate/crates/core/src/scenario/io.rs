//! CSV and JSON ingestion plus the canonical JSON writer.
//!
//! CSV layout: header `prob,x1,...,xd` with an optional trailing `label`
//! column, one scenario per row, `#` comment lines skipped.
//!
//! JSON layout: `{"dim": d, "scenarios": [{"prob": q, "x": [..], "label": ".."}]}`.

use std::io::Read;

use serde::Deserialize;

use super::ScenarioSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Json,
}

impl InputFormat {
    /// Picks the format from a file extension, falling back to sniffing the
    /// first non-blank byte of the content.
    pub fn detect(path: &str, content: &str) -> Self {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".json") {
            InputFormat::Json
        } else if lower.ends_with(".csv") {
            InputFormat::Csv
        } else if content.trim_start().starts_with('{') {
            InputFormat::Json
        } else {
            InputFormat::Csv
        }
    }
}

pub fn load_scenarios<T: Scalar, R: Read>(mut source: R, format: InputFormat) -> Result<ScenarioSet<T>> {
    let mut text = String::new();
    source.read_to_string(&mut text).map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
    load_scenarios_from_str(&text, format)
}

pub fn load_scenarios_from_str<T: Scalar>(text: &str, format: InputFormat) -> Result<ScenarioSet<T>> {
    match format {
        InputFormat::Csv => parse_csv(text),
        InputFormat::Json => parse_json(text),
    }
}

fn number<T: Scalar>(text: &str, line: usize, what: &str) -> Result<T> {
    T::parse_decimal(text).ok_or_else(|| Error::Parse { line, message: format!("invalid {what} '{text}'") })
}

fn parse_csv<T: Scalar>(text: &str) -> Result<ScenarioSet<T>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());

    let header = reader.headers().map_err(|e| Error::Parse { line: 1, message: e.to_string() })?.clone();
    if header.is_empty() || header.iter().all(str::is_empty) {
        return Err(Error::EmptyInput);
    }
    let columns: Vec<&str> = header.iter().collect();
    let has_label = columns.last() == Some(&"label");
    let value_columns = &columns[..columns.len() - usize::from(has_label)];
    if value_columns.first() != Some(&"prob") {
        return Err(Error::Parse { line: 1, message: "first column must be 'prob'".into() });
    }
    let dim = value_columns.len() - 1;
    if dim == 0 {
        return Err(Error::Parse { line: 1, message: "no outcome columns".into() });
    }
    for (i, name) in value_columns[1..].iter().enumerate() {
        if *name != format!("x{}", i + 1) {
            return Err(Error::Parse { line: 1, message: format!("expected column 'x{}', found '{name}'", i + 1) });
        }
    }
    let width = columns.len();

    let mut outcomes = Vec::new();
    let mut probs = Vec::new();
    let mut labels = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != width {
            // Width counts the label column; report it in outcome dimensions.
            let found = record.len().saturating_sub(1 + usize::from(has_label));
            return Err(Error::DimensionMismatch { expected: dim, found });
        }
        probs.push(number(&record[0], line, "probability")?);
        let x = (1..=dim).map(|i| number(&record[i], line, "outcome")).collect::<Result<Vec<T>>>()?;
        outcomes.push(x);
        if has_label {
            labels.push(record[width - 1].to_string());
        }
    }
    if outcomes.is_empty() {
        return Err(Error::EmptyInput);
    }
    ScenarioSet::new(outcomes, probs, has_label.then_some(labels))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    dim: usize,
    scenarios: Vec<JsonScenario>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonScenario {
    prob: serde_json::Number,
    x: Vec<serde_json::Number>,
    #[serde(default)]
    label: Option<String>,
}

fn parse_json<T: Scalar>(text: &str) -> Result<ScenarioSet<T>> {
    let doc: JsonDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    if doc.scenarios.is_empty() {
        return Err(Error::EmptyInput);
    }
    let any_label = doc.scenarios.iter().any(|s| s.label.is_some());
    let mut outcomes = Vec::with_capacity(doc.scenarios.len());
    let mut probs = Vec::with_capacity(doc.scenarios.len());
    let mut labels = Vec::new();
    for (s, scenario) in doc.scenarios.into_iter().enumerate() {
        if scenario.x.len() != doc.dim {
            return Err(Error::DimensionMismatch { expected: doc.dim, found: scenario.x.len() });
        }
        probs.push(number(&scenario.prob.to_string(), s, "probability")?);
        outcomes.push(scenario.x.iter().map(|v| number(&v.to_string(), s, "outcome")).collect::<Result<Vec<T>>>()?);
        if any_label {
            labels.push(scenario.label.unwrap_or_default());
        }
    }
    ScenarioSet::new(outcomes, probs, any_label.then_some(labels))
}

/// Canonical JSON document for a scenario set (keys in fixed order).
pub fn to_json<T: Scalar>(set: &ScenarioSet<T>) -> String {
    let mut out = format!("{{\"dim\":{},\"scenarios\":[", set.dim());
    for s in 0..set.len() {
        if s > 0 {
            out.push(',');
        }
        out.push_str("{\"prob\":");
        out.push_str(&set.probs()[s].to_decimal_text());
        out.push_str(",\"x\":[");
        let coords: Vec<String> = set.outcome(s).iter().map(Scalar::to_decimal_text).collect();
        out.push_str(&coords.join(","));
        out.push(']');
        if let Some(labels) = set.labels() {
            out.push_str(",\"label\":");
            out.push_str(&serde_json::to_string(&labels[s]).expect("strings serialize"));
        }
        out.push('}');
    }
    out.push_str("]}");
    out
}
