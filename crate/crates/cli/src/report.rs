use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::exit;

pub const SCHEMA: &str = "hb-fiber/1";

/// Where a reported number comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Closed formula in the syzygy degrees.
    Formula,
    /// Independent Gröbner computation.
    Oracle,
    /// Random-fiber count; never used for pass/fail.
    Heuristic,
    /// Direct output of the resolution step.
    Computed,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Formula => "formula",
            Provenance::Oracle => "oracle",
            Provenance::Heuristic => "heuristic",
            Provenance::Computed => "computed",
        }
    }
}

pub fn claim(value: Value, provenance: Provenance) -> Value {
    json!({ "value": value, "provenance": provenance.as_str() })
}

/// Small integers as numbers, large ones as decimal strings.
pub fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// What a command hands back for the report.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub hypotheses: Value,
    pub results: Map<String, Value>,
    pub warnings: Vec<String>,
    pub text: Vec<String>,
    pub exit_code: i32,
    /// `(code, message)` for failures that still produce results.
    pub failure: Option<(String, String)>,
}

impl Default for Outcome {
    fn default() -> Self {
        Outcome {
            hypotheses: Value::Null,
            results: Map::new(),
            warnings: Vec::new(),
            text: Vec::new(),
            exit_code: exit::OK,
            failure: None,
        }
    }
}

impl Outcome {
    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn warn(&mut self, s: impl Into<String>) {
        let s = s.into();
        self.text.push(format!("warning: {s}"));
        self.warnings.push(s);
    }

    pub fn fail(&mut self, exit_code: i32, code: &str, message: impl Into<String>) {
        let message = message.into();
        self.text.push(format!("error [{code}]: {message}"));
        if self.exit_code == exit::OK || exit_code > self.exit_code {
            self.exit_code = exit_code;
        }
        if self.failure.is_none() {
            self.failure = Some((code.to_string(), message));
        }
    }
}

pub fn status(exit_code: i32) -> &'static str {
    match exit_code {
        exit::OK => "ok",
        exit::HYPOTHESIS => "hypothesis-failure",
        exit::DISAGREEMENT => "disagreement",
        exit::ANOMALY => "anomaly",
        _ => "error",
    }
}
