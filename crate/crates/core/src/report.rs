//! Machine-readable command reports.
//!
//! A report is one JSON object:
//!
//! ```json
//! {
//!   "command": "latin",
//!   "inputs": { "n": 4, "mode": "solve", "seed": 0 },
//!   "verdicts": [
//!     { "name": "transversal_condition", "value": "fails" },
//!     { "name": "event_probability", "value": "1/12" }
//!   ],
//!   "certificate": [2, 1, 4, 3],
//!   "stats": { "restarts": 1, "steps": 3 }
//! }
//! ```
//!
//! Rationals are strings `"p/q"` in lowest terms; three-valued verdicts are
//! `"holds"`, `"fails"` or `"indeterminate"`; indices are 1-based. With
//! decimal output enabled a rational verdict also carries `"approx"`, a
//! floating-point rendering that is not exact. `certificate` is omitted when
//! there is no witness.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::lll::TriState;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
    pub stats: Map<String, Value>,
    #[serde(skip)]
    decimals: bool,
}

impl Report {
    pub fn new(command: &str, decimals: bool) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            verdicts: Vec::new(),
            certificate: None,
            stats: Map::new(),
            decimals,
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(name.to_string(), value.into());
        self
    }

    pub fn stat(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.stats.insert(name.to_string(), value.into());
        self
    }

    pub fn verdict(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            value: value.into(),
            approx: None,
        });
        self
    }

    pub fn rational(&mut self, name: &str, value: &Rational) -> &mut Self {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            value: Value::String(rational::render(value)),
            approx: self.decimals.then(|| rational::to_f64(value)),
        });
        self
    }

    pub fn rationals(&mut self, name: &str, values: &[Rational]) -> &mut Self {
        let rendered: Vec<Value> = values
            .iter()
            .map(|v| Value::String(rational::render(v)))
            .collect();
        self.verdict(name, rendered)
    }

    pub fn tri(&mut self, name: &str, value: TriState) -> &mut Self {
        self.verdict(name, value.as_str())
    }

    /// Records a 0-based witness as 1-based.
    pub fn certificate(&mut self, witness: &[usize]) -> &mut Self {
        self.certificate = Some(one_based(witness));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.verdicts
            .iter()
            .find(|v| v.name == name)
            .map(|v| &v.value)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn one_based(values: &[usize]) -> Vec<usize> {
    values.iter().map(|v| v + 1).collect()
}
