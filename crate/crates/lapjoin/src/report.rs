//! Machine-readable run reports emitted by the CLI.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::eigen::SpectralMultiset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Mismatch,
    PreconditionFailed,
}

impl Status {
    /// Stable CLI exit-code contract: 0 ok, 1 precondition, 2 mismatch.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 2,
            Status::PreconditionFailed => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalyticsReport {
    /// Spanning-tree count as an exact JSON integer.
    pub spanning_trees: serde_json::Number,
    pub kirchhoff_index: f64,
}

impl AnalyticsReport {
    pub fn new(spanning_trees: &BigUint, kirchhoff_index: f64) -> Self {
        AnalyticsReport {
            spanning_trees: serde_json::Number::from_str(&spanning_trees.to_string())
                .expect("decimal integer is a valid JSON number"),
            kirchhoff_index,
        }
    }
}

/// One CLI invocation's outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// Echo of the resolved graph specs.
    pub inputs: BTreeMap<String, String>,
    pub spectrum_closed_form: Option<Vec<f64>>,
    pub spectrum_oracle: Option<Vec<f64>>,
    pub max_abs_difference: Option<f64>,
    pub analytics: Option<AnalyticsReport>,
    pub status: Status,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            spectrum_closed_form: None,
            spectrum_oracle: None,
            max_abs_difference: None,
            analytics: None,
            status: Status::Ok,
            elapsed_ms: 0.0,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    /// Records both spectra and sets the status from the multiset
    /// comparison at `tol`.
    pub fn compare(&mut self, closed: &SpectralMultiset, oracle: &SpectralMultiset, tol: f64) {
        self.spectrum_closed_form = Some(closed.values().to_vec());
        self.spectrum_oracle = Some(oracle.values().to_vec());
        let diff = closed.max_abs_difference(oracle);
        self.max_abs_difference = Some(diff);
        self.status = if diff <= tol { Status::Ok } else { Status::Mismatch };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
