//! Report envelope shared by all commands. Serialization is canonical:
//! serde_json's map is ordered, so identical payloads produce identical
//! bytes; the timing field is the only run-dependent part.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::job::JobSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    /// Echo of the fully-merged job that produced this report.
    pub command: JobSpec,
    pub results: Value,
    /// Wall-clock milliseconds; excluded from determinism comparisons.
    pub timing_ms: f64,
    pub version: String,
    pub seed: u64,
}

impl Report {
    pub fn new(job: &JobSpec, results: Value, timing_ms: f64) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: job.clone(),
            results,
            timing_ms,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: job.seed.unwrap_or(0),
        }
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        sort_keys(&mut value);
        serde_json::to_string_pretty(&value).expect("canonical form")
    }
}

fn sort_keys(v: &mut Value) {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> =
                std::mem::take(map).into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            for (_, child) in entries.iter_mut() {
                sort_keys(child);
            }
            *map = entries.into_iter().collect();
        }
        Value::Array(items) => items.iter_mut().for_each(sort_keys),
        _ => {}
    }
}
