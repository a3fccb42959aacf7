//! Job specifications: every run is driven by one JobSpec, assembled from
//! an optional TOML/JSON file plus command-line flags (flags win).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JobError {
    #[error("failed to read job file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse job file: {0}")]
    Parse(String),
    #[error("missing required input {0:?} for command {1:?}")]
    MissingInput(&'static str, String),
    #[error("unknown value {1:?} for {0}")]
    BadValue(&'static str, String),
}

/// One unit of work. All inputs are optional at the type level; each
/// command validates the subset it needs at dispatch time.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct JobSpec {
    pub command: String,
    /// Named catalog curve ("14a2", "gauss5").
    pub curve: Option<String>,
    /// Coefficient field: rationals | gaussian | eisenstein | cyclotomic:N.
    pub field: Option<String>,
    pub f: Option<String>,
    pub g: Option<String>,
    /// Optional post-composition applied before sampling/plotting.
    pub post: Option<String>,
    /// Family specifier, e.g. "pakovich:n=5,zeta_order=5".
    pub family: Option<String>,
    /// Named permutation group, e.g. "frobenius:21:7".
    pub group: Option<String>,
    pub max_degree: Option<usize>,
    pub group_budget: Option<usize>,
    pub order_cap: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    /// Working precision in bits for interval embeddings.
    pub precision: Option<u32>,
    /// Report destination; stdout when absent.
    pub out: Option<PathBuf>,
    /// SVG destination for `plot`; the CSV sidecar sits next to it.
    pub plot_out: Option<PathBuf>,
}

impl JobSpec {
    pub fn from_file(path: &Path) -> Result<Self, JobError> {
        let text = std::fs::read_to_string(path)?;
        let is_json = path
            .extension()
            .map(|e| e.eq_ignore_ascii_case("json"))
            .unwrap_or(false)
            || text.trim_start().starts_with('{');
        if is_json {
            serde_json::from_str(&text).map_err(|e| JobError::Parse(e.to_string()))
        } else {
            toml::from_str(&text).map_err(|e| JobError::Parse(e.to_string()))
        }
    }

    /// Overlay: any field set in `flags` replaces the file value.
    pub fn merge(mut self, flags: JobSpec) -> JobSpec {
        if !flags.command.is_empty() {
            self.command = flags.command;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if flags.$f.is_some() { self.$f = flags.$f; } )* };
        }
        take!(
            curve, field, f, g, post, family, group, max_degree, group_budget,
            order_cap, seed, samples, precision, out, plot_out
        );
        self
    }

    pub fn require<'a, T>(
        &self,
        value: &'a Option<T>,
        name: &'static str,
    ) -> Result<&'a T, JobError> {
        value
            .as_ref()
            .ok_or_else(|| JobError::MissingInput(name, self.command.clone()))
    }

    /// Effective precision: flag/file, then RATCURVE_PRECISION_BITS, then 128.
    pub fn precision_bits(&self) -> u32 {
        self.precision
            .or_else(|| {
                std::env::var("RATCURVE_PRECISION_BITS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(128)
    }
}
