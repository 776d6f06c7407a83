//! Run configuration: defaults, JSON config files and flag overrides.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sgdqm::{RmsMode, W2Method};

use crate::Failure;

/// Output format of summary and report files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}`, expected `csv` or `json`")),
        }
    }
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// A solver run as specified on the command line or in a JSON config file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub example: u8,
    /// Override of the example's default domain.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<(f64, f64)>,
    pub h: f64,
    pub dt: f64,
    pub t_end: f64,
    #[serde(default = "default_c")]
    pub c: f64,
    #[serde(default, with = "w2_method_serde")]
    pub w2_method: W2Method,
    #[serde(default, with = "rms_mode_serde")]
    pub rms_mode: RmsMode,
    #[serde(default)]
    pub snapshot_times: Vec<f64>,
    #[serde(default = "default_out")]
    pub out: PathBuf,
    #[serde(default)]
    pub format: OutputFormat,
}

fn default_c() -> f64 {
    0.5
}

fn default_out() -> PathBuf {
    PathBuf::from("out")
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Failure::usage(format!("invalid config {}: {e}", path.display())))
    }

    /// Sanity checks shared by every entry point.
    pub fn validate(&self) -> Result<(), Failure> {
        if !(1..=3).contains(&self.example) {
            return Err(Failure::usage(format!(
                "example must be 1, 2 or 3, got {}",
                self.example
            )));
        }
        if self.h <= 0.0 || !self.h.is_finite() {
            return Err(Failure::usage(format!("h must be positive, got {}", self.h)));
        }
        if self.dt <= 0.0 || !self.dt.is_finite() {
            return Err(Failure::usage(format!("dt must be positive, got {}", self.dt)));
        }
        if self.t_end < 0.0 || !self.t_end.is_finite() {
            return Err(Failure::usage(format!(
                "t-end must be nonnegative, got {}",
                self.t_end
            )));
        }
        if let Some((a, b)) = self.domain {
            if a >= b || !a.is_finite() || !b.is_finite() {
                return Err(Failure::usage(format!("invalid domain [{a}, {b}]")));
            }
        }
        Ok(())
    }
}

mod w2_method_serde {
    use serde::{Deserialize, Deserializer, Serializer};
    use sgdqm::W2Method;

    pub fn serialize<S: Serializer>(v: &W2Method, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(v.name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<W2Method, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

mod rms_mode_serde {
    use serde::{Deserialize, Deserializer, Serializer};
    use sgdqm::RmsMode;

    pub fn serialize<S: Serializer>(v: &RmsMode, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(v.name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RmsMode, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}
