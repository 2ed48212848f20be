use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::DEFAULT_SEED;
use crate::error::{LabError, Result};
use crate::field::PrimeField;

/// Environment variable consulted when no seed is given explicitly.
pub const SEED_ENV_VAR: &str = "LEFSCHETZ_LAB_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(LabError::BadSpec(format!("unknown output format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub field: PrimeField,
    pub trials: usize,
    pub seed: u64,
    /// Overrides the per-instance default `d + q + 2`.
    pub m_max: Option<usize>,
    pub output: OutputFormat,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            field: PrimeField::default(),
            trials: 3,
            seed: DEFAULT_SEED,
            m_max: None,
            output: OutputFormat::Json,
            jobs: None,
        }
    }
}

impl RunConfig {
    pub fn new(prime: u64, trials: usize, seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(LabError::BadParameters("trials must be at least 1".into()));
        }
        Ok(Self { field: PrimeField::new(prime)?, trials, seed, ..Self::default() })
    }

    /// Seed from an explicit value, else the environment, else the default.
    pub fn resolve_seed(explicit: Option<u64>) -> Result<u64> {
        if let Some(s) = explicit {
            return Ok(s);
        }
        match std::env::var(SEED_ENV_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| LabError::BadParameters(format!("{SEED_ENV_VAR}={v:?} is not a 64-bit seed"))),
            Err(_) => Ok(DEFAULT_SEED),
        }
    }

    pub fn m_max_or(&self, default: usize) -> usize {
        self.m_max.unwrap_or(default)
    }

    /// Runs `op` with the configured parallelism.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self.jobs {
            Some(j) => crate::par::with_threads(j, op),
            None => op(),
        }
    }
}
