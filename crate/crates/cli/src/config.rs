use std::path::Path;
use std::time::Duration;

use anyhow::{ensure, Context, Result};
use serde::Deserialize;
use sporbits_core::poly::GbBudget;

use crate::Format;

/// Settings from the optional TOML file. Every field may be overridden by the
/// matching command-line flag.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_half_size: Option<usize>,
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u32>,
    pub max_time_secs: Option<u64>,
    pub format: Option<Format>,
    pub deep: Option<bool>,
    pub threads: Option<usize>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_half_size: usize,
    pub budget: GbBudget,
    pub format: Format,
    pub deep: bool,
    pub threads: Option<usize>,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
/// Deep mode multiplies every Gröbner cap by this factor.
pub const DEEP_FACTOR: u32 = 10;

impl RunConfig {
    pub fn resolve(flags: &crate::Global, file: FileConfig) -> Result<Self> {
        let base = GbBudget::default();
        let max_pairs = flags.max_pairs.or(file.max_pairs).unwrap_or(base.max_pairs);
        let max_degree = flags.max_degree.or(file.max_degree).unwrap_or(base.max_degree);
        let max_time = flags
            .max_time_secs
            .or(file.max_time_secs)
            .map(Duration::from_secs)
            .or(base.max_time);
        let max_half_size = flags
            .max_half_size
            .or(file.max_half_size)
            .unwrap_or(sporbits_core::fpf::DEFAULT_MAX_HALF_SIZE);
        let threads = flags.threads.or(file.threads);
        ensure!(max_pairs > 0, "max-pairs must be positive");
        ensure!(max_degree > 0, "max-degree must be positive");
        ensure!(max_time.is_none_or(|t| !t.is_zero()), "max-time-secs must be positive");
        ensure!(max_half_size > 0, "max-half-size must be positive");
        ensure!(threads != Some(0), "threads must be positive");
        Ok(Self {
            max_half_size,
            budget: GbBudget {
                max_pairs,
                max_degree,
                max_time,
            },
            format: flags.format.or(file.format).unwrap_or(Format::Text),
            deep: flags.deep || file.deep.unwrap_or(false),
            threads,
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        })
    }

    /// Budget for a degeneration run, raised in deep mode.
    pub fn degeneration_budget(&self, deep: bool) -> GbBudget {
        if deep || self.deep {
            self.budget.scaled(DEEP_FACTOR)
        } else {
            self.budget.clone()
        }
    }
}
