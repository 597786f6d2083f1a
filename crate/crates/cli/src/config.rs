//! Optional `key=value` settings file; command-line flags take precedence.

use std::fs;
use std::path::Path;

use nestohedra::buildingset::KeyMode;
use nestohedra::series::DEFAULT_ORDER;

use crate::error::CliError;

/// Largest truncation order accepted anywhere.
pub const MAX_ORDER: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub order: u32,
    pub memo: KeyMode,
    pub jobs: Option<usize>,
}

impl Default for Settings {
    fn default() -> Self {
        Self { order: DEFAULT_ORDER, memo: KeyMode::LabelOrder, jobs: None }
    }
}

impl Settings {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text).map_err(|message| CliError::Config { path: path.display().to_string(), message })
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut s = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) =
                line.split_once('=').ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || format!("line {}: bad value {value:?} for {key}", lineno + 1);
            match key {
                "order" => {
                    s.order = value.parse().map_err(|_| bad())?;
                    if !(1..=MAX_ORDER).contains(&s.order) {
                        return Err(format!("line {}: order must lie in 1..={MAX_ORDER}", lineno + 1));
                    }
                }
                "memo" => {
                    s.memo = match value {
                        "label" => KeyMode::LabelOrder,
                        "iso" => KeyMode::Isomorphism,
                        _ => return Err(bad()),
                    }
                }
                "jobs" => s.jobs = Some(value.parse().ok().filter(|&j| j > 0).ok_or_else(bad)?),
                _ => return Err(format!("line {}: unknown key {key:?}", lineno + 1)),
            }
        }
        Ok(s)
    }
}
