//! Run configuration: defaults, then the key=value config file, then environment, then flags.

use std::path::{Path, PathBuf};

use pschen_core::ps::PrecisionPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cache_dir: PathBuf,
    pub default_tol: f64,
    pub precision: PrecisionPolicy,
    pub format: Format,
}

pub const CONFIG_ENV: &str = "PSCHEN_CONFIG";
pub const CACHE_ENV: &str = "PSCHEN_CACHE";

fn home() -> PathBuf {
    std::env::var_os("HOME").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."))
}

/// `$PSCHEN_CONFIG`, else `$XDG_CONFIG_HOME/pschen/config`, else `~/.config/pschen/config`.
pub fn default_config_path() -> PathBuf {
    if let Some(p) = std::env::var_os(CONFIG_ENV) {
        return PathBuf::from(p);
    }
    let base = std::env::var_os("XDG_CONFIG_HOME").map(PathBuf::from).unwrap_or_else(|| home().join(".config"));
    base.join("pschen").join("config")
}

fn default_cache_dir() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME").map(PathBuf::from).unwrap_or_else(|| home().join(".cache"));
    base.join("pschen")
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cache_dir: default_cache_dir(),
            default_tol: 1e-9,
            precision: PrecisionPolicy::default(),
            format: Format::Text,
        }
    }
}

pub fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(format!("unknown format {other:?} (expected text, json or csv)")),
    }
}

impl RunConfig {
    /// Apply `key = value` lines; `#` starts a comment.
    pub fn apply_file_contents(&mut self, text: &str, origin: &Path) -> Result<(), String> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = || format!("{}:{}", origin.display(), i + 1);
            let (k, v) = line.split_once('=').ok_or_else(|| format!("{}: expected key = value", at()))?;
            let (k, v) = (k.trim(), v.trim());
            let bad = |e: &dyn std::fmt::Display| format!("{}: bad value for {k}: {e}", at());
            match k {
                "cache_dir" => self.cache_dir = PathBuf::from(v),
                "default_tol" => self.default_tol = v.parse().map_err(|e| bad(&e))?,
                "base_precision" => self.precision.base_precision = v.parse().map_err(|e| bad(&e))?,
                "max_precision" => self.precision.max_precision = v.parse().map_err(|e| bad(&e))?,
                "escalation_factor" => self.precision.escalation_factor = v.parse().map_err(|e| bad(&e))?,
                "fast_filter" => self.precision.fast_filter = v.parse().map_err(|e| bad(&e))?,
                "format" => self.format = parse_format(v).map_err(|e| bad(&e))?,
                other => return Err(format!("{}: unknown key {other:?}", at())),
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.default_tol > 0.0 && self.default_tol <= 1e-3) {
            return Err(format!("default_tol must lie in (0, 1e-3], got {}", self.default_tol));
        }
        self.precision.validate().map_err(|e| e.to_string())
    }
}
