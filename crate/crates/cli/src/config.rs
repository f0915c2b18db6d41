use std::path::PathBuf;

use clap::ValueEnum;

pub const DEFAULT_MAX_DEGREE_CAP: usize = 64;
pub const DEFAULT_PORT: u16 = 8080;
pub const CACHE_ENV: &str = "KACRES_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
    Ascii,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub max_degree_cap: usize,
    pub memo_cache_path: Option<PathBuf>,
    pub port: u16,
    pub output_format: OutputFormat,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            max_degree_cap: DEFAULT_MAX_DEGREE_CAP,
            memo_cache_path: None,
            port: DEFAULT_PORT,
            output_format: OutputFormat::Json,
        }
    }
}

/// A nonempty `KACRES_CACHE` wins over the `--cache` flag.
pub fn cache_path(flag: Option<PathBuf>, env: Option<String>) -> Option<PathBuf> {
    match env {
        Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
        _ => flag,
    }
}

pub fn cache_path_from_env(flag: Option<PathBuf>) -> Option<PathBuf> {
    cache_path(flag, std::env::var(CACHE_ENV).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_overrides_flag() {
        let flag = Some(PathBuf::from("a.jsonl"));
        assert_eq!(cache_path(flag.clone(), None), flag);
        assert_eq!(cache_path(flag.clone(), Some(String::new())), flag);
        assert_eq!(
            cache_path(flag, Some("b.jsonl".into())),
            Some(PathBuf::from("b.jsonl"))
        );
        assert_eq!(JobConfig::default().max_degree_cap, 64);
    }
}
