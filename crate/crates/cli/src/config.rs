//! Optional `key=value` configuration file.

use std::fs;
use std::path::{Path, PathBuf};

use permgrid::class_enum::DEFAULT_MEMORY_THRESHOLD;
use permgrid::grid::DEFAULT_GEOM_BOUND;
use permgrid::lang::DEFAULT_WORD_BOUND;

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub geom_bound: usize,
    pub word_bound: u128,
    pub memory_threshold: usize,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cache_dir: None,
            geom_bound: DEFAULT_GEOM_BOUND,
            word_bound: DEFAULT_WORD_BOUND,
            memory_threshold: DEFAULT_MEMORY_THRESHOLD,
            jobs: 1,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: std::num::ParseIntError| format!("config line {}: {key}: {e}", i + 1);
            match key {
                "cache_dir" => cfg.cache_dir = Some(PathBuf::from(value)),
                "geom_bound" => cfg.geom_bound = value.parse().map_err(bad)?,
                "word_bound" => cfg.word_bound = value.parse().map_err(bad)?,
                "memory_threshold" => cfg.memory_threshold = value.parse().map_err(bad)?,
                "jobs" => cfg.jobs = value.parse().map_err(bad)?,
                _ => return Err(format!("config line {}: unknown key {key:?}", i + 1)),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_and_comments() {
        let cfg = Config::parse("# bounds\ngeom_bound = 7\ncache_dir=/tmp/c  # here\n\njobs=2\n").unwrap();
        assert_eq!(cfg.geom_bound, 7);
        assert_eq!(cfg.jobs, 2);
        assert_eq!(cfg.cache_dir, Some(PathBuf::from("/tmp/c")));
        assert_eq!(cfg.word_bound, DEFAULT_WORD_BOUND);
    }

    #[test]
    fn errors_name_the_line() {
        assert!(Config::parse("jobs 2").unwrap_err().contains("line 1"));
        assert!(Config::parse("\nspeed=3").unwrap_err().contains("unknown key"));
        assert!(Config::parse("jobs=x").unwrap_err().contains("line 1"));
    }
}
