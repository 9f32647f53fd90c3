//! Grid specifications, rule files and inflation tables shipped with the
//! crate. Each is also available on disk under `crates/core/data/`.

use crate::error::{Error, Result};
use crate::grid::GridSpec;

macro_rules! shipped {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/", $name)))),*]
    };
}

static FILES: &[(&str, &str)] = shipped!(
    "grid_4312_3142.txt",
    "grid_4231_3124.txt",
    "grid_fig3.txt",
    "grid_4213_3142.txt",
    "all.rules",
    "lang_grid_4312_3142.rules",
    "lang_simple_4312_3142.rules",
    "lang_grid_4231_3124.rules",
    "lang_simple_4231_3124.rules",
    "lang_simple_4213_3142.rules",
    "inflate_4213_3142.table",
    "inflate_4312_3142.table",
    "inflate_4231_3124.table",
);

/// Names of every shipped file.
pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

/// Contents of a shipped file, by file name.
pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

fn lookup(name: &str, ext: &str) -> Result<&'static str> {
    let full = if name.ends_with(ext) { name.to_string() } else { format!("{name}{ext}") };
    file(&full).ok_or_else(|| Error::Cache(format!("no shipped file named {full}")))
}

/// A shipped grid spec, e.g. `grid_spec("grid_fig3")`.
pub fn grid_spec(name: &str) -> Result<GridSpec> {
    GridSpec::parse(lookup(name, ".txt")?)
}

/// Text of a shipped `.rules` file.
pub fn rules(name: &str) -> Result<&'static str> {
    lookup(name, ".rules")
}

/// Text of a shipped inflation table.
pub fn table(name: &str) -> Result<&'static str> {
    lookup(name, ".table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_grid_parses() {
        for n in names().filter(|n| n.ends_with(".txt")) {
            grid_spec(n).unwrap();
        }
        assert!(grid_spec("missing").is_err());
    }
}
