//! Regular languages of gridding words: rule files, automata, counts and
//! generating functions.

pub mod dfa;
pub mod gf;
pub mod rules;

pub use dfa::{Dfa, DEFAULT_WORD_BOUND};
pub use gf::{gf_multivariate, gf_multivariate_from, gf_univariate, gf_univariate_from};
pub use rules::{Pattern, RuleKind, RuleSet};

use crate::data;
use crate::error::Result;

/// Compile a shipped rule file by name.
pub fn shipped(name: &str) -> Result<(RuleSet, Dfa)> {
    let rs = RuleSet::parse(data::rules(name)?)?;
    let dfa = Dfa::compile(&rs);
    Ok((rs, dfa))
}
