//! End-to-end enumerations of the three classes and the checks tying them
//! to brute force, automata and closed forms.

pub mod assemble;
pub mod checks;
pub mod inflation;
pub mod suites;

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::series::algebraic::PolyInF;
use crate::Series;

pub use assemble::{assemble_4213_3142, assemble_4231_3124, assemble_4312_3142, Assembly4231};
pub use checks::{verify_basis_conjecture, verify_proposition};
pub use inflation::{verify_inflation_rules, RuleTable};



/// Published terms, from `n = 1`.
pub const SEQ_4213_3142: [u64; 14] = [
    1, 2, 6, 22, 89, 379, 1664, 7460, 33977, 156727, 730619, 3436710, 16291842, 77758962,
];
pub const SEQ_4312_3142: [u64; 14] = [
    1, 2, 6, 22, 88, 367, 1568, 6810, 29943, 132958, 595227, 2683373, 12170778, 55499358,
];
pub const SEQ_4231_3124: [u64; 14] = [
    1, 2, 6, 22, 88, 363, 1508, 6255, 25842, 106327, 435965, 1782733, 7275351, 29648647,
];

/// Annihilating polynomial of the Av(4213,3142) series (degree 6 in f).
pub fn annihilator_4213_3142() -> PolyInF {
    PolyInF::from_int_rows(&[
        &[0, 0, 1, -2, 1],
        &[0, -1, 4, -7, 4],
        &[0, 2, -2, -5, 6],
        &[-2, 11, -19, 8, 4],
        &[-1, 10, -21, 14, 1],
        &[0, 2, -7, 7],
        &[0, 0, 0, 1],
    ])
}

/// Annihilating polynomial of the Av(4312,3142) series (degree 4 in f).
pub fn annihilator_4312_3142() -> PolyInF {
    PolyInF::from_int_rows(&[
        &[0, 0, 0, 1],
        &[0, 1, -5, 4],
        &[-1, 7, -12, 6],
        &[-1, 6, -9, 4],
        &[0, 1, -2, 1],
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Length or order the check is about, when there is one.
    pub n: Option<usize>,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    /// First index where two sequences differ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<usize>,
}

impl Check {
    pub fn new(name: impl Into<String>, n: Option<usize>, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check { name: name.into(), n, pass: expected == got, expected, got, first_divergence: None }
    }

    /// A yes/no check; `detail` goes in `got` when it fails.
    pub fn truth(name: impl Into<String>, n: Option<usize>, ok: bool, detail: impl ToString) -> Self {
        Check {
            name: name.into(),
            n,
            expected: "true".into(),
            got: if ok { "true".into() } else { detail.to_string() },
            pass: ok,
            first_divergence: None,
        }
    }

    /// Compare two integer sequences.
    pub fn sequence(name: impl Into<String>, expected: &[BigInt], got: &[BigInt]) -> Self {
        let len = expected.len().min(got.len());
        let div = (0..len).find(|&i| expected[i] != got[i]).or_else(|| {
            (expected.len() != got.len()).then_some(len)
        });
        let show = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        Check {
            name: name.into(),
            n: Some(expected.len()),
            expected: show(expected),
            got: show(got),
            pass: div.is_none(),
            first_divergence: div,
        }
    }

    /// Coefficients `from..from+expected.len()` of `s` against `expected`.
    pub fn series(name: impl Into<String>, expected: &[BigInt], s: &Series, from: usize) -> Self {
        let got: Vec<BigInt> = (from..from + expected.len())
            .map_while(|k| s.get(k))
            .map(|c| if c.is_integer() { c.to_integer() } else { BigInt::from(-1) })
            .collect();
        let mut c = Self::sequence(name, expected, &got);
        if let Some(d) = c.first_divergence.as_mut() {
            *d += from;
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub anchors: Vec<String>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        writeln!(f, "{}: {}/{} checks pass ({} ms)", self.suite, ok, self.checks.len(), self.elapsed_ms)?;
        for c in self.failures() {
            let at = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
            writeln!(f, "  FAIL {}{}: expected {} got {}", c.name, at, c.expected, c.got)?;
        }
        Ok(())
    }
}

/// Collects checks and times the suite.
pub struct ReportBuilder {
    suite: String,
    anchors: Vec<String>,
    checks: Vec<Check>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(suite: impl Into<String>, anchors: &[&str]) -> Self {
        ReportBuilder {
            suite: suite.into(),
            anchors: anchors.iter().map(|s| s.to_string()).collect(),
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn push(&mut self, c: Check) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub fn anchor(&mut self, a: &str) -> &mut Self {
        if !self.anchors.iter().any(|x| x == a) {
            self.anchors.push(a.to_string());
        }
        self
    }

    pub fn push_all(&mut self, cs: impl IntoIterator<Item = Check>) -> &mut Self {
        self.checks.extend(cs);
        self
    }

    /// Absorb another report's checks and any anchors not yet listed.
    pub fn extend(&mut self, r: Report) -> &mut Self {
        for a in &r.anchors {
            self.anchor(a);
        }
        self.checks.extend(r.checks);
        self
    }

    /// Record an error from a step that should have succeeded.
    pub fn error(&mut self, name: impl Into<String>, e: impl fmt::Display) -> &mut Self {
        self.checks.push(Check::truth(name, None, false, format!("error: {e}")));
        self
    }

    pub fn finish(self) -> Report {
        Report {
            suite: self.suite,
            anchors: self.anchors,
            checks: self.checks,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

pub(crate) fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
