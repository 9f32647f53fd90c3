//! One line per acceptance criterion; exits nonzero if any criterion fails.
//! Runs without the libtest harness so the lines are always printed.

use std::time::Instant;

use permgrid::pipelines::suites::{run_suite, Context, SUITES};

fn main() {
    let ctx = Context::new(12);
    let mut failed = Vec::new();
    for (i, name) in SUITES.iter().enumerate() {
        let k = i + 1;
        let t = Instant::now();
        match run_suite(name, &ctx) {
            Ok(r) if r.passed() => {
                println!("criterion {k}: PASS ({name}, {} checks, {:.1}s)", r.checks.len(), t.elapsed().as_secs_f64());
            }
            Ok(r) => {
                println!("criterion {k}: FAIL ({name})");
                for c in r.failures() {
                    println!("    {} n={:?}: expected {}, got {}", c.name, c.n, c.expected, c.got);
                }
                failed.push(k);
            }
            Err(e) => {
                println!("criterion {k}: FAIL ({name}: {e})");
                failed.push(k);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
