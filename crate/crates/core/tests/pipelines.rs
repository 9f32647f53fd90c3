use permgrid::perm::parse_basis;
use permgrid::pipelines::suites::{verify_suite, Context, Known};
use permgrid::pipelines::{verify_basis_conjecture, verify_proposition};
use permgrid::{Error, GridSpec};

#[test]
fn report_json_shape() {
    let ctx = Context::new(6);
    let r = verify_suite("thm-4213-3142", &ctx).unwrap();
    assert!(r.passed());
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["suite", "anchors", "checks", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "n", "expected", "got", "pass"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn failures_carry_the_first_divergence() {
    let g = GridSpec::parse("cols: +\nrows: +\n1\n").unwrap();
    let r = verify_basis_conjecture(&g, &parse_basis("321").unwrap(), 4);
    assert!(!r.passed());
    let first = r.failures().next().unwrap();
    assert_eq!(first.n, Some(2));
}

#[test]
fn single_increasing_cell_is_av_21() {
    let g = GridSpec::parse("cols: +\nrows: +\n1\n").unwrap();
    assert!(verify_basis_conjecture(&g, &parse_basis("21").unwrap(), 7).passed());
}

#[test]
fn unknown_suite() {
    assert_eq!(verify_suite("thm", &Context::new(3)).unwrap_err(), Error::UnknownSuite("thm".into()));
}

#[test]
fn a_wrong_grid_is_caught() {
    // the four-cell cycle does not describe the simples of Av(4312,3142)
    let g = permgrid::data::grid_spec("grid_fig3").unwrap();
    let r = verify_proposition(&Known::Av4312_3142.spec(), &g, 6).unwrap();
    assert!(!r.passed());
}
