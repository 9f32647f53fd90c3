use permgrid::{data, GridSpec};
use proptest::prelude::*;

const SPECS: [&str; 4] = ["grid_4312_3142", "grid_4231_3124", "grid_4213_3142", "grid_fig3"];

fn spec_and_word(max_len: usize) -> impl Strategy<Value = (GridSpec, Vec<usize>)> {
    (0..SPECS.len()).prop_flat_map(move |i| {
        let g = data::grid_spec(SPECS[i]).unwrap();
        let k = g.letters().len();
        (Just(g), prop::collection::vec(0..k, 1..=max_len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn independent_letters_commute((g, w) in spec_and_word(10)) {
        let p = g.decode(&w).unwrap();
        for at in 0..w.len().saturating_sub(1) {
            let (a, b) = (g.letters()[w[at]], g.letters()[w[at + 1]]);
            if a.col != b.col && a.row != b.row {
                let mut swapped = w.clone();
                swapped.swap(at, at + 1);
                prop_assert_eq!(&g.decode(&swapped).unwrap(), &p);
            }
        }
    }

    #[test]
    fn decoding_ignores_spacing((g, w) in spec_and_word(8), gaps in prop::collection::vec(1u64..50, 8)) {
        let mut params = Vec::with_capacity(w.len());
        let mut at = 0;
        for gap in &gaps[..w.len()] {
            at += gap;
            params.push(at);
        }
        let scale = at + gaps[w.len() % gaps.len()];
        let (p, _) = g.decode_with_params(&w, &params, scale).unwrap();
        prop_assert_eq!(p, g.decode(&w).unwrap());
    }

    #[test]
    fn decoded_words_are_members((g, w) in spec_and_word(7)) {
        let p = g.decode(&w).unwrap();
        prop_assert!(g.is_gridding(&p, &g.induced_gridding(&w)));
        prop_assert!(g.grid_member(&p));
        let canon = g.canonical_gridding(&p).unwrap();
        prop_assert!(g.is_gridding(&p, &canon));
        if w.len() <= 6 {
            prop_assert!(g.geom_member(&p, 9).unwrap());
        }
    }
}

#[test]
fn forests_have_equal_grid_and_geom() {
    for name in ["grid_4312_3142", "grid_4231_3124", "grid_4213_3142"] {
        let g = data::grid_spec(name).unwrap();
        assert!(g.row_column_graph_is_forest(), "{name}");
        for n in 0..=6 {
            assert_eq!(g.grid_members(n), g.geom_members(n, 9).unwrap(), "{name} at {n}");
        }
    }
}

#[test]
fn cycle_has_grid_members_outside_geom() {
    let g = data::grid_spec("grid_fig3").unwrap();
    assert!(!g.row_column_graph_is_forest());
    let geom = g.geom_members(4, 9).unwrap();
    let grid = g.grid_members(4);
    assert!(geom.is_subset(&grid));
    assert!(geom.len() < grid.len());
}

#[test]
fn image_of_all_words_matches_geom_count() {
    for name in SPECS {
        let g = data::grid_spec(name).unwrap();
        for n in 0..=6 {
            let image: std::collections::BTreeSet<_> =
                g.all_words(n).iter().map(|w| g.decode(w).unwrap()).collect();
            assert_eq!(image, g.geom_members(n, 9).unwrap(), "{name} at {n}");
        }
    }
}

#[test]
fn rows_are_listed_top_first() {
    let text = data::file("grid_4312_3142.txt").unwrap();
    let g = GridSpec::parse(text).unwrap();
    assert_eq!(GridSpec::parse(&g.to_text()).unwrap(), g);
    // bottom row of the file's matrix is "1 0 -1": cell (col 0, row 0) is nonzero
    assert_eq!(g.entry(0, 0), 1);
    assert_eq!(g.entry(0, 1), 0);
}
