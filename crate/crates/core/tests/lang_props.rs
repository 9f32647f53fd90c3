use std::collections::BTreeSet;

use num_bigint::BigInt;
use permgrid::lang::{self, gf_multivariate, gf_univariate, Dfa, RuleKind, RuleSet};
use permgrid::{data, Permutation};
use proptest::prelude::*;

fn shipped_rules() -> Vec<&'static str> {
    data::names().filter(|n| n.ends_with(".rules")).collect()
}

#[test]
fn generating_functions_count_words() {
    for name in shipped_rules() {
        let (_, dfa) = lang::shipped(name).unwrap();
        let r = gf_univariate(&dfa).unwrap();
        let series = r.expand(21).unwrap().to_integers().unwrap();
        let counts: Vec<BigInt> = dfa.counts(20).into_iter().map(BigInt::from).collect();
        assert_eq!(series, counts, "{name}");
        assert_eq!(gf_multivariate(&dfa).unwrap().specialize_all().unwrap(), r, "{name}");
    }
}

#[test]
fn compilation_is_deterministic() {
    for name in shipped_rules() {
        let (rs, dfa) = lang::shipped(name).unwrap();
        let again = Dfa::compile(&RuleSet::parse(&rs.to_text()).unwrap());
        assert_eq!(dfa, again, "{name}");
    }
}

#[test]
fn canonical_languages_biject_at_eight() {
    for tag in ["4312_3142", "4231_3124"] {
        let g = data::grid_spec(&format!("grid_{tag}")).unwrap();
        let (_, dfa) = lang::shipped(&format!("lang_grid_{tag}")).unwrap();
        let mut image = BTreeSet::new();
        dfa.visit_words(8, |w| {
            assert!(image.insert(g.decode(w).unwrap()), "two words decode alike");
        });
        let members: BTreeSet<Permutation> = g.grid_members(8);
        assert_eq!(image, members, "{tag}");
    }
}

fn letters() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!["a", "b", "c", "{a,b}", "{b,c}", "a*", "b+", "{a,c}*"]), 1..4)
        .prop_map(|v| v.join(" "))
}

fn rule_set() -> impl Strategy<Value = RuleSet> {
    let kinds = prop::sample::select(vec![RuleKind::Factor, RuleKind::Prefix, RuleKind::Suffix, RuleKind::Word]);
    (prop::collection::vec((kinds, letters()), 0..4), 0usize..3).prop_map(|(rules, minlen)| {
        let mut rs = RuleSet::new(vec!['a', 'b', 'c']).unwrap();
        for (k, p) in rules {
            rs.forbid(k, &p).unwrap();
        }
        rs.set_minlen(minlen);
        rs
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn automaton_agrees_with_rules(rs in rule_set(), words in prop::collection::vec(prop::collection::vec(0usize..3, 0..9), 40)) {
        let dfa = Dfa::compile(&rs);
        for w in &words {
            prop_assert_eq!(dfa.accepts(w), rs.accepts(w), "{:?}", w);
        }
    }

    #[test]
    fn counts_match_enumeration_and_gf(rs in rule_set()) {
        let dfa = Dfa::compile(&rs);
        let series = gf_univariate(&dfa).unwrap().expand(9).unwrap().to_integers().unwrap();
        for n in 0..=8 {
            let mut listed = 0u64;
            dfa.visit_words(n, |w| {
                assert!(rs.accepts(w));
                listed += 1;
            });
            prop_assert_eq!(BigInt::from(dfa.count_words(n)), BigInt::from(listed));
            prop_assert_eq!(&series[n], &BigInt::from(listed));
        }
    }
}
