use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use permgrid::pipelines::suites::Known;
use permgrid::series::algebraic::{solve_algebraic, verify_annihilator};
use permgrid::{PolyInF, Series};
use proptest::prelude::*;

fn series_vanishing_at_zero(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-5i64..=5, order - 1).prop_map(|v| {
        let mut c = vec![0];
        c.extend(v);
        Series::from_ints(&c)
    })
}

proptest! {
    #[test]
    fn geometric_composition(g in series_vanishing_at_zero(15)) {
        let x = Series::x(15);
        let one = Series::one(15);
        let outer = x.div(&(&one - &x)).unwrap();
        let lhs = outer.compose(&g).unwrap();
        let rhs = g.div(&(&one - &g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// `f = x·Q(x, f)` has a unique root with `f(0) = 0`.
    #[test]
    fn solutions_are_roots(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), 1..4)) {
        let mut shifted: Vec<Vec<i64>> = rows.iter().map(|r| {
            let mut s = vec![0];
            s.extend(r);
            s
        }).collect();
        while shifted.len() < 2 {
            shifted.push(vec![0]);
        }
        shifted[1][0] -= 1;
        let refs: Vec<&[i64]> = shifted.iter().map(|r| r.as_slice()).collect();
        let p = PolyInF::from_int_rows(&refs);
        let f = solve_algebraic(&p, &[BigRational::zero()], 12).unwrap();
        prop_assert!(verify_annihilator(&p, &f, 11).unwrap());
    }
}

#[test]
fn class_series_are_positive_and_nondecreasing() {
    for k in Known::ALL {
        let f = k.assemble(20).unwrap().to_integers().unwrap();
        assert!(f[0].is_zero());
        assert!(f[1].is_one());
        for w in f[1..].windows(2) {
            assert!(w[0] > BigInt::zero() && w[0] <= w[1], "Av({})", k.basis());
        }
    }
}
