//! Isolating the least positive real root of an integer polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::poly::Poly;

/// `lo < root ≤ hi`, or `lo = hi = root` when the root was recognized as
/// an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub exact: Option<BigRational>,
}

impl RootInterval {
    pub fn midpoint(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

type RatPoly = Poly<BigRational>;

fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(seq: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The simplest rational (smallest denominator) in `[lo, hi]`, `0 < lo ≤ hi`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(
        &(BigRational::one() / (hi - &fl)),
        &(BigRational::one() / (lo - &fl)),
    );
    fl + BigRational::one() / inner
}

/// Least positive real root of `p`, isolated to width at most `tol`.
pub fn smallest_positive_root(p: &Poly<BigInt>, tol: &BigRational) -> Result<RootInterval> {
    let Some(v) = p.valuation() else {
        return Err(Error::NoPositiveRoot);
    };
    let p = p.shift_down(v).to_rational();
    if p.degree() == Some(0) {
        return Err(Error::NoPositiveRoot);
    }
    let square_free = p.div_rem(&p.gcd(&p.derivative())).0;
    let seq = sturm_sequence(&square_free);

    // Cauchy bound, rounded up to a power of two.
    let lead = square_free.leading().unwrap().abs();
    let max_ratio = square_free
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    let bound = BigRational::one() + max_ratio;
    let mut hi = BigRational::one();
    while hi < bound {
        hi *= BigRational::from_integer(2.into());
    }
    let mut lo = BigRational::zero();
    let count = |a: &BigRational, b: &BigRational| sign_changes(&seq, a) - sign_changes(&seq, b);
    if count(&lo, &hi) == 0 {
        return Err(Error::NoPositiveRoot);
    }
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if count(&lo, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Dyadic roots end up as `hi`; other rationals are the simplest number
    // in the final interval once it is narrow enough.
    let mut candidates = vec![hi.clone()];
    if lo.is_positive() {
        candidates.insert(0, simplest_between(&lo, &hi));
    }
    let exact = candidates
        .into_iter()
        .find(|q| q > &lo && square_free.eval(q).is_zero());
    Ok(match exact {
        Some(q) => RootInterval { lo: q.clone(), hi: q.clone(), exact: Some(q) },
        None => RootInterval { lo, hi, exact: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn linear_root_is_exact() {
        let root = smallest_positive_root(&IntPoly::from_ints(&[1, -4]), &r(1, 1000)).unwrap();
        assert_eq!(root.exact, Some(r(1, 4)));
    }

    #[test]
    fn irrational_root() {
        // x² − 2
        let root = smallest_positive_root(&IntPoly::from_ints(&[-2, 0, 1]), &r(1, 1_000_000)).unwrap();
        assert!(root.exact.is_none());
        assert!((root.midpoint() - 2f64.sqrt()).abs() < 1e-6);
        assert!(root.width() <= r(1, 1_000_000));
    }

    #[test]
    fn skips_negative_and_zero_roots() {
        // x (x + 1)(3x − 1)² (x − 2)
        let p = &(&(&IntPoly::from_ints(&[0, 1]) * &IntPoly::from_ints(&[1, 1]))
            * &IntPoly::from_ints(&[-1, 3]).pow(2))
            * &IntPoly::from_ints(&[-2, 1]);
        let root = smallest_positive_root(&p, &r(1, 1 << 20)).unwrap();
        assert_eq!(root.exact, Some(r(1, 3)));
    }

    #[test]
    fn no_positive_root() {
        assert_eq!(
            smallest_positive_root(&IntPoly::from_ints(&[1, 1]), &r(1, 10)),
            Err(Error::NoPositiveRoot)
        );
        assert_eq!(
            smallest_positive_root(&IntPoly::from_ints(&[1, 0, 1]), &r(1, 10)),
            Err(Error::NoPositiveRoot)
        );
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&r(3, 10), &r(4, 10)), r(1, 3));
        assert_eq!(simplest_between(&r(1, 5), &r(1, 5)), r(1, 5));
        assert_eq!(simplest_between(&r(19, 100), &r(21, 100)), r(1, 5));
        assert_eq!(simplest_between(&r(3, 2), &r(5, 2)), r(2, 1));
    }
}
