//! Generating functions of the three classes from their decompositions.
//!
//! Each `assemble_*` returns the series through `x^n` (order `n + 1`).

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lang::{self, gf_multivariate, gf_multivariate_from};
use crate::series::{catalan_series, monotone_series, sqrt_one_minus_4x};
use crate::{IntPoly, RationalFunction, Series};

/// Extra working precision, covering divisions by series of valuation 1.
const SLACK: usize = 3;

fn poly(c: &[i64], order: usize) -> Series {
    Series::from_poly(&IntPoly::from_ints(c).to_rational(), order)
}

fn one(order: usize) -> Series {
    Series::one(order)
}

/// Iterate `f ← rhs(f)` from `f = x` until nothing changes.
fn fixed_point(order: usize, rhs: impl Fn(&Series) -> Result<Series>) -> Result<Series> {
    let mut f = Series::x(order);
    for _ in 0..=order + 1 {
        let next = rhs(&f)?;
        if next == f {
            return Ok(f);
        }
        f = next;
    }
    Err(Error::Series(format!("fixed point not reached at order {order}")))
}

fn agree(name: &str, a: &Series, b: &Series) -> Result<()> {
    match a.first_difference(b) {
        None => Ok(()),
        Some(k) => Err(Error::Series(format!("{name}: forms differ at x^{k}"))),
    }
}

fn simple_gf(lang_name: &str, prefix: Option<char>) -> Result<RationalFunction> {
    let (_, dfa) = lang::shipped(lang_name)?;
    match prefix {
        None => gf_multivariate(&dfa),
        Some(c) => gf_multivariate_from(&dfa, &dfa.parse_word(&c.to_string())?),
    }
}

/// Av(4213,3142): `f = x + f²/(1+f) + cf/(1+c) + xcf²/(1−x−xf)`.
///
/// The last term is also rebuilt as `(c/m)·s(f, m)` from the automaton for
/// the simple alternations, and the two must agree.
pub fn assemble_4213_3142(n: usize) -> Result<Series> {
    let w = n + 1 + SLACK;
    let x = Series::x(w);
    let c = catalan_series::<BigRational>(w);
    let m = monotone_series::<BigRational>(w);
    let skew = |f: &Series| (&c * f).div(&(&one(w) + &c));
    let sum = |f: &Series| (f * f).div(&(&one(w) + f));
    let infl = |f: &Series| (&(&x * &c) * &(f * f)).div(&(&(&one(w) - &x) - &(&x * f)));
    let f = fixed_point(w, |f| Ok(&(&(&x + &sum(f)?) + &skew(f)?) + &infl(f)?))?;

    let s = simple_gf("lang_simple_4213_3142", None)?;
    let from_words = (&c * &s.eval_series(&[f.clone(), m.clone()])?).div(&m)?;
    agree("alternation inflations", &infl(&f)?.truncate(n + 1), &from_words.truncate(n + 1))?;
    Ok(f.truncate(n + 1))
}

/// Av(4312,3142): `f = x + f²/(1+f) + m(f+c−m)/(1+m) + I` with
/// `I = cm²(c−m+f+cf)/(1−2cm−cm²−mf−cmf)`.
///
/// `I` is also rebuilt from the automaton as
/// `((f−m)/f + c/f)·s_a(f,m,m,c) + (c/m)·s_c(f,m,m,c)` where `s_a`, `s_c`
/// count simple words starting with `a` and `c`.
pub fn assemble_4312_3142(n: usize) -> Result<Series> {
    let w = n + 1 + SLACK;
    let x = Series::x(w);
    let c = catalan_series::<BigRational>(w);
    let m = monotone_series::<BigRational>(w);
    let sum = |f: &Series| (f * f).div(&(&one(w) + f));
    let skew = (&m * &(&c - &m)).div(&(&one(w) + &m))?;
    let skew_f = m.div(&(&one(w) + &m))?;
    let cm = &c * &m;
    let infl = |f: &Series| {
        let num = &(&cm * &m) * &(&(&(&c - &m) + f) + &(&c * f));
        let den = &(&(&(&one(w) - &cm.scale(&crate::scalar::int(2))) - &(&cm * &m)) - &(&m * f)) - &(&cm * f);
        num.div(&den)
    };
    let f = fixed_point(w, |f| {
        let skew_part = &skew + &(&skew_f * f);
        Ok(&(&(&x + &sum(f)?) + &skew_part) + &infl(f)?)
    })?;

    let sa = simple_gf("lang_simple_4312_3142", Some('a'))?;
    let sc = simple_gf("lang_simple_4312_3142", Some('c'))?;
    let args = [f.clone(), m.clone(), m.clone(), c.clone()];
    let a_part = (&(&(&f - &m) + &c) * &sa.eval_series(&args)?).div(&f)?;
    let c_part = (&c * &sc.eval_series(&args)?).div(&m)?;
    agree("simple inflations", &infl(&f)?.truncate(n + 1), &(&a_part + &c_part).truncate(n + 1))?;
    Ok(f.truncate(n + 1))
}

/// Both routes to the Av(4231,3124) series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly4231 {
    /// From the linear equation in `f`.
    pub linear: Series,
    /// Expansion of the closed form with `√(1−4x)`.
    pub closed: Series,
}

/// Skew indecomposables of Av(231,3124): `x(1−x)²/(1−3x+x²)`.
pub fn skew_indecomposable_231_3124(order: usize) -> Series {
    poly(&[0, 1, -2, 1], order).div(&poly(&[1, -3, 1], order)).expect("unit denominator")
}

/// Nonempty Av(231,3124): `(x−x²)/(1−3x+x²)`.
pub fn av_231_3124(order: usize) -> Series {
    poly(&[0, 1, -1], order).div(&poly(&[1, -3, 1], order)).expect("unit denominator")
}

/// Av(4231,3124):
/// `f = x + (xc+x)f + T·c + s(c,m,c,m)/m · (x−x²)/(1−3x+x²)`, with `T` the
/// skew-indecomposable Av(231,3124) series, solved directly since it is
/// linear in `f`; checked against the closed form.
pub fn assemble_4231_3124(n: usize) -> Result<Assembly4231> {
    let w = n + 1 + SLACK;
    let x = Series::x(w);
    let c = catalan_series::<BigRational>(w);
    let m = monotone_series::<BigRational>(w);
    let s = simple_gf("lang_simple_4231_3124", None)?;
    let simple_part = (&s.eval_series(&[c.clone(), m.clone(), c.clone(), m.clone()])? * &av_231_3124(w)).div(&m)?;
    let rhs = &(&x + &(&skew_indecomposable_231_3124(w) * &c)) + &simple_part;
    let linear = rhs.div(&(&(&one(w) - &(&x * &c)) - &x))?;

    let sq = sqrt_one_minus_4x::<BigRational>(w);
    let num = &poly(&[1, -8, 20, -20, 10, -2], w) - &(&poly(&[1, -4, 2], w) * &sq);
    let den = (&poly(&[1, -3, 1], w) * &poly(&[-1, 5, -4, 1], w)).scale(&crate::scalar::int(2));
    let closed = num.div(&den)?;

    let (linear, closed) = (linear.truncate(n + 1), closed.truncate(n + 1));
    agree("linear solution vs closed form", &linear, &closed)?;
    Ok(Assembly4231 { linear, closed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipelines::{big, SEQ_4213_3142, SEQ_4231_3124, SEQ_4312_3142};

    fn terms(s: &Series) -> Vec<num_bigint::BigInt> {
        s.to_integers().unwrap()[1..].to_vec()
    }

    #[test]
    fn published_terms() {
        assert_eq!(terms(&assemble_4213_3142(14).unwrap()), big(&SEQ_4213_3142));
        assert_eq!(terms(&assemble_4312_3142(14).unwrap()), big(&SEQ_4312_3142));
        assert_eq!(terms(&assemble_4231_3124(14).unwrap().linear), big(&SEQ_4231_3124));
    }

    #[test]
    fn fibonacci_helpers() {
        assert_eq!(terms(&skew_indecomposable_231_3124(6)), big(&[1, 1, 3, 8, 21]));
        assert_eq!(terms(&av_231_3124(6)), big(&[1, 2, 5, 13, 34]));
    }

    #[test]
    fn literal_skew_numerator_is_off() {
        // x − 2x² + x², read literally, is x − x²; it does not give the class.
        let w = 10;
        let lit = poly(&[0, 1, -1], w).div(&poly(&[1, -3, 1], w)).unwrap();
        assert_ne!(lit, skew_indecomposable_231_3124(w));
        assert_eq!(lit.coeff(2), BigRational::from_integer(2.into()));
    }

    #[test]
    fn low_orders() {
        assert_eq!(terms(&assemble_4213_3142(1).unwrap()), big(&[1]));
        assert_eq!(assemble_4231_3124(3).unwrap().closed.coeff(3), BigRational::from_integer(6.into()));
    }
}
