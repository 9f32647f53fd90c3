//! Rational functions with integer coefficients in named variables.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::series::mpoly::MultiPoly;
use crate::series::poly::Poly;
use crate::series::PowerSeries;

/// `num / den`, always kept reduced: no common factor, and the
/// denominator's constant term positive.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    vars: Vec<String>,
    num: MultiPoly<BigInt>,
    den: MultiPoly<BigInt>,
}

impl RationalFunction {
    pub fn new(vars: Vec<String>, num: MultiPoly<BigInt>, den: MultiPoly<BigInt>) -> Result<Self> {
        if num.nvars() != vars.len() || den.nvars() != vars.len() {
            return Err(Error::Series("variable count mismatch".into()));
        }
        if den.constant_term().is_zero() {
            return Err(Error::Series("denominator needs a nonzero constant term".into()));
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        if den.constant_term().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { vars, num, den })
    }

    /// A univariate function in `x`.
    pub fn univariate(num: &Poly<BigInt>, den: &Poly<BigInt>) -> Result<Self> {
        Self::new(
            vec!["x".into()],
            MultiPoly::from_univariate(1, 0, num),
            MultiPoly::from_univariate(1, 0, den),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn numerator(&self) -> &MultiPoly<BigInt> {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly<BigInt> {
        &self.den
    }

    pub fn is_univariate(&self) -> bool {
        self.vars.len() == 1
    }

    /// Numerator and denominator as polynomials in the single variable.
    pub fn univariate_parts(&self) -> Option<(Poly<BigInt>, Poly<BigInt>)> {
        self.is_univariate()
            .then(|| (self.num.specialize_all(), self.den.specialize_all()))
    }

    /// Set every variable equal to `x`.
    pub fn specialize_all(&self) -> Result<RationalFunction> {
        Self::univariate(&self.num.specialize_all(), &self.den.specialize_all())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Self::new(self.vars.clone(), &self.num * &other.num, &self.den * &other.den)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Self::new(
            self.vars.clone(),
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::Series("rational functions use different variables".into()))
        }
    }

    /// Substitute a power series for each variable, in variable order.
    pub fn eval_series(&self, subs: &[PowerSeries<BigRational>]) -> Result<PowerSeries<BigRational>> {
        if subs.len() != self.vars.len() {
            return Err(Error::Series("one series per variable".into()));
        }
        let num = self.num.map(|c| BigRational::from_integer(c.clone()));
        let den = self.den.map(|c| BigRational::from_integer(c.clone()));
        let n = num.eval_series(subs);
        let d = den.eval_series(subs);
        if d.get(0).is_none_or(|c| c.is_zero()) {
            return Err(Error::Series("substituted denominator has zero constant term".into()));
        }
        n.div(&d)
    }

    /// Series expansion of a univariate function to `order`.
    pub fn expand(&self, order: usize) -> Result<PowerSeries<BigRational>> {
        let x = PowerSeries::x(order);
        self.eval_series(&vec![x; self.vars.len()])
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        write!(
            f,
            "({})/({})",
            self.num.display_with(&names),
            self.den.display_with(&names)
        )
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    #[test]
    fn reduces_common_factors() {
        // (1 - x)(1 - 2x) / ((1 - x)(1 - 3x))
        let a = IntPoly::from_ints(&[1, -1]);
        let num = &a * &IntPoly::from_ints(&[1, -2]);
        let den = &a * &IntPoly::from_ints(&[1, -3]);
        let r = RationalFunction::univariate(&num, &den).unwrap();
        let (n, d) = r.univariate_parts().unwrap();
        assert_eq!(n, IntPoly::from_ints(&[1, -2]));
        assert_eq!(d, IntPoly::from_ints(&[1, -3]));
        assert_eq!(r.to_string(), "(1 - 2*x)/(1 - 3*x)");

        let neg = RationalFunction::univariate(&IntPoly::from_ints(&[-2, 4]), &IntPoly::from_ints(&[-2, 6])).unwrap();
        assert_eq!(neg, r);
    }

    #[test]
    fn expansion() {
        let r = RationalFunction::univariate(&IntPoly::from_ints(&[0, 1]), &IntPoly::from_ints(&[1, -1, -1])).unwrap();
        let s = r.expand(8).unwrap();
        assert_eq!(s, PowerSeries::from_ints(&[0, 1, 1, 2, 3, 5, 8, 13]));
    }

    #[test]
    fn rejects_singular_denominator() {
        assert!(RationalFunction::univariate(&IntPoly::from_ints(&[1]), &IntPoly::from_ints(&[0, 1])).is_err());
    }
}
