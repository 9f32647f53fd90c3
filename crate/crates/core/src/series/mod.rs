//! Truncated power series and the polynomial algebra around them.
//!
//! A [`PowerSeries`] stores the coefficients of `x^0 .. x^{order-1}`; every
//! coefficient beyond that is unknown, not zero. Binary operations keep the
//! smaller order of their operands.

pub mod algebraic;
pub mod linalg;
pub mod mpoly;
pub mod poly;
pub mod rational;
pub mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Known coefficients `c_0 .. c_{len-1}`; the order is their count.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    /// A polynomial viewed as a series known to `order`.
    pub fn from_poly(p: &Poly<T>, order: usize) -> Self {
        Self::from_coeffs((0..order).map(|k| p.coeff(k)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(vec![T::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; panics when `k` is at or beyond the order.
    pub fn coeff(&self, k: usize) -> T {
        assert!(k < self.order(), "coefficient {k} is beyond the series order {}", self.order());
        self.coeffs[k].clone()
    }

    pub fn get(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order).cloned().collect())
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v)
    }

    /// Divide by `x^k`; the low coefficients are discarded.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(self.coeffs.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> PowerSeries<U> {
        PowerSeries::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// `outer(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.get(0).is_some_and(|c| !c.is_zero()) {
            return Err(Error::Series("composition needs inner(0) = 0".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().take(order).rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone(), order);
        }
        Ok(acc)
    }

    /// Index of the first coefficient where the two series differ, within
    /// their common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl<T: Field> PowerSeries<T> {
    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let Some(c0) = self.coeffs.first().filter(|c| !c.is_zero()) else {
            return Err(Error::Series("inverse needs a nonzero constant term".into()));
        };
        let inv0 = T::one() / c0.clone();
        let mut out: Vec<T> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut s = T::zero();
            for j in 1..=k {
                s = s + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(-(s * inv0.clone()));
        }
        Ok(Self::from_coeffs(out))
    }

    /// `self / d`. When `d` has valuation `v > 0`, `self` must vanish to
    /// order `v` too, and the result loses `v` orders of precision.
    pub fn div(&self, d: &Self) -> Result<Self> {
        let v = d
            .valuation()
            .ok_or_else(|| Error::Series("division by a series with no known nonzero term".into()))?;
        if self.coeffs.iter().take(v).any(|c| !c.is_zero()) {
            return Err(Error::Series(format!(
                "dividend does not vanish to order {v} of the divisor"
            )));
        }
        let num = self.shift_down(v);
        let den = d.shift_down(v);
        let order = num.order().min(den.order());
        Ok(&num.truncate(order) * &den.truncate(order).inverse()?)
    }
}

impl PowerSeries<BigRational> {
    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// The coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Decimal strings, the serialized form of a series.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// `Σ_{k≥1} C_k x^k = x + 2x² + 5x³ + 14x⁴ + …`, the nonempty members of
/// a Catalan class. Solves `c = x(1 + c)²`.
pub fn catalan_series<T: Scalar>(order: usize) -> PowerSeries<T> {
    // C_0 = 1, C_{k+1} = Σ C_i C_{k-i}
    let mut cat: Vec<T> = vec![T::one()];
    while cat.len() < order {
        let k = cat.len() - 1;
        let next = (0..=k).fold(T::zero(), |s, i| s + cat[i].clone() * cat[k - i].clone());
        cat.push(next);
    }
    cat.truncate(order);
    if let Some(c0) = cat.first_mut() {
        *c0 = T::zero();
    }
    PowerSeries::from_coeffs(cat)
}

/// Binomial expansion of `(1 − 4x)^{1/2}`.
pub fn sqrt_one_minus_4x<T: Field>(order: usize) -> PowerSeries<T> {
    let mut coeffs: Vec<T> = Vec::with_capacity(order);
    for k in 0..order {
        let c = if k == 0 {
            T::one()
        } else {
            // a_k = a_{k-1} · 2(2k − 3) / k
            coeffs[k - 1].clone() * T::from_int(2 * (2 * k as i64 - 3)) / T::from_int(k as i64)
        };
        coeffs.push(c);
    }
    PowerSeries::from_coeffs(coeffs)
}

/// `x/(1 − x)`, the nonempty monotone permutations.
pub fn monotone_series<T: Scalar>(order: usize) -> PowerSeries<T> {
    let mut coeffs = vec![T::one(); order];
    if order > 0 {
        coeffs[0] = T::zero();
    }
    PowerSeries::from_coeffs(coeffs)
}

impl<T: Scalar> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: &PowerSeries<T>) -> PowerSeries<T> {
        let n = self.order().min(rhs.order());
        PowerSeries::from_coeffs(
            (0..n)
                .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: &PowerSeries<T>) -> PowerSeries<T> {
        let n = self.order().min(rhs.order());
        PowerSeries::from_coeffs(
            (0..n)
                .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: &PowerSeries<T>) -> PowerSeries<T> {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for PowerSeries<T> {
            type Output = PowerSeries<T>;
            fn $m(self, rhs: PowerSeries<T>) -> PowerSeries<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar + fmt::Display> fmt::Display for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = Poly::new(self.coeffs.clone()).display_with("x");
        write!(f, "{body} + O(x^{})", self.order())
    }
}

impl<T: Scalar> fmt::Debug for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries{:?}+O(x^{})", self.coeffs, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    #[test]
    fn monotone_and_catalan() {
        let m: Series = monotone_series(6);
        assert_eq!(m, Series::from_ints(&[0, 1, 1, 1, 1, 1]));
        let x = Series::x(6);
        let q = x.div(&(&Series::one(6) - &x)).unwrap();
        assert_eq!(q, m);

        let c: Series = catalan_series(21);
        assert_eq!(c.truncate(6), Series::from_ints(&[0, 1, 2, 5, 14, 42]));
        let one = Series::one(21);
        let x = Series::x(21);
        let rhs = &x * &(&one + &c).pow(2);
        assert_eq!(rhs, c);
    }

    #[test]
    fn square_root() {
        let r: Series = sqrt_one_minus_4x(20);
        assert_eq!(r.truncate(5), Series::from_ints(&[1, -2, -2, -4, -10]));
        let target = Series::from_poly(&crate::RatPoly::from_ints(&[1, -4]), 20);
        assert_eq!(&r * &r, target);
        let one = Series::one(21);
        let two_x = Series::monomial(crate::scalar::int(2), 1, 21);
        let r21: Series = sqrt_one_minus_4x(21);
        let c = (&(&one - &two_x) - &r21).div(&two_x).unwrap();
        assert_eq!(c, catalan_series(20));
    }

    #[test]
    fn order_bookkeeping() {
        let a = Series::from_ints(&[1, 2, 3, 4]);
        let b = Series::from_ints(&[1, 1]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        let x = Series::x(4);
        assert_eq!(a.shift_up(1).div(&x).unwrap(), a.truncate(3));
        assert!(a.div(&x).is_err());
        assert!(a.compose(&a).is_err());
    }

    #[test]
    fn compose_geometric() {
        let g = Series::from_ints(&[0, 1, 3, -2, 5, 7]);
        let m = monotone_series::<BigRational>(6);
        let lhs = m.compose(&g).unwrap();
        let rhs = g.div(&(&Series::one(6) - &g)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generic_over_floats() {
        let c: PowerSeries<f64> = catalan_series(6);
        assert_eq!(c.coeffs(), &[0.0, 1.0, 2.0, 5.0, 14.0, 42.0]);
        let r: PowerSeries<f64> = sqrt_one_minus_4x(4);
        assert_eq!(r.coeffs(), &[1.0, -2.0, -2.0, -4.0]);
    }
}
