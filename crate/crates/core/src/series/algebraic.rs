//! Polynomials in an unknown series `f` with coefficients in `Z[x]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::series::linalg::determinant;
use crate::series::poly::Poly;
use crate::series::PowerSeries;

/// `Σ p_i(x) f^i`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyInF {
    coeffs: Vec<Poly<BigInt>>,
}

impl PolyInF {
    /// `coeffs[i]` multiplies `f^i`; trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<Poly<BigInt>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyInF { coeffs }
    }

    /// Rows of integer coefficients in `x`, one per power of `f`, lowest
    /// power of `f` first.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| Poly::from_ints(r)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Poly<BigInt>] {
        &self.coeffs
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, p)| p.scale(&BigInt::from(i)))
                .collect(),
        )
    }

    /// `P(f)` as a series, to the order of `f`.
    pub fn eval(&self, f: &PowerSeries<BigRational>) -> PowerSeries<BigRational> {
        let order = f.order();
        let mut acc = PowerSeries::zero(order);
        for p in self.coeffs.iter().rev() {
            let p = PowerSeries::from_poly(&p.to_rational(), order);
            acc = &(&acc * f) + &p;
        }
        acc
    }

    /// Discriminant with respect to `f`:
    /// `(−1)^{d(d−1)/2} · Res_f(P, ∂P/∂f) / lc(P)`.
    pub fn discriminant(&self) -> Result<Poly<BigInt>> {
        let d = self
            .degree()
            .filter(|&d| d >= 2)
            .ok_or_else(|| Error::Series("discriminant needs degree at least 2".into()))?;
        let res = resultant(self, &self.derivative());
        let lc = &self.coeffs[d];
        let q = res
            .exact_div(lc)
            .ok_or_else(|| Error::Series("leading coefficient does not divide the resultant".into()))?;
        Ok(if (d * (d - 1) / 2) % 2 == 1 { -&q } else { q })
    }
}

/// Sylvester resultant of two polynomials in `f`.
pub fn resultant(p: &PolyInF, q: &PolyInF) -> Poly<BigInt> {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Poly::zero();
    };
    let size = m + n;
    if size == 0 {
        return Poly::one();
    }
    let mut rows: Vec<Vec<Poly<BigInt>>> = Vec::with_capacity(size);
    // Columns hold descending powers of f, from f^{m+n-1} down to f^0.
    for i in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (k, c) in p.coeffs.iter().enumerate() {
            row[i + m - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Poly::zero(); size];
        for (k, c) in q.coeffs.iter().enumerate() {
            row[i + n - k] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows, &Poly::zero())
}

/// True iff `P(f) ≡ 0 mod x^{n+1}`; `f` must be known through `x^n`.
pub fn verify_annihilator(p: &PolyInF, f: &PowerSeries<BigRational>, n: usize) -> Result<bool> {
    if f.order() < n + 1 {
        return Err(Error::Series(format!(
            "series known to order {}, need {}",
            f.order(),
            n + 1
        )));
    }
    Ok(p.eval(&f.truncate(n + 1)).is_zero())
}

/// Extend `seed` to the unique root of `P` known through `x^{order-1}`.
///
/// Each step solves for one coefficient from the lowest nonvanishing
/// coefficient of `∂P/∂f` at the current prefix.
pub fn solve_algebraic(
    p: &PolyInF,
    seed: &[BigRational],
    order: usize,
) -> Result<PowerSeries<BigRational>> {
    let dp = p.derivative();
    let mut known: Vec<BigRational> = seed.to_vec();
    while known.len() < order {
        let k = known.len();
        // ∂P/∂f at the prefix is exact modulo x^k.
        let d = dp.eval(&PowerSeries::from_coeffs(known.clone()));
        let v = match d.valuation() {
            Some(v) if v < k => v,
            _ => return Err(Error::AmbiguousExtension(k)),
        };
        let mut padded = known.clone();
        padded.resize(k + v + 1, BigRational::zero());
        let value = p.eval(&PowerSeries::from_coeffs(padded));
        if let Some(bad) = value.coeffs()[..k + v].iter().position(|c| !c.is_zero()) {
            return Err(Error::InconsistentSeed(bad));
        }
        let t = -value.coeff(k + v) / d.coeff(v);
        known.push(t);
    }
    known.truncate(order);
    Ok(PowerSeries::from_coeffs(known))
}

impl fmt::Display for PolyInF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = c.display_with("x");
            let fpow = match i {
                0 => String::new(),
                1 => "*f".into(),
                _ => format!("*f^{i}"),
            };
            parts.push(format!("({body}){fpow}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for PolyInF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyInF[{self}]")
    }
}

/// Sign-normalize so comparisons ignore an overall factor of −1.
pub fn up_to_sign(p: &Poly<BigInt>) -> Poly<BigInt> {
    match p.leading() {
        Some(l) if l.is_negative() => -p,
        _ => p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::catalan_series;
    use crate::IntPoly;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn quadratic_discriminant() {
        // f² − x
        let p = PolyInF::from_int_rows(&[&[0, -1], &[], &[1]]);
        assert_eq!(p.discriminant().unwrap(), IntPoly::from_ints(&[0, 4]));
        // a f² + b f + c with constants: b² − 4ac
        let q = PolyInF::from_int_rows(&[&[3], &[5], &[2]]);
        assert_eq!(q.discriminant().unwrap(), IntPoly::from_ints(&[25 - 24]));
    }

    #[test]
    fn cubic_discriminant() {
        // f³ + f + 1: −4 − 27 = −31
        let p = PolyInF::from_int_rows(&[&[1], &[1], &[], &[1]]);
        assert_eq!(p.discriminant().unwrap(), IntPoly::from_ints(&[-31]));
    }

    #[test]
    fn catalan_root() {
        // x(1 + f)² − f = x + (2x − 1) f + x f²
        let p = PolyInF::from_int_rows(&[&[0, 1], &[-1, 2], &[0, 1]]);
        let c = catalan_series(16);
        assert!(verify_annihilator(&p, &c, 15).unwrap());
        let solved = solve_algebraic(&p, &[rat(0)], 16).unwrap();
        assert_eq!(solved, c);
        assert!(!verify_annihilator(&p, &PowerSeries::from_ints(&[0, 1, 3]), 2).unwrap());
    }

    #[test]
    fn seed_problems_are_reported() {
        let p = PolyInF::from_int_rows(&[&[0, 1], &[-1, 2], &[0, 1]]);
        assert_eq!(solve_algebraic(&p, &[rat(1)], 5), Err(Error::InconsistentSeed(0)));
        // f² − x² has two roots ±x; with seed 0 the derivative 2f vanishes.
        let q = PolyInF::from_int_rows(&[&[0, 0, -1], &[], &[1]]);
        assert_eq!(solve_algebraic(&q, &[rat(0)], 4), Err(Error::AmbiguousExtension(1)));
        let s = solve_algebraic(&q, &[rat(0), rat(-1)], 6).unwrap();
        assert_eq!(s, PowerSeries::from_ints(&[0, -1, 0, 0, 0, 0]));
    }

    #[test]
    fn trivial_annihilator() {
        let zero = PolyInF::new(vec![]);
        assert!(verify_annihilator(&zero, &PowerSeries::from_ints(&[0, 1, 5]), 2).unwrap());
    }
}
