//! Sparse multivariate polynomials in a fixed number of variables.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so the map's last
//! key is the leading monomial in lex order (variable 0 most significant).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::Scalar;
use crate::series::poly::Poly;
use crate::series::PowerSeries;

pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Exponents, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(e, T::one())])
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has the wrong length");
            p.add_term(e, c);
        }
        p
    }

    /// Embed a univariate polynomial as variable `i`.
    pub fn from_univariate(nvars: usize, i: usize, p: &Poly<T>) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[i] = k as u32;
                (e, c.clone())
            }),
        )
    }

    fn add_term(&mut self, e: Exponents, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> T {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeff(&self, e: &[u32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<(&Exponents, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())))
    }

    fn mul_term(&self, e: &[u32], c: &T) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(f, a)| {
                let g: Exponents = f.iter().zip(e).map(|(x, y)| x + y).collect();
                (g, a.clone() * c.clone())
            }),
        )
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MultiPoly<U> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Substitute `x_i ↦ t` for every variable and collect by degree.
    pub fn specialize_all(&self) -> Poly<T> {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut v = vec![T::zero(); deg + 1];
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            v[d as usize] = v[d as usize].clone() + c.clone();
        }
        Poly::new(v)
    }

    /// Exact quotient by lex-leading-term division, or `None` when the
    /// division leaves a remainder. Valid over integral domains.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.leading()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            if !(rc.clone() % dc.clone()).is_zero() {
                return None;
            }
            let e: Exponents = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let c = rc.clone() / dc.clone();
            rem = &rem - &d.mul_term(&e, &c);
            q.add_term(e, c);
        }
        Some(q)
    }

    /// Coefficients with respect to variable `v`, lowest power first; each
    /// coefficient has exponent zero in `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Self> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[v] as usize;
            f[v] = 0;
            out[k].add_term(f, c.clone());
        }
        out
    }

    fn lead_in(&self, v: usize) -> Self {
        self.coeffs_in(v).pop().unwrap_or_else(|| Self::zero(self.nvars))
    }

    fn var_power(&self, v: usize, k: u32) -> Self {
        let mut e = vec![0; self.nvars];
        e[v] = k;
        self.mul_term(&e, &T::one())
    }

    /// Evaluate by substituting a power series for every variable.
    pub fn eval_series(&self, subs: &[PowerSeries<T>]) -> PowerSeries<T> {
        assert_eq!(subs.len(), self.nvars, "one series per variable");
        let order = subs.iter().map(|s| s.order()).min().unwrap_or(0);
        let mut powers: Vec<Vec<PowerSeries<T>>> = Vec::with_capacity(self.nvars);
        for (i, s) in subs.iter().enumerate() {
            let deg = self.degree_in(i).unwrap_or(0) as usize;
            let s = s.truncate(order);
            let mut row = vec![PowerSeries::one(order)];
            for k in 1..=deg {
                let next = &row[k - 1] * &s;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = PowerSeries::zero(order);
        for (e, c) in &self.terms {
            let mut t = PowerSeries::constant(c.clone(), order);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl<T: Scalar> MultiPoly<T> {
    pub fn eval(&self, point: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc + t
        })
    }
}

impl MultiPoly<BigInt> {
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Greatest common divisor, normalized so the lex-leading coefficient
    /// is positive.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let g = gcd_from(self, other, 0);
        normalize_sign(g)
    }
}

fn normalize_sign(p: MultiPoly<BigInt>) -> MultiPoly<BigInt> {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -&p,
        _ => p,
    }
}

/// Gcd treating variables `v..` as live; variables before `v` are absent.
fn gcd_from(a: &MultiPoly<BigInt>, b: &MultiPoly<BigInt>, v: usize) -> MultiPoly<BigInt> {
    let n = a.nvars;
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if v == n {
        return MultiPoly::constant(n, a.constant_term().gcd(&b.constant_term()));
    }
    let (ca, pa) = split_content(a, v);
    let (cb, pb) = split_content(b, v);
    let content = gcd_from(&ca, &cb, v + 1);

    // primitive remainder sequence in variable v
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    while !r1.is_zero() && r1.degree_in(v).unwrap() > 0 {
        let r = prem(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() { r } else { split_content(&r, v).1 };
    }
    let prim = if r1.is_zero() { r0 } else { MultiPoly::one(n) };
    normalize_sign(&content * &prim)
}

/// Split into the content with respect to `v` (a polynomial in the later
/// variables) and the primitive part.
fn split_content(p: &MultiPoly<BigInt>, v: usize) -> (MultiPoly<BigInt>, MultiPoly<BigInt>) {
    let coeffs = p.coeffs_in(v);
    let mut g = MultiPoly::zero(p.nvars);
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd_from(&g, c, v + 1);
        if g.num_terms() == 1 && g.total_degree() == Some(0) && g.constant_term().abs() == BigInt::from(1) {
            break;
        }
    }
    let g = normalize_sign(g);
    let pp = p.exact_div(&g).expect("content divides its polynomial");
    (g, pp)
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn prem(a: &MultiPoly<BigInt>, b: &MultiPoly<BigInt>, v: usize) -> MultiPoly<BigInt> {
    let db = b.degree_in(v).unwrap();
    let lb = b.lead_in(v);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let lr = r.lead_in(v);
        r = &(&r * &lb) - &(&b.var_power(v, dr - db) * &lr);
    }
    r
}

impl<T: Scalar> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                let g: Exponents = e.iter().zip(f).map(|(x, y)| x + y).collect();
                out.add_term(g, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        self.map(|c| -c.clone())
    }
}

impl<T: Scalar + fmt::Display> MultiPoly<T> {
    /// Terms in graded order (total degree, then reverse lex), e.g.
    /// `1 - x_a*x_c - x_b*x_d`.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponents, &T)> = self.terms.iter().collect();
        terms.sort_by(|(e, _), (f, _)| {
            let de: u32 = e.iter().sum();
            let df: u32 = f.iter().sum();
            de.cmp(&df).then_with(|| f.cmp(e))
        });
        let mut out = String::new();
        for (e, c) in terms {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{k}", names[i]) })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{mag}*{}", mono.join("*")));
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly<BigInt>;

    fn vars() -> (P, P, P) {
        (P::var(3, 0), P::var(3, 1), P::var(3, 2))
    }

    fn int(n: i64) -> P {
        P::constant(3, n.into())
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let (a, b, c) = vars();
        let f = &(&a + &b) * &(&int(1) - &c);
        let g = &(&a * &b) + &int(2);
        let prod = &f * &g;
        assert_eq!(prod.exact_div(&f), Some(g.clone()));
        assert_eq!(prod.exact_div(&g), Some(f.clone()));
        assert_eq!(g.exact_div(&f), None);
        assert_eq!(f.display_with(&["a", "b", "c"]), "a + b - a*c - b*c");
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let (a, b, c) = vars();
        let common = &(&int(1) - &(&a * &c)) - &(&b * &c);
        let u = &(&a + &int(3)) * &(&b - &c);
        let w = &(&c * &c) + &(&a * &b);
        let g = (&common * &u).gcd(&(&common * &w));
        assert_eq!(g, normalize_sign(common.clone()));

        let six = &int(6) * &common;
        let four = &int(4) * &u;
        assert_eq!(six.gcd(&four), int(2));
    }

    #[test]
    fn specialization() {
        let (a, b, _) = vars();
        let p = &(&a * &b) - &a;
        assert_eq!(p.specialize_all(), Poly::from_ints(&[0, -1, 1]));
    }
}
