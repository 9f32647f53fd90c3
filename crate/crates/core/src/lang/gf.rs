//! Generating functions of DFA languages by the transfer-matrix method.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::lang::dfa::Dfa;
use crate::series::linalg::determinant;
use crate::series::mpoly::MultiPoly;
use crate::series::rational::RationalFunction;

type MP = MultiPoly<BigInt>;

/// `Σ_w weight(w)` over accepted words read from `state`, as `num/den`.
///
/// Restricted to states reachable from `state` that can still accept,
/// then Cramer's rule on `(I − A) F = accept`.
fn solve(d: &Dfa, state: usize, weight: &dyn Fn(usize) -> MP, nvars: usize) -> (MP, MP) {
    let live = d.live_states();
    if !live[state] {
        return (MP::zero(nvars), MP::one(nvars));
    }
    let mut index = vec![usize::MAX; d.num_states()];
    let mut useful = vec![state];
    index[state] = 0;
    let mut i = 0;
    while i < useful.len() {
        let s = useful[i];
        for l in 0..d.alphabet().len() {
            let t = d.next(s, l);
            if live[t] && index[t] == usize::MAX {
                index[t] = useful.len();
                useful.push(t);
            }
        }
        i += 1;
    }
    let n = useful.len();
    let mut m = vec![vec![MP::zero(nvars); n]; n];
    for (r, &s) in useful.iter().enumerate() {
        m[r][r] = MP::one(nvars);
        for l in 0..d.alphabet().len() {
            let t = d.next(s, l);
            if index[t] != usize::MAX {
                m[r][index[t]] = &m[r][index[t]] - &weight(l);
            }
        }
    }
    let like = MP::zero(nvars);
    let den = determinant(m.clone(), &like);
    for (r, &s) in useful.iter().enumerate() {
        m[r][0] = if d.is_accepting(s) { MP::one(nvars) } else { MP::zero(nvars) };
    }
    let num = determinant(m, &like);
    (num, den)
}

fn monomial(nvars: usize, prefix: &[usize], var_of: impl Fn(usize) -> usize) -> MP {
    let mut exps = vec![0u32; nvars];
    for &l in prefix {
        exps[var_of(l)] += 1;
    }
    MP::from_terms(nvars, vec![(exps, BigInt::one())])
}

/// Generating function by length, in `x`.
pub fn gf_univariate(d: &Dfa) -> Result<RationalFunction> {
    gf_univariate_from(d, &[])
}

/// Generating function by length of the accepted words that begin with
/// `prefix`.
pub fn gf_univariate_from(d: &Dfa, prefix: &[usize]) -> Result<RationalFunction> {
    let x = MP::var(1, 0);
    let (num, den) = solve(d, d.run(prefix), &|_| x.clone(), 1);
    RationalFunction::new(vec!["x".into()], &num * &monomial(1, prefix, |_| 0), den)
}

/// Generating function with one variable `x_<letter>` per letter.
pub fn gf_multivariate(d: &Dfa) -> Result<RationalFunction> {
    gf_multivariate_from(d, &[])
}

/// Multivariate generating function of accepted words beginning with
/// `prefix`.
pub fn gf_multivariate_from(d: &Dfa, prefix: &[usize]) -> Result<RationalFunction> {
    let k = d.alphabet().len();
    let vars = d.alphabet().iter().map(|c| format!("x_{c}")).collect();
    let (num, den) = solve(d, d.run(prefix), &|l| MP::var(k, l), k);
    RationalFunction::new(vars, &num * &monomial(k, prefix, |l| l), den)
}

/// True when the denominator is `1`, i.e. the language is finite.
pub fn is_polynomial(r: &RationalFunction) -> bool {
    let den = r.denominator();
    den.num_terms() == 1 && den.constant_term().is_one() && !den.constant_term().is_zero()
}
