//! Fraction-free determinants over integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::series::mpoly::MultiPoly;
use crate::series::poly::Poly;

/// An integral domain with exact division.
pub trait ExactRing: Clone {
    fn ring_zero(like: &Self) -> Self;
    fn ring_one(like: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul_elem(&self, rhs: &Self) -> Self;
    fn sub_elem(&self, rhs: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    /// `self / rhs`, known to be exact.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn ring_zero(_: &Self) -> Self {
        BigInt::zero()
    }
    fn ring_one(_: &Self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_elem(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero());
        q
    }
}

impl ExactRing for Poly<BigInt> {
    fn ring_zero(_: &Self) -> Self {
        Poly::zero()
    }
    fn ring_one(_: &Self) -> Self {
        Poly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_elem(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.exact_div(rhs).expect("Bareiss division is exact")
    }
}

impl ExactRing for MultiPoly<BigInt> {
    fn ring_zero(like: &Self) -> Self {
        MultiPoly::zero(like.nvars())
    }
    fn ring_one(like: &Self) -> Self {
        MultiPoly::one(like.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_elem(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.exact_div(rhs).expect("Bareiss division is exact")
    }
}

/// Determinant of a square matrix by Bareiss elimination. `like` supplies
/// the ring context (number of variables) for the empty matrix.
pub fn determinant<R: ExactRing>(mut m: Vec<Vec<R>>, like: &R) -> R {
    let n = m.len();
    if n == 0 {
        return R::ring_one(like);
    }
    let mut negate = false;
    let mut prev = R::ring_one(like);
    for k in 0..n - 1 {
        if m[k][k].is_zero_elem() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero_elem()) else {
                return R::ring_zero(like);
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul_elem(&m[k][k]).sub_elem(&m[i][k].mul_elem(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
            m[i][k] = R::ring_zero(like);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg_elem()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        let z = BigInt::zero();
        assert_eq!(determinant(ints(&[&[2, 3], &[1, 4]]), &z), 5.into());
        assert_eq!(determinant(ints(&[&[0, 1], &[1, 0]]), &z), (-1).into());
        assert_eq!(
            determinant(ints(&[&[0, 2, 1], &[3, 0, 4], &[5, 6, 0]]), &z),
            // cofactors along the first row: 0·(−24) − 2·(−20) + 1·18
            BigInt::from(58)
        );
        assert_eq!(determinant(ints(&[&[1, 2], &[2, 4]]), &z), z);
    }

    #[test]
    fn polynomial_determinant() {
        // | 1-x   -x |
        // | -x   1-x | = 1 - 2x
        let a = Poly::<BigInt>::from_ints(&[1, -1]);
        let b = Poly::<BigInt>::from_ints(&[0, -1]);
        let d = determinant(vec![vec![a.clone(), b.clone()], vec![b, a]], &Poly::zero());
        assert_eq!(d, Poly::from_ints(&[1, -2]));
    }
}
