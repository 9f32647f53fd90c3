//! Scalar traits shared by the polynomial and power-series types.
//!
//! Everything that only needs ring operations is generic over [`Scalar`];
//! division of series and Euclidean polynomial algorithms additionally need
//! [`Field`]. Exact arithmetic uses `BigInt` / `BigRational`, but the same
//! code runs over `f64` for quick numeric experiments.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};

pub trait Scalar:
    Num + Clone + Debug + PartialEq + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Clone + Debug + PartialEq + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

/// Scalars where `a / b` is exact for every nonzero `b`.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for BigRational {}
impl Field for Ratio<i64> {}
impl Field for Ratio<i128> {}

/// Lift an integer to any scalar type.
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

pub fn rat_from_int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}
