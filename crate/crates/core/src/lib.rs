//! Exact enumeration of permutation classes through simple permutations,
//! geometric grid classes and their regular-language encodings.
//!
//! Scalar-generic algebra lives in [`series`]; the aliases below fix the
//! exact types used throughout the verification code.

pub mod class_enum;
pub mod data;
pub mod error;
pub mod grid;
pub mod lang;
pub mod perm;
pub mod pipelines;
pub mod scalar;
pub mod series;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use class_enum::{ClassCensus, ClassSpec, EnumerateOptions};
pub use error::{Error, Result};
pub use grid::{GridSpec, Gridding};
pub use perm::{Decomposition, Interval, Orientation, Permutation};
pub use series::algebraic::PolyInF;
pub use series::mpoly::MultiPoly;
pub use series::poly::Poly;
pub use series::rational::RationalFunction;
pub use series::roots::RootInterval;
pub use series::PowerSeries;

/// Exact rational power series.
pub type Series = PowerSeries<BigRational>;
/// Floating-point power series, for quick numeric work.
pub type SeriesF64 = PowerSeries<f64>;
pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;
pub type IntMultiPoly = MultiPoly<BigInt>;
