//! Coefficient fields.
//!
//! Everything above the polynomial layer is written against [`Scalar`]; the
//! crate root fixes the concrete exact type through [`crate::Q`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A field of coefficients. Exactness is the caller's business: the
/// polynomial gcd and the elimination routines assume `==` is exact.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
}

/// Scalars that are fractions of integers, so values can be put over a common
/// integer denominator when rendering.
pub trait Fraction: Scalar {
    type Int: Integer + Signed + Clone + Display;
    fn numer_int(&self) -> Self::Int;
    fn denom_int(&self) -> Self::Int;
    fn from_ints(n: Self::Int, d: Self::Int) -> Self;
}

impl<T> Fraction for Ratio<T>
where
    T: Integer + Signed + Clone + Display + Debug + FromPrimitive + Send + Sync + 'static,
    Ratio<T>: Scalar,
{
    type Int = T;
    fn numer_int(&self) -> T {
        self.numer().clone()
    }
    fn denom_int(&self) -> T {
        self.denom().clone()
    }
    fn from_ints(n: T, d: T) -> Self {
        Ratio::new(n, d)
    }
}

/// Exact rationals over big integers, the default coefficient field.
pub type BigQ = Ratio<BigInt>;
