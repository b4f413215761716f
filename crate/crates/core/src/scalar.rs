//! Scalar abstraction shared by every algebraic type in the crate.
//!
//! All algorithms are written against [`Scalar`], so they run unchanged over
//! exact rationals (the default, see [`crate::Rational`]) or over `f64` for
//! quick approximate exploration. Only exact scalars implement
//! [`ExactScalar`], which is what the JSON and CSV layers require.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, NumRef, Signed};

use crate::error::{Error, Result};

/// Field-like scalar. Exact for `Ratio<_>`, approximate for floats.
pub trait Scalar:
    Num + NumRef + Neg<Output = Self> + PartialOrd + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + NumRef + Neg<Output = T> + PartialOrd + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

/// Embeds a small integer into `T`.
pub fn int<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("scalar type cannot represent a small integer")
}

/// `p / q` as a scalar.
pub fn frac<T: Scalar>(p: i64, q: i64) -> T {
    int::<T>(p) / int::<T>(q)
}

/// Scalars with a canonical, lossless text form.
pub trait ExactScalar: Scalar {
    /// Reduced fraction, `"p/q"` or `"p"` when the denominator is one.
    fn to_fraction_string(&self) -> String;
    fn parse_fraction(s: &str) -> Result<Self>;
}

impl<I> ExactScalar for Ratio<I>
where
    Ratio<I>: Scalar,
    I: Integer + Clone + Signed + std::fmt::Display + FromStr,
{
    fn to_fraction_string(&self) -> String {
        self.to_string()
    }

    fn parse_fraction(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("not a fraction: {s:?}"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: I = num.parse().map_err(|_| bad())?;
        let den: I = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Ratio::new(num, den))
    }
}
