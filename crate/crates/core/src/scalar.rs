//! Scalar traits shared by the polynomial and matrix code.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer as IntegerOps;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact commutative ring element.
///
/// Implemented for the machine integers, [`num_bigint::BigInt`] and the
/// rational types built on them. Floating-point types are deliberately not
/// admitted: every decision in this crate is an algebraic identity test.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type must represent small integers")
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for num_bigint::BigInt {}
impl<I> Scalar for Ratio<I>
where
    I: Clone + Debug + Display + IntegerOps + Signed + FromPrimitive + Send + Sync,
    Ratio<I>: FromPrimitive,
{
}

/// A [`Scalar`] whose division is exact (a field).
pub trait Field: Scalar {}

impl<I> Field for Ratio<I> where Ratio<I>: Scalar {}

/// Canonical `num/den` rendering of a rational, denominator always present.
pub fn render_rational(r: &crate::Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn renders_with_denominator() {
        assert_eq!(render_rational(&Rational::from_int(3)), "3/1");
        assert_eq!(render_rational(&Rational::from_int(-6).recip().neg()), "1/6");
        let half = Rational::new(2.into(), (-4).into());
        assert_eq!(render_rational(&half), "-1/2");
    }
}
