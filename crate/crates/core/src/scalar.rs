//! Scalar traits the counting and homology code is generic over.
//!
//! Everything that counts (Möbius values, chain counts, closed forms) is
//! written against [`Ring`]; rank computations over boundary matrices are
//! written against [`Field`]. The crate root fixes the usual choices:
//! [`crate::Integer`] (arbitrary precision) and [`crate::Rational`].
//! Machine integers work too, as long as the caller accepts overflow.

use std::fmt::{Debug, Display};

use num_integer::Integer as IntegerOps;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact commutative ring with a sign and conversions from small integers.
pub trait Ring:
    Num + Signed + Clone + Debug + Display + FromPrimitive + PartialOrd + Send + Sync
{
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count does not fit the scalar type")
    }

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer does not fit the scalar type")
    }
}

impl<T> Ring for T where
    T: Num + Signed + Clone + Debug + Display + FromPrimitive + PartialOrd + Send + Sync
{
}

/// A ring in which every nonzero element is invertible and division is exact.
pub trait Field: Ring {}

impl<T> Field for Ratio<T>
where
    T: IntegerOps + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync,
    Ratio<T>: Ring,
{
}
